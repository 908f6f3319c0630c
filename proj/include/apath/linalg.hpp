#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace apath {

// Dense helpers sized for desk-scale problems (dimensions <= a few dozen).
// Vec doubles as fiber vectors, base vectors and chart points.
using Vec = std::vector<double>;

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline void axpy(double s, const Vec& x, Vec& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

inline Vec add(const Vec& x, const Vec& y) {
    Vec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

inline Vec sub(const Vec& x, const Vec& y) {
    Vec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

inline Vec scale(double s, const Vec& x) {
    Vec r(x);
    for (double& v : r) v *= s;
    return r;
}

inline double norm2(const Vec& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

inline double norm_inf(const Vec& x) {
    double s = 0.0;
    for (double v : x) s = std::max(s, std::abs(v));
    return s;
}

inline double dist2(const Vec& x, const Vec& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(s);
}

// Row-major rectangular matrix of doubles.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    Vec apply(const Vec& x) const {
        if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("Mat::apply: size mismatch");
        Vec y(rows, 0.0);
        for (int i = 0; i < rows; ++i) {
            double s = 0.0;
            for (int j = 0; j < cols; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }
};

// Cubic array c(k,i,j); used for structure functions c^k_{ij} and
// connection coefficients (with the middle index running over the base).
struct Tensor3 {
    int n0 = 0, n1 = 0, n2 = 0;
    std::vector<double> a;

    Tensor3() = default;
    Tensor3(int d0, int d1, int d2)
        : n0(d0), n1(d1), n2(d2), a(static_cast<std::size_t>(d0) * d1 * d2, 0.0) {}

    double& operator()(int k, int i, int j) {
        return a[(static_cast<std::size_t>(k) * n1 + i) * n2 + j];
    }
    double operator()(int k, int i, int j) const {
        return a[(static_cast<std::size_t>(k) * n1 + i) * n2 + j];
    }
};

// Small square complex matrix; the development oracle lives in 2x2 and 3x3
// matrix groups so nothing clever is needed here.
struct CMat {
    using C = std::complex<double>;
    int n = 0;
    std::vector<C> a;

    CMat() = default;
    explicit CMat(int d) : n(d), a(static_cast<std::size_t>(d) * d, C(0.0, 0.0)) {}

    C& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    C operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static CMat identity(int d) {
        CMat m(d);
        for (int i = 0; i < d; ++i) m(i, i) = C(1.0, 0.0);
        return m;
    }

    CMat operator+(const CMat& o) const {
        CMat r(*this);
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
        return r;
    }
    CMat operator-(const CMat& o) const {
        CMat r(*this);
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
        return r;
    }
    CMat operator*(const CMat& o) const {
        CMat r(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                C v = (*this)(i, k);
                if (v == C(0.0, 0.0)) continue;
                for (int j = 0; j < n; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }
    CMat scaled(double s) const {
        CMat r(*this);
        for (auto& v : r.a) v *= s;
        return r;
    }
    CMat scaled(C s) const {
        CMat r(*this);
        for (auto& v : r.a) v *= s;
        return r;
    }
};

inline double frobenius(const CMat& m) {
    double s = 0.0;
    for (const auto& v : m.a) s += std::norm(v);
    return std::sqrt(s);
}

inline double frobenius_dist(const CMat& x, const CMat& y) { return frobenius(x - y); }

inline CMat commutator(const CMat& x, const CMat& y) { return x * y - y * x; }

// Gaussian elimination with partial pivoting; small systems only.
inline Vec solve_dense(Mat m, Vec rhs) {
    const int n = m.rows;
    if (m.cols != n || static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("solve_dense: shape mismatch");
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
        if (std::abs(m(piv, col)) < 1e-14) throw std::domain_error("solve_dense: singular matrix");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
            std::swap(rhs[col], rhs[piv]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = m(r, col) / m(col, col);
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
            rhs[r] -= f * rhs[col];
        }
    }
    Vec x(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = rhs[r];
        for (int j = r + 1; j < n; ++j) s -= m(r, j) * x[j];
        x[r] = s / m(r, r);
    }
    return x;
}

}  // namespace apath
