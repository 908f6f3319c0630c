#include "apath/development.hpp"

#include <stdexcept>

#include "apath/grid_interp.hpp"

namespace apath {

MatrixModel MatrixModel::preset(const std::string& tag) {
    using C = std::complex<double>;
    MatrixModel m;
    m.tag = tag;
    if (tag == "su2") {
        // X_k = -i sigma_k / 2, so [X_i, X_j] = eps_{ijk} X_k.
        m.n = 3;
        m.d = 2;
        m.group_simply_connected = true;
        CMat x1(2), x2(2), x3(2);
        x1(0, 1) = C(0, -0.5); x1(1, 0) = C(0, -0.5);
        x2(0, 1) = C(-0.5, 0); x2(1, 0) = C(0.5, 0);
        x3(0, 0) = C(0, -0.5); x3(1, 1) = C(0, 0.5);
        m.basis = {x1, x2, x3};
        return m;
    }
    if (tag == "heisenberg") {
        m.n = 3;
        m.d = 3;
        m.group_simply_connected = true;
        CMat x1(3), x2(3), x3(3);
        x1(0, 1) = 1.0;
        x2(1, 2) = 1.0;
        x3(0, 2) = 1.0;
        m.basis = {x1, x2, x3};
        return m;
    }
    if (tag == "ut2") {
        // Borel of gl2; the group of upper-triangular matrices with positive
        // diagonal is contractible.
        m.n = 3;
        m.d = 2;
        m.group_simply_connected = true;
        CMat x1(2), x2(2), x3(2);
        x1(0, 0) = 1.0;
        x2(0, 1) = 1.0;
        x3(1, 1) = 1.0;
        m.basis = {x1, x2, x3};
        return m;
    }
    if (tag == "sl2") {
        m.n = 3;
        m.d = 2;
        m.group_simply_connected = false;  // SL(2,R) retracts to a circle
        CMat e(2), f(2), h(2);
        e(0, 1) = 1.0;
        f(1, 0) = 1.0;
        h(0, 0) = 1.0; h(1, 1) = -1.0;
        m.basis = {e, f, h};
        return m;
    }
    throw std::invalid_argument("unknown matrix model: " + tag);
}

double MatrixModel::structure_mismatch(const Tensor3& constants) const {
    // Expand [X_i, X_j] in the basis via the Frobenius Gram matrix and
    // compare coefficients with c^k_{ij}.
    Mat gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> s = 0.0;
            for (std::size_t t = 0; t < basis[i].a.size(); ++t)
                s += std::conj(basis[i].a[t]) * basis[j].a[t];
            gram(i, j) = s.real();
        }
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CMat br = commutator(basis[i], basis[j]);
            Vec rhs(n, 0.0);
            for (int k = 0; k < n; ++k) {
                std::complex<double> s = 0.0;
                for (std::size_t t = 0; t < basis[k].a.size(); ++t)
                    s += std::conj(basis[k].a[t]) * br.a[t];
                rhs[k] = s.real();
            }
            Vec coef = solve_dense(gram, rhs);
            for (int k = 0; k < n; ++k)
                worst = std::max(worst, std::abs(coef[k] - constants(k, i, j)));
        }
    return worst;
}

namespace {

CMat fiber_matrix(const MatrixModel& model, const Vec& a) {
    CMat m(model.d);
    for (int k = 0; k < model.n; ++k)
        for (std::size_t t = 0; t < m.a.size(); ++t) m.a[t] += a[k] * model.basis[k].a[t];
    return m;
}

}  // namespace

CMat develop(const MatrixModel& model, const APath& p, DevConvention conv) {
    if (p.spec->n != model.n)
        throw std::invalid_argument("develop: path rank does not match the model");
    const int N = p.N;
    const double h = p.h();
    GridInterp fa(&p.a, N, p.joints);

    auto rhs = [&](const CMat& g, const Vec& a) {
        CMat A = fiber_matrix(model, a);
        return conv == DevConvention::left_translate ? g * A : A * g;
    };

    CMat g = CMat::identity(model.d);
    for (int i = 0; i < N; ++i) {
        const Vec& a1 = p.a[i];
        Vec a2 = fa.eval((i + 0.5) * h);
        const Vec& a3 = p.a[i + 1];
        CMat k1 = rhs(g, a1);
        CMat k2 = rhs(g + k1.scaled(0.5 * h), a2);
        CMat k3 = rhs(g + k2.scaled(0.5 * h), a2);
        CMat k4 = rhs(g + k3.scaled(h), a3);
        g = g + (k1 + k2.scaled(2.0) + k3.scaled(2.0) + k4).scaled(h / 6.0);
    }
    return g;
}

bool equivalent_oracle(const MatrixModel& model, const APath& p0, const APath& p1, double tol) {
    if (!model.group_simply_connected)
        throw std::invalid_argument("equivalent_oracle: model group is not simply connected");
    return frobenius_dist(develop(model, p0), develop(model, p1)) <= tol;
}

bool tangent_oracle(const AlgebroidSpec& spec, const APath& p0, const APath& p1, double tol) {
    if (spec.family != Family::tangent)
        throw std::invalid_argument("tangent_oracle: spec is not a tangent algebroid");
    auto [s0, t0] = endpoints(p0);
    auto [s1, t1] = endpoints(p1);
    return dist2(s0, s1) <= tol && dist2(t0, t1) <= tol;
}

double unitary_drift(const CMat& g) {
    CMat gh(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) gh(i, j) = std::conj(g(j, i));
    return frobenius_dist(gh * g, CMat::identity(g.n));
}

}  // namespace apath
