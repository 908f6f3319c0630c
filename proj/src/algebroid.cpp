#include "apath/algebroid.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace apath {

std::string family_name(Family f) {
    switch (f) {
        case Family::lie_algebra: return "lie_algebra";
        case Family::tangent: return "tangent";
        case Family::twisted_surface: return "twisted_surface";
        case Family::custom: return "custom";
    }
    return "custom";
}

Mat AlgebroidSpec::anchor_at(const ChartPoint& x) const {
    if (static_cast<int>(x.size()) != m) throw std::invalid_argument("anchor_at: chart point has wrong dimension");
    Mat r = anchor(x);
    if (r.rows != m || r.cols != n) throw std::logic_error("anchor callback returned wrong shape");
    return r;
}

Tensor3 AlgebroidSpec::structure_at(const ChartPoint& x) const {
    if (static_cast<int>(x.size()) != m) throw std::invalid_argument("structure_at: chart point has wrong dimension");
    Tensor3 c = structure(x);
    if (c.n0 != n || c.n1 != n || c.n2 != n) throw std::logic_error("structure callback returned wrong shape");
    return c;
}

bool AlgebroidSpec::in_chart(const ChartPoint& x) const {
    for (double v : x)
        if (std::abs(v) > chart_bound) return false;
    return true;
}

Tensor3 structure_constants_preset(const std::string& preset) {
    if (preset == "so3" || preset == "su2") {
        // c^k_{ij} = epsilon_{ijk}; su(2) with basis X_k = -i sigma_k / 2
        // has the same constants.
        Tensor3 c(3, 3, 3);
        c(2, 0, 1) = 1;  c(2, 1, 0) = -1;
        c(0, 1, 2) = 1;  c(0, 2, 1) = -1;
        c(1, 2, 0) = 1;  c(1, 0, 2) = -1;
        return c;
    }
    if (preset == "heisenberg") {
        // [X1, X2] = X3, center X3.
        Tensor3 c(3, 3, 3);
        c(2, 0, 1) = 1;  c(2, 1, 0) = -1;
        return c;
    }
    if (preset == "sl2") {
        // Basis (e, f, h): [h,e]=2e, [h,f]=-2f, [e,f]=h.
        Tensor3 c(3, 3, 3);
        c(2, 0, 1) = 1;  c(2, 1, 0) = -1;   // [e,f] = h
        c(0, 2, 0) = 2;  c(0, 0, 2) = -2;   // [h,e] = 2e
        c(1, 2, 1) = -2; c(1, 1, 2) = 2;    // [h,f] = -2f
        return c;
    }
    if (preset == "abelian1") return Tensor3(1, 1, 1);
    if (preset == "ut2") {
        // Upper-triangular 2x2: basis E11, E12, E22; [E11,E12]=E12, [E12,E22]=E12.
        Tensor3 c(3, 3, 3);
        c(1, 0, 1) = 1;  c(1, 1, 0) = -1;
        c(1, 1, 2) = 1;  c(1, 2, 1) = -1;
        return c;
    }
    throw std::invalid_argument("unknown structure preset: " + preset);
}

SpecPtr make_lie_algebra(const Tensor3& constants, const std::string& name) {
    auto s = std::make_shared<AlgebroidSpec>();
    s->family = Family::lie_algebra;
    s->m = 0;
    s->n = constants.n0;
    s->name = name;
    Tensor3 c = constants;
    s->anchor = [n = s->n](const ChartPoint&) { return Mat(0, n); };
    s->structure = [c](const ChartPoint&) { return c; };
    return s;
}

SpecPtr make_lie_algebra_preset(const std::string& preset) {
    return make_lie_algebra(structure_constants_preset(preset), preset);
}

SpecPtr make_tangent(int m, double chart_bound) {
    auto s = std::make_shared<AlgebroidSpec>();
    s->family = Family::tangent;
    s->m = m;
    s->n = m;
    s->chart_bound = chart_bound;
    s->name = "tangent" + std::to_string(m);
    s->anchor = [m](const ChartPoint&) { return Mat::identity(m); };
    s->structure = [m](const ChartPoint&) { return Tensor3(m, m, m); };
    return s;
}

SpecPtr make_twisted_numeric(const std::vector<double>& lambdas) {
    const int k = static_cast<int>(lambdas.size());
    if (k < 1) throw std::invalid_argument("twisted spec needs at least one sphere factor");
    auto s = std::make_shared<AlgebroidSpec>();
    s->family = Family::twisted_surface;
    const int m = 2 * k;      // chart (theta_1, phi_1, ..., theta_k, phi_k)
    const int n = m + 1;      // TM x R
    s->m = m;
    s->n = n;
    s->name = "twisted" + std::to_string(k);
    s->anchor = [m, n](const ChartPoint&) {
        Mat r(m, n);
        for (int i = 0; i < m; ++i) r(i, i) = 1.0;
        return r;
    };
    // Only nonzero brackets: [e_i, e_j] has an R-component Omega_ij(x),
    // with Omega = sum_f lambda_f sin(theta_f) dtheta_f ^ dphi_f.
    s->structure = [k, m, n, lambdas](const ChartPoint& x) {
        Tensor3 c(n, n, n);
        for (int f = 0; f < k; ++f) {
            double w = lambdas[static_cast<std::size_t>(f)] * std::sin(x[2 * f]);
            c(m, 2 * f, 2 * f + 1) = w;
            c(m, 2 * f + 1, 2 * f) = -w;
        }
        return c;
    };
    return s;
}

Tensor3 ConnectionSpec::gamma_at(const ChartPoint& x) const {
    Tensor3 g = gamma(x);
    if (g.n0 != n || g.n1 != m || g.n2 != n) throw std::logic_error("connection callback returned wrong shape");
    return g;
}

ConnectionSpec ConnectionSpec::zero(int m, int n) {
    ConnectionSpec c;
    c.m = m;
    c.n = n;
    c.name = "zero";
    c.gamma = [m, n](const ChartPoint&) { return Tensor3(n, m, n); };
    return c;
}

ConnectionSpec ConnectionSpec::random_constant(int m, int n, std::uint64_t seed) {
    ConnectionSpec c;
    c.m = m;
    c.n = n;
    c.name = "random(" + std::to_string(seed) + ")";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    Tensor3 g(n, m, n);
    for (auto& v : g.a) v = u(rng);
    c.gamma = [g](const ChartPoint&) { return g; };
    return c;
}

Vec bracket_frame(const AlgebroidSpec& spec, int i, int j, const ChartPoint& x) {
    if (i < 0 || j < 0 || i >= spec.n || j >= spec.n)
        throw std::out_of_range("bracket_frame: frame index out of range");
    Tensor3 c = spec.structure_at(x);
    Vec r(spec.n, 0.0);
    for (int kk = 0; kk < spec.n; ++kk) r[kk] = c(kk, i, j);
    return r;
}

Vec torsion_reduced(const AlgebroidSpec& spec, const ConnectionSpec& conn, const ChartPoint& x,
                    const Vec& v_t, const Vec& v_eps, const Vec& a, const Vec& b) {
    if (static_cast<int>(v_t.size()) != spec.m || static_cast<int>(v_eps.size()) != spec.m ||
        static_cast<int>(a.size()) != spec.n || static_cast<int>(b.size()) != spec.n)
        throw std::invalid_argument("torsion_reduced: dimension mismatch");
    Vec r(spec.n, 0.0);
    Tensor3 c = spec.structure_at(x);
    for (int k = 0; k < spec.n; ++k) {
        double s = 0.0;
        for (int al = 0; al < spec.n; ++al)
            for (int be = 0; be < spec.n; ++be) s += c(k, al, be) * a[al] * b[be];
        r[k] = s;
    }
    if (spec.m > 0) {
        Tensor3 g = conn.gamma_at(x);
        for (int k = 0; k < spec.n; ++k) {
            double s = 0.0;
            for (int i = 0; i < spec.m; ++i)
                for (int al = 0; al < spec.n; ++al)
                    s += g(k, i, al) * (v_eps[i] * a[al] - v_t[i] * b[al]);
            r[k] += s;
        }
    }
    return r;
}

namespace {

// Central finite difference of the structure tensor in base direction p.
Tensor3 d_structure(const AlgebroidSpec& spec, const ChartPoint& x, int p, double h) {
    ChartPoint xp = x, xm = x;
    xp[p] += h;
    xm[p] -= h;
    Tensor3 cp = spec.structure_at(xp), cm = spec.structure_at(xm);
    Tensor3 d(spec.n, spec.n, spec.n);
    for (std::size_t i = 0; i < d.a.size(); ++i) d.a[i] = (cp.a[i] - cm.a[i]) / (2 * h);
    return d;
}

Mat d_anchor(const AlgebroidSpec& spec, const ChartPoint& x, int p, double h) {
    ChartPoint xp = x, xm = x;
    xp[p] += h;
    xm[p] -= h;
    Mat rp = spec.anchor_at(xp), rm = spec.anchor_at(xm);
    Mat d(spec.m, spec.n);
    for (std::size_t i = 0; i < d.a.size(); ++i) d.a[i] = (rp.a[i] - rm.a[i]) / (2 * h);
    return d;
}

}  // namespace

Report validate(const AlgebroidSpec& spec, const ConnectionSpec& conn,
                const std::vector<ChartPoint>& samples, double fd_step, double tol) {
    if (!(fd_step > 0)) throw std::invalid_argument("validate: fd_step must be positive");
    Report rep;
    rep.note("module", "algebroid_core");
    rep.note("op", "validate");
    rep.note("spec", spec.name);
    if (conn.m != spec.m || conn.n != spec.n) {
        rep.pass = false;
        rep.note("error", "connection dimensions do not match the spec");
        return rep;
    }

    const int n = spec.n, m = spec.m;
    double antisym = 0.0, jacobi = 0.0, anchor_res = 0.0;

    for (const ChartPoint& x : samples) {
        Tensor3 c = spec.structure_at(x);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    antisym = std::max(antisym, std::abs(c(k, i, j) + c(k, j, i)));

        Mat rho = m > 0 ? spec.anchor_at(x) : Mat(0, n);
        std::vector<Tensor3> dc;
        std::vector<Mat> drho;
        for (int p = 0; p < m; ++p) {
            dc.push_back(d_structure(spec, x, p, fd_step));
            drho.push_back(d_anchor(spec, x, p, fd_step));
        }

        // Jacobi identity for frame sections:
        //   sum_cyc(i,j,l) [ c^mu_{ij} c^k_{mu l} - rho^p_l d_p c^k_{ij} ] = 0
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l)
                    for (int k = 0; k < n; ++k) {
                        double s = 0.0;
                        const int idx[3][3] = {{i, j, l}, {j, l, i}, {l, i, j}};
                        for (const auto& t : idx) {
                            int ii = t[0], jj = t[1], ll = t[2];
                            for (int mu = 0; mu < n; ++mu) s += c(mu, ii, jj) * c(k, mu, ll);
                            for (int p = 0; p < m; ++p) s -= rho(p, ll) * dc[p](k, ii, jj);
                        }
                        jacobi = std::max(jacobi, std::abs(s));
                    }

        // Anchor as a bracket morphism: rho([e_i,e_j]) = [rho(e_i), rho(e_j)].
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int p = 0; p < m; ++p) {
                    double lhs = 0.0;
                    for (int k = 0; k < n; ++k) lhs += c(k, i, j) * rho(p, k);
                    double rhs = 0.0;
                    for (int q = 0; q < m; ++q)
                        rhs += rho(q, i) * drho[q](p, j) - rho(q, j) * drho[q](p, i);
                    anchor_res = std::max(anchor_res, std::abs(lhs - rhs));
                }
    }

    rep.gate("antisymmetry_residual", antisym, tol);
    rep.gate("jacobi_residual", jacobi, tol);
    rep.gate("anchor_morphism_residual", anchor_res, tol);
    return rep;
}

}  // namespace apath
