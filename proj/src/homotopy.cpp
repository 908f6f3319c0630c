#include "apath/homotopy.hpp"

#include <cmath>
#include <stdexcept>

#include "apath/grid_interp.hpp"

namespace apath {

APath HomotopySheet::row(int j) const {
    APath p;
    p.spec = spec;
    p.N = Nt;
    p.a = a[j];
    p.gamma = gamma[j];
    p.joints = joints;
    p.a0_flag = true;
    return p;
}

HomotopySheet HomotopySheet::flipped_eps() const {
    HomotopySheet s(*this);
    std::reverse(s.a.begin(), s.a.end());
    std::reverse(s.gamma.begin(), s.gamma.end());
    return s;
}

HomotopySheet HomotopySheet::coarsened() const {
    if (Ne % 2 || Nt % 2) throw std::invalid_argument("coarsened: grid sizes must be even");
    HomotopySheet s;
    s.spec = spec;
    s.Ne = Ne / 2;
    s.Nt = Nt / 2;
    s.a.resize(s.Ne + 1);
    s.gamma.resize(s.Ne + 1);
    for (int j = 0; j <= s.Ne; ++j) {
        s.a[j].resize(s.Nt + 1);
        s.gamma[j].resize(s.Nt + 1);
        for (int i = 0; i <= s.Nt; ++i) {
            s.a[j][i] = a[2 * j][2 * i];
            s.gamma[j][i] = gamma[2 * j][2 * i];
        }
    }
    for (int j : joints)
        if (j % 2 == 0) s.joints.push_back(j / 2);
    return s;
}

Report check_sheet(const HomotopySheet& sheet, double path_tol, double deriv_tol) {
    Report rep;
    rep.note("module", "homotopy_engine");
    rep.note("op", "check_sheet");
    double worst_res = 0.0, worst_a0 = 0.0;
    for (int j = 0; j <= sheet.Ne; ++j) {
        APath row = sheet.row(j);
        worst_res = std::max(worst_res, apath_residual(row));
        worst_a0 = std::max({worst_a0, norm_inf(row.a.front()), norm_inf(row.a.back()),
                             norm2(row.a[1]) / row.h(), norm2(row.a[row.N - 1]) / row.h()});
    }
    rep.gate("row_residual", worst_res, path_tol);
    rep.gate("row_a0", worst_a0, deriv_tol);

    const bool twisted = sheet.spec->family == Family::twisted_surface;
    double drift = 0.0;
    for (int j = 1; j <= sheet.Ne; ++j) {
        for (int side = 0; side < 2; ++side) {
            const Vec& p = sheet.gamma[j][side ? sheet.Nt : 0];
            const Vec& q = sheet.gamma[0][side ? sheet.Nt : 0];
            if (twisted) {
                // Poles: compare latitude coordinates only; longitude is a
                // chart artifact of the degenerate point.
                for (std::size_t d = 0; d < p.size(); d += 2)
                    drift = std::max(drift, std::abs(p[d] - q[d]));
            } else {
                for (std::size_t d = 0; d < p.size(); ++d)
                    drift = std::max(drift, std::abs(p[d] - q[d]));
            }
        }
    }
    rep.gate("endpoint_drift", drift, 0.0);
    return rep;
}

std::vector<std::vector<Vec>> eps_derivative(const std::vector<std::vector<Vec>>& rows,
                                             double he) {
    const int Ne = static_cast<int>(rows.size()) - 1;
    const int cols = static_cast<int>(rows[0].size());
    const std::size_t dim = rows[0][0].size();
    std::vector<std::vector<Vec>> d(Ne + 1, std::vector<Vec>(cols, Vec(dim, 0.0)));
    for (int i = 0; i < cols; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            d[0][i][k] = (-3 * rows[0][i][k] + 4 * rows[1][i][k] - rows[2][i][k]) / (2 * he);
            for (int j = 1; j < Ne; ++j)
                d[j][i][k] = (rows[j + 1][i][k] - rows[j - 1][i][k]) / (2 * he);
            d[Ne][i][k] =
                (3 * rows[Ne][i][k] - 4 * rows[Ne - 1][i][k] + rows[Ne - 2][i][k]) / (2 * he);
        }
    }
    return d;
}

std::vector<std::vector<Vec>> eps_derivative_base(const std::vector<std::vector<Vec>>& rows,
                                                  double he) {
    // Fourth-order stencils for the base grid. The fiber derivative keeps
    // the second-order stencils above; accumulating those in t reproduces
    // the base stencil error exactly, so measuring the dual-path defect
    // against the same-order base derivative would telescope to the
    // t-integration error. One extra order on the base side keeps the
    // defect at the fiber stencil's h^2.
    const int Ne = static_cast<int>(rows.size()) - 1;
    if (Ne < 4) return eps_derivative(rows, he);
    const int cols = static_cast<int>(rows[0].size());
    const std::size_t dim = rows[0][0].size();
    std::vector<std::vector<Vec>> d(Ne + 1, std::vector<Vec>(cols, Vec(dim, 0.0)));
    for (int i = 0; i < cols; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            auto f = [&](int j) { return rows[j][i][k]; };
            d[0][i][k] = (-25 * f(0) + 48 * f(1) - 36 * f(2) + 16 * f(3) - 3 * f(4)) / (12 * he);
            d[1][i][k] = (-3 * f(0) - 10 * f(1) + 18 * f(2) - 6 * f(3) + f(4)) / (12 * he);
            for (int j = 2; j <= Ne - 2; ++j)
                d[j][i][k] = (-f(j + 2) + 8 * f(j + 1) - 8 * f(j - 1) + f(j - 2)) / (12 * he);
            d[Ne - 1][i][k] =
                (3 * f(Ne) + 10 * f(Ne - 1) - 18 * f(Ne - 2) + 6 * f(Ne - 3) - f(Ne - 4)) /
                (12 * he);
            d[Ne][i][k] =
                (25 * f(Ne) - 48 * f(Ne - 1) + 36 * f(Ne - 2) - 16 * f(Ne - 3) + 3 * f(Ne - 4)) /
                (12 * he);
        }
    }
    return d;
}

namespace {

constexpr double kBlowup = 1e8;

}  // namespace

BSolution solve_b(const AlgebroidSpec& spec, const ConnectionSpec& conn,
                  const HomotopySheet& sheet) {
    if (sheet.Ne < 4) throw std::invalid_argument("solve_b: need at least 4 eps intervals");
    const int Ne = sheet.Ne, Nt = sheet.Nt, n = spec.n, m = spec.m;
    const double ht = sheet.ht();

    auto deps_a = eps_derivative(sheet.a, sheet.he());
    std::vector<std::vector<Vec>> deps_g;
    if (m > 0) deps_g = eps_derivative_base(sheet.gamma, sheet.he());

    BSolution sol;
    sol.b.assign(Ne + 1, std::vector<Vec>(Nt + 1, Vec(n, 0.0)));
    sol.terminal.assign(Ne + 1, 0.0);

    for (int j = 0; j <= Ne; ++j) {
        // Pack per-row time series for midpoint interpolation.
        std::vector<Vec> packed(Nt + 1);
        for (int i = 0; i <= Nt; ++i) {
            Vec row;
            row.reserve(static_cast<std::size_t>(n + 2 * m + n));
            const Vec& ai = sheet.a[j][i];
            row.insert(row.end(), ai.begin(), ai.end());
            if (m > 0) {
                const Vec& gi = sheet.gamma[j][i];
                row.insert(row.end(), gi.begin(), gi.end());
                row.insert(row.end(), deps_g[j][i].begin(), deps_g[j][i].end());
            }
            row.insert(row.end(), deps_a[j][i].begin(), deps_a[j][i].end());
            packed[i] = std::move(row);
        }
        GridInterp interp(&packed, Nt, sheet.joints);

        // Tensorial right-hand side: the connection couples only through the
        // dual-path defect d_eps gamma - rho(b), which vanishes along exact
        // solutions; this is what makes the solution connection-independent.
        // Pointlike bases have constant structure, evaluated once.
        const Tensor3 c0 = m == 0 ? spec.structure_at({}) : Tensor3();
        auto rhs = [&](const Vec& data, const Vec& b) {
            Vec f(n, 0.0);
            if (m == 0) {
                for (int k = 0; k < n; ++k) {
                    double s = data[static_cast<std::size_t>(n) + k];  // deps_a
                    for (int al = 0; al < n; ++al)
                        for (int be = 0; be < n; ++be) s += c0(k, al, be) * data[al] * b[be];
                    f[k] = s;
                }
                return f;
            }
            const Vec a(data.begin(), data.begin() + n);
            Vec gamma(data.begin() + n, data.begin() + n + m);
            Vec dg(data.begin() + n + m, data.begin() + n + 2 * m);
            const Vec da(data.begin() + n + 2 * m, data.begin() + 2 * n + 2 * m);
            Tensor3 c = spec.structure_at(gamma);
            for (int k = 0; k < n; ++k) {
                double s = da[k];
                for (int al = 0; al < n; ++al)
                    for (int be = 0; be < n; ++be) s += c(k, al, be) * a[al] * b[be];
                f[k] = s;
            }
            Vec defect = sub(dg, spec.anchor_at(gamma).apply(b));
            Tensor3 g = conn.gamma_at(gamma);
            for (int k = 0; k < n; ++k) {
                double s = 0.0;
                for (int i2 = 0; i2 < m; ++i2)
                    for (int al = 0; al < n; ++al) s += g(k, i2, al) * defect[i2] * a[al];
                f[k] += s;
            }
            return f;
        };

        Vec b(n, 0.0);
        for (int i = 0; i < Nt; ++i) {
            const Vec& d1 = packed[i];
            Vec d2 = interp.eval((i + 0.5) * ht);
            const Vec& d3 = packed[i + 1];
            Vec k1 = rhs(d1, b);
            Vec b2 = b; axpy(0.5 * ht, k1, b2);
            Vec k2 = rhs(d2, b2);
            Vec b3 = b; axpy(0.5 * ht, k2, b3);
            Vec k3 = rhs(d2, b3);
            Vec b4 = b; axpy(ht, k3, b4);
            Vec k4 = rhs(d3, b4);
            for (int k = 0; k < n; ++k)
                b[k] += ht / 6.0 * (k1[k] + 2 * k2[k] + 2 * k3[k] + k4[k]);
            if (norm_inf(b) > kBlowup) throw OdeBlowupError(j, i + 1);
            sol.b[j][i + 1] = b;
        }
        sol.terminal[j] = norm2(b);
        sol.max_terminal = std::max(sol.max_terminal, sol.terminal[j]);
    }
    return sol;
}

std::pair<bool, Report> is_homotopy(const AlgebroidSpec& spec, const ConnectionSpec& conn,
                                    const HomotopySheet& sheet, double tol) {
    Report rep;
    rep.note("module", "homotopy_engine");
    rep.note("op", "is_homotopy");
    BSolution sol = solve_b(spec, conn, sheet);
    rep.gate("max_terminal", sol.max_terminal, tol);
    double mean = 0.0;
    for (double v : sol.terminal) mean += v;
    rep.metric("mean_terminal", mean / sol.terminal.size());
    double row_res = 0.0;
    for (int j = 0; j <= sheet.Ne; ++j) row_res = std::max(row_res, apath_residual(sheet.row(j)));
    rep.metric("row_residual", row_res);
    rep.metric("tol", tol);
    return {rep.pass, rep};
}

namespace {

double b_difference(const AlgebroidSpec& spec, const HomotopySheet& sheet,
                    const ConnectionSpec& c1, const ConnectionSpec& c2) {
    BSolution s1 = solve_b(spec, c1, sheet);
    BSolution s2 = solve_b(spec, c2, sheet);
    double diff = 0.0;
    for (std::size_t j = 0; j < s1.b.size(); ++j)
        for (std::size_t i = 0; i < s1.b[j].size(); ++i)
            diff = std::max(diff, norm_inf(sub(s1.b[j][i], s2.b[j][i])));
    return diff;
}

}  // namespace

Report check_connection_independence(const AlgebroidSpec& spec, const HomotopySheet& sheet,
                                     const ConnectionSpec& conn1, const ConnectionSpec& conn2,
                                     double tol) {
    Report rep;
    rep.note("module", "homotopy_engine");
    rep.note("op", "check_connection_independence");
    rep.note("conn1", conn1.name);
    rep.note("conn2", conn2.name);
    double fine = b_difference(spec, sheet, conn1, conn2);
    rep.gate("b_difference", fine, tol);
    if (sheet.Ne % 2 == 0 && sheet.Nt % 2 == 0 && sheet.Ne >= 8) {
        bool joints_ok = true;
        for (int j : sheet.joints) joints_ok = joints_ok && (j % 2 == 0);
        if (joints_ok) {
            double coarse = b_difference(spec, sheet.coarsened(), conn1, conn2);
            rep.metric("b_difference_coarse", coarse);
            if (fine > 0.0) {
                rep.metric("refinement_ratio", coarse / fine);
                rep.metric("convergence_order", std::log2(coarse / fine));
            }
        }
    }
    return rep;
}

Report check_dual_apath(const AlgebroidSpec& spec, const HomotopySheet& sheet,
                        const BSolution& bsol, double tol) {
    Report rep;
    rep.note("module", "homotopy_engine");
    rep.note("op", "check_dual_apath");
    if (spec.m == 0) {
        rep.gate("dual_residual", 0.0, tol);
        return rep;
    }
    auto deps_g = eps_derivative_base(sheet.gamma, sheet.he());
    double worst = 0.0;
    for (int j = 0; j <= sheet.Ne; ++j)
        for (int i = 0; i <= sheet.Nt; ++i) {
            Vec flow = spec.anchor_at(sheet.gamma[j][i]).apply(bsol.b[j][i]);
            worst = std::max(worst, dist2(flow, deps_g[j][i]));
        }
    rep.gate("dual_residual", worst, tol);
    return rep;
}

namespace {

// Quintic Hermite pieces of the associator reparameterization, solved once.
struct SigmaSpline {
    // knots 0, 1/4, 1/2, 1 with values 0, 1/2, 3/4, 1
    double knot_t[4] = {0.0, 0.25, 0.5, 1.0};
    double knot_v[4] = {0.0, 0.5, 0.75, 1.0};
    double knot_d[4] = {1.0, 4.0 / 3.0, 2.0 / 3.0, 1.0};  // harmonic-mean interior slopes
    double coef[3][6];

    SigmaSpline() {
        for (int seg = 0; seg < 3; ++seg) {
            double L = knot_t[seg + 1] - knot_t[seg];
            double v0 = knot_v[seg], v1 = knot_v[seg + 1];
            double D0 = knot_d[seg] * L, D1 = knot_d[seg + 1] * L;
            // q(s) = v0 + D0 s + c3 s^3 + c4 s^4 + c5 s^5 with q''(0)=q''(1)=0
            Mat A(3, 3);
            A(0, 0) = 1; A(0, 1) = 1; A(0, 2) = 1;
            A(1, 0) = 3; A(1, 1) = 4; A(1, 2) = 5;
            A(2, 0) = 6; A(2, 1) = 12; A(2, 2) = 20;
            Vec rhs = {v1 - v0 - D0, D1 - D0, 0.0};
            Vec c = solve_dense(A, rhs);
            coef[seg][0] = v0;
            coef[seg][1] = D0;
            coef[seg][2] = 0.0;
            coef[seg][3] = c[0];
            coef[seg][4] = c[1];
            coef[seg][5] = c[2];
        }
    }

    int segment(double t) const { return t < 0.25 ? 0 : (t < 0.5 ? 1 : 2); }

    double value(double t) const {
        int seg = segment(t);
        double L = knot_t[seg + 1] - knot_t[seg];
        double s = (t - knot_t[seg]) / L;
        const double* c = coef[seg];
        return c[0] + s * (c[1] + s * (c[2] + s * (c[3] + s * (c[4] + s * c[5]))));
    }

    double deriv(double t) const {
        int seg = segment(t);
        double L = knot_t[seg + 1] - knot_t[seg];
        double s = (t - knot_t[seg]) / L;
        const double* c = coef[seg];
        return (c[1] + s * (2 * c[2] + s * (3 * c[3] + s * (4 * c[4] + s * 5 * c[5])))) / L;
    }
};

const SigmaSpline& sigma_spline() {
    static SigmaSpline s;
    return s;
}

}  // namespace

double associator_sigma(double t) { return sigma_spline().value(std::clamp(t, 0.0, 1.0)); }
double associator_sigma_deriv(double t) {
    return sigma_spline().deriv(std::clamp(t, 0.0, 1.0));
}

HomotopySheet associator_sheet(const APath& a1_in, const APath& a2_in, const APath& a3_in,
                               int Ne, double endpoint_tol) {
    if (!a1_in.a0_flag || !a2_in.a0_flag || !a3_in.a0_flag)
        throw std::invalid_argument("associator_sheet: inputs must be A0-paths");
    int N = std::max({a1_in.N, a2_in.N, a3_in.N});
    N = ((N + 3) / 4) * 4;
    APath a1 = a1_in.N == N ? a1_in : resample(a1_in, N);
    APath a2 = a2_in.N == N ? a2_in : resample(a2_in, N);
    APath a3 = a3_in.N == N ? a3_in : resample(a3_in, N);

    const auto& spec = *a1.spec;
    if (spec.m > 0) {
        if (dist2(a1.gamma.back(), a2.gamma.front()) > endpoint_tol ||
            dist2(a2.gamma.back(), a3.gamma.front()) > endpoint_tol)
            throw std::invalid_argument("associator_sheet: endpoints do not chain");
    }

    GridInterp f1(&a1.a, N, a1.joints), g1(&a1.gamma, N, a1.joints);
    GridInterp f2(&a2.a, N, a2.joints), g2(&a2.gamma, N, a2.joints);
    GridInterp f3(&a3.a, N, a3.joints), g3(&a3.gamma, N, a3.joints);

    // Right association a1*(a2*a3) evaluated in closed form from the pieces.
    auto fiber_A = [&](double s) -> Vec {
        if (s <= 0.5) return scale(2.0, f1.eval(2 * s));
        if (s <= 0.75) return scale(4.0, f2.eval(4 * s - 2));
        return scale(4.0, f3.eval(4 * s - 3));
    };
    auto base_A = [&](double s) -> Vec {
        if (s <= 0.5) return g1.eval(2 * s);
        if (s <= 0.75) return g2.eval(4 * s - 2);
        return g3.eval(4 * s - 3);
    };

    HomotopySheet sheet;
    sheet.spec = a1.spec;
    sheet.Ne = Ne;
    sheet.Nt = N;
    sheet.a.resize(Ne + 1);
    sheet.gamma.resize(Ne + 1);
    for (int j = 0; j <= Ne; ++j) {
        double eps = static_cast<double>(j) / Ne;
        sheet.a[j].resize(N + 1);
        sheet.gamma[j].resize(N + 1);
        for (int i = 0; i <= N; ++i) {
            double t = static_cast<double>(i) / N;
            double phi = eps * t + (1 - eps) * associator_sigma(t);
            double dphi = eps + (1 - eps) * associator_sigma_deriv(t);
            sheet.a[j][i] = scale(dphi, fiber_A(phi));
            sheet.gamma[j][i] = base_A(phi);
        }
        sheet.a[j][0] = zeros(spec.n);
        sheet.a[j][N] = zeros(spec.n);
        if (spec.m > 0) {
            sheet.gamma[j][0] = a1.gamma.front();
            sheet.gamma[j][N] = a3.gamma.back();
        }
    }
    return sheet;
}

}  // namespace apath
