#include "apath/period.hpp"

#include <cmath>
#include <stdexcept>

#include "apath/gallery.hpp"
#include "apath/grid_interp.hpp"
#include "apath/homotopy.hpp"

namespace apath {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TwistedSpec TwistedSpec::sphere_product(const std::vector<QuadNumber>& ls, long long d) {
    if (ls.empty()) throw std::invalid_argument("TwistedSpec: at least one factor required");
    TwistedSpec t;
    t.factors = static_cast<int>(ls.size());
    t.d = d;
    t.lambdas = ls;
    for (const auto& l : t.lambdas)
        if (l.d() != d) throw std::invalid_argument("TwistedSpec: mixed radicands");
    return t;
}

TwistedSpec TwistedSpec::s2xs2_sqrt2() {
    return sphere_product({QuadNumber::rational(Rational(1), 2), QuadNumber::sqrt_d(2)}, 2);
}

std::vector<double> TwistedSpec::lambdas_numeric() const {
    std::vector<double> v;
    for (const auto& l : lambdas) v.push_back(l.to_double());
    return v;
}

SpecPtr TwistedSpec::to_algebroid() const { return make_twisted_numeric(lambdas_numeric()); }

PeriodGroup period_group(const TwistedSpec& spec) {
    PeriodGroup pg;
    pg.d = spec.d;
    for (const auto& l : spec.lambdas)
        if (!l.is_zero()) pg.generators.push_back(l);
    return pg;
}

DiscretenessCertificate is_discrete(const PeriodGroup& pg) {
    DiscretenessCertificate cert{Discreteness::Discrete, std::nullopt, std::nullopt};
    int first = -1;
    for (std::size_t i = 0; i < pg.generators.size(); ++i)
        if (!pg.generators[i].is_zero()) { first = static_cast<int>(i); break; }
    if (first < 0) {
        cert.generator = QuadNumber::rational(Rational(0), pg.d);
        return cert;
    }
    const QuadNumber& g0 = pg.generators[static_cast<std::size_t>(first)];

    // Rank 2 iff some 2x2 determinant (p_i q_j - p_j q_i) is nonzero.
    for (std::size_t i = first + 1; i < pg.generators.size(); ++i) {
        const QuadNumber& gi = pg.generators[i];
        Rational det = g0.p() * gi.q() - gi.p() * g0.q();
        if (!det.is_zero()) {
            cert.verdict = Discreteness::Dense;
            cert.independent_pair = {first, static_cast<int>(i)};
            return cert;
        }
    }

    // All generators lie on one rational line through g0: the group is
    // (gcd of the ratios) * g0.
    Rational acc(0);
    for (const auto& g : pg.generators) {
        Rational r = g0.p().is_zero() ? g.q() / g0.q() : g.p() / g0.p();
        acc = rational_gcd(acc, r);
    }
    QuadNumber gen = QuadNumber(g0.p() * acc, g0.q() * acc, pg.d).abs();
    cert.generator = gen;
    return cert;
}

std::vector<std::pair<long long, long long>> sqrt_convergents(long long d, long long q_limit) {
    // Continued fraction of sqrt(d) via the standard (P + sqrt(d))/Q loop.
    long long a0 = static_cast<long long>(std::floor(std::sqrt(static_cast<double>(d))));
    while ((a0 + 1) * (a0 + 1) <= d) ++a0;
    while (a0 * a0 > d) --a0;
    if (a0 * a0 == d) throw std::invalid_argument("sqrt_convergents: d is a perfect square");

    std::vector<std::pair<long long, long long>> out;
    long long P = 0, Q = 1, a = a0;
    long long pm1 = 1, p0 = a0, qm1 = 0, q0 = 1;
    out.emplace_back(p0, q0);
    while (q0 < q_limit) {
        P = a * Q - P;
        Q = (d - P * P) / Q;
        a = (P + a0) / Q;
        long long p1 = a * p0 + pm1;
        long long q1 = a * q0 + qm1;
        pm1 = p0; p0 = p1; qm1 = q0; q0 = q1;
        out.emplace_back(p0, q0);
    }
    return out;
}

IntegrabilityResult integrability_verdict(const TwistedSpec& spec) {
    IntegrabilityResult res;
    PeriodGroup pg = period_group(spec);
    res.certificate = is_discrete(pg);
    res.report.note("module", "period_lattice");
    res.report.note("op", "integrability_verdict");

    if (res.certificate.verdict == Discreteness::Discrete) {
        res.verdict = Integrability::Integrable;
        res.report.certificate("discrete_generator", res.certificate.generator->str());
        res.report.note("verdict", "Integrable");
        return res;
    }

    res.verdict = Integrability::NonIntegrable;
    res.report.pass = true;
    res.report.note("verdict", "NonIntegrable");
    auto [i, j] = *res.certificate.independent_pair;
    const QuadNumber& gi = pg.generators[static_cast<std::size_t>(i)];
    const QuadNumber& gj = pg.generators[static_cast<std::size_t>(j)];
    res.report.certificate("independent_generator_1", gi.str());
    res.report.certificate("independent_generator_2", gj.str());

    // Scale factor c with c*1 and c*sqrt(d) inside Z g_i + Z g_j: solve the
    // 2x2 rational systems and clear denominators.
    Rational det = gi.p() * gj.q() - gj.p() * gi.q();
    auto solve = [&](const Rational& x, const Rational& y) {
        Rational r = (x * gj.q() - gj.p() * y) / det;
        Rational s = (gi.p() * y - x * gi.q()) / det;
        return std::pair<Rational, Rational>{r, s};
    };
    auto [r1, s1] = solve(Rational(1), Rational(0));
    auto [r2, s2] = solve(Rational(0), Rational(1));
    long long c = std::lcm(std::lcm(r1.den(), s1.den()), std::lcm(r2.den(), s2.den()));
    QuadNumber scale = QuadNumber::rational(Rational(c), spec.d);

    auto conv = sqrt_convergents(spec.d, 408);
    conv.erase(conv.begin());  // start the witness list at the first Pell pair
    QuadNumber prev = QuadNumber::rational(Rational(0), spec.d);
    bool first = true;
    for (auto [p, q] : conv) {
        QuadNumber v =
            (QuadNumber(Rational(p), Rational(-q), spec.d) * scale).abs();
        if (v.is_zero()) throw std::logic_error("integrability witness hit zero");
        if (!first && !(v < prev)) throw std::logic_error("witness sequence is not decreasing");
        prev = v;
        first = false;
        res.witnesses.push_back({p, q, v});
        res.report.witness(std::to_string(p) + "/" + std::to_string(q) + " -> " + v.str());
    }
    return res;
}

Report twisted_homotopy_integral(const TwistedSpec& spec, int factor, int wraps, int quad_grid,
                                 int sheet_grid, double tol, double v_tol) {
    Report rep;
    rep.note("module", "period_lattice");
    rep.note("op", "twisted_homotopy_integral");
    rep.note("factor", std::to_string(factor));
    rep.note("wraps", std::to_string(wraps));
    quad_grid = ((quad_grid + 9) / 10) * 10;  // align Simpson pairs with stage joints

    const double lam = spec.lambdas[static_cast<std::size_t>(factor)].to_double();
    const double expected = 4.0 * kPi * wraps * lam;
    rep.metric("expected_flux", expected);

    // Independent 2d composite Simpson quadrature of the pulled-back form.
    std::vector<double> per_eps(quad_grid + 1);
    for (int j = 0; j <= quad_grid; ++j) {
        double e = static_cast<double>(j) / quad_grid;
        std::vector<double> row(quad_grid + 1);
        for (int i = 0; i <= quad_grid; ++i) {
            double t = static_cast<double>(i) / quad_grid;
            Vec dt = meridian_dt(spec.factors, factor, wraps, e, t);
            Vec de = meridian_deps(spec.factors, factor, wraps, e, t);
            row[i] = lam * std::sin(meridian_theta(t)) *
                     (dt[2 * factor] * de[2 * factor + 1] - de[2 * factor] * dt[2 * factor + 1]);
        }
        per_eps[j] = simpson(row, 1.0 / quad_grid);
    }
    double flux = simpson(per_eps, 1.0 / quad_grid);
    rep.gate("quadrature_error", std::abs(flux - expected), tol);
    rep.metric("quadrature_flux", flux);

    // Sheet with the equivalence u-profile; its end-row u-integral difference
    // must reproduce the same number.
    sheet_grid = ((sheet_grid + 4) / 5) * 5;
    SpecPtr alg = spec.to_algebroid();
    HomotopySheet sheet = sheet_meridian(alg, spec.lambdas_numeric(), factor, wraps, sheet_grid,
                                         sheet_grid, MeridianU::equivalence);
    const int m = alg->m;
    auto u_integral = [&](int j) {
        std::vector<double> u(sheet.Nt + 1);
        for (int i = 0; i <= sheet.Nt; ++i) u[i] = sheet.a[j][i][m];
        return simpson(u, 1.0 / sheet.Nt);
    };
    double u_diff = u_integral(0) - u_integral(sheet.Ne);
    rep.gate("u_difference_error", std::abs(u_diff - expected), tol);
    rep.metric("u_difference", u_diff);

    // The scalar row of the homotopy ODE: terminal v must vanish to solver
    // accuracy when the u-profile encodes an equivalence family.
    BSolution sol = solve_b(*alg, ConnectionSpec::zero(alg->m, alg->n), sheet);
    double vmax = 0.0;
    for (int j = 0; j <= sheet.Ne; ++j) vmax = std::max(vmax, std::abs(sol.b[j][sheet.Nt][m]));
    rep.gate("terminal_v", vmax, v_tol);
    return rep;
}

bool equivalence_twisted(const TwistedSpec& spec, const QuadNumber& u0_integral,
                         const QuadNumber& u1_integral, bool same_endpoints,
                         const std::vector<long long>& wrap_vector) {
    if (wrap_vector.size() != spec.lambdas.size())
        throw std::invalid_argument("equivalence_twisted: wrap vector has wrong length");
    if (!same_endpoints) return false;
    QuadNumber sum = QuadNumber::rational(Rational(0), spec.d);
    for (std::size_t i = 0; i < wrap_vector.size(); ++i)
        sum = sum + QuadNumber::rational(Rational(wrap_vector[i]), spec.d) * spec.lambdas[i];
    return (u0_integral - u1_integral) == sum;
}

void reject_floating_membership() {
    throw std::invalid_argument(
        "membership in a dense subgroup is ill-posed for floating inputs; "
        "supply u-integrals as exact quadratic numbers");
}

}  // namespace apath
