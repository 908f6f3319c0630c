#include <cmath>

#include "doctest.h"

#include "apath/development.hpp"
#include "apath/gallery.hpp"
#include "apath/homotopy.hpp"

using namespace apath;

TEST_CASE("solve_b: eps-independent sheet gives b identically zero") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    APath p = random_lie_path(su2, 100, 1, 0.5);
    HomotopySheet sheet = sheet_constant(p, 8);
    BSolution sol = solve_b(*su2, ConnectionSpec::zero(0, 3), sheet);
    // edge stencils leave only rounding noise
    CHECK(sol.max_terminal < 1e-14);
    for (const auto& row : sol.b)
        for (const auto& b : row) CHECK(norm_inf(b) < 1e-15);
}

TEST_CASE("solve_b: abelian case integrates the eps-derivative exactly") {
    // a(eps, t) = eps^2 g(t) on the abelian Lie algebra R; the stencils are
    // exact on quadratics, so b(eps, 1) = 2 eps * int g.
    SpecPtr ab = make_lie_algebra_preset("abelian1");
    const int Ne = 8, Nt = 200;
    HomotopySheet s;
    s.spec = ab;
    s.Ne = Ne;
    s.Nt = Nt;
    s.a.resize(Ne + 1);
    s.gamma.assign(Ne + 1, std::vector<Vec>(Nt + 1, Vec{}));
    for (int j = 0; j <= Ne; ++j) {
        double e = static_cast<double>(j) / Ne;
        s.a[j].resize(Nt + 1);
        for (int i = 0; i <= Nt; ++i) {
            double t = static_cast<double>(i) / Nt;
            s.a[j][i] = Vec{e * e * bump(t)};
        }
    }
    BSolution sol = solve_b(*ab, ConnectionSpec::zero(0, 1), s);
    const double integral = 16.0 / 30.0;  // int of 16 t^2 (1-t)^2
    for (int j = 0; j <= Ne; ++j) {
        double e = static_cast<double>(j) / Ne;
        CHECK(sol.b[j][Nt][0] == doctest::Approx(2 * e * integral).epsilon(1e-7));
    }
}

TEST_CASE("solve_b is linear in the eps-variation for the tangent family") {
    SpecPtr tan = make_tangent(2);
    ConnectionSpec zero = ConnectionSpec::zero(2, 2);
    APath base = random_tangent_path(tan, 64, 5, 0.4, {0, 0});
    APath bent = random_tangent_path(tan, 64, 6, 0.4, {0, 0});
    // enforce equal endpoints by pulling the second path's base to the first
    Vec shift = sub(base.gamma.back(), bent.gamma.back());
    for (int i = 0; i <= bent.N; ++i) {
        double t = static_cast<double>(i) / bent.N;
        double w = smoothstep5(t);
        axpy(w, shift, bent.gamma[i]);
        // tangent fiber = base velocity; rebuild from the shifted curve
    }
    for (int i = 0; i <= bent.N; ++i) {
        double t = static_cast<double>(i) / bent.N;
        axpy(smoothstep5_deriv(t), shift, bent.a[i]);
        (void)t;
    }
    HomotopySheet s1 = sheet_linear_tangent(base, bent, 8);
    // doubled variation: row j of s2 equals row 2j of s1 pattern
    BSolution b1 = solve_b(*tan, zero, s1);
    HomotopySheet s2 = s1;
    for (int j = 0; j <= s2.Ne; ++j)
        for (int i = 0; i <= s2.Nt; ++i) {
            Vec d = sub(s1.a[j][i], s1.a[0][i]);
            s2.a[j][i] = add(s1.a[0][i], scale(2.0, d));
            Vec dg = sub(s1.gamma[j][i], s1.gamma[0][i]);
            s2.gamma[j][i] = add(s1.gamma[0][i], scale(2.0, dg));
        }
    BSolution b2 = solve_b(*tan, zero, s2);
    for (int j = 0; j <= s1.Ne; ++j)
        for (int i = 0; i <= s1.Nt; ++i)
            for (int d = 0; d < 2; ++d)
                CHECK(b2.b[j][i][d] == doctest::Approx(2 * b1.b[j][i][d]).epsilon(1e-12));
}

TEST_CASE("is_homotopy: constant sheet passes, eps flip is symmetric") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    ConnectionSpec zero = ConnectionSpec::zero(0, 3);
    APath p = random_lie_path(su2, 100, 2, 0.5);
    HomotopySheet sheet = sheet_constant(p, 8);
    auto [ok, rep] = is_homotopy(*su2, zero, sheet, 1e-12);
    CHECK(ok);
    CHECK(rep.metric_value("max_terminal") < 1e-14);

    HomotopySheet warped = sheet_reparam_sweep(p, 32, 77, 0.3);
    BSolution fwd = solve_b(*su2, zero, warped);
    BSolution rev = solve_b(*su2, zero, warped.flipped_eps());
    CHECK(fwd.max_terminal == doctest::Approx(rev.max_terminal).epsilon(1e-12));
}

TEST_CASE("is_homotopy agrees with the development oracle both ways") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    MatrixModel model = MatrixModel::preset("su2");
    ConnectionSpec zero = ConnectionSpec::zero(0, 3);
    const int N = 200;

    APath p = random_lie_path(su2, N, 31, 0.3);
    HomotopySheet good = sheet_reparam_sweep(p, N, 32, 0.3);
    auto [ok1, r1] = is_homotopy(*su2, zero, good, 1e-5);
    CHECK(ok1);
    CHECK(equivalent_oracle(model, good.row(0), good.row(good.Ne), 1e-6));

    APath q0 = random_lie_path(su2, N, 33, 0.3);
    APath q1 = random_lie_path(su2, N, 34, 0.3);
    REQUIRE(frobenius_dist(develop(model, q0), develop(model, q1)) > 0.02);
    HomotopySheet bad = sheet_lie_interpolate(q0, q1, N);
    auto [ok2, r2] = is_homotopy(*su2, zero, bad, 1e-5);
    CHECK_FALSE(ok2);
    CHECK(r2.metric_value("max_terminal") > 1e-3);
    CHECK_FALSE(equivalent_oracle(model, q0, q1, 1e-6));
}

TEST_CASE("tangent sheets between equal-endpoint paths are homotopies") {
    SpecPtr tan = make_tangent(2);
    ConnectionSpec zero = ConnectionSpec::zero(2, 2);
    APath p0 = random_tangent_path(tan, 100, 51, 0.4, {0, 0});
    APath p1 = p0;
    // wiggle the interior, keeping the exact same base endpoints
    for (int i = 0; i <= p1.N; ++i) {
        double t = static_cast<double>(i) / p1.N;
        double w = 16 * t * t * (1 - t) * (1 - t);
        double dw = 32 * t * (1 - t) * (1 - t) - 32 * t * t * (1 - t);
        p1.gamma[i][0] += 0.2 * w;
        p1.a[i][0] += 0.2 * dw;
    }
    HomotopySheet sheet = sheet_linear_tangent(p0, p1, 100);
    auto [ok, rep] = is_homotopy(*tan, zero, sheet, 1e-5);
    CHECK(ok);
}

TEST_CASE("tangent oracle agrees with the engine over twenty seeded pairs") {
    SpecPtr tan = make_tangent(2);
    ConnectionSpec zero = ConnectionSpec::zero(2, 2);
    for (int s = 0; s < 20; ++s) {
        APath p0 = random_tangent_path(tan, 80, 500 + s, 0.35, {0, 0});
        APath p1 = p0;
        for (int i = 0; i <= p1.N; ++i) {
            double t = static_cast<double>(i) / p1.N;
            double w = 16 * t * t * (1 - t) * (1 - t);
            double dw = 32 * t * (1 - t) * (1 - t) - 32 * t * t * (1 - t);
            p1.gamma[i][s % 2] += 0.15 * w;
            p1.a[i][s % 2] += 0.15 * dw;
        }
        HomotopySheet sheet = sheet_linear_tangent(p0, p1, 80);
        auto [engine, rep] = is_homotopy(*tan, zero, sheet, 1e-5);
        bool oracle = tangent_oracle(*tan, p0, p1);
        CHECK(engine);
        CHECK(engine == oracle);

        // a pair with different targets: the oracle refuses equivalence
        APath far = random_tangent_path(tan, 80, 900 + s, 0.35, {0.5, -0.5});
        CHECK_FALSE(tangent_oracle(*tan, p0, far));
    }
}

TEST_CASE("connection independence: exact and refining cases") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    APath p = random_lie_path(su2, 64, 61, 0.4);
    HomotopySheet sheet = sheet_reparam_sweep(p, 16, 62, 0.3);
    ConnectionSpec z = ConnectionSpec::zero(0, 3);
    Report same = check_connection_independence(*su2, sheet, z, z, 1e-15);
    CHECK(same.pass);
    CHECK(same.metric_value("b_difference") == 0.0);

    // pointlike base: connection terms multiply base velocities, which vanish
    ConnectionSpec r = ConnectionSpec::random_constant(0, 3, 9);
    Report triv = check_connection_independence(*su2, sheet, z, r, 1e-15);
    CHECK(triv.pass);

    SpecPtr tw = make_twisted_numeric({1.0});
    HomotopySheet mer = sheet_meridian_patch(tw, 0, 0.6, 100, 100);
    ConnectionSpec zt = ConnectionSpec::zero(tw->m, tw->n);
    ConnectionSpec rt = ConnectionSpec::random_constant(tw->m, tw->n, 1);
    Report ind = check_connection_independence(*tw, mer, zt, rt, 1e-3);
    CHECK(ind.pass);
    CHECK(ind.metric_value("b_difference") > 0.0);
}

TEST_CASE("dual A-path property holds at second order") {
    SpecPtr tw = make_twisted_numeric({1.0});
    ConnectionSpec zt = ConnectionSpec::zero(tw->m, tw->n);
    double prev = 0.0;
    for (int k = 0; k < 2; ++k) {
        int N = 50 << k;
        HomotopySheet mer = sheet_meridian(tw, {1.0}, 0, 1, N, N, MeridianU::equivalence);
        BSolution sol = solve_b(*tw, zt, mer);
        Report rep = check_dual_apath(*tw, mer, sol, 1.0);
        double res = rep.metric_value("dual_residual");
        if (k) CHECK(prev / res > 3.0);
        prev = res;
    }

    SpecPtr su2 = make_lie_algebra_preset("su2");
    APath p = random_lie_path(su2, 50, 71, 0.4);
    HomotopySheet sheet = sheet_constant(p, 8);
    BSolution sol = solve_b(*su2, ConnectionSpec::zero(0, 3), sheet);
    Report rep = check_dual_apath(*su2, sheet, sol, 1e-15);
    CHECK(rep.pass);
}

TEST_CASE("meridian sweeps are valid sheets and the ODE flags blow-ups") {
    SpecPtr tw = make_twisted_numeric({1.0});
    HomotopySheet mer = sheet_meridian(tw, {1.0}, 0, 1, 20, 100, MeridianU::equivalence);
    CHECK(mer.joints == std::vector<int>{20, 80});
    // quintic onset: |a(h)|/h is half the second time-derivative times h
    Report rep = check_sheet(mer, default_path_tol(100, 400.0), 500.0);
    CHECK(rep.pass);
    CHECK_THROWS_AS(sheet_meridian(tw, {1.0}, 0, 1, 20, 96), std::invalid_argument);

    // su(2) is compact (the bracket is norm-neutral), so violent data must
    // go through a noncompact model to overflow the guard
    SpecPtr sl2 = make_lie_algebra_preset("sl2");
    APath big0 = random_lie_path(sl2, 100, 7, 200.0);
    APath big1 = random_lie_path(sl2, 100, 8, 200.0);
    HomotopySheet wild = sheet_lie_interpolate(big0, big1, 8);
    CHECK_THROWS_AS(solve_b(*sl2, ConnectionSpec::zero(0, 3), wild), OdeBlowupError);
}

TEST_CASE("sheet checker enforces row validity and fixed endpoints") {
    SpecPtr tan = make_tangent(2);
    APath p0 = random_tangent_path(tan, 64, 81, 0.3, {0, 0});
    HomotopySheet sheet = sheet_constant(p0, 6);
    Report ok = check_sheet(sheet, default_path_tol(64, 20.0), 2.0);
    CHECK(ok.pass);
    sheet.gamma[3][64][0] += 0.1;  // break the fixed-endpoint invariant
    Report bad = check_sheet(sheet, default_path_tol(64, 20.0), 2.0);
    CHECK_FALSE(bad.pass);
}

TEST_CASE("associator sigma: knots, slopes, monotonicity") {
    CHECK(associator_sigma(0.0) == 0.0);
    CHECK(associator_sigma(0.25) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(associator_sigma(0.5) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(associator_sigma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(associator_sigma_deriv(0.0) == doctest::Approx(1.0));
    CHECK(associator_sigma_deriv(1.0) == doctest::Approx(1.0));
    for (int i = 0; i <= 20000; ++i)
        CHECK(associator_sigma_deriv(i / 20000.0) > 0.0);
}

TEST_CASE("associator sheet: end rows and the zero triple") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    const int N = 200;
    APath a1 = random_lie_path(su2, N, 101, 0.12);
    APath a2 = random_lie_path(su2, N, 102, 0.12);
    APath a3 = random_lie_path(su2, N, 103, 0.12);
    HomotopySheet sheet = associator_sheet(a1, a2, a3, 16);
    // the two associations differ on the nose but are associator-equivalent
    APath right = concat(a1, concat(a2, a3));
    APath left = concat(concat(a1, a2), a3);
    double gap = 0.0;
    for (int i = 0; i <= N; ++i) gap = std::max(gap, dist2(left.a[i], right.a[i]));
    CHECK(gap > 0.01);
    double worst = 0.0;
    for (int i = 0; i <= N; ++i)
        worst = std::max(worst, dist2(sheet.a[16][i], right.a[i]));
    CHECK(worst < 1e-9);

    // every row is an A0-path (pointlike base: just ends)
    for (int j = 0; j <= 16; ++j) {
        CHECK(norm_inf(sheet.a[j][0]) == 0.0);
        CHECK(norm_inf(sheet.a[j][N]) == 0.0);
    }

    APath z = constant_path(su2, {}, N);
    HomotopySheet zs = associator_sheet(z, z, z, 8);
    BSolution sol = solve_b(*su2, ConnectionSpec::zero(0, 3), zs);
    CHECK(sol.max_terminal == 0.0);
}

TEST_CASE("associator sheet is a homotopy for an su(2) triple") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    const int N = 200;
    APath a1 = random_lie_path(su2, N, 111, 0.12);
    APath a2 = random_lie_path(su2, N, 112, 0.12);
    APath a3 = random_lie_path(su2, N, 113, 0.12);
    HomotopySheet sheet = associator_sheet(a1, a2, a3, N);
    auto [ok, rep] = is_homotopy(*su2, ConnectionSpec::zero(0, 3), sheet, 1e-5);
    CHECK(ok);

    // both associations develop to the same product
    MatrixModel m = MatrixModel::preset("su2");
    CMat left = develop(m, concat(concat(a1, a2), a3));
    CMat right = develop(m, concat(a1, concat(a2, a3)));
    CHECK(frobenius_dist(left, right) < 1e-7);
}

TEST_CASE("associator sheet rejects unchained or raw A-paths") {
    SpecPtr tan = make_tangent(1);
    APath p = integrate_base(tan, [](double) { return Vec{1.0}; }, {0.0}, 64);
    CHECK_THROWS_AS(associator_sheet(p, p, p, 8), std::invalid_argument);
    APath q0 = reparam_tau(p);  // runs 0 -> 1
    CHECK_THROWS_AS(associator_sheet(q0, q0, q0, 8), std::invalid_argument);
}
