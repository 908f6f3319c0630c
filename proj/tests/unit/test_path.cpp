#include <cmath>

#include "doctest.h"

#include "apath/gallery.hpp"
#include "apath/path.hpp"

using namespace apath;

TEST_CASE("integrate_base: unit-speed line on the tangent algebroid") {
    SpecPtr tan = make_tangent(1);
    APath p = integrate_base(tan, [](double) { return Vec{1.0}; }, {0.0}, 64);
    for (int i = 0; i <= 64; ++i)
        CHECK(p.gamma[i][0] == doctest::Approx(i / 64.0).epsilon(1e-13));
    CHECK(apath_residual(p) < 1e-13);
}

TEST_CASE("integrate_base: pointlike base stays put") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    APath p = integrate_base(su2, [](double t) { return Vec{t, 1 - t, 0.5}; }, {}, 16);
    for (const auto& g : p.gamma) CHECK(g.empty());
}

TEST_CASE("integrate_base: circle closes to 1e-8 at N=2000") {
    SpecPtr tan = make_tangent(2);
    APath p = circle_path(tan, 2000);
    CHECK(dist2(p.gamma.front(), p.gamma.back()) < 1e-8);
    auto [s, t] = endpoints(p);
    CHECK(dist2(s, t) < 1e-8);
}

TEST_CASE("integrate_base rejects tiny grids and reports chart exits") {
    SpecPtr tan = make_tangent(1);
    CHECK_THROWS_AS(integrate_base(tan, [](double) { return Vec{1.0}; }, {0.0}, 4),
                    std::invalid_argument);
    auto bounded = std::make_shared<AlgebroidSpec>(*tan);
    bounded->chart_bound = 0.5;
    try {
        integrate_base(bounded, [](double) { return Vec{1.0}; }, {0.0}, 100);
        FAIL("expected ChartExitError");
    } catch (const ChartExitError& e) {
        CHECK(e.exit_index > 45);
        CHECK(e.exit_index < 55);
    }
}

TEST_CASE("A-path residual decays at second order under refinement") {
    SpecPtr tan = make_tangent(2);
    double prev = 0.0;
    for (int k = 0; k < 3; ++k) {
        int N = 100 << k;
        APath p = circle_path(tan, N);
        double r = apath_residual(p);
        if (k) CHECK(prev / r >= 3.5);
        prev = r;
    }
}

TEST_CASE("reparam_tau: exact A0 ends, zero path stays zero") {
    SpecPtr tan = make_tangent(2);
    APath p = circle_path(tan, 256);
    APath q = reparam_tau(p);
    CHECK(q.a0_flag);
    CHECK(norm_inf(q.a.front()) == 0.0);
    CHECK(norm_inf(q.a.back()) == 0.0);
    CHECK(norm2(q.a[1]) / q.h() < 1.0);
    CHECK(norm2(q.a[q.N - 1]) / q.h() < 1.0);
    Report rep = check_path(q, default_path_tol(q.N, 50.0), 1.0);
    CHECK(rep.pass);

    APath z = constant_path(tan, {0.25, 0.5}, 64);
    APath zq = reparam_tau(z);
    for (const auto& a : zq.a) CHECK(norm_inf(a) == 0.0);
}

TEST_CASE("concat: grid splicing, joint bookkeeping, endpoints") {
    SpecPtr tan = make_tangent(1);
    APath p0 = integrate_base(tan, [](double t) { return Vec{2 * t}; }, {0.0}, 100);
    APath p1 = integrate_base(tan, [](double t) { return Vec{1 - t}; }, {1.0}, 100);
    CHECK(p0.gamma.back()[0] == doctest::Approx(1.0).epsilon(1e-12));
    APath c = concat(p0, p1);
    CHECK(c.N == 100);
    CHECK(c.joints == std::vector<int>{50});
    // base passes through the junction value at t = 1/2
    CHECK(c.gamma[50][0] == doctest::Approx(1.0).epsilon(1e-12));
    auto [s, t] = endpoints(c);
    CHECK(s[0] == doctest::Approx(0.0));
    CHECK(t[0] == doctest::Approx(1.5).epsilon(1e-10));
    // first half doubles the fiber values of p0 on the even subgrid
    CHECK(c.a[25][0] == doctest::Approx(2.0 * p0.a[50][0]));

    APath far = integrate_base(tan, [](double) { return Vec{1.0}; }, {9.0}, 100);
    CHECK_THROWS_AS(concat(p0, far), std::invalid_argument);
}

TEST_CASE("invert: involution is exact and endpoints swap") {
    SpecPtr tan = make_tangent(1);
    APath p = integrate_base(tan, [](double t) { return Vec{std::sin(t) + 1}; }, {0.2}, 128);
    APath q = invert(invert(p));
    for (int i = 0; i <= p.N; ++i) {
        CHECK(q.a[i][0] == p.a[i][0]);
        CHECK(q.gamma[i][0] == p.gamma[i][0]);
    }
    auto [s, t] = endpoints(p);
    auto [si, ti] = endpoints(invert(p));
    CHECK(s == ti);
    CHECK(t == si);

    // unit-speed path runs back from 1 to 0
    APath u = integrate_base(tan, [](double) { return Vec{1.0}; }, {0.0}, 64);
    APath v = invert(u);
    CHECK(v.gamma.front()[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.gamma.back()[0] == doctest::Approx(0.0));
    CHECK(v.a[10][0] == -1.0);
}

TEST_CASE("constant path: endpoints, residual, flags") {
    SpecPtr tan = make_tangent(2);
    APath p = constant_path(tan, {0.3, -0.7}, 32);
    auto [s, t] = endpoints(p);
    CHECK(s == ChartPoint{0.3, -0.7});
    CHECK(t == s);
    CHECK(apath_residual(p) == 0.0);
    CHECK(p.a0_flag);
}

TEST_CASE("resample keeps joints on-grid or refuses") {
    SpecPtr tan = make_tangent(1);
    APath p0 = integrate_base(tan, [](double t) { return Vec{2 * t}; }, {0.0}, 100);
    APath p1 = integrate_base(tan, [](double t) { return Vec{1 - t}; }, {1.0}, 100);
    APath c = concat(p0, p1);
    APath r = resample(c, 200);
    CHECK(r.joints == std::vector<int>{100});
    CHECK(r.a[100][0] == doctest::Approx(c.a[50][0]).epsilon(1e-12));
    CHECK_THROWS_AS(resample(c, 75), std::invalid_argument);
}
