#include <random>

#include "doctest.h"

#include "apath/period.hpp"

using namespace apath;

namespace {

QuadNumber qn(long long p, long long q) { return QuadNumber(Rational(p), Rational(q), 2); }

}  // namespace

TEST_CASE("period_group: generators are the nonzero lambdas") {
    TwistedSpec running = TwistedSpec::s2xs2_sqrt2();
    PeriodGroup pg = period_group(running);
    REQUIRE(pg.generators.size() == 2);
    CHECK(pg.generators[0].str() == "1");
    CHECK(pg.generators[1].str() == "1*sqrt(2)");

    TwistedSpec single = TwistedSpec::sphere_product({qn(3, 0)}, 2);
    CHECK(period_group(single).generators.size() == 1);
    CHECK(period_group(single).generators[0].str() == "3");

    TwistedSpec with_zero = TwistedSpec::sphere_product({qn(0, 0), qn(2, 0)}, 2);
    CHECK(period_group(with_zero).generators.size() == 1);
}

TEST_CASE("is_discrete: rank decisions with certificates") {
    // {1, sqrt(2)}: dense
    auto dense = is_discrete(PeriodGroup{{qn(1, 0), qn(0, 1)}, 2});
    CHECK(dense.verdict == Discreteness::Dense);
    REQUIRE(dense.independent_pair);

    // {2, 4}: discrete with generator 2
    auto cyc = is_discrete(PeriodGroup{{qn(2, 0), qn(4, 0)}, 2});
    CHECK(cyc.verdict == Discreteness::Discrete);
    CHECK(cyc.generator->str() == "2");

    // {1+sqrt2, 2+2 sqrt2}: proportional, generator 1+sqrt2
    auto prop = is_discrete(PeriodGroup{{qn(1, 1), qn(2, 2)}, 2});
    CHECK(prop.verdict == Discreteness::Discrete);
    CHECK(*prop.generator == qn(1, 1));

    // {1, 1+sqrt2}: dense by the 2x2 determinant (Q-independent)
    auto mixed = is_discrete(PeriodGroup{{qn(1, 0), qn(1, 1)}, 2});
    CHECK(mixed.verdict == Discreteness::Dense);

    // {1/2, 3/2}: discrete with generator 1/2
    auto halves = is_discrete(
        PeriodGroup{{QuadNumber(Rational(1, 2), Rational(0), 2),
                     QuadNumber(Rational(3, 2), Rational(0), 2)}, 2});
    CHECK(halves.verdict == Discreteness::Discrete);
    CHECK(halves.generator->str() == "1/2");
}

TEST_CASE("is_discrete is invariant under the group-preserving moves") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> coef(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<QuadNumber> gens;
        int k = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) gens.push_back(qn(coef(rng), coef(rng)));
        PeriodGroup pg{gens, 2};
        auto base = is_discrete(pg);

        // permute
        std::vector<QuadNumber> perm = gens;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(is_discrete(PeriodGroup{perm, 2}).verdict == base.verdict);

        // scale all by a nonzero rational
        std::vector<QuadNumber> scaled;
        QuadNumber s = QuadNumber::rational(Rational(3, 7), 2);
        for (const auto& g : gens) scaled.push_back(g * s);
        CHECK(is_discrete(PeriodGroup{scaled, 2}).verdict == base.verdict);

        // add a Z-combination of the others to the first generator
        if (gens.size() >= 2) {
            std::vector<QuadNumber> shifted = gens;
            shifted[0] = shifted[0] + gens[1] + gens[1];
            // drop any zero that this may have produced
            std::vector<QuadNumber> reduced;
            for (const auto& g : shifted)
                if (!g.is_zero()) reduced.push_back(g);
            if (!reduced.empty())
                CHECK(is_discrete(PeriodGroup{reduced, 2}).verdict == base.verdict);
        }
    }
}

TEST_CASE("integrability_verdict: the sqrt2 pair is dense, rational pairs are not") {
    IntegrabilityResult dense = integrability_verdict(TwistedSpec::s2xs2_sqrt2());
    CHECK(dense.verdict == Integrability::NonIntegrable);
    REQUIRE_FALSE(dense.witnesses.empty());
    // convergents decrease strictly and satisfy the Pell identity
    for (std::size_t i = 0; i + 1 < dense.witnesses.size(); ++i)
        CHECK((dense.witnesses[i + 1].value - dense.witnesses[i].value).sign() < 0);
    for (const auto& w : dense.witnesses)
        CHECK(std::abs(w.p * w.p - 2 * w.q * w.q) == 1);
    const auto& last = dense.witnesses.back();
    CHECK(last.p == 577);
    CHECK(last.q == 408);
    CHECK((last.value - QuadNumber(Rational(9, 10000), Rational(0), 2)).sign() < 0);

    IntegrabilityResult disc = integrability_verdict(
        TwistedSpec::sphere_product({qn(1, 0), qn(2, 0)}, 2));
    CHECK(disc.verdict == Integrability::Integrable);
    CHECK(disc.witnesses.empty());
    CHECK(disc.certificate.generator->str() == "1");

    IntegrabilityResult single =
        integrability_verdict(TwistedSpec::sphere_product({qn(5, 0)}, 2));
    CHECK(single.verdict == Integrability::Integrable);
}

TEST_CASE("verdict consistency with is_discrete is definitional") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<long long> coef(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<QuadNumber> ls = {qn(coef(rng), coef(rng)), qn(coef(rng), coef(rng))};
        if (ls[0].is_zero() && ls[1].is_zero()) continue;
        TwistedSpec tw = TwistedSpec::sphere_product(ls, 2);
        auto cert = is_discrete(period_group(tw));
        auto verdict = integrability_verdict(tw).verdict;
        CHECK((verdict == Integrability::Integrable) ==
              (cert.verdict == Discreteness::Discrete));
    }
}

TEST_CASE("witness scaling lands inside groups that miss the unit lattice") {
    // Lambda = <2, sqrt(2)>: p - q sqrt(2) itself may fall outside, the
    // witness must still live in the group (here via the factor c).
    IntegrabilityResult res =
        integrability_verdict(TwistedSpec::sphere_product({qn(2, 0), qn(0, 1)}, 2));
    CHECK(res.verdict == Integrability::NonIntegrable);
    for (const auto& w : res.witnesses) {
        // membership in Z*2 + Z*sqrt(2): rational part even, sqrt part integral
        CHECK(w.value.p().den() == 1);
        CHECK(w.value.p().num() % 2 == 0);
        CHECK(w.value.q().den() == 1);
    }
}

TEST_CASE("equivalence_twisted: exact membership instances") {
    TwistedSpec tw = TwistedSpec::s2xs2_sqrt2();
    QuadNumber zero = qn(0, 0);
    CHECK(equivalence_twisted(tw, zero, zero, true, {0, 0}));
    // difference sqrt(2) with wrap (0, 1)
    CHECK(equivalence_twisted(tw, qn(0, 1), zero, true, {0, 1}));
    CHECK_FALSE(equivalence_twisted(tw, qn(0, 1), zero, true, {1, 0}));
    // one half is not in Z + sqrt(2) Z for any wrap in a window
    QuadNumber half(Rational(1, 2), Rational(0), 2);
    for (long long w1 = -3; w1 <= 3; ++w1)
        for (long long w2 = -3; w2 <= 3; ++w2)
            CHECK_FALSE(equivalence_twisted(tw, half, zero, true, {w1, w2}));
    // different endpoints can never be equivalent
    CHECK_FALSE(equivalence_twisted(tw, zero, zero, false, {0, 0}));
    CHECK_THROWS_AS(equivalence_twisted(tw, zero, zero, true, {0}), std::invalid_argument);
    CHECK_THROWS_AS(reject_floating_membership(), std::invalid_argument);
}

TEST_CASE("twisted flux identity at moderate quadrature") {
    TwistedSpec one = TwistedSpec::sphere_product({qn(1, 0)}, 2);
    Report rep = twisted_homotopy_integral(one, 0, 1, 200, 100, 1e-6, 5e-3);
    CHECK(rep.pass);
    CHECK(rep.metric_value("quadrature_error") < 1e-6);
    CHECK(rep.metric_value("u_difference_error") < 1e-6);

    // zero wraps: constant-in-eps sheet, zero flux on both sides
    Report none = twisted_homotopy_integral(one, 0, 0, 200, 100, 1e-9, 1e-9);
    CHECK(none.pass);
    CHECK(none.metric_value("expected_flux") == 0.0);
    CHECK(none.metric_value("u_difference") == 0.0);

    // two wraps double the flux
    Report two = twisted_homotopy_integral(one, 0, 2, 200, 100, 1e-6, 1e-2);
    CHECK(two.metric_value("expected_flux") == doctest::Approx(8 * 3.14159265358979323846));
    CHECK(two.metric_value("quadrature_error") < 1e-6);
}
