#include <stdexcept>
#include "doctest.h"

#include "apath/weinstein.hpp"

using namespace apath;

TEST_CASE("fibered powers enumerate chained tuples with componentwise structure") {
    WeinsteinPresentation p = WeinsteinPresentation::z2_star_bz2();
    FiberedPower sq = fibered_power(p.gamma, p.sbar, p.tbar, 2);
    CHECK(sq.gpd.n_objects() == 4);   // base is a point: full square
    CHECK(sq.gpd.n_arrows() == 16);
    FiberedPower cube = fibered_power(p.gamma, p.sbar, p.tbar, 3);
    CHECK(cube.gpd.n_objects() == 8);
    CHECK(cube.gpd.n_arrows() == 64);
}

TEST_CASE("BZ2 passes every axiom with identity 2-morphisms") {
    WeinsteinPresentation p = WeinsteinPresentation::bz2();
    WeinsteinReport rep = weinstein_axiom_check(p);
    CHECK(rep.pass);
    for (const auto& ax : rep.axioms) {
        CHECK(ax.pass);
        CHECK(ax.boundary_ok);
        for (int arrow : ax.alpha) CHECK(p.gamma.is_unit(arrow));
    }
    // two available 2-morphisms for the associativity square (abelian isotropy)
    for (const auto& ax : rep.axioms)
        if (ax.axiom == "associativity") CHECK(ax.count == 2);
}

TEST_CASE("the trivial point presentation passes trivially") {
    WeinsteinReport rep = weinstein_axiom_check(WeinsteinPresentation::trivial_point());
    CHECK(rep.pass);
}

TEST_CASE("Z2 x Z2 over Z2 is a Weinstein group with a nontrivial associator choice") {
    WeinsteinPresentation p = WeinsteinPresentation::z2_star_bz2();
    WeinsteinReport rep = weinstein_axiom_check(p);
    CHECK(rep.pass);

    // the product alpha is a genuine 2-morphism between the two associations
    FiberedPower sq = fibered_power(p.gamma, p.sbar, p.tbar, 2);
    FiberedPower cube = fibered_power(p.gamma, p.sbar, p.tbar, 3);
    auto mo = [&](int x, int y) { return p.m_obj[sq.obj_index.at({x, y})]; };
    auto ma = [&](int a, int b) { return p.m_arr[sq.arr_index.at({a, b})]; };
    std::vector<int> f_obj(cube.obj_tuple.size()), g_obj(cube.obj_tuple.size());
    std::vector<int> f_arr(cube.arr_tuple.size()), g_arr(cube.arr_tuple.size());
    for (std::size_t i = 0; i < cube.obj_tuple.size(); ++i) {
        auto& t = cube.obj_tuple[i];
        f_obj[i] = mo(mo(t[0], t[1]), t[2]);
        g_obj[i] = mo(t[0], mo(t[1], t[2]));
    }
    for (std::size_t i = 0; i < cube.arr_tuple.size(); ++i) {
        auto& t = cube.arr_tuple[i];
        f_arr[i] = ma(ma(t[0], t[1]), t[2]);
        g_arr[i] = ma(t[0], ma(t[1], t[2]));
    }
    GroupoidHom F(cube.gpd, p.gamma, f_obj, f_arr);
    GroupoidHom G(cube.gpd, p.gamma, g_obj, g_arr);
    std::vector<int> alpha = p.product_alpha();
    CHECK(check_hom_two_morphism(F, G, alpha));
    bool nontrivial = false;
    for (int a : alpha) nontrivial = nontrivial || !p.gamma.is_unit(a);
    CHECK(nontrivial);

    // corrupting one value at an off-product object breaks the typing
    std::vector<int> bad = alpha;
    bad[cube.obj_index.at({1, 0, 0})] = p.gamma.unit(0);
    CHECK_FALSE(check_hom_two_morphism(F, G, bad));
}

TEST_CASE("two-point base: disjoint BZ2 pair chains and rejects cross terms") {
    // Z2 x Z2 over Z2 with identity base maps is a disjoint union of two
    // one-object groups; multiplication only pairs arrows at the same base
    // point, so the fibered powers are genuinely constrained.
    WeinsteinPresentation p;
    p.gamma = FiniteGroupoid::z2_times_z2_over_z2();
    p.base_size = 2;
    p.sbar = {0, 1};
    p.tbar = {0, 1};
    FiberedPower sq = fibered_power(p.gamma, p.sbar, p.tbar, 2);
    CHECK(sq.gpd.n_objects() == 2);  // only (x, x) pairs chain
    p.m_obj.assign(sq.obj_tuple.size(), 0);
    for (std::size_t i = 0; i < sq.obj_tuple.size(); ++i) p.m_obj[i] = sq.obj_tuple[i][0];
    p.m_arr.assign(sq.arr_tuple.size(), 0);
    for (std::size_t i = 0; i < sq.arr_tuple.size(); ++i) {
        int a1 = sq.arr_tuple[i][0], a2 = sq.arr_tuple[i][1];
        p.m_arr[i] = p.gamma.mult(a1, a2);
    }
    p.e_obj = {0, 1};
    p.i_obj = {0, 1};
    p.i_arr = {0, 1, 2, 3};
    p.name = "bz2-disjoint-pair";

    WeinsteinReport rep = weinstein_axiom_check(p);
    CHECK(rep.pass);

    FiberedPower cube = fibered_power(p.gamma, p.sbar, p.tbar, 3);
    std::vector<int> alpha(cube.obj_tuple.size());
    for (std::size_t i = 0; i < cube.obj_tuple.size(); ++i)
        alpha[i] = p.gamma.unit(cube.obj_tuple[i][0]);
    AssociatorObstruction ok = associator_obstruction(p, alpha, {0, 0, 0, 0});
    CHECK(ok.is_identity);
    // arrows over different base points never chain
    CHECK_THROWS_AS(associator_obstruction(p, alpha, {0, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("missing structure is rejected up front") {
    WeinsteinPresentation p = WeinsteinPresentation::bz2();
    p.sbar = {};  // drop the invariant source map
    CHECK_THROWS_AS(weinstein_axiom_check(p), std::invalid_argument);
    WeinsteinPresentation q = WeinsteinPresentation::bz2();
    q.m_arr.pop_back();
    CHECK_THROWS_AS(weinstein_axiom_check(q), std::invalid_argument);
}

TEST_CASE("associator obstruction: the obstructed quadruple and friends") {
    WeinsteinPresentation p = WeinsteinPresentation::z2_star_bz2();
    const FiniteGroupoid& G = p.gamma;
    std::vector<int> alpha = p.product_alpha();

    auto run = [&](const char* a, const char* b, const char* c, const char* d) {
        return associator_obstruction(
            p, alpha,
            {G.object_index(a), G.object_index(b), G.object_index(c), G.object_index(d)});
    };

    AssociatorObstruction obs = run("1", "1", "1", "-1");
    CHECK(G.arrow_name(obs.composite_arrow) == "(g=-1|x=-1)");
    CHECK_FALSE(obs.is_identity);
    CHECK(G.arrow_name(obs.expected_unit) == "(g=1|x=-1)");
    // five faces carry the nontrivial arrow, the interchange face is a unit
    int nontrivial = 0;
    for (int f : obs.face_values)
        if (!G.is_unit(f)) ++nontrivial;
    CHECK(nontrivial == 5);

    AssociatorObstruction unit = run("1", "1", "1", "1");
    CHECK(unit.is_identity);

    // all-unit alpha on BZ2: identity for any quadruple
    WeinsteinPresentation bz2 = WeinsteinPresentation::bz2();
    std::vector<int> id_alpha(
        fibered_power(bz2.gamma, bz2.sbar, bz2.tbar, 3).obj_tuple.size(), bz2.gamma.unit(0));
    AssociatorObstruction triv = associator_obstruction(bz2, id_alpha, {0, 0, 0, 0});
    CHECK(triv.is_identity);

    CHECK_THROWS_AS(associator_obstruction(p, alpha, {0, 0, 0}), std::invalid_argument);
    // a non-2-morphism alpha is rejected up front
    std::vector<int> junk(alpha.size(), 1);  // arrow (g=-1|x=1) everywhere
    CHECK_THROWS_AS(associator_obstruction(p, junk, {0, 0, 0, 1}), std::invalid_argument);
}
