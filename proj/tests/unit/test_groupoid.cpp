#include <stdexcept>
#include "doctest.h"

#include "apath/groupoid.hpp"

using namespace apath;

TEST_CASE("construction enumerates the groupoid axioms") {
    // malformed: broken associativity via a twisted mult table on Z3
    std::vector<std::vector<int>> bad = {{0, 1, 2}, {1, 2, 0}, {2, 1, 1}};
    CHECK_THROWS_AS(FiniteGroupoid({"pt"}, {"a", "b", "c"}, {0, 0, 0}, {0, 0, 0}, bad,
                                   {0}, {0, 2, 1}),
                    std::invalid_argument);
    // well-formed presets construct fine
    CHECK(FiniteGroupoid::cyclic_group(4).n_arrows() == 4);
    CHECK(FiniteGroupoid::pair_groupoid(3).n_arrows() == 9);
    CHECK(FiniteGroupoid::z2_times_z2_over_z2().n_objects() == 2);
    CHECK(FiniteGroupoid::symmetric3().n_arrows() == 6);
}

TEST_CASE("from_homomorphism: identity gives the identity bibundle") {
    FiniteGroupoid z2 = FiniteGroupoid::cyclic_group(2);
    Bibundle id = identity_bibundle(z2);
    CHECK(id.total == 2);
    CHECK(is_morita(id));
    auto tm = find_two_morphism(id, from_homomorphism(GroupoidHom::identity(z2)));
    CHECK(tm.has_value());
}

TEST_CASE("inversion homomorphism of Z2 yields a Morita bibundle of size 2") {
    FiniteGroupoid z2 = FiniteGroupoid::cyclic_group(2);
    GroupoidHom invh(z2, z2, {0}, {0, 1});  // inversion = identity on Z2
    Bibundle e = from_homomorphism(invh);
    CHECK(e.total == 2);
    CHECK(is_morita(e));
}

TEST_CASE("collapse homomorphism is right-principal but not Morita") {
    FiniteGroupoid z2 = FiniteGroupoid::cyclic_group(2);
    FiniteGroupoid pt = FiniteGroupoid::trivial();
    GroupoidHom collapse(z2, pt, {0}, {0, 0});
    Bibundle e = from_homomorphism(collapse);
    CHECK(is_principal(e));
    CHECK_FALSE(is_morita(e));
}

TEST_CASE("non-free action: trivial Z2 action on one point is not principal") {
    FiniteGroupoid z2 = FiniteGroupoid::cyclic_group(2);
    FiniteGroupoid pt = FiniteGroupoid::trivial();
    GroupoidAction left(ActionSide::left, pt, 1, {0}, {{0}});
    GroupoidAction right(ActionSide::right, z2, 1, {0}, {{0, 0}});
    Bibundle e(pt, z2, {"x"}, left, right);
    CHECK_FALSE(is_principal(e));
}

TEST_CASE("pair groupoid on three points is Morita equivalent to the point") {
    FiniteGroupoid pt = FiniteGroupoid::trivial();
    FiniteGroupoid pair3 = FiniteGroupoid::pair_groupoid(3);
    GroupoidHom inc(pt, pair3, {0}, {pair3.unit(0)});
    Bibundle e = from_homomorphism(inc);
    CHECK(e.total == 3);
    CHECK(is_morita(e));
    CHECK(is_morita(flip(e)));
}

TEST_CASE("compose: identity absorbs, Morita inverses cancel") {
    FiniteGroupoid z2 = FiniteGroupoid::cyclic_group(2);
    Bibundle id = identity_bibundle(z2);
    Bibundle twice = compose(id, id);
    CHECK(find_two_morphism(twice, id).has_value());

    GroupoidHom invh(z2, z2, {0}, {0, 1});
    Bibundle e = from_homomorphism(invh);
    Bibundle round = compose(e, flip(e));
    CHECK(find_two_morphism(round, id).has_value());
}

TEST_CASE("composition is associative only up to 2-isomorphism") {
    FiniteGroupoid z2 = FiniteGroupoid::cyclic_group(2);
    GroupoidHom invh(z2, z2, {0}, {0, 1});
    Bibundle e = from_homomorphism(invh);
    Bibundle lhs = compose(compose(e, e), e);
    Bibundle rhs = compose(e, compose(e, e));
    // representative labels differ on the nose...
    CHECK(lhs.elem_names != rhs.elem_names);
    // ...but the bibundles are 2-isomorphic
    CHECK(find_two_morphism(lhs, rhs).has_value());
}

TEST_CASE("functoriality of from_homomorphism up to 2-isomorphism") {
    FiniteGroupoid z3 = FiniteGroupoid::cyclic_group(3);
    GroupoidHom dbl(z3, z3, {0}, {0, 2, 1});  // x -> 2x, an automorphism
    Bibundle lhs = compose(from_homomorphism(dbl), from_homomorphism(dbl));
    Bibundle rhs = from_homomorphism(dbl.then(dbl));
    CHECK(find_two_morphism(lhs, rhs).has_value());

    FiniteGroupoid pt = FiniteGroupoid::trivial();
    FiniteGroupoid pair2 = FiniteGroupoid::pair_groupoid(2);
    FiniteGroupoid pair3 = FiniteGroupoid::pair_groupoid(3);
    GroupoidHom inc2(pt, pair2, {0}, {pair2.unit(0)});
    GroupoidHom inc23(pair2, pair3, {0, 1},
                      {pair3.arrow_index("(0<-0)"), pair3.arrow_index("(0<-1)"),
                       pair3.arrow_index("(1<-0)"), pair3.arrow_index("(1<-1)")});
    Bibundle chain = compose(from_homomorphism(inc2), from_homomorphism(inc23));
    Bibundle direct = from_homomorphism(inc2.then(inc23));
    CHECK(find_two_morphism(chain, direct).has_value());
    CHECK(is_morita(chain));
}

TEST_CASE("two-morphism searches: counts and impossibility") {
    FiniteGroupoid z2 = FiniteGroupoid::cyclic_group(2);
    Bibundle id1 = identity_bibundle(z2);
    Bibundle id2 = identity_bibundle(z2);
    // abelian isotropy: exactly |Z2| bi-invariant bijections
    CHECK(count_two_morphisms(id1, id2) == 2);
    auto first = find_two_morphism(id1, id2);
    REQUIRE(first.has_value());

    // different cardinalities: none
    FiniteGroupoid pt = FiniteGroupoid::trivial();
    GroupoidHom collapse(z2, pt, {0}, {0, 0});
    CHECK_FALSE(find_two_morphism(identity_bibundle(pt), from_homomorphism(collapse))
                    .has_value());
}

TEST_CASE("hom-level 2-morphisms: units, centers, corruption") {
    FiniteGroupoid z2 = FiniteGroupoid::cyclic_group(2);
    GroupoidHom id = GroupoidHom::identity(z2);
    CHECK(check_hom_two_morphism(id, id, {z2.unit(0)}));
    CHECK(check_hom_two_morphism(id, id, {1}));  // -1 is central too

    // S3: only central elements connect id to id, and the center is trivial
    FiniteGroupoid s3 = FiniteGroupoid::symmetric3();
    GroupoidHom ids3 = GroupoidHom::identity(s3);
    CHECK(check_hom_two_morphism(ids3, ids3, {s3.arrow_index("e")}));
    CHECK_FALSE(check_hom_two_morphism(ids3, ids3, {s3.arrow_index("s01")}));
    CHECK(enumerate_hom_two_morphisms(ids3, ids3).size() == 1);

    // typing corruption: alpha at the wrong object
    FiniteGroupoid gamma = FiniteGroupoid::z2_times_z2_over_z2();
    GroupoidHom idg = GroupoidHom::identity(gamma);
    std::vector<int> good = {gamma.unit(0), gamma.unit(1)};
    std::vector<int> bad = {gamma.unit(1), gamma.unit(0)};
    CHECK(check_hom_two_morphism(idg, idg, good));
    CHECK_FALSE(check_hom_two_morphism(idg, idg, bad));
}
