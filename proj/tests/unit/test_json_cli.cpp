#include "doctest.h"

#include "apath/json_io.hpp"
#include "apath/suite.hpp"

using namespace apath;

TEST_CASE("report serialization is ordered and reproducible") {
    Report rep;
    rep.note("module", "demo");
    rep.metric("alpha", 1.5);
    rep.metric("beta", -2.0);
    rep.certificate("gen", "1+1*sqrt(2)");
    rep.witness("3/2");
    Json j1 = report_to_json(rep);
    Json j2 = report_to_json(rep);
    CHECK(j1.dump() == j2.dump());
    CHECK(j1.dump().find("\"pass\"") == 1);  // pass leads the object
    auto it = j1["metrics"].begin();
    CHECK(it.key() == "alpha");  // insertion order, not alphabetical luck
    ++it;
    CHECK(it.key() == "beta");
}

TEST_CASE("path json round-trips and validates shapes") {
    SpecPtr tan = make_tangent(2);
    APath p = circle_path(tan, 64);
    Json j = path_to_json(p);
    APath q = parse_path(j, tan);
    CHECK(q.N == p.N);
    CHECK(q.a == p.a);
    CHECK(q.gamma == p.gamma);

    Json bad = j;
    bad["N"] = 63;
    CHECK_THROWS_AS(parse_path(bad, tan), std::invalid_argument);
}

TEST_CASE("sheet json round-trips") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    APath p = random_lie_path(su2, 32, 9, 0.3);
    HomotopySheet s = sheet_constant(p, 4);
    HomotopySheet t = parse_sheet(sheet_to_json(s), su2);
    CHECK(t.Ne == 4);
    CHECK(t.a == s.a);
}

TEST_CASE("twisted spec json: exact strings in, floats rejected") {
    Json j;
    j["factors"] = 2;
    j["d"] = 2;
    j["lambdas"] = Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})});
    TwistedSpec tw = parse_twisted(j);
    CHECK(tw.lambdas[1] == QuadNumber::sqrt_d(2));

    Json floaty;
    floaty["d"] = 2;
    floaty["lambdas"] = Json::array({1.4142});
    CHECK_THROWS_AS(parse_twisted(floaty), std::invalid_argument);

    Json strings;
    strings["d"] = 2;
    strings["lambdas"] = Json::array({"1/2+3/4*sqrt(2)"});
    CHECK(parse_twisted(strings).lambdas[0].p() == Rational(1, 2));
}

TEST_CASE("algebroid json: presets, connections, twisted route") {
    Json j;
    j["family"] = "lie_algebra";
    j["structure"] = "su2";
    j["connection"] = "zero";
    ParsedAlgebroid pa = parse_algebroid(j);
    CHECK(pa.spec->n == 3);
    CHECK(pa.spec->m == 0);

    Json t;
    t["family"] = "twisted_surface";
    t["omega"] = {{"factors", 1}, {"d", 2}, {"lambdas", Json::array({Json::array({"1", "0"})})}};
    t["connection"] = "random(7)";
    ParsedAlgebroid pt = parse_algebroid(t);
    CHECK(pt.spec->m == 2);
    CHECK(pt.spec->n == 3);
    CHECK(pt.twisted.has_value());
    CHECK(pt.connection.name == "random(7)");

    Json g;
    g["family"] = "tangent";
    g["m"] = 3;
    CHECK(parse_algebroid(g).spec->n == 3);
}

TEST_CASE("groupoid json round-trips through construction") {
    FiniteGroupoid z2 = FiniteGroupoid::cyclic_group(2);
    Json j = groupoid_to_json(z2);
    FiniteGroupoid back = parse_groupoid(j);
    CHECK(back.n_objects() == 1);
    CHECK(back.n_arrows() == 2);
    CHECK(back.mult(back.arrow_index("-1"), back.arrow_index("-1")) ==
          back.arrow_index("1"));
}

TEST_CASE("bibundle json: action tables construct and classify") {
    FiniteGroupoid pt = FiniteGroupoid::trivial();
    FiniteGroupoid pair2 = FiniteGroupoid::pair_groupoid(2);
    // two points, left trivial action, right pair-groupoid action: Morita
    Json j;
    j["total"] = {"p0", "p1"};
    j["jg"] = {{"p0", "pt"}, {"p1", "pt"}};
    j["jh"] = {{"p0", "x0"}, {"p1", "x1"}};
    j["left"] = Json::array({Json::array({"1", "p0", "p0"}), Json::array({"1", "p1", "p1"})});
    j["right"] = Json::array({
        Json::array({"p0", "(0<-0)", "p0"}), Json::array({"p0", "(0<-1)", "p1"}),
        Json::array({"p1", "(1<-0)", "p0"}), Json::array({"p1", "(1<-1)", "p1"})});
    Bibundle e = parse_bibundle(j, pt, pair2);
    CHECK(is_morita(e));

    Json bad = j;
    bad["right"] = Json::array({Json::array({"p0", "(0<-0)", "p0"})});
    CHECK_THROWS_AS(parse_bibundle(bad, pt, pair2), std::invalid_argument);
}

TEST_CASE("convergence studies report expected orders") {
    Report fourth = convergence_study("integrate_base_circle", {50, 100, 200});
    CHECK(fourth.metric_value("order") > 3.5);

    Report flat = convergence_study("dual_apath_tangent", {40, 80, 160});
    CHECK(flat.metric_value("order") > 1.6);
    CHECK(flat.metric_value("order") < 2.4);

    CHECK_THROWS_AS(convergence_study("integrate_base_circle", {100}), std::invalid_argument);
    CHECK_THROWS_AS(convergence_study("nope", {10, 20, 40}), std::invalid_argument);
}

TEST_CASE("suite criteria are all reachable by name") {
    auto names = suite_criteria();
    CHECK(names.size() == 11);
    CriterionResult quick = run_criterion("quad-field-axioms");
    CHECK(quick.pass);
    CHECK_THROWS_AS(run_criterion("definitely-not-a-criterion"), std::invalid_argument);
}
