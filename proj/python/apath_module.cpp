// Python bindings for the main operations: exact period-group decisions,
// the homotopy engine, the development oracle and the finite groupoid
// checks. JSON documents cross the boundary as strings.

#include <random>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apath/json_io.hpp"
#include "apath/suite.hpp"

namespace py = pybind11;
using namespace apath;

namespace {

Json parse(const std::string& text) { return Json::parse(text); }

std::string verdict_json(const std::string& twisted_json) {
    IntegrabilityResult res = integrability_verdict(parse_twisted(parse(twisted_json)));
    return report_to_json(res.report).dump();
}

std::string discrete_verdict(const std::string& twisted_json) {
    auto cert = is_discrete(period_group(parse_twisted(parse(twisted_json))));
    return cert.verdict == Discreteness::Discrete ? "Discrete" : "Dense";
}

bool membership(const std::string& twisted_json, const std::string& u0, const std::string& u1,
                const std::vector<long long>& wrap) {
    TwistedSpec tw = parse_twisted(parse(twisted_json));
    return equivalence_twisted(tw, QuadNumber::parse(u0, tw.d), QuadNumber::parse(u1, tw.d), true,
                               wrap);
}

std::string validate_algebroid(const std::string& spec_json, int samples, double fd_step,
                               double tol, std::uint64_t seed) {
    ParsedAlgebroid pa = parse_algebroid(parse(spec_json));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    std::vector<ChartPoint> pts;
    for (int i = 0; i < samples; ++i) {
        ChartPoint x(pa.spec->m);
        for (double& v : x) v = u(rng);
        pts.push_back(x);
    }
    return report_to_json(validate(*pa.spec, pa.connection, pts, fd_step, tol)).dump();
}

std::string develop_json(const std::string& model_tag, const std::string& path_json) {
    MatrixModel model = MatrixModel::preset(model_tag);
    SpecPtr spec = make_lie_algebra_preset(model_tag == "so3" ? "so3" : model_tag);
    APath p = parse_path(parse(path_json), spec);
    CMat g = develop(model, p);
    Json j;
    j["matrix"] = matrix_to_json(g);
    j["norm_drift"] = unitary_drift(g);
    return j.dump();
}

bool oracle_equivalent(const std::string& model_tag, const std::string& p0_json,
                       const std::string& p1_json, double tol) {
    MatrixModel model = MatrixModel::preset(model_tag);
    SpecPtr spec = make_lie_algebra_preset(model_tag);
    return equivalent_oracle(model, parse_path(parse(p0_json), spec),
                             parse_path(parse(p1_json), spec), tol);
}

std::string random_path_json(const std::string& preset, int N, std::uint64_t seed,
                             double amplitude) {
    SpecPtr spec = make_lie_algebra_preset(preset);
    return path_to_json(random_lie_path(spec, N, seed, amplitude)).dump();
}

std::string is_homotopy_sheet(const std::string& spec_json, const std::string& sheet_json,
                              double tol) {
    ParsedAlgebroid pa = parse_algebroid(parse(spec_json));
    HomotopySheet sheet = parse_sheet(parse(sheet_json), pa.spec);
    auto [ok, rep] = is_homotopy(*pa.spec, pa.connection, sheet, tol);
    (void)ok;
    return report_to_json(rep).dump();
}

std::string associator_check(const std::string& p1, const std::string& p2, const std::string& p3,
                             int Ne, double tol) {
    SpecPtr spec = make_lie_algebra_preset("su2");
    HomotopySheet sheet = associator_sheet(parse_path(parse(p1), spec), parse_path(parse(p2), spec),
                                           parse_path(parse(p3), spec), Ne);
    auto [ok, rep] = is_homotopy(*spec, ConnectionSpec::zero(0, 3), sheet, tol);
    (void)ok;
    return report_to_json(rep).dump();
}

std::string weinstein_check(const std::string& preset) {
    WeinsteinPresentation p;
    if (preset == "bz2") p = WeinsteinPresentation::bz2();
    else if (preset == "z2-star-bz2") p = WeinsteinPresentation::z2_star_bz2();
    else if (preset == "trivial") p = WeinsteinPresentation::trivial_point();
    else throw std::invalid_argument("unknown presentation: " + preset);
    return report_to_json(weinstein_axiom_check(p).report).dump();
}

std::string associator_obstruction_py(const std::string& preset,
                                      const std::vector<std::string>& quadruple) {
    WeinsteinPresentation p;
    std::vector<int> alpha;
    if (preset == "z2-star-bz2") {
        p = WeinsteinPresentation::z2_star_bz2();
        alpha = p.product_alpha();
    } else if (preset == "bz2") {
        p = WeinsteinPresentation::bz2();
        alpha.assign(fibered_power(p.gamma, p.sbar, p.tbar, 3).obj_tuple.size(), p.gamma.unit(0));
    } else {
        throw std::invalid_argument("unknown presentation: " + preset);
    }
    std::vector<int> quad;
    for (const auto& name : quadruple) quad.push_back(p.gamma.object_index(name));
    AssociatorObstruction obs = associator_obstruction(p, alpha, quad);
    return report_to_json(obs.report).dump();
}

bool groupoid_morita(const std::string& hom_json) {
    Json j = parse(hom_json);
    FiniteGroupoid from = parse_groupoid(j.at("from"));
    FiniteGroupoid to = parse_groupoid(j.at("to"));
    return is_morita(from_homomorphism(parse_hom(j, from, to)));
}

std::string run_suite_py(const std::vector<std::string>& only) {
    auto results = run_suite(only);
    Json arr = Json::array();
    bool all = true;
    for (const auto& r : results) {
        Json e = report_to_json(r.report);
        e["criterion"] = r.name;
        e["pass"] = r.pass;
        all = all && r.pass;
        arr.push_back(e);
    }
    Json j;
    j["pass"] = all;
    j["criteria"] = arr;
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(apath_core_py, m) {
    m.doc() = "A-path calculus for Lie algebroids: homotopy ODE, development "
              "oracle, exact period groups and finite groupoid checks";

    m.def("validate_algebroid", &validate_algebroid, py::arg("spec_json"), py::arg("samples") = 5,
          py::arg("fd_step") = 1e-4, py::arg("tol") = 1e-6, py::arg("seed") = 1);
    m.def("random_lie_path", &random_path_json, py::arg("preset"), py::arg("n") = 200,
          py::arg("seed") = 1, py::arg("amplitude") = 0.3);
    m.def("develop", &develop_json, py::arg("model"), py::arg("path_json"));
    m.def("oracle_equivalent", &oracle_equivalent, py::arg("model"), py::arg("p0_json"),
          py::arg("p1_json"), py::arg("tol") = 1e-6);
    m.def("is_homotopy", &is_homotopy_sheet, py::arg("spec_json"), py::arg("sheet_json"),
          py::arg("tol") = 1e-5);
    m.def("associator_homotopy", &associator_check, py::arg("p1_json"), py::arg("p2_json"),
          py::arg("p3_json"), py::arg("ne") = 200, py::arg("tol") = 1e-5);
    m.def("period_verdict", &verdict_json, py::arg("twisted_json"));
    m.def("period_discrete", &discrete_verdict, py::arg("twisted_json"));
    m.def("period_membership", &membership, py::arg("twisted_json"), py::arg("u0"), py::arg("u1"),
          py::arg("wrap"));
    m.def("twisted_integral",
          [](const std::string& twisted_json, int factor, int wraps, int quad_grid, int sheet_grid,
             double tol) {
              return report_to_json(twisted_homotopy_integral(parse_twisted(parse(twisted_json)),
                                                              factor, wraps, quad_grid, sheet_grid,
                                                              tol))
                  .dump();
          },
          py::arg("twisted_json"), py::arg("factor") = 0, py::arg("wraps") = 1,
          py::arg("quad_grid") = 400, py::arg("sheet_grid") = 200, py::arg("tol") = 1e-6);
    m.def("weinstein_check", &weinstein_check, py::arg("preset"));
    m.def("associator_obstruction", &associator_obstruction_py, py::arg("preset"),
          py::arg("quadruple"));
    m.def("groupoid_morita", &groupoid_morita, py::arg("hom_json"));
    m.def("run_suite", &run_suite_py, py::arg("only") = std::vector<std::string>{});
    m.def("suite_criteria", []() { return suite_criteria(); });
}
