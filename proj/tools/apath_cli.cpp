// Batch front door: JSON in, reports out. Exit codes: 0 pass, 1 fail,
// 2 input/usage error.

#include <algorithm>
#include <random>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "apath/json_io.hpp"
#include "apath/suite.hpp"

namespace {

using apath::Json;

struct Output {
    std::string path;
    bool pretty = false;

    void emit(const Json& j) const {
        if (path.empty()) {
            std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
        } else {
            apath::write_json_file(path, j, pretty);
        }
    }
};

int emit_report(const apath::Report& rep, const Output& out) {
    out.emit(apath::report_to_json(rep));
    return rep.pass ? 0 : 1;
}

apath::ParsedAlgebroid load_algebroid(const std::string& file, const std::string& preset) {
    if (!file.empty()) return apath::parse_algebroid(apath::read_json_file(file));
    Json j;
    if (preset == "su2" || preset == "so3" || preset == "heisenberg" || preset == "sl2") {
        j["family"] = "lie_algebra";
        j["structure"] = preset;
    } else if (preset == "tangent2") {
        j["family"] = "tangent";
        j["m"] = 2;
    } else if (preset == "s2-unit") {
        j["family"] = "twisted_surface";
        j["omega"] = {{"factors", 1}, {"d", 2}, {"lambdas", Json::array({Json::array({"1", "0"})})}};
    } else if (preset == "s2xs2-sqrt2") {
        j["family"] = "twisted_surface";
        j["omega"] = {{"factors", 2},
                      {"d", 2},
                      {"lambdas", Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})})}};
    } else {
        throw std::invalid_argument("unknown algebroid preset: " + preset);
    }
    return apath::parse_algebroid(j);
}

apath::APath load_path(const std::string& file, const std::string& preset, apath::SpecPtr spec,
                       int grid, std::uint64_t seed) {
    if (!file.empty()) return apath::parse_path(apath::read_json_file(file), spec);
    if (preset == "circle") return apath::circle_path(spec, grid);
    if (preset == "constant")
        return apath::constant_path(spec, apath::ChartPoint(spec->m, 0.0), grid);
    if (preset.rfind("random", 0) == 0) {
        int modes = 2;
        if (preset.size() > 6 && preset[6] == '(') {
            // random(seed) or random(seed, smoothness)
            std::string args = preset.substr(7, preset.size() - 8);
            auto comma = args.find(',');
            seed = std::stoull(args.substr(0, comma));
            if (comma != std::string::npos) modes = std::stoi(args.substr(comma + 1));
        }
        if (spec->m == 0) return apath::random_lie_path(spec, grid, seed, 0.3, modes);
        return apath::random_tangent_path(spec, grid, seed, 0.3, apath::ChartPoint(spec->m, 0.0));
    }
    throw std::invalid_argument("unknown path preset: " + preset);
}

apath::HomotopySheet load_sheet(const std::string& file, const std::string& sheet_preset,
                                apath::SpecPtr spec, int grid, std::uint64_t seed) {
    if (!file.empty()) return apath::parse_sheet(apath::read_json_file(file), spec);
    if (sheet_preset == "constant")
        return apath::sheet_constant(load_path("", "random", spec, grid, seed), grid);
    if (sheet_preset == "reparam")
        return apath::sheet_reparam_sweep(load_path("", "random", spec, grid, seed), grid,
                                          seed + 1);
    if (sheet_preset == "lie-interp")
        return apath::sheet_lie_interpolate(load_path("", "random", spec, grid, seed),
                                            load_path("", "random", spec, grid, seed + 1), grid);
    if (sheet_preset == "meridian") {
        if (spec->family != apath::Family::twisted_surface)
            throw std::invalid_argument("meridian sheet needs a twisted spec");
        std::vector<double> ls(spec->m / 2, 0.0);
        ls[0] = 1.0;
        int n5 = ((grid + 4) / 5) * 5;
        return apath::sheet_meridian(spec, ls, 0, 1, n5, n5);
    }
    throw std::invalid_argument("unknown sheet preset: " + sheet_preset);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"A-path calculus, period groups and finite groupoid checks"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    std::string input, input2, input3, preset, model_name = "su2", study;
    std::uint64_t seed = 1;
    int grid = 200;
    double tol = 1e-5, fd_step = 1e-4;
    std::vector<std::string> only;
    std::string grids_csv = "50,100,200";

    app.add_option("--out", out.path, "write the report to this file");
    auto* pretty_flag = app.add_flag("--pretty", out.pretty, "indent JSON output");
    app.add_flag("--json", "emit compact JSON (default)");
    (void)pretty_flag;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "input JSON file");
        cmd->add_option("--input2", input2, "second input JSON file");
        cmd->add_option("--input3", input3, "third input JSON file");
        cmd->add_option("--preset", preset, "named preset");
        cmd->add_option("--seed", seed, "seed for randomized constructions");
        cmd->add_option("--grid", grid, "grid size N");
        cmd->add_option("--tol", tol, "tolerance");
    };

    // algebroid validate
    auto* alg = app.add_subcommand("algebroid", "algebroid spec operations");
    auto* alg_validate = alg->add_subcommand("validate", "check the algebroid identities");
    add_common(alg_validate);
    alg_validate->add_option("--fd-step", fd_step, "finite-difference step");
    int n_samples = 5;
    alg_validate->add_option("--samples", n_samples, "number of sample points");

    // path subcommands
    auto* path_cmd = app.add_subcommand("path", "discretized A-path operations");
    std::string path_preset = "random", sheet_preset = "reparam";
    auto* path_make = path_cmd->add_subcommand("make", "build a path from a preset");
    add_common(path_make);
    path_make->add_option("--path-preset", path_preset,
                          "circle | constant | random(seed[,smoothness])");
    auto* path_check = path_cmd->add_subcommand("check", "validate path invariants");
    add_common(path_check);
    auto* path_concat = path_cmd->add_subcommand("concat", "concatenate two paths");
    add_common(path_concat);
    auto* path_invert = path_cmd->add_subcommand("invert", "reverse a path");
    add_common(path_invert);
    auto* path_reparam = path_cmd->add_subcommand("reparam", "A0 reparameterization");
    add_common(path_reparam);
    auto* path_ends = path_cmd->add_subcommand("endpoints", "source and target");
    add_common(path_ends);

    // homotopy solve|check|associator
    auto* hom = app.add_subcommand("homotopy", "homotopy ODE and equivalence");
    auto* hom_solve = hom->add_subcommand("solve", "solve the companion ODE");
    add_common(hom_solve);
    hom_solve->add_option("--sheet-preset", sheet_preset,
                          "constant | reparam | lie-interp | meridian");
    auto* hom_check = hom->add_subcommand("check", "decide sheet-end equivalence");
    add_common(hom_check);
    hom_check->add_option("--sheet-preset", sheet_preset,
                          "constant | reparam | lie-interp | meridian");
    auto* hom_assoc = hom->add_subcommand("associator", "associator homotopy of three paths");
    add_common(hom_assoc);

    // oracle develop|equiv
    auto* oracle = app.add_subcommand("oracle", "matrix development oracle");
    auto* oracle_dev = oracle->add_subcommand("develop", "development of a path");
    add_common(oracle_dev);
    oracle_dev->add_option("--model", model_name, "matrix model (su2, heisenberg, ut2, sl2)");
    auto* oracle_equiv = oracle->add_subcommand("equiv", "development equivalence of two paths");
    add_common(oracle_equiv);
    oracle_equiv->add_option("--model", model_name, "matrix model");

    // period verdict|discrete|membership|integral
    auto* period = app.add_subcommand("period", "period groups and integrability");
    auto* period_verdict = period->add_subcommand("verdict", "integrability decision");
    add_common(period_verdict);
    auto* period_disc = period->add_subcommand("discrete", "discreteness of the period group");
    add_common(period_disc);
    auto* period_member = period->add_subcommand("membership", "exact equivalence criterion");
    add_common(period_member);
    std::string u0_str = "0", u1_str = "0";
    std::vector<long long> wraps;
    period_member->add_option("--u0", u0_str, "exact u-integral of the first path");
    period_member->add_option("--u1", u1_str, "exact u-integral of the second path");
    period_member->add_option("--wrap", wraps, "wrap vector (pi_2 class)");
    auto* period_integral = period->add_subcommand("integral", "meridian-sweep flux identity");
    add_common(period_integral);
    int wraps_count = 1, factor = 0, quad_grid = 400;
    period_integral->add_option("--wraps", wraps_count, "full sweeps");
    period_integral->add_option("--factor", factor, "sphere factor index");
    period_integral->add_option("--quad-grid", quad_grid, "Simpson grid");

    // groupoid check|compose|morita|weinstein|associator
    auto* gpd = app.add_subcommand("groupoid", "finite groupoid calculus");
    auto* gpd_check = gpd->add_subcommand("check", "validate a groupoid table");
    add_common(gpd_check);
    auto* gpd_compose = gpd->add_subcommand("compose", "compose two bibundles from homomorphisms");
    add_common(gpd_compose);
    auto* gpd_morita = gpd->add_subcommand("morita", "principality / Morita test");
    add_common(gpd_morita);
    auto* gpd_wein = gpd->add_subcommand("weinstein", "axiom checker on a finite presentation");
    add_common(gpd_wein);
    auto* gpd_assoc = gpd->add_subcommand("associator", "associator obstruction on a quadruple");
    add_common(gpd_assoc);
    std::string quadruple_csv = "1,1,1,-1";
    gpd_assoc->add_option("--quadruple", quadruple_csv, "comma-separated object names");

    // suite + convergence
    auto* suite_cmd = app.add_subcommand("suite", "run the acceptance battery");
    suite_cmd->add_option("--only", only, "run only the named criteria");
    auto* conv = app.add_subcommand("convergence", "grid-refinement order studies");
    conv->add_option("--study", study, "study name")->required();
    conv->add_option("--grids", grids_csv, "comma-separated grid sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*alg_validate) {
            apath::ParsedAlgebroid pa = load_algebroid(input, preset.empty() ? "su2" : preset);
            std::vector<apath::ChartPoint> samples;
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> u(-0.8, 0.8);
            for (int i = 0; i < n_samples; ++i) {
                apath::ChartPoint x(pa.spec->m);
                for (double& v : x) v = u(rng);
                samples.push_back(x);
            }
            return emit_report(apath::validate(*pa.spec, pa.connection, samples, fd_step,
                                               tol == 1e-5 ? 1e-6 : tol),
                               out);
        }

        if (*path_make || *path_check || *path_concat || *path_invert || *path_reparam ||
            *path_ends) {
            apath::ParsedAlgebroid pa = load_algebroid("", preset.empty() ? "tangent2" : preset);
            if (*path_make) {
                apath::APath p = load_path("", path_preset, pa.spec, grid, seed);
                out.emit(apath::path_to_json(p));
                return 0;
            }
            apath::APath p = apath::parse_path(apath::read_json_file(input), pa.spec);
            if (*path_check) {
                apath::Report rep = apath::check_path(p, apath::default_path_tol(p.N), 1.0);
                return emit_report(rep, out);
            }
            if (*path_concat) {
                apath::APath q = apath::parse_path(apath::read_json_file(input2), pa.spec);
                out.emit(apath::path_to_json(apath::concat(p, q)));
                return 0;
            }
            if (*path_invert) {
                out.emit(apath::path_to_json(apath::invert(p)));
                return 0;
            }
            if (*path_reparam) {
                out.emit(apath::path_to_json(apath::reparam_tau(p)));
                return 0;
            }
            auto [s, t] = apath::endpoints(p);
            out.emit(Json{{"source", s}, {"target", t}});
            return 0;
        }

        if (*hom_solve || *hom_check) {
            apath::ParsedAlgebroid pa = load_algebroid(input2, preset.empty() ? "su2" : preset);
            apath::HomotopySheet sheet = load_sheet(input, sheet_preset, pa.spec, grid, seed);
            if (*hom_solve) {
                apath::BSolution sol = apath::solve_b(*pa.spec, pa.connection, sheet);
                apath::Report rep;
                rep.note("module", "homotopy_engine");
                rep.note("op", "solve_b");
                rep.metric("max_terminal", sol.max_terminal);
                return emit_report(rep, out);
            }
            auto [ok, rep] = apath::is_homotopy(*pa.spec, pa.connection, sheet, tol);
            (void)ok;
            return emit_report(rep, out);
        }
        if (*hom_assoc) {
            apath::ParsedAlgebroid pa = load_algebroid("", preset.empty() ? "su2" : preset);
            apath::APath a1 = load_path(input, input.empty() ? "random" : "", pa.spec, grid, seed);
            apath::APath a2 =
                load_path(input2, input2.empty() ? "random" : "", pa.spec, grid, seed + 1);
            apath::APath a3 =
                load_path(input3, input3.empty() ? "random" : "", pa.spec, grid, seed + 2);
            apath::HomotopySheet sheet = apath::associator_sheet(a1, a2, a3, grid);
            auto [ok, rep] = apath::is_homotopy(*pa.spec, pa.connection, sheet, tol);
            (void)ok;
            return emit_report(rep, out);
        }

        if (*oracle_dev || *oracle_equiv) {
            apath::MatrixModel model = apath::MatrixModel::preset(model_name);
            apath::ParsedAlgebroid pa = load_algebroid(
                "", model_name == "su2" || model_name == "so3" ? "su2" : model_name);
            apath::APath p = load_path(input, input.empty() ? "random" : "", pa.spec, grid, seed);
            if (*oracle_dev) {
                apath::CMat g = apath::develop(model, p);
                Json j;
                j["matrix"] = apath::matrix_to_json(g);
                j["norm_drift"] = apath::unitary_drift(g);
                out.emit(j);
                return 0;
            }
            apath::APath q =
                load_path(input2, input2.empty() ? "random" : "", pa.spec, grid, seed + 1);
            bool eq = apath::equivalent_oracle(model, p, q, tol == 1e-5 ? 1e-6 : tol);
            apath::Report rep;
            rep.note("module", "oracle_dev");
            rep.note("op", "equivalent_oracle");
            rep.note("equivalent", eq ? "true" : "false");
            rep.pass = true;
            return emit_report(rep, out);
        }

        if (*period_verdict || *period_disc || *period_member || *period_integral) {
            apath::TwistedSpec tw =
                input.empty()
                    ? (preset == "s2xs2-sqrt2" || preset.empty()
                           ? apath::TwistedSpec::s2xs2_sqrt2()
                           : throw std::invalid_argument("unknown period preset: " + preset))
                    : apath::parse_twisted(apath::read_json_file(input));
            if (*period_verdict) {
                apath::IntegrabilityResult res = apath::integrability_verdict(tw);
                Json j = apath::report_to_json(res.report);
                out.emit(j);
                return 0;
            }
            if (*period_disc) {
                apath::DiscretenessCertificate cert = apath::is_discrete(apath::period_group(tw));
                apath::Report rep;
                rep.note("module", "period_lattice");
                rep.note("op", "is_discrete");
                rep.note("verdict",
                         cert.verdict == apath::Discreteness::Discrete ? "Discrete" : "Dense");
                if (cert.generator) rep.certificate("generator", cert.generator->str());
                if (cert.independent_pair) {
                    rep.certificate("independent_1",
                                    tw.lambdas[cert.independent_pair->first].str());
                    rep.certificate("independent_2",
                                    tw.lambdas[cert.independent_pair->second].str());
                }
                rep.pass = true;
                return emit_report(rep, out);
            }
            if (*period_member) {
                apath::QuadNumber u0 = apath::QuadNumber::parse(u0_str, tw.d);
                apath::QuadNumber u1 = apath::QuadNumber::parse(u1_str, tw.d);
                if (wraps.empty()) wraps.assign(tw.lambdas.size(), 0);
                bool member = apath::equivalence_twisted(tw, u0, u1, true, wraps);
                apath::Report rep;
                rep.note("module", "period_lattice");
                rep.note("op", "equivalence_twisted");
                rep.note("equivalent", member ? "true" : "false");
                rep.pass = true;
                return emit_report(rep, out);
            }
            return emit_report(
                apath::twisted_homotopy_integral(tw, factor, wraps_count, quad_grid, grid,
                                                 tol == 1e-5 ? 1e-6 : tol),
                out);
        }

        if (*gpd_check) {
            apath::FiniteGroupoid g = input.empty()
                                          ? apath::groupoid_preset(preset)
                                          : apath::parse_groupoid(apath::read_json_file(input));
            apath::Report rep;
            rep.note("module", "groupoid_calculus");
            rep.note("op", "check");
            rep.metric("objects", g.n_objects());
            rep.metric("arrows", g.n_arrows());
            rep.pass = true;  // construction already enumerated the axioms
            return emit_report(rep, out);
        }
        if (*gpd_compose || *gpd_morita) {
            // Inputs are homomorphism documents or explicit bibundle tables.
            Json j1 = apath::read_json_file(input);
            apath::FiniteGroupoid from = apath::parse_groupoid(j1.at("from"));
            apath::FiniteGroupoid to = apath::parse_groupoid(j1.at("to"));
            if (*gpd_morita) {
                apath::Bibundle eb = j1.contains("total")
                                         ? apath::parse_bibundle(j1, from, to)
                                         : apath::from_homomorphism(
                                               apath::parse_hom(j1, from, to));
                apath::Report rep;
                rep.note("module", "groupoid_calculus");
                rep.note("op", "morita");
                rep.note("principal", apath::is_principal(eb) ? "true" : "false");
                rep.note("morita", apath::is_morita(eb) ? "true" : "false");
                rep.pass = true;
                return emit_report(rep, out);
            }
            apath::GroupoidHom f = apath::parse_hom(j1, from, to);
            apath::Bibundle e = apath::from_homomorphism(f);
            Json j2 = apath::read_json_file(input2);
            apath::FiniteGroupoid to2 = apath::parse_groupoid(j2.at("to"));
            apath::GroupoidHom g2 = apath::parse_hom(j2, to, to2);
            apath::Bibundle c = apath::compose(e, apath::from_homomorphism(g2));
            apath::Report rep;
            rep.note("module", "groupoid_calculus");
            rep.note("op", "compose");
            rep.metric("total", c.total);
            rep.note("two_isomorphic_to_direct",
                     apath::find_two_morphism(
                         c, apath::from_homomorphism(f.then(g2)))
                             .has_value()
                         ? "true"
                         : "false");
            rep.pass = true;
            return emit_report(rep, out);
        }
        if (*gpd_wein || *gpd_assoc) {
            apath::WeinsteinPresentation p;
            std::string name = preset.empty() ? "bz2" : preset;
            if (name == "bz2") p = apath::WeinsteinPresentation::bz2();
            else if (name == "z2-star-bz2") p = apath::WeinsteinPresentation::z2_star_bz2();
            else if (name == "trivial") p = apath::WeinsteinPresentation::trivial_point();
            else throw std::invalid_argument("unknown presentation preset: " + name);
            if (*gpd_wein) {
                apath::WeinsteinReport w = apath::weinstein_axiom_check(p);
                return emit_report(w.report, out);
            }
            std::vector<int> quad;
            std::string token;
            for (char ch : quadruple_csv + ",") {
                if (ch == ',') {
                    quad.push_back(p.gamma.object_index(token));
                    token.clear();
                } else {
                    token += ch;
                }
            }
            std::vector<int> alpha = name == "z2-star-bz2"
                                         ? p.product_alpha()
                                         : std::vector<int>(
                                               apath::fibered_power(p.gamma, p.sbar, p.tbar, 3)
                                                   .obj_tuple.size(),
                                               p.gamma.unit(0));
            apath::AssociatorObstruction obs = apath::associator_obstruction(p, alpha, quad);
            Json j = apath::report_to_json(obs.report);
            out.emit(j);
            return obs.is_identity ? 0 : 1;
        }

        if (*suite_cmd) {
            auto known = apath::suite_criteria();
            for (const auto& name : only)
                if (std::find(known.begin(), known.end(), name) == known.end())
                    throw std::invalid_argument("unknown criterion: " + name);
            auto results = apath::run_suite(only);
            Json j;
            bool all = true;
            Json arr = Json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                Json e = apath::report_to_json(r.report);
                e["criterion"] = r.name;
                e["pass"] = r.pass;
                arr.push_back(e);
                std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << "s)\n";
            }
            j["pass"] = all;
            j["criteria"] = arr;
            out.emit(j);
            return all ? 0 : 1;
        }

        if (*conv) {
            std::vector<int> grids;
            std::string token;
            for (char ch : grids_csv + ",") {
                if (ch == ',') {
                    grids.push_back(std::stoi(token));
                    token.clear();
                } else {
                    token += ch;
                }
            }
            return emit_report(apath::convergence_study(study, grids), out);
        }
    } catch (const std::exception& e) {
        Json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }
    std::cerr << "no subcommand executed\n";
    return 2;
}
