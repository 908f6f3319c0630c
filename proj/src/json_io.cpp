#include "apath/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace apath {

Json report_to_json(const Report& rep) {
    Json j;
    j["pass"] = rep.pass;
    Json metrics = Json::object();
    for (const auto& [k, v] : rep.metrics) metrics[k] = v;
    j["metrics"] = metrics;
    Json certs = Json::object();
    for (const auto& [k, v] : rep.certificates) certs[k] = v;
    j["certificates"] = certs;
    j["witnesses"] = rep.witnesses;
    Json prov = Json::object();
    for (const auto& [k, v] : rep.provenance) prov[k] = v;
    j["provenance"] = prov;
    return j;
}

TwistedSpec parse_twisted(const Json& j) {
    long long d = j.value("d", 2LL);
    std::vector<QuadNumber> ls;
    for (const auto& entry : j.at("lambdas")) {
        if (entry.is_array()) {
            if (!entry[0].is_string() || !entry[1].is_string())
                throw std::invalid_argument(
                    "twisted spec: lambda coefficients must be exact strings");
            ls.emplace_back(Rational::parse(entry[0].get<std::string>()),
                            Rational::parse(entry[1].get<std::string>()), d);
        } else if (entry.is_string()) {
            ls.push_back(QuadNumber::parse(entry.get<std::string>(), d));
        } else {
            throw std::invalid_argument("twisted spec: floating lambdas are rejected");
        }
    }
    TwistedSpec t = TwistedSpec::sphere_product(ls, d);
    if (j.contains("factors") && j.at("factors").get<int>() != t.factors)
        throw std::invalid_argument("twisted spec: factor count mismatch");
    return t;
}

Json twisted_to_json(const TwistedSpec& t) {
    Json j;
    j["factors"] = t.factors;
    j["d"] = t.d;
    Json ls = Json::array();
    for (const auto& l : t.lambdas) ls.push_back(Json::array({l.p().str(), l.q().str()}));
    j["lambdas"] = ls;
    return j;
}

namespace {

Tensor3 parse_tensor3(const Json& j, int n0, int n1, int n2) {
    Tensor3 t(n0, n1, n2);
    for (int k = 0; k < n0; ++k)
        for (int i = 0; i < n1; ++i)
            for (int l = 0; l < n2; ++l) t(k, i, l) = j.at(k).at(i).at(l).get<double>();
    return t;
}

}  // namespace

ParsedAlgebroid parse_algebroid(const Json& j) {
    ParsedAlgebroid out;
    std::string family = j.value("family", "custom");

    if (family == "twisted_surface") {
        out.twisted = parse_twisted(j.at("omega"));
        out.spec = out.twisted->to_algebroid();
    } else if (family == "tangent") {
        out.spec = make_tangent(j.at("m").get<int>());
    } else if (family == "lie_algebra") {
        const Json& st = j.at("structure");
        if (st.is_string()) {
            out.spec = make_lie_algebra_preset(st.get<std::string>());
        } else {
            int n = j.at("n").get<int>();
            out.spec = make_lie_algebra(parse_tensor3(st, n, n, n));
        }
    } else if (family == "custom") {
        // constant anchor matrix and structure tensor from nested arrays
        int m = j.at("m").get<int>();
        int n = j.at("n").get<int>();
        Mat anchor(m, n);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c) anchor(r, c) = j.at("anchor").at(r).at(c).get<double>();
        Tensor3 structure = parse_tensor3(j.at("structure"), n, n, n);
        auto spec = std::make_shared<AlgebroidSpec>();
        spec->family = Family::custom;
        spec->m = m;
        spec->n = n;
        spec->name = "custom";
        spec->anchor = [anchor](const ChartPoint&) { return anchor; };
        spec->structure = [structure](const ChartPoint&) { return structure; };
        out.spec = spec;
    } else {
        throw std::invalid_argument("algebroid: unknown family " + family);
    }

    const int m = out.spec->m, n = out.spec->n;
    out.connection = ConnectionSpec::zero(m, n);
    if (j.contains("connection")) {
        const Json& c = j.at("connection");
        if (c.is_string()) {
            std::string s = c.get<std::string>();
            if (s == "zero") {
                out.connection = ConnectionSpec::zero(m, n);
            } else if (s.rfind("random(", 0) == 0 && s.back() == ')') {
                out.connection = ConnectionSpec::random_constant(
                    m, n, std::stoull(s.substr(7, s.size() - 8)));
            } else {
                throw std::invalid_argument("algebroid: unknown connection " + s);
            }
        } else {
            Tensor3 g = parse_tensor3(c, n, m, n);
            ConnectionSpec conn;
            conn.m = m;
            conn.n = n;
            conn.name = "table";
            conn.gamma = [g](const ChartPoint&) { return g; };
            out.connection = conn;
        }
    }
    return out;
}

Json path_to_json(const APath& p) {
    Json j;
    j["N"] = p.N;
    j["a"] = p.a;
    j["gamma"] = p.gamma;
    j["a0"] = p.a0_flag;
    if (!p.joints.empty()) j["joints"] = p.joints;
    return j;
}

APath parse_path(const Json& j, SpecPtr spec) {
    APath p;
    p.spec = spec;
    p.N = j.at("N").get<int>();
    p.a = j.at("a").get<std::vector<Vec>>();
    p.gamma = j.at("gamma").get<std::vector<Vec>>();
    p.a0_flag = j.value("a0", false);
    if (j.contains("joints")) p.joints = j.at("joints").get<std::vector<int>>();
    if (static_cast<int>(p.a.size()) != p.N + 1 || static_cast<int>(p.gamma.size()) != p.N + 1)
        throw std::invalid_argument("path: array lengths disagree with N");
    for (const auto& v : p.a)
        if (static_cast<int>(v.size()) != spec->n)
            throw std::invalid_argument("path: fiber width disagrees with the spec");
    for (const auto& v : p.gamma)
        if (static_cast<int>(v.size()) != spec->m)
            throw std::invalid_argument("path: base width disagrees with the spec");
    return p;
}

Json sheet_to_json(const HomotopySheet& s) {
    Json j;
    j["Ne"] = s.Ne;
    j["Nt"] = s.Nt;
    j["a"] = s.a;
    j["gamma"] = s.gamma;
    if (!s.joints.empty()) j["joints"] = s.joints;
    return j;
}

HomotopySheet parse_sheet(const Json& j, SpecPtr spec) {
    HomotopySheet s;
    s.spec = spec;
    s.Ne = j.at("Ne").get<int>();
    s.Nt = j.at("Nt").get<int>();
    s.a = j.at("a").get<std::vector<std::vector<Vec>>>();
    s.gamma = j.at("gamma").get<std::vector<std::vector<Vec>>>();
    if (j.contains("joints")) s.joints = j.at("joints").get<std::vector<int>>();
    if (static_cast<int>(s.a.size()) != s.Ne + 1 || static_cast<int>(s.gamma.size()) != s.Ne + 1)
        throw std::invalid_argument("sheet: row count disagrees with Ne");
    return s;
}

Json matrix_to_json(const CMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n; ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.n; ++k) row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
        rows.push_back(row);
    }
    return rows;
}

FiniteGroupoid parse_groupoid(const Json& j) {
    std::vector<std::string> objects, arrows;
    for (const auto& o : j.at("objects")) objects.push_back(o.get<std::string>());
    std::vector<int> src, tgt;
    auto oindex = [&](const std::string& s) {
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == s) return static_cast<int>(i);
        throw std::invalid_argument("groupoid json: unknown object " + s);
    };
    for (const auto& a : j.at("arrows")) {
        arrows.push_back(a.at("id").get<std::string>());
        src.push_back(oindex(a.at("src").get<std::string>()));
        tgt.push_back(oindex(a.at("tgt").get<std::string>()));
    }
    auto aindex = [&](const std::string& s) {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i] == s) return static_cast<int>(i);
        throw std::invalid_argument("groupoid json: unknown arrow " + s);
    };
    std::vector<std::vector<int>> mult(arrows.size(), std::vector<int>(arrows.size(), -1));
    for (const auto& triple : j.at("mult"))
        mult[aindex(triple.at(0).get<std::string>())][aindex(triple.at(1).get<std::string>())] =
            aindex(triple.at(2).get<std::string>());
    std::vector<int> unit(objects.size()), inv(arrows.size());
    for (auto it = j.at("unit").begin(); it != j.at("unit").end(); ++it)
        unit[oindex(it.key())] = aindex(it.value().get<std::string>());
    for (auto it = j.at("inv").begin(); it != j.at("inv").end(); ++it)
        inv[aindex(it.key())] = aindex(it.value().get<std::string>());
    return FiniteGroupoid(objects, arrows, src, tgt, mult, unit, inv);
}

Json groupoid_to_json(const FiniteGroupoid& g) {
    Json j;
    j["objects"] = Json::array();
    for (int x = 0; x < g.n_objects(); ++x) j["objects"].push_back(g.object_name(x));
    j["arrows"] = Json::array();
    for (int a = 0; a < g.n_arrows(); ++a)
        j["arrows"].push_back({{"id", g.arrow_name(a)},
                               {"src", g.object_name(g.src(a))},
                               {"tgt", g.object_name(g.tgt(a))}});
    Json mult = Json::array();
    for (int a = 0; a < g.n_arrows(); ++a)
        for (int b = 0; b < g.n_arrows(); ++b)
            if (g.composable(a, b))
                mult.push_back(Json::array(
                    {g.arrow_name(a), g.arrow_name(b), g.arrow_name(g.mult(a, b))}));
    j["mult"] = mult;
    Json unit = Json::object(), inv = Json::object();
    for (int x = 0; x < g.n_objects(); ++x) unit[g.object_name(x)] = g.arrow_name(g.unit(x));
    for (int a = 0; a < g.n_arrows(); ++a) inv[g.arrow_name(a)] = g.arrow_name(g.inv(a));
    j["unit"] = unit;
    j["inv"] = inv;
    return j;
}

GroupoidHom parse_hom(const Json& j, const FiniteGroupoid& from, const FiniteGroupoid& to) {
    std::vector<int> obj(from.n_objects()), arr(from.n_arrows());
    for (auto it = j.at("obj").begin(); it != j.at("obj").end(); ++it)
        obj[from.object_index(it.key())] = to.object_index(it.value().get<std::string>());
    for (auto it = j.at("arr").begin(); it != j.at("arr").end(); ++it)
        arr[from.arrow_index(it.key())] = to.arrow_index(it.value().get<std::string>());
    return GroupoidHom(from, to, obj, arr);
}

Bibundle parse_bibundle(const Json& j, const FiniteGroupoid& g, const FiniteGroupoid& h) {
    std::vector<std::string> names;
    for (const auto& e : j.at("total")) names.push_back(e.get<std::string>());
    auto eindex = [&](const std::string& s) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return static_cast<int>(i);
        throw std::invalid_argument("bibundle json: unknown element " + s);
    };
    const int total = static_cast<int>(names.size());
    std::vector<int> jg(total), jh(total);
    for (auto it = j.at("jg").begin(); it != j.at("jg").end(); ++it)
        jg[eindex(it.key())] = g.object_index(it.value().get<std::string>());
    for (auto it = j.at("jh").begin(); it != j.at("jh").end(); ++it)
        jh[eindex(it.key())] = h.object_index(it.value().get<std::string>());

    std::vector<std::vector<int>> lact(total, std::vector<int>(g.n_arrows(), -1));
    std::vector<std::vector<int>> ract(total, std::vector<int>(h.n_arrows(), -1));
    for (const auto& t : j.at("left"))
        lact[eindex(t.at(1).get<std::string>())][g.arrow_index(t.at(0).get<std::string>())] =
            eindex(t.at(2).get<std::string>());
    for (const auto& t : j.at("right"))
        ract[eindex(t.at(0).get<std::string>())][h.arrow_index(t.at(1).get<std::string>())] =
            eindex(t.at(2).get<std::string>());

    GroupoidAction left(ActionSide::left, g, total, jg, lact);
    GroupoidAction right(ActionSide::right, h, total, jh, ract);
    return Bibundle(g, h, names, left, right);
}

FiniteGroupoid groupoid_preset(const std::string& name) {
    if (name == "trivial" || name == "pt") return FiniteGroupoid::trivial();
    if (name == "z2") return FiniteGroupoid::cyclic_group(2);
    if (name == "z3") return FiniteGroupoid::cyclic_group(3);
    if (name == "z4") return FiniteGroupoid::cyclic_group(4);
    if (name == "pair2") return FiniteGroupoid::pair_groupoid(2);
    if (name == "pair3") return FiniteGroupoid::pair_groupoid(3);
    if (name == "z2xz2-over-z2") return FiniteGroupoid::z2_times_z2_over_z2();
    if (name == "s3") return FiniteGroupoid::symmetric3();
    throw std::invalid_argument("unknown groupoid preset: " + name);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j, bool pretty) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    if (pretty) out << j.dump(2) << "\n";
    else out << j.dump() << "\n";
}

}  // namespace apath
