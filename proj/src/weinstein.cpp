#include "apath/weinstein.hpp"

#include <stdexcept>

namespace apath {

namespace {

std::vector<std::vector<int>> tuples_chained(const std::vector<int>& sbar,
                                             const std::vector<int>& tbar, int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (!cur.empty() && sbar[cur.back()] != tbar[x]) continue;
            cur.push_back(x);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace

FiberedPower fibered_power(const FiniteGroupoid& g, const std::vector<int>& sbar,
                           const std::vector<int>& tbar, int k) {
    FiberedPower fp{FiniteGroupoid::trivial(), {}, {}, {}, {}};
    auto objs = tuples_chained(sbar, tbar, g.n_objects(), k);

    std::vector<int> arr_sbar(g.n_arrows()), arr_tbar(g.n_arrows());
    for (int a = 0; a < g.n_arrows(); ++a) {
        arr_sbar[a] = sbar[g.src(a)];
        arr_tbar[a] = tbar[g.src(a)];
    }
    auto arrs = tuples_chained(arr_sbar, arr_tbar, g.n_arrows(), k);

    std::map<std::vector<int>, int> oidx, aidx;
    for (std::size_t i = 0; i < objs.size(); ++i) oidx[objs[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < arrs.size(); ++i) aidx[arrs[i]] = static_cast<int>(i);

    auto tuple_name = [&](const std::vector<int>& t, bool is_arrow) {
        std::string s = "<";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += is_arrow ? g.arrow_name(t[i]) : g.object_name(t[i]);
        }
        return s + ">";
    };

    std::vector<std::string> onames, anames;
    for (const auto& t : objs) onames.push_back(tuple_name(t, false));
    for (const auto& t : arrs) anames.push_back(tuple_name(t, true));

    const int no = static_cast<int>(objs.size());
    const int na = static_cast<int>(arrs.size());
    std::vector<int> src(na), tgt(na), unit(no), inv(na);
    std::vector<std::vector<int>> mult(na, std::vector<int>(na, -1));
    for (int a = 0; a < na; ++a) {
        std::vector<int> s, t, iv;
        for (int c : arrs[a]) {
            s.push_back(g.src(c));
            t.push_back(g.tgt(c));
            iv.push_back(g.inv(c));
        }
        src[a] = oidx.at(s);
        tgt[a] = oidx.at(t);
        inv[a] = aidx.at(iv);
    }
    for (int x = 0; x < no; ++x) {
        std::vector<int> u;
        for (int c : objs[x]) u.push_back(g.unit(c));
        unit[x] = aidx.at(u);
    }
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            if (src[a] != tgt[b]) continue;
            std::vector<int> prod;
            bool ok = true;
            for (std::size_t i = 0; i < arrs[a].size() && ok; ++i) {
                if (!g.composable(arrs[a][i], arrs[b][i])) ok = false;
                else prod.push_back(g.mult(arrs[a][i], arrs[b][i]));
            }
            if (ok) mult[a][b] = aidx.at(prod);
        }

    fp.gpd = FiniteGroupoid(onames, anames, src, tgt, mult, unit, inv);
    fp.obj_tuple = objs;
    fp.arr_tuple = arrs;
    fp.obj_index = std::move(oidx);
    fp.arr_index = std::move(aidx);
    return fp;
}

WeinsteinPresentation WeinsteinPresentation::bz2() {
    WeinsteinPresentation p;
    p.gamma = FiniteGroupoid::cyclic_group(2);
    p.base_size = 1;
    p.sbar = {0};
    p.tbar = {0};
    p.e_obj = {0};
    p.i_obj = {0};
    p.i_arr = {0, 1};
    p.name = "bz2";
    // multiplication tables follow the fibered-power enumeration order
    FiberedPower sq = fibered_power(p.gamma, p.sbar, p.tbar, 2);
    p.m_arr.assign(sq.arr_tuple.size(), 0);
    for (std::size_t i = 0; i < sq.arr_tuple.size(); ++i)
        p.m_arr[i] = p.gamma.mult(sq.arr_tuple[i][0], sq.arr_tuple[i][1]);
    p.m_obj.assign(sq.obj_tuple.size(), 0);
    return p;
}

WeinsteinPresentation WeinsteinPresentation::z2_star_bz2() {
    WeinsteinPresentation p;
    p.gamma = FiniteGroupoid::z2_times_z2_over_z2();
    p.base_size = 1;
    p.sbar = {0, 0};
    p.tbar = {0, 0};
    p.e_obj = {0};
    // Objects are Z2 = {1,-1}; inverse is the identity on objects and sends
    // (g, x) to (g^{-1}, x^{-1}) = (g, x).
    p.i_obj = {0, 1};
    p.i_arr = {0, 1, 2, 3};
    p.name = "z2-star-bz2";

    FiberedPower sq = fibered_power(p.gamma, p.sbar, p.tbar, 2);
    p.m_obj.assign(sq.obj_tuple.size(), 0);
    for (std::size_t i = 0; i < sq.obj_tuple.size(); ++i) {
        int x1 = sq.obj_tuple[i][0], x2 = sq.obj_tuple[i][1];
        p.m_obj[i] = x1 ^ x2;  // objects multiply as Z2
    }
    p.m_arr.assign(sq.arr_tuple.size(), 0);
    for (std::size_t i = 0; i < sq.arr_tuple.size(); ++i) {
        int a1 = sq.arr_tuple[i][0], a2 = sq.arr_tuple[i][1];
        int g1 = a1 % 2, x1 = a1 / 2, g2 = a2 % 2, x2 = a2 / 2;
        p.m_arr[i] = (g1 ^ g2) + 2 * (x1 ^ x2);
    }
    return p;
}

WeinsteinPresentation WeinsteinPresentation::trivial_point() {
    WeinsteinPresentation p;
    p.gamma = FiniteGroupoid::trivial();
    p.base_size = 1;
    p.sbar = {0};
    p.tbar = {0};
    p.m_obj = {0};
    p.m_arr = {0};
    p.e_obj = {0};
    p.i_obj = {0};
    p.i_arr = {0};
    p.name = "trivial";
    return p;
}

std::vector<int> WeinsteinPresentation::product_alpha() const {
    FiberedPower cube = fibered_power(gamma, sbar, tbar, 3);
    std::vector<int> alpha(cube.obj_tuple.size());
    for (std::size_t i = 0; i < cube.obj_tuple.size(); ++i) {
        int prod = 0;
        for (int x : cube.obj_tuple[i]) prod ^= x;  // Z2 object product
        alpha[i] = prod * 2 + prod;                 // arrow (g = prod | x = prod)
    }
    return alpha;
}

namespace {

struct Mult {
    const WeinsteinPresentation* p;
    const FiberedPower* sq;
    int obj(int x, int y) const { return p->m_obj[sq->obj_index.at({x, y})]; }
    int arr(int a, int b) const { return p->m_arr[sq->arr_index.at({a, b})]; }
};

GroupoidHom make_hom(const FiniteGroupoid& from, const FiniteGroupoid& to,
                     const std::vector<int>& obj, const std::vector<int>& arr) {
    return GroupoidHom(from, to, obj, arr);
}

// 2-morphism search with the identity-section restriction condition.
AxiomResult axiom_up_to_two_morphism(const std::string& name, const GroupoidHom& f,
                                     const GroupoidHom& g, const WeinsteinPresentation& p,
                                     const std::vector<int>& section_objects) {
    AxiomResult res;
    res.axiom = name;
    auto all = enumerate_hom_two_morphisms(f, g);
    res.count = static_cast<int>(all.size());
    for (const auto& alpha : all) {
        bool boundary = true;
        for (int x : section_objects)
            if (!p.gamma.is_unit(alpha[x])) { boundary = false; break; }
        if (boundary) {
            res.pass = true;
            res.boundary_ok = true;
            res.alpha = alpha;
            return res;
        }
    }
    if (!all.empty()) {
        res.pass = true;
        res.alpha = all.front();
    }
    return res;
}

}  // namespace

WeinsteinReport weinstein_axiom_check(const WeinsteinPresentation& p) {
    WeinsteinReport out;
    out.report.note("module", "groupoid_calculus");
    out.report.note("op", "weinstein_axiom_check");
    out.report.note("presentation", p.name);

    const FiniteGroupoid& G = p.gamma;
    if (static_cast<int>(p.sbar.size()) != G.n_objects() ||
        static_cast<int>(p.tbar.size()) != G.n_objects())
        throw std::invalid_argument("weinstein: missing structure (sbar/tbar)");
    for (int a = 0; a < G.n_arrows(); ++a)
        if (p.sbar[G.src(a)] != p.sbar[G.tgt(a)] || p.tbar[G.src(a)] != p.tbar[G.tgt(a)])
            throw std::invalid_argument("weinstein: sbar/tbar are not invariant");

    FiberedPower sq = fibered_power(G, p.sbar, p.tbar, 2);
    FiberedPower cube = fibered_power(G, p.sbar, p.tbar, 3);
    if (p.m_obj.size() != sq.obj_tuple.size() || p.m_arr.size() != sq.arr_tuple.size())
        throw std::invalid_argument("weinstein: missing structure (multiplication tables)");
    Mult m{&p, &sq};
    GroupoidHom m_hom = make_hom(sq.gpd, G, p.m_obj, p.m_arr);

    // (0) source/target compatibility of the multiplication
    {
        AxiomResult res;
        res.axiom = "st_compatibility";
        res.pass = true;
        res.boundary_ok = true;
        for (std::size_t i = 0; i < sq.obj_tuple.size(); ++i) {
            int x = sq.obj_tuple[i][0], y = sq.obj_tuple[i][1];
            int z = p.m_obj[i];
            if (p.tbar[z] != p.tbar[x] || p.sbar[z] != p.sbar[y]) res.pass = false;
        }
        out.axioms.push_back(res);
    }

    // identity-section sanity: sbar(e(u)) = tbar(e(u)) = u
    {
        AxiomResult res;
        res.axiom = "identity_section";
        res.pass = true;
        res.boundary_ok = true;
        for (int u = 0; u < p.base_size; ++u)
            if (p.sbar[p.e_obj[u]] != u || p.tbar[p.e_obj[u]] != u) res.pass = false;
        out.axioms.push_back(res);
    }

    // section objects of the k-fold powers (diagonal images of e)
    std::vector<int> diag2, diag3;
    for (int u = 0; u < p.base_size; ++u) {
        int eo = p.e_obj[u];
        diag3.push_back(cube.obj_index.at({eo, eo, eo}));
        diag2.push_back(sq.obj_index.at({eo, eo}));
    }

    // (1) associativity up to a 2-morphism on the fibered cube
    {
        std::vector<int> f_obj(cube.obj_tuple.size()), f_arr(cube.arr_tuple.size());
        std::vector<int> g_obj(cube.obj_tuple.size()), g_arr(cube.arr_tuple.size());
        for (std::size_t i = 0; i < cube.obj_tuple.size(); ++i) {
            auto& t = cube.obj_tuple[i];
            f_obj[i] = m.obj(m.obj(t[0], t[1]), t[2]);
            g_obj[i] = m.obj(t[0], m.obj(t[1], t[2]));
        }
        for (std::size_t i = 0; i < cube.arr_tuple.size(); ++i) {
            auto& t = cube.arr_tuple[i];
            f_arr[i] = m.arr(m.arr(t[0], t[1]), t[2]);
            g_arr[i] = m.arr(t[0], m.arr(t[1], t[2]));
        }
        GroupoidHom F = make_hom(cube.gpd, G, f_obj, f_arr);
        GroupoidHom Gm = make_hom(cube.gpd, G, g_obj, g_arr);
        out.axioms.push_back(axiom_up_to_two_morphism("associativity", F, Gm, p, diag3));
    }

    // (2) identity axioms m((e t) x id) ~ id and m(id x (e s)) ~ id
    std::vector<int> section1;
    for (int u = 0; u < p.base_size; ++u) section1.push_back(p.e_obj[u]);
    {
        std::vector<int> l_obj(G.n_objects()), l_arr(G.n_arrows());
        std::vector<int> r_obj(G.n_objects()), r_arr(G.n_arrows());
        for (int x = 0; x < G.n_objects(); ++x) {
            l_obj[x] = m.obj(p.e_obj[p.tbar[x]], x);
            r_obj[x] = m.obj(x, p.e_obj[p.sbar[x]]);
        }
        for (int a = 0; a < G.n_arrows(); ++a) {
            int ut = G.unit(p.e_obj[p.tbar[G.src(a)]]);
            int us = G.unit(p.e_obj[p.sbar[G.src(a)]]);
            l_arr[a] = m.arr(ut, a);
            r_arr[a] = m.arr(a, us);
        }
        GroupoidHom L = make_hom(G, G, l_obj, l_arr);
        GroupoidHom R = make_hom(G, G, r_obj, r_arr);
        GroupoidHom Id = GroupoidHom::identity(G);
        out.axioms.push_back(axiom_up_to_two_morphism("left_identity", L, Id, p, section1));
        out.axioms.push_back(axiom_up_to_two_morphism("right_identity", R, Id, p, section1));
    }

    // (3) inverse axioms m((i x id) Delta) ~ e s and m((id x i) Delta) ~ e t
    {
        std::vector<int> v_obj(G.n_objects()), v_arr(G.n_arrows());
        std::vector<int> w_obj(G.n_objects()), w_arr(G.n_arrows());
        std::vector<int> es_obj(G.n_objects()), es_arr(G.n_arrows());
        std::vector<int> et_obj(G.n_objects()), et_arr(G.n_arrows());
        for (int x = 0; x < G.n_objects(); ++x) {
            v_obj[x] = m.obj(p.i_obj[x], x);
            w_obj[x] = m.obj(x, p.i_obj[x]);
            es_obj[x] = p.e_obj[p.sbar[x]];
            et_obj[x] = p.e_obj[p.tbar[x]];
        }
        for (int a = 0; a < G.n_arrows(); ++a) {
            v_arr[a] = m.arr(p.i_arr[a], a);
            w_arr[a] = m.arr(a, p.i_arr[a]);
            es_arr[a] = G.unit(p.e_obj[p.sbar[G.src(a)]]);
            et_arr[a] = G.unit(p.e_obj[p.tbar[G.src(a)]]);
        }
        GroupoidHom V = make_hom(G, G, v_obj, v_arr);
        GroupoidHom W = make_hom(G, G, w_obj, w_arr);
        GroupoidHom Es = make_hom(G, G, es_obj, es_arr);
        GroupoidHom Et = make_hom(G, G, et_obj, et_arr);
        out.axioms.push_back(axiom_up_to_two_morphism("left_inverse", V, Es, p, section1));
        out.axioms.push_back(axiom_up_to_two_morphism("right_inverse", W, Et, p, section1));
    }

    for (const auto& ax : out.axioms) {
        out.pass = out.pass && ax.pass && ax.boundary_ok;
        out.report.metric(ax.axiom + "_count", ax.count);
        out.report.note(ax.axiom, ax.pass ? (ax.boundary_ok ? "pass" : "pass(no-boundary)") : "fail");
        if (!ax.alpha.empty()) {
            std::string s;
            for (std::size_t i = 0; i < ax.alpha.size(); ++i) {
                if (i) s += ",";
                s += G.arrow_name(ax.alpha[i]);
            }
            out.report.certificate(ax.axiom + "_alpha", s);
        }
    }
    out.report.pass = out.pass;
    return out;
}

AssociatorObstruction associator_obstruction(const WeinsteinPresentation& p,
                                             const std::vector<int>& alpha,
                                             const std::vector<int>& quadruple) {
    AssociatorObstruction out;
    out.report.note("module", "groupoid_calculus");
    out.report.note("op", "associator_obstruction");
    out.report.note("presentation", p.name);

    const FiniteGroupoid& G = p.gamma;
    if (quadruple.size() != 4) throw std::invalid_argument("associator: need four objects");
    for (int i = 0; i + 1 < 4; ++i)
        if (p.sbar[quadruple[i]] != p.tbar[quadruple[i + 1]])
            throw std::invalid_argument("associator: non-composable chain");

    FiberedPower sq = fibered_power(G, p.sbar, p.tbar, 2);
    FiberedPower cube = fibered_power(G, p.sbar, p.tbar, 3);
    Mult m{&p, &sq};

    // Validate alpha as a 2-morphism between the two triple multiplications.
    {
        std::vector<int> f_obj(cube.obj_tuple.size()), f_arr(cube.arr_tuple.size());
        std::vector<int> g_obj(cube.obj_tuple.size()), g_arr(cube.arr_tuple.size());
        for (std::size_t i = 0; i < cube.obj_tuple.size(); ++i) {
            auto& t = cube.obj_tuple[i];
            f_obj[i] = m.obj(m.obj(t[0], t[1]), t[2]);
            g_obj[i] = m.obj(t[0], m.obj(t[1], t[2]));
        }
        for (std::size_t i = 0; i < cube.arr_tuple.size(); ++i) {
            auto& t = cube.arr_tuple[i];
            f_arr[i] = m.arr(m.arr(t[0], t[1]), t[2]);
            g_arr[i] = m.arr(t[0], m.arr(t[1], t[2]));
        }
        GroupoidHom F = make_hom(cube.gpd, G, f_obj, f_arr);
        GroupoidHom Gm = make_hom(cube.gpd, G, g_obj, g_arr);
        if (!check_hom_two_morphism(F, Gm, alpha))
            throw std::invalid_argument("associator: alpha does not connect the two associations");
    }

    const int x1 = quadruple[0], x2 = quadruple[1], x3 = quadruple[2], x4 = quadruple[3];
    int va = cube.obj_index.at({m.obj(x1, x2), x3, x4});
    int vb = cube.obj_index.at({x1, m.obj(x2, x3), x4});
    int vc = cube.obj_index.at({x1, x2, m.obj(x3, x4)});
    int total = m.obj(m.obj(m.obj(x1, x2), x3), x4);

    std::vector<int> faces = {
        alpha[va],                 // F1 -> F2, under (x1 x2, x3, x4)
        G.unit(total),             // F2 -> F3, interchange face
        alpha[vc],                 // F3 -> F4, under (x1, x2, x3 x4)
        G.inv(alpha[va]),          // F4 -> F5, opposite face of the first
        G.inv(alpha[vb]),          // F5 -> F6, against alpha on (x1, x2 x3, x4)
        G.inv(alpha[vc]),          // F6 -> F1, opposite face of the third
    };
    int comp = faces[0];
    for (std::size_t i = 1; i < faces.size(); ++i) comp = G.mult(faces[i], comp);

    out.face_values = faces;
    out.composite_arrow = comp;
    out.expected_unit = G.unit(total);
    out.is_identity = comp == out.expected_unit;
    out.report.certificate("composite", G.arrow_name(comp));
    out.report.certificate("expected_identity", G.arrow_name(out.expected_unit));
    for (std::size_t i = 0; i < faces.size(); ++i)
        out.report.certificate("alpha_" + std::to_string(i + 1), G.arrow_name(faces[i]));
    out.report.note("is_identity", out.is_identity ? "true" : "false");
    out.report.pass = true;
    return out;
}

}  // namespace apath
