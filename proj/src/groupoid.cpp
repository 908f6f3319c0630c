#include <array>
#include "apath/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace apath {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> objects, std::vector<std::string> arrows,
                               std::vector<int> src, std::vector<int> tgt,
                               std::vector<std::vector<int>> mult, std::vector<int> unit,
                               std::vector<int> inv)
    : objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      inv_(std::move(inv)) {
    validate();
}

int FiniteGroupoid::mult(int a, int b) const {
    int r = mult_[a][b];
    if (r < 0) throw std::invalid_argument("mult: arrows are not composable");
    return r;
}

int FiniteGroupoid::object_index(const std::string& name) const {
    for (int i = 0; i < n_objects(); ++i)
        if (objects_[i] == name) return i;
    throw std::invalid_argument("unknown object: " + name);
}

int FiniteGroupoid::arrow_index(const std::string& name) const {
    for (int i = 0; i < n_arrows(); ++i)
        if (arrows_[i] == name) return i;
    throw std::invalid_argument("unknown arrow: " + name);
}

bool FiniteGroupoid::is_unit(int a) const {
    return src_[a] == tgt_[a] && unit_[src_[a]] == a;
}

void FiniteGroupoid::validate() const {
    const int no = n_objects(), na = n_arrows();
    if (static_cast<int>(src_.size()) != na || static_cast<int>(tgt_.size()) != na ||
        static_cast<int>(mult_.size()) != na || static_cast<int>(unit_.size()) != no ||
        static_cast<int>(inv_.size()) != na)
        throw std::invalid_argument("groupoid: table sizes disagree");
    for (int a = 0; a < na; ++a) {
        if (src_[a] < 0 || src_[a] >= no || tgt_[a] < 0 || tgt_[a] >= no)
            throw std::invalid_argument("groupoid: src/tgt out of range");
        if (static_cast<int>(mult_[a].size()) != na)
            throw std::invalid_argument("groupoid: ragged mult table");
    }
    for (int x = 0; x < no; ++x) {
        int u = unit_[x];
        if (u < 0 || u >= na || src_[u] != x || tgt_[u] != x)
            throw std::invalid_argument("groupoid: unit is not an endo-arrow");
    }

    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            int c = mult_[a][b];
            if ((c >= 0) != composable(a, b))
                throw std::invalid_argument("groupoid: mult defined off the composable set");
            if (c >= 0 && (src_[c] != src_[b] || tgt_[c] != tgt_[a]))
                throw std::invalid_argument("groupoid: mult breaks src/tgt");
        }

    // unit laws, inverses, associativity — all enumerable at this size
    for (int a = 0; a < na; ++a) {
        if (mult_[a][unit_[src_[a]]] != a || mult_[unit_[tgt_[a]]][a] != a)
            throw std::invalid_argument("groupoid: unit law fails");
        int ia = inv_[a];
        if (ia < 0 || ia >= na || src_[ia] != tgt_[a] || tgt_[ia] != src_[a])
            throw std::invalid_argument("groupoid: inverse has wrong ends");
        if (mult_[ia][a] != unit_[src_[a]] || mult_[a][ia] != unit_[tgt_[a]])
            throw std::invalid_argument("groupoid: inverse law fails");
    }
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            if (!composable(a, b)) continue;
            for (int c = 0; c < na; ++c) {
                if (!composable(b, c)) continue;
                if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
                    throw std::invalid_argument("groupoid: associativity fails");
            }
        }
}

FiniteGroupoid FiniteGroupoid::trivial() {
    return FiniteGroupoid({"pt"}, {"1"}, {0}, {0}, {{0}}, {0}, {0});
}

FiniteGroupoid FiniteGroupoid::cyclic_group(int k) {
    std::vector<std::string> arrows;
    for (int i = 0; i < k; ++i) {
        if (k == 2) arrows.push_back(i == 0 ? "1" : "-1");
        else arrows.push_back("g" + std::to_string(i));
    }
    std::vector<int> src(k, 0), tgt(k, 0), inv(k);
    std::vector<std::vector<int>> mult(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i) {
        inv[i] = (k - i) % k;
        for (int j = 0; j < k; ++j) mult[i][j] = (i + j) % k;
    }
    return FiniteGroupoid({"pt"}, arrows, src, tgt, mult, {0}, inv);
}

FiniteGroupoid FiniteGroupoid::pair_groupoid(int n) {
    std::vector<std::string> objects, arrows;
    for (int i = 0; i < n; ++i) objects.push_back("x" + std::to_string(i));
    std::vector<int> src, tgt, unit(n), inv(n * n);
    std::vector<std::vector<int>> mult(n * n, std::vector<int>(n * n, -1));
    auto id = [n](int to, int from) { return to * n + from; };  // arrow from -> to
    for (int to = 0; to < n; ++to)
        for (int from = 0; from < n; ++from) {
            arrows.push_back("(" + std::to_string(to) + "<-" + std::to_string(from) + ")");
            src.push_back(from);
            tgt.push_back(to);
            inv[id(to, from)] = id(from, to);
        }
    for (int x = 0; x < n; ++x) unit[x] = id(x, x);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) mult[id(c, b)][id(b, a)] = id(c, a);
    return FiniteGroupoid(objects, arrows, src, tgt, mult, unit, inv);
}

FiniteGroupoid FiniteGroupoid::z2_times_z2_over_z2() {
    // Action groupoid of the trivial Z2-action on Z2: arrows (g, x): x -> x.
    std::vector<std::string> objects = {"1", "-1"};
    std::vector<std::string> arrows;
    std::vector<int> src, tgt, unit = {0, 2}, inv;
    std::vector<std::vector<int>> mult(4, std::vector<int>(4, -1));
    auto id = [](int g, int x) { return x * 2 + g; };  // g in {0,1} ~ {1,-1}
    for (int x = 0; x < 2; ++x)
        for (int g = 0; g < 2; ++g) {
            arrows.push_back("(g=" + std::string(g ? "-1" : "1") + "|x=" + (x ? "-1" : "1") + ")");
            src.push_back(x);
            tgt.push_back(x);
            inv.push_back(id(g, x));
        }
    for (int x = 0; x < 2; ++x)
        for (int g = 0; g < 2; ++g)
            for (int h = 0; h < 2; ++h) mult[id(g, x)][id(h, x)] = id(g ^ h, x);
    return FiniteGroupoid(objects, arrows, src, tgt, mult, unit, inv);
}

FiniteGroupoid FiniteGroupoid::symmetric3() {
    // Permutations of {0,1,2} listed in one-line notation.
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                             {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto compose = [&](int a, int b) {  // a after b
        std::array<int, 3> r{};
        for (int i = 0; i < 3; ++i) r[i] = perms[a][perms[b][i]];
        for (int k = 0; k < 6; ++k)
            if (perms[k] == r) return k;
        return -1;
    };
    std::vector<std::string> arrows = {"e", "r1", "r2", "s01", "s12", "s02"};
    std::vector<int> src(6, 0), tgt(6, 0), inv(6);
    std::vector<std::vector<int>> mult(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) mult[a][b] = compose(a, b);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (mult[a][b] == 0 && mult[b][a] == 0) inv[a] = b;
    return FiniteGroupoid({"pt"}, arrows, src, tgt, mult, {0}, inv);
}

GroupoidHom::GroupoidHom(const FiniteGroupoid& g, const FiniteGroupoid& h,
                         std::vector<int> obj_map, std::vector<int> arr_map)
    : G(&g), H(&h), obj(std::move(obj_map)), arr(std::move(arr_map)) {
    if (static_cast<int>(obj.size()) != g.n_objects() ||
        static_cast<int>(arr.size()) != g.n_arrows())
        throw std::invalid_argument("homomorphism: map sizes disagree");
    for (int a = 0; a < g.n_arrows(); ++a) {
        if (h.src(arr[a]) != obj[g.src(a)] || h.tgt(arr[a]) != obj[g.tgt(a)])
            throw std::invalid_argument("homomorphism: src/tgt not preserved");
    }
    for (int x = 0; x < g.n_objects(); ++x)
        if (arr[g.unit(x)] != h.unit(obj[x]))
            throw std::invalid_argument("homomorphism: units not preserved");
    for (int a = 0; a < g.n_arrows(); ++a)
        for (int b = 0; b < g.n_arrows(); ++b) {
            if (!g.composable(a, b)) continue;
            if (arr[g.mult(a, b)] != h.mult(arr[a], arr[b]))
                throw std::invalid_argument("homomorphism: multiplication not preserved");
        }
}

GroupoidHom GroupoidHom::identity(const FiniteGroupoid& g) {
    std::vector<int> o(g.n_objects()), a(g.n_arrows());
    std::iota(o.begin(), o.end(), 0);
    std::iota(a.begin(), a.end(), 0);
    return GroupoidHom(g, g, o, a);
}

GroupoidHom GroupoidHom::then(const GroupoidHom& next) const {
    if (H != next.G) throw std::invalid_argument("hom composition: middle groupoid differs");
    std::vector<int> o(obj.size()), a(arr.size());
    for (std::size_t i = 0; i < obj.size(); ++i) o[i] = next.obj[obj[i]];
    for (std::size_t i = 0; i < arr.size(); ++i) a[i] = next.arr[arr[i]];
    return GroupoidHom(*G, *next.H, o, a);
}

GroupoidAction::GroupoidAction(ActionSide s, const FiniteGroupoid& g, int e, std::vector<int> mom,
                               std::vector<std::vector<int>> table)
    : side(s), gpd(&g), set_size(e), moment(std::move(mom)), act(std::move(table)) {
    if (static_cast<int>(moment.size()) != e || static_cast<int>(act.size()) != e)
        throw std::invalid_argument("action: table sizes disagree");
    const int na = g.n_arrows();
    for (int x = 0; x < e; ++x) {
        if (static_cast<int>(act[x].size()) != na)
            throw std::invalid_argument("action: ragged table");
        for (int a = 0; a < na; ++a) {
            bool should = side == ActionSide::right ? moment[x] == g.tgt(a) : moment[x] == g.src(a);
            if ((act[x][a] >= 0) != should)
                throw std::invalid_argument("action: defined off the composable set");
            if (act[x][a] >= 0) {
                int y = act[x][a];
                int want = side == ActionSide::right ? g.src(a) : g.tgt(a);
                if (moment[y] != want)
                    throw std::invalid_argument("action: moment map axiom fails");
            }
        }
        // unit axiom
        if (act[x][g.unit(moment[x])] != x)
            throw std::invalid_argument("action: unit axiom fails");
    }
    // mixed associativity: (x.a).b = x.(ab) / b.(a.x) = (ba).x
    for (int x = 0; x < e; ++x)
        for (int a = 0; a < na; ++a) {
            if (act[x][a] < 0) continue;
            for (int b = 0; b < na; ++b) {
                if (side == ActionSide::right) {
                    if (!g.composable(a, b)) continue;
                    if (act[act[x][a]][b] != act[x][g.mult(a, b)])
                        throw std::invalid_argument("action: associativity fails");
                } else {
                    if (!g.composable(b, a)) continue;
                    if (act[act[x][a]][b] != act[x][g.mult(b, a)])
                        throw std::invalid_argument("action: associativity fails");
                }
            }
        }
}

int GroupoidAction::apply(int e, int a) const {
    int r = act[e][a];
    if (r < 0) throw std::invalid_argument("action: not composable");
    return r;
}

Bibundle::Bibundle(const FiniteGroupoid& g, const FiniteGroupoid& h,
                   std::vector<std::string> names, GroupoidAction l, GroupoidAction r)
    : G(&g), H(&h), total(static_cast<int>(names.size())), elem_names(std::move(names)),
      left(std::move(l)), right(std::move(r)) {
    if (left.side != ActionSide::left || right.side != ActionSide::right)
        throw std::invalid_argument("bibundle: sides are swapped");
    if (left.set_size != total || right.set_size != total)
        throw std::invalid_argument("bibundle: action set sizes disagree");
    // commuting actions: (g.x).h = g.(x.h)
    for (int x = 0; x < total; ++x)
        for (int a = 0; a < g.n_arrows(); ++a) {
            if (!left.defined(x, a)) continue;
            for (int b = 0; b < h.n_arrows(); ++b) {
                if (!right.defined(x, b)) continue;
                if (right.apply(left.apply(x, a), b) != left.apply(right.apply(x, b), a))
                    throw std::invalid_argument("bibundle: actions do not commute");
            }
        }
}

Bibundle from_homomorphism(const GroupoidHom& f) {
    const FiniteGroupoid& G = *f.G;
    const FiniteGroupoid& H = *f.H;
    // total = pairs (x, h) with f(x) = tgt(h)
    std::vector<std::pair<int, int>> elems;
    std::vector<std::string> names;
    for (int x = 0; x < G.n_objects(); ++x)
        for (int h = 0; h < H.n_arrows(); ++h)
            if (H.tgt(h) == f.obj[x]) {
                elems.emplace_back(x, h);
                names.push_back("(" + G.object_name(x) + "," + H.arrow_name(h) + ")");
            }
    auto index = [&](int x, int h) {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == std::make_pair(x, h)) return static_cast<int>(i);
        return -1;
    };
    const int e = static_cast<int>(elems.size());

    std::vector<int> jg(e), jh(e);
    for (int i = 0; i < e; ++i) {
        jg[i] = elems[i].first;
        jh[i] = H.src(elems[i].second);
    }
    // left G-action: c.(x, h) = (tgt(c), f(c) h) when src(c) = x
    std::vector<std::vector<int>> lact(e, std::vector<int>(G.n_arrows(), -1));
    for (int i = 0; i < e; ++i)
        for (int c = 0; c < G.n_arrows(); ++c)
            if (G.src(c) == elems[i].first)
                lact[i][c] = index(G.tgt(c), H.mult(f.arr[c], elems[i].second));
    // right H-action: (x, h).k = (x, h k) when src(h) = tgt(k)
    std::vector<std::vector<int>> ract(e, std::vector<int>(H.n_arrows(), -1));
    for (int i = 0; i < e; ++i)
        for (int k = 0; k < H.n_arrows(); ++k)
            if (H.src(elems[i].second) == H.tgt(k))
                ract[i][k] = index(elems[i].first, H.mult(elems[i].second, k));

    GroupoidAction l(ActionSide::left, G, e, jg, lact);
    GroupoidAction r(ActionSide::right, H, e, jh, ract);
    return Bibundle(G, H, names, l, r);
}

Bibundle identity_bibundle(const FiniteGroupoid& g) {
    return from_homomorphism(GroupoidHom::identity(g));
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;  // keep the lexicographic minimum as the root
    }
};

}  // namespace

Bibundle compose(const Bibundle& e, const Bibundle& f) {
    if (e.H != f.G) throw std::invalid_argument("compose: middle groupoid differs");
    const FiniteGroupoid& H = *e.H;
    // pairs (x, y) with J_H^E(x) = J_G^F(y)
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < e.total; ++x)
        for (int y = 0; y < f.total; ++y)
            if (e.jh(x) == f.jg(y)) pairs.emplace_back(x, y);
    auto pair_index = [&](int x, int y) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i] == std::make_pair(x, y)) return static_cast<int>(i);
        return -1;
    };

    // diagonal H-orbits: (x, y) ~ (x h, h^{-1} y)
    UnionFind uf(static_cast<int>(pairs.size()));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [x, y] = pairs[i];
        for (int h = 0; h < H.n_arrows(); ++h) {
            if (!e.right.defined(x, h)) continue;
            int hy_arrow = H.inv(h);
            if (!f.left.defined(y, hy_arrow)) continue;
            int j = pair_index(e.right.apply(x, h), f.left.apply(y, hy_arrow));
            if (j >= 0) uf.unite(static_cast<int>(i), j);
        }
    }
    std::vector<int> rep_of;   // orbit representative pair index per class id
    std::vector<int> cls(pairs.size(), -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        int r = uf.find(static_cast<int>(i));
        if (static_cast<std::size_t>(r) == i) {
            cls[i] = static_cast<int>(rep_of.size());
            rep_of.push_back(static_cast<int>(i));
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) cls[i] = cls[uf.find(static_cast<int>(i))];

    const int total = static_cast<int>(rep_of.size());
    std::vector<std::string> names;
    std::vector<int> jg(total), jk(total);
    for (int c = 0; c < total; ++c) {
        auto [x, y] = pairs[rep_of[c]];
        names.push_back("[" + e.elem_names[x] + "*" + f.elem_names[y] + "]");
        jg[c] = e.jg(x);
        jk[c] = f.jh(y);
    }

    const FiniteGroupoid& G = *e.G;
    const FiniteGroupoid& K = *f.H;
    std::vector<std::vector<int>> lact(total, std::vector<int>(G.n_arrows(), -1));
    std::vector<std::vector<int>> ract(total, std::vector<int>(K.n_arrows(), -1));
    for (int c = 0; c < total; ++c) {
        auto [x, y] = pairs[rep_of[c]];
        for (int a = 0; a < G.n_arrows(); ++a)
            if (e.left.defined(x, a)) lact[c][a] = cls[pair_index(e.left.apply(x, a), y)];
        for (int b = 0; b < K.n_arrows(); ++b)
            if (f.right.defined(y, b)) ract[c][b] = cls[pair_index(x, f.right.apply(y, b))];
    }
    GroupoidAction l(ActionSide::left, G, total, jg, lact);
    GroupoidAction r(ActionSide::right, K, total, jk, ract);
    return Bibundle(G, K, names, l, r);
}

Bibundle flip(const Bibundle& e) {
    const FiniteGroupoid& G = *e.G;
    const FiniteGroupoid& H = *e.H;
    std::vector<std::vector<int>> lact(e.total, std::vector<int>(H.n_arrows(), -1));
    std::vector<std::vector<int>> ract(e.total, std::vector<int>(G.n_arrows(), -1));
    for (int x = 0; x < e.total; ++x) {
        for (int h = 0; h < H.n_arrows(); ++h)
            if (e.right.defined(x, H.inv(h))) lact[x][h] = e.right.apply(x, H.inv(h));
        for (int g = 0; g < G.n_arrows(); ++g)
            if (e.left.defined(x, G.inv(g))) ract[x][g] = e.left.apply(x, G.inv(g));
    }
    GroupoidAction l(ActionSide::left, H, e.total, e.right.moment, lact);
    GroupoidAction r(ActionSide::right, G, e.total, e.left.moment, ract);
    return Bibundle(H, G, e.elem_names, l, r);
}

bool is_principal(const Bibundle& e) {
    const FiniteGroupoid& H = *e.H;
    // J_G surjective
    std::vector<bool> hit(e.G->n_objects(), false);
    for (int x = 0; x < e.total; ++x) hit[e.jg(x)] = true;
    for (bool b : hit)
        if (!b) return false;
    // free and transitive on each J_G-fiber
    for (int x = 0; x < e.total; ++x)
        for (int y = 0; y < e.total; ++y) {
            if (e.jg(x) != e.jg(y)) continue;
            int count = 0;
            for (int h = 0; h < H.n_arrows(); ++h)
                if (e.right.defined(x, h) && e.right.apply(x, h) == y) ++count;
            if (count != 1) return false;
        }
    return true;
}

bool is_morita(const Bibundle& e) { return is_principal(e) && is_principal(flip(e)); }

namespace {

bool biequivariant_extends(const Bibundle& e1, const Bibundle& e2, std::vector<int>& map,
                           std::vector<bool>& used, int x) {
    if (x == e1.total) return true;
    for (int y = 0; y < e2.total; ++y) {
        if (used[y] || e1.jg(x) != e2.jg(y) || e1.jh(x) != e2.jh(y)) continue;
        // check equivariance against already assigned images
        bool ok = true;
        for (int a = 0; a < e1.G->n_arrows() && ok; ++a)
            if (e1.left.defined(x, a)) {
                int xx = e1.left.apply(x, a);
                if (map[xx] >= 0 && map[xx] != e2.left.apply(y, a)) ok = false;
                if (xx == x && e2.left.apply(y, a) != y) ok = false;
            }
        for (int b = 0; b < e1.H->n_arrows() && ok; ++b)
            if (e1.right.defined(x, b)) {
                int xx = e1.right.apply(x, b);
                if (map[xx] >= 0 && map[xx] != e2.right.apply(y, b)) ok = false;
                if (xx == x && e2.right.apply(y, b) != y) ok = false;
            }
        if (!ok) continue;
        map[x] = y;
        used[y] = true;
        if (biequivariant_extends(e1, e2, map, used, x + 1)) return true;
        map[x] = -1;
        used[y] = false;
    }
    return false;
}

void count_rec(const Bibundle& e1, const Bibundle& e2, std::vector<int>& map,
               std::vector<bool>& used, int x, int& count) {
    if (x == e1.total) { ++count; return; }
    for (int y = 0; y < e2.total; ++y) {
        if (used[y] || e1.jg(x) != e2.jg(y) || e1.jh(x) != e2.jh(y)) continue;
        bool ok = true;
        for (int a = 0; a < e1.G->n_arrows() && ok; ++a)
            if (e1.left.defined(x, a)) {
                int xx = e1.left.apply(x, a);
                if (map[xx] >= 0 && map[xx] != e2.left.apply(y, a)) ok = false;
                if (xx == x && e2.left.apply(y, a) != y) ok = false;
            }
        for (int b = 0; b < e1.H->n_arrows() && ok; ++b)
            if (e1.right.defined(x, b)) {
                int xx = e1.right.apply(x, b);
                if (map[xx] >= 0 && map[xx] != e2.right.apply(y, b)) ok = false;
                if (xx == x && e2.right.apply(y, b) != y) ok = false;
            }
        if (!ok) continue;
        map[x] = y;
        used[y] = true;
        count_rec(e1, e2, map, used, x + 1, count);
        map[x] = -1;
        used[y] = false;
    }
}

}  // namespace

std::optional<TwoMorphismData> find_two_morphism(const Bibundle& e1, const Bibundle& e2) {
    if (e1.G != e2.G || e1.H != e2.H || e1.total != e2.total) return std::nullopt;
    std::vector<int> map(e1.total, -1);
    std::vector<bool> used(e2.total, false);
    if (!biequivariant_extends(e1, e2, map, used, 0)) return std::nullopt;
    return TwoMorphismData{map};
}

int count_two_morphisms(const Bibundle& e1, const Bibundle& e2) {
    if (e1.G != e2.G || e1.H != e2.H || e1.total != e2.total) return 0;
    std::vector<int> map(e1.total, -1);
    std::vector<bool> used(e2.total, false);
    int count = 0;
    count_rec(e1, e2, map, used, 0, count);
    return count;
}

bool check_hom_two_morphism(const GroupoidHom& f, const GroupoidHom& g,
                            const std::vector<int>& alpha) {
    if (f.G != g.G || f.H != g.H) return false;
    const FiniteGroupoid& G = *f.G;
    const FiniteGroupoid& H = *f.H;
    if (static_cast<int>(alpha.size()) != G.n_objects()) return false;
    for (int x = 0; x < G.n_objects(); ++x)
        if (H.src(alpha[x]) != f.obj[x] || H.tgt(alpha[x]) != g.obj[x]) return false;
    for (int c = 0; c < G.n_arrows(); ++c) {
        int lhs = H.mult(alpha[G.tgt(c)], f.arr[c]);
        int rhs = H.mult(g.arr[c], alpha[G.src(c)]);
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_hom_two_morphisms(const GroupoidHom& f,
                                                          const GroupoidHom& g) {
    const FiniteGroupoid& G = *f.G;
    const FiniteGroupoid& H = *f.H;
    std::vector<std::vector<int>> candidates(G.n_objects());
    for (int x = 0; x < G.n_objects(); ++x)
        for (int h = 0; h < H.n_arrows(); ++h)
            if (H.src(h) == f.obj[x] && H.tgt(h) == g.obj[x]) candidates[x].push_back(h);

    std::vector<std::vector<int>> found;
    std::vector<int> alpha(G.n_objects(), -1);
    // depth-first over per-object candidates in lexicographic order
    auto rec = [&](auto&& self, int x) -> void {
        if (x == G.n_objects()) {
            if (check_hom_two_morphism(f, g, alpha)) found.push_back(alpha);
            return;
        }
        for (int h : candidates[x]) {
            alpha[x] = h;
            self(self, x + 1);
        }
        alpha[x] = -1;
    };
    rec(rec, 0);
    return found;
}

}  // namespace apath
