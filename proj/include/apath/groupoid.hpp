#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apath/report.hpp"

namespace apath {

// Finite groupoid with named objects and arrows. Composition mult(a, b) is
// in function order: defined iff src(a) = tgt(b), and the result runs
// src(b) -> tgt(a). All axioms are enumerated at construction; malformed
// tables throw std::invalid_argument.
class FiniteGroupoid {
public:
    FiniteGroupoid(std::vector<std::string> objects, std::vector<std::string> arrows,
                   std::vector<int> src, std::vector<int> tgt,
                   std::vector<std::vector<int>> mult,  // -1 marks non-composable
                   std::vector<int> unit, std::vector<int> inv);

    int n_objects() const { return static_cast<int>(objects_.size()); }
    int n_arrows() const { return static_cast<int>(arrows_.size()); }
    int src(int a) const { return src_[a]; }
    int tgt(int a) const { return tgt_[a]; }
    int unit(int x) const { return unit_[x]; }
    int inv(int a) const { return inv_[a]; }
    bool composable(int a, int b) const { return src_[a] == tgt_[b]; }
    int mult(int a, int b) const;  // throws when not composable

    const std::string& object_name(int x) const { return objects_[x]; }
    const std::string& arrow_name(int a) const { return arrows_[a]; }
    int object_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;

    bool is_unit(int a) const;

    // Canonical small examples.
    static FiniteGroupoid trivial();                   // pt
    static FiniteGroupoid cyclic_group(int k);         // Z_k over a point
    static FiniteGroupoid pair_groupoid(int n);        // n x n arrows
    static FiniteGroupoid z2_times_z2_over_z2();       // Z2 x Z2 over Z2, trivial action
    static FiniteGroupoid symmetric3();                // S_3 over a point

private:
    void validate() const;

    std::vector<std::string> objects_;
    std::vector<std::string> arrows_;
    std::vector<int> src_, tgt_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> unit_, inv_;
};

// Homomorphism of finite groupoids (object and arrow maps preserving all
// structure; checked at construction).
struct GroupoidHom {
    const FiniteGroupoid* G;
    const FiniteGroupoid* H;
    std::vector<int> obj;
    std::vector<int> arr;

    GroupoidHom(const FiniteGroupoid& g, const FiniteGroupoid& h, std::vector<int> obj_map,
                std::vector<int> arr_map);
    static GroupoidHom identity(const FiniteGroupoid& g);
    GroupoidHom then(const GroupoidHom& next) const;  // composition G -> H -> K
};

enum class ActionSide { left, right };

// Groupoid action on a finite set: moment map and partial action table,
// axioms enumerated at construction.
struct GroupoidAction {
    ActionSide side;
    const FiniteGroupoid* gpd;
    int set_size;
    std::vector<int> moment;                // E -> objects
    std::vector<std::vector<int>> act;      // [element][arrow] -> element or -1

    GroupoidAction(ActionSide s, const FiniteGroupoid& g, int e, std::vector<int> mom,
                   std::vector<std::vector<int>> table);
    bool defined(int e, int a) const { return act[e][a] >= 0; }
    int apply(int e, int a) const;
};

// HS bibundle: commuting left-G / right-H actions on a finite set with the
// right action principal over J_G. Construction checks the commuting law;
// principality is queried separately.
struct Bibundle {
    const FiniteGroupoid* G;
    const FiniteGroupoid* H;
    int total = 0;
    std::vector<std::string> elem_names;
    GroupoidAction left;   // moment J_G
    GroupoidAction right;  // moment J_H

    Bibundle(const FiniteGroupoid& g, const FiniteGroupoid& h, std::vector<std::string> names,
             GroupoidAction l, GroupoidAction r);

    int jg(int e) const { return left.moment[e]; }
    int jh(int e) const { return right.moment[e]; }
};

// G_0 x_{f,t} H_1 with the canonical actions; throws on non-homomorphisms.
Bibundle from_homomorphism(const GroupoidHom& f);

Bibundle identity_bibundle(const FiniteGroupoid& g);

// Quotient of E x_{H_0} F by the diagonal H-action; orbit representatives
// are lexicographic minima, which makes composition deterministic.
Bibundle compose(const Bibundle& e, const Bibundle& f);

// Swap the two sides of a Morita bibundle (arrows act through inverses).
Bibundle flip(const Bibundle& e);

// Right-principality over J_G: the right action is free and transitive on
// each J_G-fiber and J_G is onto.
bool is_principal(const Bibundle& e);
// Principal on both sides.
bool is_morita(const Bibundle& e);

struct TwoMorphismData {
    std::vector<int> bijection;  // E1 -> E2
};

// Exhaustive search for a bi-equivariant moment-preserving bijection;
// deterministic lexicographic order, first match returned.
std::optional<TwoMorphismData> find_two_morphism(const Bibundle& e1, const Bibundle& e2);
int count_two_morphisms(const Bibundle& e1, const Bibundle& e2);

// Hom-level 2-morphism alpha: G_0 -> H_1 from f to g: alpha(x) runs
// f(x) -> g(x) and alpha(t(c)) f(c) = g(c) alpha(s(c)) for every arrow c.
bool check_hom_two_morphism(const GroupoidHom& f, const GroupoidHom& g,
                            const std::vector<int>& alpha);

// All valid hom-level 2-morphisms from f to g, lexicographic by the arrow
// indices of alpha's values.
std::vector<std::vector<int>> enumerate_hom_two_morphisms(const GroupoidHom& f,
                                                          const GroupoidHom& g);

}  // namespace apath
