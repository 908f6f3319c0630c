#pragma once

#include <map>

#include "apath/groupoid.hpp"

namespace apath {

// k-fold fibered power of a groupoid presentation over its base maps:
// object tuples chained by sbar(x_i) = tbar(x_{i+1}), arrows componentwise.
struct FiberedPower {
    FiniteGroupoid gpd;
    std::vector<std::vector<int>> obj_tuple;  // power object -> component objects
    std::vector<std::vector<int>> arr_tuple;
    std::map<std::vector<int>, int> obj_index;
    std::map<std::vector<int>, int> arr_index;
};

FiberedPower fibered_power(const FiniteGroupoid& g, const std::vector<int>& sbar,
                           const std::vector<int>& tbar, int k);

// Finite presentation of a Weinstein groupoid: an etale groupoid Gamma with
// invariant source/target maps to the base set and structure maps given as
// homomorphisms (multiplication on the fibered square, identity section from
// the unit groupoid on the base, inverse on Gamma).
struct WeinsteinPresentation {
    FiniteGroupoid gamma = FiniteGroupoid::trivial();
    int base_size = 1;
    std::vector<int> sbar, tbar;  // invariant maps on objects
    // multiplication: object/arrow maps indexed by the fibered square
    std::vector<int> m_obj;  // over fibered_power(.,2) objects
    std::vector<int> m_arr;
    std::vector<int> e_obj;  // base -> objects
    std::vector<int> i_obj;  // objects -> objects
    std::vector<int> i_arr;  // arrows -> arrows
    bool etale_tag = true;   // finite discrete sets are vacuously etale
    std::string name = "custom";

    static WeinsteinPresentation bz2();
    static WeinsteinPresentation z2_star_bz2();
    static WeinsteinPresentation trivial_point();

    // The running nontrivial 2-morphism of the second example:
    // alpha(x1,x2,x3) = the isotropy arrow (x1 x2 x3) at object x1 x2 x3.
    std::vector<int> product_alpha() const;
};

struct AxiomResult {
    std::string axiom;
    bool pass = false;
    bool boundary_ok = false;   // found 2-morphism restricts to units on e(M)
    int count = 0;              // number of connecting 2-morphisms
    std::vector<int> alpha;     // first boundary-compatible 2-morphism found
};

struct WeinsteinReport {
    bool pass = true;
    std::vector<AxiomResult> axioms;
    Report report;
};

// Verifies Definition-style axioms up to 2-morphisms by exhaustive search:
// source/target compatibility of the multiplication, associativity, identity
// and inverse laws, plus the identity-section restriction condition. Counts
// of connecting 2-morphisms are reported because uniqueness can fail.
WeinsteinReport weinstein_axiom_check(const WeinsteinPresentation& p);

struct AssociatorObstruction {
    int composite_arrow = -1;   // alpha_6 ... alpha_1 evaluated on the quadruple
    int expected_unit = -1;     // unit arrow at the total product object
    bool is_identity = false;
    std::vector<int> face_values;  // the six alpha_i arrows in order
    Report report;
};

// Composes the six face 2-morphisms of the associativity cube on a
// quadruple of objects. Each non-interchange face contributes alpha
// evaluated on the coarsened triple at the face's associated fibered-cube
// vertex ((x1 x2, x3, x4), (x1, x2 x3, x4) or (x1, x2, x3 x4)), inverted
// when the face runs against alpha's direction; the interchange face
// contributes the identity. alpha must connect m(m x id) and m(id x m).
AssociatorObstruction associator_obstruction(const WeinsteinPresentation& p,
                                             const std::vector<int>& alpha,
                                             const std::vector<int>& quadruple);

}  // namespace apath
