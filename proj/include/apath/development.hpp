#pragma once

#include <string>
#include <vector>

#include "apath/path.hpp"

namespace apath {

enum class DevConvention { left_translate, right_translate };

// Matrix model of a pointlike-base algebroid: basis matrices X_1..X_n whose
// commutators reproduce the paired structure constants. Only simply
// connected model groups are admitted for the equivalence oracle.
struct MatrixModel {
    int n = 0;
    int d = 0;
    std::vector<CMat> basis;
    bool group_simply_connected = false;
    std::string tag;

    // "su2", "heisenberg", "ut2" (simply connected) and "sl2" (not).
    static MatrixModel preset(const std::string& tag);

    // Max coefficient mismatch between commutators of basis matrices and the
    // given structure constants.
    double structure_mismatch(const Tensor3& constants) const;
};

// Solves dg/dt = g * (sum_k a^k(t) X_k), g(0) = I (or a*g for the right
// convention), fourth order, integrating piecewise across concatenation
// joints. With the left convention, dev(concat(a0,a1)) = dev(a0) dev(a1).
CMat develop(const MatrixModel& model, const APath& p,
             DevConvention conv = DevConvention::left_translate);

// For simply connected model groups, A0-paths over the pointlike base are
// equivalent iff their developments agree. Refuses models without the tag.
bool equivalent_oracle(const MatrixModel& model, const APath& p0, const APath& p1, double tol);

// Tangent-algebroid oracle on a convex chart: fixed-endpoint paths are
// homotopic iff the endpoints agree.
bool tangent_oracle(const AlgebroidSpec& spec, const APath& p0, const APath& p1,
                    double tol = 1e-9);

// Unitarity / unipotency drift diagnostics for long developments.
double unitary_drift(const CMat& g);

}  // namespace apath
