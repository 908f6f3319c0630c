#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "apath/linalg.hpp"
#include "apath/report.hpp"

namespace apath {

// Chart coordinates of a base point; length m (empty for a pointlike base).
using ChartPoint = Vec;

enum class Family { lie_algebra, tangent, twisted_surface, custom };

std::string family_name(Family f);

// A Lie algebroid over a single coordinate chart: anchor rho^k_j(x) (m x n)
// and structure functions c^k_{ij}(x) (antisymmetric in the lower pair).
// Values are immutable after construction and safe to share across threads.
struct AlgebroidSpec {
    Family family = Family::custom;
    int m = 0;  // base dimension
    int n = 0;  // rank
    std::function<Mat(const ChartPoint&)> anchor;        // m x n
    std::function<Tensor3(const ChartPoint&)> structure; // c(k,i,j), n x n x n
    double chart_bound = std::numeric_limits<double>::infinity();  // L-inf box
    std::string name = "custom";

    Mat anchor_at(const ChartPoint& x) const;
    Tensor3 structure_at(const ChartPoint& x) const;
    bool in_chart(const ChartPoint& x) const;
};

using SpecPtr = std::shared_ptr<const AlgebroidSpec>;

// Built-in families.
SpecPtr make_lie_algebra(const Tensor3& constants, const std::string& name = "lie_algebra");
SpecPtr make_lie_algebra_preset(const std::string& preset);  // "so3","su2","heisenberg","sl2","abelian1","ut2"
SpecPtr make_tangent(int m, double chart_bound = std::numeric_limits<double>::infinity());
// Twisted algebroid TM x R over a product of k unit spheres in latitude/
// longitude charts, with 2-form sum_i lambda_i * (area form of factor i).
SpecPtr make_twisted_numeric(const std::vector<double>& lambdas);

Tensor3 structure_constants_preset(const std::string& preset);

// Connection coefficients Gamma^k_{i a}(x): i runs over the base, a,k over
// the fiber. The covariant derivative of a section alpha in base direction v
// is v^i (d_i alpha^k + Gamma^k_{i a} alpha^a).
struct ConnectionSpec {
    int m = 0;
    int n = 0;
    std::function<Tensor3(const ChartPoint&)> gamma;  // (k, i, a) = n x m x n
    std::string name = "zero";

    Tensor3 gamma_at(const ChartPoint& x) const;

    static ConnectionSpec zero(int m, int n);
    static ConnectionSpec random_constant(int m, int n, std::uint64_t seed);
};

// Frame-section bracket [e_i, e_j]^k = c^k_{ij}(x). Indices are 0-based.
Vec bracket_frame(const AlgebroidSpec& spec, int i, int j, const ChartPoint& x);

// Pointwise right-hand side of the homotopy ODE after the extension terms
// are moved to the left:
//   result^k = Gamma^k_{i a} v_eps^i a^a - Gamma^k_{i a} v_t^i b^a
//            + c^k_{ab} a^a b^b.
Vec torsion_reduced(const AlgebroidSpec& spec, const ConnectionSpec& conn, const ChartPoint& x,
                    const Vec& v_t, const Vec& v_eps, const Vec& a, const Vec& b);

// Checks the definitional identities of a Lie algebroid at sample points:
// exact antisymmetry of c, the Jacobi identity with finite-difference
// derivatives, and the anchor-bracket compatibility. Failures are carried in
// the report, never thrown.
Report validate(const AlgebroidSpec& spec, const ConnectionSpec& conn,
                const std::vector<ChartPoint>& samples, double fd_step, double tol);

}  // namespace apath
