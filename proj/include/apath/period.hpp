#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apath/algebroid.hpp"
#include "apath/quad_number.hpp"
#include "apath/report.hpp"

namespace apath {

// Twisted algebroid TM x R over a product of unit spheres, with 2-form
// Omega = sum_i lambda_i omega_i. Factor areas are normalized to one
// symbolic unit, so the period group lives in Q(sqrt(d)); the transcendental
// area (4*pi per unit sphere) only enters the floating-point cross-checks.
struct TwistedSpec {
    int factors = 1;
    long long d = 2;
    std::vector<QuadNumber> lambdas;

    static TwistedSpec sphere_product(const std::vector<QuadNumber>& ls, long long d = 2);
    // The running example: Omega = (omega, sqrt(2) omega) on S^2 x S^2.
    static TwistedSpec s2xs2_sqrt2();

    std::vector<double> lambdas_numeric() const;
    SpecPtr to_algebroid() const;  // numeric twisted_surface spec
};

// Finitely generated subgroup of R with generators in Q(sqrt(d)).
struct PeriodGroup {
    std::vector<QuadNumber> generators;  // nonzero after reduction
    long long d = 2;
};

// Unit-area normalization: generators are exactly the lambdas (zeros drop).
PeriodGroup period_group(const TwistedSpec& spec);

enum class Discreteness { Discrete, Dense };

struct DiscretenessCertificate {
    Discreteness verdict;
    // Discrete: single generator of the group (empty group => "0").
    std::optional<QuadNumber> generator;
    // Dense: indices of two Q-independent generators.
    std::optional<std::pair<int, int>> independent_pair;
};

// Exact Q-rank computation inside Q^2 = Q(sqrt(d)): rank <= 1 is discrete
// with a gcd generator, rank 2 is dense.
DiscretenessCertificate is_discrete(const PeriodGroup& pg);

struct PellWitness {
    long long p, q;
    QuadNumber value;  // element of the period group, strictly decreasing
};

enum class Integrability { Integrable, NonIntegrable };

struct IntegrabilityResult {
    Integrability verdict;
    DiscretenessCertificate certificate;
    std::vector<PellWitness> witnesses;  // nonempty iff NonIntegrable
    Report report;
};

// Integrable iff the period group is discrete. The non-integrable witness is
// a sequence of continued-fraction convergents p_k/q_k of sqrt(d), scaled
// into the group, with |p_k - q_k sqrt(d)| strictly decreasing and nonzero.
IntegrabilityResult integrability_verdict(const TwistedSpec& spec);

// Continued-fraction convergents of sqrt(d) with q up to q_limit.
std::vector<std::pair<long long, long long>> sqrt_convergents(long long d, long long q_limit);

// Full meridian-sweep identity check: the u-integral difference between the
// first and last rows must equal (wraps * lambda) times the numeric factor
// area 4*pi, reproduced independently by 2d composite Simpson quadrature of
// the pulled-back form; the scalar homotopy component is integrated through
// solve_b and its terminal values are reported.
Report twisted_homotopy_integral(const TwistedSpec& spec, int factor, int wraps, int quad_grid,
                                 int sheet_grid, double tol, double v_tol = 2e-3);

// Exact membership test of the Example's criterion: paths with equal base
// endpoints are equivalent iff the u-integral difference equals
// sum_i wrap_i lambda_i in Q(sqrt(d)). Exact-input mode only.
bool equivalence_twisted(const TwistedSpec& spec, const QuadNumber& u0_integral,
                         const QuadNumber& u1_integral, bool same_endpoints,
                         const std::vector<long long>& wrap_vector);

// Deciding membership in a dense subgroup from floating data is ill-posed;
// this overload exists to say so.
bool equivalence_twisted(const TwistedSpec& spec, double u0_integral, double u1_integral,
                         bool same_endpoints, const std::vector<long long>& wrap_vector) = delete;

// Throws std::invalid_argument; kept for callers that must reject floats at
// run time (the CLI surfaces this as an input error).
[[noreturn]] void reject_floating_membership();

}  // namespace apath
