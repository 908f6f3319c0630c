#pragma once

#include <vector>

#include "apath/path.hpp"

namespace apath {

// Two-parameter family of A0-paths a(eps_j, t_i) with the base endpoints
// fixed over eps. Rows are indexed by eps first.
struct HomotopySheet {
    SpecPtr spec;
    int Ne = 0;
    int Nt = 0;
    std::vector<std::vector<Vec>> a;      // (Ne+1) x (Nt+1) x n
    std::vector<std::vector<Vec>> gamma;  // (Ne+1) x (Nt+1) x m
    std::vector<int> joints;              // shared t-breakpoints, may be empty

    double he() const { return 1.0 / Ne; }
    double ht() const { return 1.0 / Nt; }

    APath row(int j) const;
    HomotopySheet flipped_eps() const;
    // Half-resolution subsample; Ne and Nt must be even.
    HomotopySheet coarsened() const;
};

// Row-wise validity (A-path residual, A0 ends) and exact endpoint fixing.
// The twisted family treats sphere poles as fixed points even though the
// longitude coordinate is arbitrary there.
Report check_sheet(const HomotopySheet& sheet, double path_tol, double deriv_tol);

struct BSolution {
    std::vector<std::vector<Vec>> b;  // (Ne+1) x (Nt+1) x n, b(eps,0) = 0
    std::vector<double> terminal;     // ||b(eps_j, 1)||
    double max_terminal = 0.0;
};

struct OdeBlowupError : std::runtime_error {
    int eps_index;
    int t_index;
    OdeBlowupError(int j, int i)
        : std::runtime_error("homotopy ODE blow-up at eps index " + std::to_string(j) +
                             ", t index " + std::to_string(i)),
          eps_index(j),
          t_index(i) {}
};

// Integrates, for each eps row, the linear ODE
//   d_t b^k = d_eps a^k + Gamma^k_{ia}(gamma) (d_eps gamma - rho(b))^i a^a
//             + c^k_{ab}(gamma) a^a b^b,          b(eps, 0) = 0,
// the tensorial expansion of the homotopy equation once the covariant
// extension terms are moved left. eps-derivatives use second-order stencils
// (one-sided at the edges); fourth order in t, integrating piecewise across
// concatenation joints. The connection multiplies the dual-path defect
// d_eps gamma - rho(b), so solutions for different connections agree up to
// the discretization error of that defect.
BSolution solve_b(const AlgebroidSpec& spec, const ConnectionSpec& conn,
                  const HomotopySheet& sheet);

// Equivalence test for the sheet's end rows: true iff max_j ||b(eps_j,1)||
// is at most tol.
std::pair<bool, Report> is_homotopy(const AlgebroidSpec& spec, const ConnectionSpec& conn,
                                    const HomotopySheet& sheet, double tol);

// ||b_1 - b_2||_inf over the grid for two connections, plus the refinement
// ratio measured on the half-resolution subsample when available.
Report check_connection_independence(const AlgebroidSpec& spec, const HomotopySheet& sheet,
                                     const ConnectionSpec& conn1, const ConnectionSpec& conn2,
                                     double tol);

// Dual A-path property: max over the grid of ||rho(gamma) b - d_eps gamma||.
Report check_dual_apath(const AlgebroidSpec& spec, const HomotopySheet& sheet,
                        const BSolution& bsol, double tol);

// Monotone C^2 reparameterization fixed by the associator: piecewise quintic
// through (0,0), (1/4,1/2), (1/2,3/4), (1,1) with unit end slopes.
double associator_sigma(double t);
double associator_sigma_deriv(double t);

// Sheet interpolating between the two associations of three chained A0
// paths: the eps=0 row is (a1*a2)*a3 (as a reparameterization of the other
// association) and the eps=1 row is a1*(a2*a3) exactly on the grid.
HomotopySheet associator_sheet(const APath& a1, const APath& a2, const APath& a3, int Ne,
                               double endpoint_tol = 1e-9);

// d_eps stencils: second order for fiber data (the discretization the
// engine fixes), fourth order for base data so that dual-path defects do not
// telescope away against the accumulated fiber stencil.
std::vector<std::vector<Vec>> eps_derivative(const std::vector<std::vector<Vec>>& rows,
                                             double he);
std::vector<std::vector<Vec>> eps_derivative_base(const std::vector<std::vector<Vec>>& rows,
                                                  double he);

}  // namespace apath
