#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "apath/algebroid.hpp"

namespace apath {

// Discretized A-path on the uniform grid t_i = i/N: fiber values a(t_i) and
// base points gamma(t_i). `joints` records concatenation breakpoints; the
// path is one-sidedly smooth across them and ODE solvers integrate piecewise.
struct APath {
    SpecPtr spec;
    int N = 0;
    std::vector<Vec> a;      // (N+1) x n
    std::vector<Vec> gamma;  // (N+1) x m
    bool a0_flag = false;
    std::vector<int> joints;

    double h() const { return 1.0 / N; }
};

// Thrown by integrate_base when the base trajectory leaves the chart.
struct ChartExitError : std::runtime_error {
    int exit_index;
    explicit ChartExitError(int idx)
        : std::runtime_error("base trajectory leaves the chart at grid index " +
                             std::to_string(idx)),
          exit_index(idx) {}
};

// Max over grid intervals of
//   || (gamma_{i+1}-gamma_i)/h - rho(midpoint) (a_i+a_{i+1})/2 ||.
// Second-order small for paths sampled from smooth data.
double apath_residual(const APath& p);

// Default residual tolerance for a grid of size N: the midpoint-rule defect
// scales like h^2 times curvature, so allow a generous constant.
inline double default_path_tol(int N, double scale = 1.0) {
    return 100.0 * scale / (static_cast<double>(N) * N);
}

// Checks the A-path residual and (when claimed) the A0 boundary conditions.
Report check_path(const APath& p, double path_tol, double deriv_tol);

// Integrates dgamma/dt = rho(gamma) a(t) with the classical fourth-order
// one-step method; a is sampled on the grid afterwards.
APath integrate_base(SpecPtr spec, const std::function<Vec(double)>& fiber_samples,
                     const ChartPoint& gamma0, int N);

// tau(t) = 10 t^3 - 15 t^4 + 6 t^5 (quintic smoothstep).
double smoothstep5(double t);
double smoothstep5_deriv(double t);

// a^tau(t) = tau'(t) a(tau(t)) with base gamma(tau(t)); the result carries
// exact A0 boundary values and is evaluated on the same grid by cubic
// interpolation.
APath reparam_tau(const APath& p);

// Time-ordered concatenation: first half from p0 (doubled speed), second
// half from p1. Both operands need even N; grids are unified by resampling.
APath concat(const APath& p0, const APath& p1, double endpoint_tol = 1e-9);

// Reversal with the compensating sign: t -> -a(1-t) over gamma(1-t).
APath invert(const APath& p);

std::pair<ChartPoint, ChartPoint> endpoints(const APath& p);

APath constant_path(SpecPtr spec, const ChartPoint& x, int N);

// Cubic resampling onto a new grid size (joints must land on the new grid).
APath resample(const APath& p, int N2);

// Builds an A-path directly from closed-form samples (no base integration);
// used by generators whose base is exact.
APath path_from_samples(SpecPtr spec, int N, const std::function<Vec(double)>& fiber,
                        const std::function<Vec(double)>& base, bool a0);

}  // namespace apath
