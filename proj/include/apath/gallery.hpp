#pragma once

#include <cstdint>

#include "apath/homotopy.hpp"

namespace apath {

// Seeded constructions used by tests, presets and the acceptance battery.
// Everything is deterministic in the seed.

// Smooth A0 bump basis: w(t) = t^2 (1-t)^2 scaled so max = 1.
double bump(double t);

// Random A0-path over a pointlike-base (lie_algebra) spec: components are
// bump-windowed low-order sine sums with the given amplitude.
APath random_lie_path(SpecPtr spec, int N, std::uint64_t seed, double amplitude, int modes = 2);

// Random A0-path of the tangent algebroid with base starting at gamma0.
APath random_tangent_path(SpecPtr spec, int N, std::uint64_t seed, double amplitude,
                          const ChartPoint& gamma0);

// Unit-speed circle a(t) = 2*pi*(cos 2*pi*t, sin 2*pi*t) over tangent R^2,
// windowed to A0 when requested.
APath circle_path(SpecPtr spec, int N, bool a0_window = false);

// Constant sheet: every row equals p.
HomotopySheet sheet_constant(const APath& p, int Ne);

// Straight-line interpolation of bases for the tangent family; rows are
// rebuilt so each one is an exact A-path of TM.
HomotopySheet sheet_linear_tangent(const APath& p0, const APath& p1, int Ne);

// Pointlike base: rows (1-eps) a0 + eps a1 (every row is an A-path there).
HomotopySheet sheet_lie_interpolate(const APath& p0, const APath& p1, int Ne);

// Development-preserving family: rows are reparameterizations of p by
// phi_eps(t) = (1-eps) t + eps tau(t), tau a seeded monotone warp.
HomotopySheet sheet_reparam_sweep(const APath& p, int Ne, std::uint64_t seed,
                                  double warp_scale = 0.35);

// Seeded monotone warp used by sheet_reparam_sweep.
double warp(double t, std::uint64_t seed, double scale);
double warp_deriv(double t, std::uint64_t seed, double scale);

// Meridian sweep of one sphere factor of a twisted algebroid, with chart-
// fixed endpoints: each row spins the longitude up at the north pole,
// descends the meridian, and spins back down at the south pole; the
// longitude amplitude ramps to 2*pi*wraps as eps goes from 0 to 1. The
// scalar component u is chosen so that consecutive rows are equivalent (its
// t-integral absorbs the flux swept so far); with u_mode=zero it vanishes.
// Nt must be a multiple of 5 (stage joints sit at t = 1/5 and 4/5).
enum class MeridianU { equivalence, zero };
HomotopySheet sheet_meridian(SpecPtr twisted, const std::vector<double>& lambdas,
                             int factor, int wraps, int Ne, int Nt,
                             MeridianU u_mode = MeridianU::equivalence);

// Closed-form pieces of the meridian sweep (used for pulled-back quadrature).
Vec meridian_dt(int factors, int factor, int wraps, double eps, double t);
Vec meridian_deps(int factors, int factor, int wraps, double eps, double t);
double meridian_theta(double t);

// Straight-line interpolation driven by a smooth ramp in eps (genuinely
// nonlinear families for convergence studies).
HomotopySheet sheet_smooth_tangent(const APath& p0, const APath& p1, int Ne);

// Gentle meridian descent whose longitude bulges by amplitude*q(eps) and
// returns; chart endpoints fixed, smooth everywhere, no net flux. Used where
// the full sweep's velocities would drown small tolerances.
HomotopySheet sheet_meridian_patch(SpecPtr twisted, int factor, double amplitude, int Ne,
                                   int Nt);

}  // namespace apath
