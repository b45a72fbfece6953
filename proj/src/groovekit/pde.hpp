#pragma once

// Finite-difference initial-boundary-value solver for y_t + B y_xxxx = 0 on
// (0, L), started from y == 0 with groove-root conditions imposed at x = 0.
// Independent of the series / transform routes; used to cross-check them and
// the t^{1/4} depth law.

#include <optional>
#include <utility>
#include <vector>

#include "groovekit/solutions.hpp"

namespace groovekit {

struct grid_spec {
  double domain_length = 30.0; // L
  int n_cells = 1024;
  double dt = 5e-4;
  double t_end = 1.0;
  double scheme_theta = 0.5;         // 1 = implicit Euler, 1/2 = Crank-Nicolson
  std::vector<double> output_times;  // empty -> snapshot at t_end only
};

// Two conditions at the root. mullins: y_x = m/2 and y_xxx = 0. amram:
// y_x = m/2 and y_xx = 0. general: exactly two of the three fields set.
// For the named kinds an unset slope defaults to params.m / 2.
struct root_bc {
  enum class family { mullins, amram, general };
  family kind = family::mullins;
  std::optional<double> slope;        // y_x(0+)
  std::optional<double> curvature;    // y_xx(0+)
  std::optional<double> third_deriv;  // y_xxx(0+)
};

struct pde_result {
  std::vector<double> x;                      // node coordinates, size n_cells + 1
  std::vector<double> times;                  // snapshot times actually taken
  std::vector<std::vector<double>> profiles;  // one row per snapshot time
  std::vector<std::pair<double, double>> depth_series; // (t, y(t, 0)) per step
  double max_mass_drift = 0.0; // max per-step |d integral y| / ||y||_1
};

// theta-scheme in time, flux-form second-order differences in space, ghost
// nodes eliminated through the root conditions, clamped far field y = y_x = 0.
// Throws errc::stability when theta < 1/2 and dt exceeds the explicit bound,
// errc::solve on factorization failure.
pde_result solve(const grid_spec& grid, const root_bc& bc, const physical_params& params);

// Least-squares slope of log|d| against log t. Needs at least five samples,
// positive times, nonzero depths.
double measure_depth_exponent(const std::vector<std::pair<double, double>>& depths);

} // namespace groovekit
