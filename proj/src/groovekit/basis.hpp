#pragma once

#include <array>
#include <vector>

#include "groovekit/hypergeom.hpp"

namespace groovekit {

// Weights (C1..C4) on the similarity basis z1..z4.
struct similarity_coeffs {
  std::array<double, 4> c{};
};

// Truncated power-series solution of the similarity ODE about u = 0.
struct series_solution {
  std::vector<double> a; // a[n] multiplies u^n
};

// Basis functions of the similarity ODE Z'''' - (u/4) Z' + (1/4) Z = 0:
//   z1 = 1F3(-1/4; 1/4, 1/2, 3/4; u^4/256)         (even)
//   z2 = u                                          (odd)
//   z3 = u^2 1F3(1/4; 3/4, 5/4, 3/2; u^4/256)      (even)
//   z4 = u^3 1F3(1/2; 5/4, 3/2, 7/4; u^4/256)      (odd)
// Parity is exact: the series is evaluated at |u| and the sign applied.
double z(int i, double u, const series_policy& policy = {});

// d^order z_i / du^order by term-wise differentiation of the series, order 0..4.
// At u = 0 this reproduces z_i^{(j-1)}(0) = delta_{ij} (j-1)! exactly.
double z_derivative(int i, int order, double u, const series_policy& policy = {});

// Z'''' - (u/4) Z' + (1/4) Z for Z = sum_i C_i z_i, from term-wise-differentiated
// series (no finite differences).
double ode_residual(const similarity_coeffs& coeffs, double u, const series_policy& policy = {});

// Extends the four seed coefficients with the universal recursion
//   a_{n+4} = (n-1) a_n / [4 (n+1)(n+2)(n+3)(n+4)],
// carried in exact rational arithmetic internally.
series_solution extend_series(double a0, double a1, double a2, double a3, int n_max);

// Horner evaluation of a truncated series; throws errc::truncation when the
// tail estimate from the last retained terms exceeds 1e-10.
double series_eval(const series_solution& sol, double u);

// Dense power-series coefficients of z_i (index n = power of u), n_max >= 4.
std::vector<double> z_power_series(int i, int n_max);

} // namespace groovekit
