#pragma once

#include <array>
#include <vector>

#include "groovekit/basis.hpp"

namespace groovekit {

struct physical_params {
  double B = 1; // surface diffusion coefficient, length^4 / time
  double m = 0; // groove-root slope parameter
};

// slope parameter range where the small-slope linearization is trustworthy
inline bool m_in_typical_range(double m) { return m > 0 && m < 1.0 / 3.0; }

// Weights on the decaying/growing basis y_1..y_4.
struct decay_weights {
  std::array<double, 4> c{};
};

// Coefficients for the two half-lines meeting at the groove root.
struct two_sided_solution {
  similarity_coeffs plus{};  // used for x > 0
  similarity_coeffs minus{}; // used for x < 0
  physical_params params{};
};

using d_matrix_t = std::array<std::array<double, 4>, 4>;

// Mixing matrix taking the scaled power-series basis to y_1..y_4.
// Satisfies (1/2) D D^T = I, so inversion is a transpose.
const d_matrix_t& d_matrix();

enum class eval_route {
  automatic,  // series inside |u| <= u_switch, integral route beyond (decaying side)
  series,     // power-series basis combination
  quadrature, // Fourier-cosine integrals (decaying directions only)
  laplace,    // contour-inverted Laplace transform
};

constexpr double u_switch = 6.0;

// y_i(t, x) = (Bt)^{1/4} sum_j D[i][j] g_j z_j(u), u = x/(Bt)^{1/4},
// g = (1/Gamma(5/4), 1, 1/(2 Gamma(3/4)), 1/(6 Gamma(1/2))).
// y_1, y_2 decay as x -> +inf; y_3, y_4 are their mirror images.
double y(int i, double t, double x, double B, eval_route route = eval_route::automatic);

// derivs = (value, slope, curvature, third derivative) at the groove root.
// C_i = derivs[i-1] / ((Bt)^{(2-i)/4} (i-1)!)
similarity_coeffs coeffs_from_boundary(const std::array<double, 4>& derivs, double t,
                                       const physical_params& p);

// Inverse map: root derivatives implied by series coefficients.
std::array<double, 4> boundary_derivatives(const similarity_coeffs& C, double t,
                                           const physical_params& p);

// c = (1/2) D diag(0! Gamma(5/4), 1! Gamma(1), 2! Gamma(3/4), 3! Gamma(1/2)) C
decay_weights z_to_decay_weights(const similarity_coeffs& C);
similarity_coeffs decay_weights_to_z(const decay_weights& c);

// Two-sided profile value; the groove root x = 0 itself is excluded since the
// sides need not agree there. Root data is reachable via boundary_derivatives.
double evaluate(const two_sided_solution& sol, double t, double x);

// Named groove profiles, both even in x:
//   mullins: slope m/2 and zero third derivative at the root,
//            (m/(2 sqrt 2)) (y_1 - y_2)
//   amram:   slope m/2 and zero curvature at the root, -(m/sqrt 2) y_2
double mullins_solution(const physical_params& p, double t, double x);
double amram_solution(const physical_params& p, double t, double x);

// Root depth of the mullins profile: -m (Bt)^{1/4} / (2 sqrt(2) Gamma(5/4)).
double groove_depth(const physical_params& p, double t);

enum class side_kind { plus, minus };

struct asymptotics_report {
  bool decaying = false;
  decay_weights weights{};
  // 1-based indices and values of nonzero weights on components growing
  // toward the requested side's infinity
  std::vector<std::pair<int, double>> offending{};
};

// A solution side decays at infinity iff the weights of the two components
// growing in that direction vanish (within 1e-12 of the largest weight).
asymptotics_report classify_asymptotics(const similarity_coeffs& C, side_kind side);

} // namespace groovekit
