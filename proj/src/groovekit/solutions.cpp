#include "groovekit/solutions.hpp"

#include <cmath>

#include "groovekit/errors.hpp"
#include "groovekit/hypergeom.hpp"
#include "groovekit/transforms.hpp"

namespace groovekit {

namespace {

constexpr double inv_sqrt2 = 0.707106781186547524400844362104849039;

// 1 / ((i-1)! Gamma((6-i)/4)) scaling applied to each z_i column
const std::array<double, 4>& basis_weights() {
  static const std::array<double, 4> g = {
      1.0 / gamma_rational({5, 4}),
      1.0,
      1.0 / (2.0 * gamma_rational({3, 4})),
      1.0 / (6.0 * gamma_rational({1, 2})),
  };
  return g;
}

// (i-1)! Gamma((6-i)/4) weights pairing with basis_weights in the D map
const std::array<double, 4>& decay_map_weights() {
  static const std::array<double, 4> k = {
      gamma_rational({5, 4}),
      1.0,
      2.0 * gamma_rational({3, 4}),
      6.0 * gamma_rational({1, 2}),
  };
  return k;
}

void check_time_params(double t, double B, const char* who) {
  if (t <= 0) throw_error(errc::invalid_argument, std::string(who) + ": need t > 0");
  if (B <= 0) throw_error(errc::invalid_argument, std::string(who) + ": need B > 0");
}

double y_series(int i, double t, double x, double B) {
  const double s = std::pow(B * t, 0.25);
  const double u = x / s;
  const auto& D = d_matrix();
  const auto& g = basis_weights();
  double sum = 0;
  for (int j = 0; j < 4; ++j) sum += D[i - 1][j] * g[j] * z(j + 1, u);
  return s * sum;
}

} // namespace

const d_matrix_t& d_matrix() {
  static const d_matrix_t D = {{
      {0.0, inv_sqrt2, -1.0, inv_sqrt2},
      {1.0, -inv_sqrt2, 0.0, inv_sqrt2},
      {0.0, inv_sqrt2, 1.0, inv_sqrt2},
      {1.0, inv_sqrt2, 0.0, -inv_sqrt2},
  }};
  return D;
}

double y(int i, double t, double x, double B, eval_route route) {
  if (i < 1 || i > 4) throw_error(errc::invalid_argument, "y: index must be 1..4");
  check_time_params(t, B, "y");
  const double u = x / std::pow(B * t, 0.25);

  switch (route) {
    case eval_route::series:
      return y_series(i, t, x, B);
    case eval_route::laplace:
      return inverse_laplace(i, t, x, B);
    case eval_route::quadrature:
      if (i <= 2) {
        if (x < 0)
          throw_error(errc::domain, "y: integral route for y1, y2 needs x >= 0");
        return y_decaying_large_u(i, t, x, B);
      }
      if (x > 0)
        throw_error(errc::domain, "y: integral route for y3, y4 needs x <= 0");
      // mirror identities y3(t,x) = -y1(t,-x), y4(t,x) = y2(t,-x)
      return (i == 3) ? -y_decaying_large_u(1, t, -x, B) : y_decaying_large_u(2, t, -x, B);
    case eval_route::automatic:
      break;
  }
  // beyond the switch point the decaying directions cancel catastrophically
  // in the series, so hand those to the integral route
  if (i <= 2 && u > u_switch) return y(i, t, x, B, eval_route::quadrature);
  if (i >= 3 && u < -u_switch) return y(i, t, x, B, eval_route::quadrature);
  return y_series(i, t, x, B);
}

similarity_coeffs coeffs_from_boundary(const std::array<double, 4>& derivs, double t,
                                       const physical_params& p) {
  check_time_params(t, p.B, "coeffs_from_boundary");
  similarity_coeffs C;
  double fact = 1;
  for (int i = 1; i <= 4; ++i) {
    if (i > 1) fact *= i - 1;
    C.c[i - 1] = derivs[i - 1] / (std::pow(p.B * t, (2.0 - i) / 4.0) * fact);
  }
  return C;
}

std::array<double, 4> boundary_derivatives(const similarity_coeffs& C, double t,
                                           const physical_params& p) {
  check_time_params(t, p.B, "boundary_derivatives");
  std::array<double, 4> derivs{};
  double fact = 1;
  for (int i = 1; i <= 4; ++i) {
    if (i > 1) fact *= i - 1;
    derivs[i - 1] = C.c[i - 1] * std::pow(p.B * t, (2.0 - i) / 4.0) * fact;
  }
  return derivs;
}

decay_weights z_to_decay_weights(const similarity_coeffs& C) {
  const auto& D = d_matrix();
  const auto& k = decay_map_weights();
  decay_weights out;
  for (int i = 0; i < 4; ++i) {
    double sum = 0;
    for (int j = 0; j < 4; ++j) sum += D[i][j] * k[j] * C.c[j];
    out.c[i] = 0.5 * sum;
  }
  return out;
}

similarity_coeffs decay_weights_to_z(const decay_weights& c) {
  const auto& D = d_matrix();
  const auto& k = decay_map_weights();
  similarity_coeffs C;
  for (int j = 0; j < 4; ++j) {
    double sum = 0;
    for (int i = 0; i < 4; ++i) sum += D[i][j] * c.c[i];
    C.c[j] = sum / k[j];
  }
  return C;
}

double evaluate(const two_sided_solution& sol, double t, double x) {
  if (x == 0)
    throw_error(errc::invalid_argument,
                "evaluate: the groove root is two-sided, x = 0 is excluded");
  check_time_params(t, sol.params.B, "evaluate");
  const double B = sol.params.B;
  const double s = std::pow(B * t, 0.25);
  const double u = x / s;
  const similarity_coeffs& C = x > 0 ? sol.plus : sol.minus;

  if (std::abs(u) > u_switch) {
    // if this side is purely decaying, the integral route dodges the
    // growing/growing cancellation that ruins the series here
    const decay_weights w = z_to_decay_weights(C);
    double cmax = 0;
    for (double v : w.c) cmax = std::max(cmax, std::abs(v));
    const bool plus_side = x > 0;
    const double g1 = plus_side ? w.c[2] : w.c[0];
    const double g2 = plus_side ? w.c[3] : w.c[1];
    if (cmax > 0 && std::abs(g1) <= 1e-12 * cmax && std::abs(g2) <= 1e-12 * cmax) {
      if (plus_side)
        return w.c[0] * y(1, t, x, B, eval_route::quadrature) +
               w.c[1] * y(2, t, x, B, eval_route::quadrature);
      return w.c[2] * y(3, t, x, B, eval_route::quadrature) +
             w.c[3] * y(4, t, x, B, eval_route::quadrature);
    }
  }

  double sum = 0;
  for (int j = 0; j < 4; ++j) sum += C.c[j] * z(j + 1, u);
  return s * sum;
}

double mullins_solution(const physical_params& p, double t, double x) {
  check_time_params(t, p.B, "mullins_solution");
  const double ax = std::abs(x); // profile is even in x
  return p.m / (2.0 * std::sqrt(2.0)) *
         (y(1, t, ax, p.B) - y(2, t, ax, p.B));
}

double amram_solution(const physical_params& p, double t, double x) {
  check_time_params(t, p.B, "amram_solution");
  const double ax = std::abs(x);
  return -p.m / std::sqrt(2.0) * y(2, t, ax, p.B);
}

double groove_depth(const physical_params& p, double t) {
  if (t < 0) throw_error(errc::invalid_argument, "groove_depth: need t >= 0");
  if (p.B <= 0) throw_error(errc::invalid_argument, "groove_depth: need B > 0");
  return -p.m * std::pow(p.B * t, 0.25) /
         (2.0 * std::sqrt(2.0) * gamma_rational({5, 4}));
}

asymptotics_report classify_asymptotics(const similarity_coeffs& C, side_kind side) {
  asymptotics_report report;
  report.weights = z_to_decay_weights(C);
  double cmax = 0;
  for (double v : report.weights.c) cmax = std::max(cmax, std::abs(v));
  const double tol = 1e-12 * cmax;
  // y_3, y_4 grow toward +inf; y_1, y_2 grow toward -inf
  const int grow0 = side == side_kind::plus ? 2 : 0;
  report.decaying = true;
  for (int i = grow0; i < grow0 + 2; ++i) {
    if (std::abs(report.weights.c[i]) > tol) {
      report.decaying = false;
      report.offending.emplace_back(i + 1, report.weights.c[i]);
    }
  }
  return report;
}

} // namespace groovekit
