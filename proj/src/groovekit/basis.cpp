#include "groovekit/basis.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "groovekit/errors.hpp"

namespace groovekit {

namespace {

struct z_params {
  rational a;
  rational b1, b2, b3;
  int leading_power; // i - 1
};

const z_params& params_for(int i) {
  static const z_params table[4] = {
      {{-1, 4}, {1, 4}, {1, 2}, {3, 4}, 0},
      {{0, 1}, {1, 2}, {3, 4}, {5, 4}, 1}, // z2 = u; handled directly, kept for symmetry
      {{1, 4}, {3, 4}, {5, 4}, {3, 2}, 2},
      {{1, 2}, {5, 4}, {3, 2}, {7, 4}, 3},
  };
  if (i < 1 || i > 4) throw_error(errc::invalid_argument, "basis: index must be in 1..4");
  return table[i - 1];
}

double falling(int p, int r) {
  double f = 1.0;
  for (int j = 0; j < r; ++j) f *= p - j;
  return f;
}

} // namespace

double z(int i, double u, const series_policy& policy) {
  if (i == 2) return u;
  const z_params& zp = params_for(i);
  double s = std::fabs(u);
  double q = (s * s) * (s * s) / 256.0;
  double f = pfq({{zp.a}, {zp.b1, zp.b2, zp.b3}}, q, policy).value;
  double lead = 1.0;
  for (int j = 0; j < zp.leading_power; ++j) lead *= s;
  double v = lead * f;
  bool odd = (i == 2 || i == 4);
  return (odd && u < 0) ? -v : v;
}

double z_derivative(int i, int order, double u, const series_policy& policy) {
  if (order < 0 || order > 4)
    throw_error(errc::invalid_argument, "z_derivative: order must be in 0..4");
  if (order == 0) return z(i, u, policy);
  if (i == 2) return order == 1 ? 1.0 : 0.0;
  const z_params& zp = params_for(i);

  // evaluate at |u|; parity of z_i gives z^(r)(-u) = parity * (-1)^r z^(r)(u)
  if (u < 0) {
    const double even = (i == 1 || i == 3) ? 1.0 : -1.0;
    const double sign = even * (order % 2 == 0 ? 1.0 : -1.0);
    return sign * z_derivative(i, order, -u, policy);
  }

  // z_i = sum_k c_k u^{4k+i-1}; differentiate each term in closed form.
  // Coefficient recursion: c_{k+1} = c_k (a+k) / [(b1+k)(b2+k)(b3+k)(k+1) 256].
  if (u == 0.0) {
    // Only the term with 4k + i - 1 == order survives.
    int p = order - (i - 1);
    if (p < 0 || p % 4 != 0) return 0.0;
    int k = p / 4;
    double c = 1.0;
    for (int j = 0; j < k; ++j)
      c *= (zp.a.value() + j) /
           ((zp.b1.value() + j) * (zp.b2.value() + j) * (zp.b3.value() + j) * (j + 1) * 256.0);
    return c * falling(4 * k + i - 1, order);
  }

  double u4 = (u * u) * (u * u);
  double c = 1.0;                          // c_k
  int p = zp.leading_power;                // current power
  double upow = std::pow(u, p - order);    // u^{p-order}, replaced exactly below when p < order
  double sum = 0.0, sum_abs = 0.0;
  int small_run = 0;
  for (int k = 0; k < policy.max_terms; ++k, p += 4) {
    double term;
    if (p < order) {
      term = 0.0; // derivative annihilates this power
    } else {
      if (k > 0 && p - 4 < order) upow = std::pow(u, p - order);
      term = c * falling(p, order) * upow;
      upow *= u4;
    }
    sum += term;
    sum_abs += std::fabs(term);
    if (k > 0 && std::fabs(term) < policy.rel_tolerance * std::fabs(sum) + policy.abs_floor) {
      if (++small_run >= policy.consecutive_small_terms) return sum;
    } else {
      small_run = 0;
    }
    c *= (zp.a.value() + k) /
         ((zp.b1.value() + k) * (zp.b2.value() + k) * (zp.b3.value() + k) * (k + 1) * 256.0);
    if (c == 0.0 && small_run > 0) return sum; // terminating series
  }
  throw_error(errc::non_convergence, "z_derivative: series did not converge");
}

double ode_residual(const similarity_coeffs& coeffs, double u, const series_policy& policy) {
  double r = 0.0;
  for (int i = 1; i <= 4; ++i) {
    double ci = coeffs.c[i - 1];
    if (ci == 0.0) continue;
    double zi = z(i, u, policy);
    double z1 = z_derivative(i, 1, u, policy);
    double z4 = z_derivative(i, 4, u, policy);
    r += ci * (z4 - (u / 4.0) * z1 + zi / 4.0);
  }
  return r;
}

series_solution extend_series(double a0, double a1, double a2, double a3, int n_max) {
  if (n_max < 4) throw_error(errc::invalid_argument, "extend_series: n_max must be >= 4");
  using boost::multiprecision::cpp_rational;
  std::vector<cpp_rational> a(n_max + 1);
  a[0] = cpp_rational(a0);
  a[1] = cpp_rational(a1);
  a[2] = cpp_rational(a2);
  a[3] = cpp_rational(a3);
  for (int n = 0; n + 4 <= n_max; ++n)
    a[n + 4] = a[n] * (n - 1) / (4LL * (n + 1) * (n + 2) * (n + 3) * (n + 4));
  series_solution out;
  out.a.reserve(a.size());
  for (const auto& q : a) out.a.push_back(static_cast<double>(q));
  return out;
}

double series_eval(const series_solution& sol, double u) {
  if (sol.a.empty()) throw_error(errc::invalid_argument, "series_eval: empty series");
  // Tail estimate from the last retained terms (coefficients recur with period
  // four, so several trailing entries can be structurally zero).
  double tail = 0.0;
  int n = static_cast<int>(sol.a.size()) - 1;
  for (int j = n; j > n - 4 && j >= 0; --j)
    tail = std::max(tail, std::fabs(sol.a[j] * std::pow(u, j)));
  if (tail > 1e-10)
    throw_error(errc::truncation, "series_eval: truncation tail estimate exceeds 1e-10");
  double v = 0.0;
  for (int j = n; j >= 0; --j) v = v * u + sol.a[j];
  return v;
}

std::vector<double> z_power_series(int i, int n_max) {
  params_for(i); // validate index
  double seed[4] = {0, 0, 0, 0};
  seed[i - 1] = 1.0;
  return extend_series(seed[0], seed[1], seed[2], seed[3], n_max).a;
}

} // namespace groovekit
