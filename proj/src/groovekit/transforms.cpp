#include "groovekit/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "groovekit/errors.hpp"
#include "groovekit/hypergeom.hpp"

namespace groovekit {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

using gk15 = boost::math::quadrature::gauss_kronrod<double, 15>;

double quarter_root(double v) { return std::pow(v, 0.25); }

} // namespace

double laplace_fundamental(int i, const laplace_query& q) {
  if (q.p <= 0 || q.B <= 0)
    throw_error(errc::invalid_argument, "laplace_fundamental: need p > 0 and B > 0");
  return laplace_fundamental_c(i, q.p, q.x, q.B).real();
}

std::complex<double> laplace_fundamental_c(int i, std::complex<double> p, double x, double B) {
  if (i < 1 || i > 4)
    throw_error(errc::invalid_argument, "laplace_fundamental: index must be 1..4");
  const std::complex<double> q = std::pow(p, 0.25);
  const double broot = quarter_root(B);
  const std::complex<double> r = q / (broot * std::sqrt(2.0));
  const std::complex<double> rx = r * x;
  const std::complex<double> amp = broot * std::pow(p, -1.25);
  const std::complex<double> osc = (i == 1 || i == 3) ? std::sin(rx) : std::cos(rx);
  const std::complex<double> damp = (i <= 2) ? std::exp(-rx) : std::exp(rx);
  return amp * damp * osc;
}

namespace {

// Fixed-contour inversion: s(theta) = r theta (cot theta + i), r = 2N/(5t).
// abs_sum collects sum |term|, the cancellation scale of the contour sum;
// roundoff in the result is of order eps * abs_sum, which grows like e^{2N/5}.
double talbot_sum(int i, double t, double x, double B, int n_nodes, double& abs_sum) {
  const double r = 2.0 * n_nodes / (5.0 * t);
  double sum = 0.5 * std::exp(r * t) * laplace_fundamental_c(i, {r, 0.0}, x, B).real();
  abs_sum = std::abs(sum);
  for (int k = 1; k < n_nodes; ++k) {
    const double theta = k * pi / n_nodes;
    const double cot = std::cos(theta) / std::sin(theta);
    const std::complex<double> s(r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    const std::complex<double> term =
        std::exp(t * s) * laplace_fundamental_c(i, s, x, B) * std::complex<double>(1.0, sigma);
    sum += term.real();
    abs_sum += std::abs(term.real());
  }
  abs_sum *= r / n_nodes;
  return sum * r / n_nodes;
}

} // namespace

double inverse_laplace(int i, double t, double x, double B, const talbot_options& opts) {
  if (i < 1 || i > 4)
    throw_error(errc::invalid_argument, "inverse_laplace: index must be 1..4");
  if (t <= 0 || B <= 0)
    throw_error(errc::invalid_argument, "inverse_laplace: need t > 0 and B > 0");
  if (i <= 2 && x < 0)
    throw_error(errc::domain, "inverse_laplace: decaying pair requires x >= 0");
  if (i >= 3 && x > 0)
    throw_error(errc::domain, "inverse_laplace: growing pair requires x <= 0");
  if (opts.nodes < 8)
    throw_error(errc::invalid_argument, "inverse_laplace: need at least 8 contour nodes");

  double abs_full = 0, abs_half = 0;
  const double full = talbot_sum(i, t, x, B, opts.nodes, abs_full);
  const double half = talbot_sum(i, t, x, B, opts.nodes / 2, abs_half);
  const double scale = quarter_root(B * t);
  const double eps = std::numeric_limits<double>::epsilon();
  const double noise_floor = 64.0 * eps * (abs_full + abs_half);
  const double allowed = opts.rel_tol * std::abs(full) + 1e-10 * scale + noise_floor;
  if (std::abs(full - half) > allowed)
    throw_error(errc::contour,
                "inverse_laplace: node-halving check failed, contour result untrusted");
  return full;
}

// ---------------------------------------------------------------------------
// Symbolic derivatives of the two Fourier integrands.
//
// f(w) = (1 - e^{-w^4}) / w^2 lives in the ring of expressions
// P(w) + e^{-w^4} Q(w) with Laurent polynomials P, Q, which is closed under
// d/dw. h(w) = 2 dawson(w^2) / w^2 lives in P(w) + dawson(w^2) Q(w), closed
// because dawson'(y) = 1 - 2 y dawson(y). Near w = 0 both closed forms
// cancel catastrophically, so truncated Maclaurin series take over there.

namespace {

using lpoly = std::map<int, double>; // exponent -> coefficient

lpoly lpoly_derivative(const lpoly& p) {
  lpoly out;
  for (const auto& [e, a] : p)
    if (e != 0) out[e - 1] += e * a;
  return out;
}

double lpoly_eval(const lpoly& p, double w) {
  double s = 0;
  for (const auto& [e, a] : p) s += a * std::pow(w, e);
  return s;
}

struct exp_expr {
  lpoly plain, damped; // plain(w) + e^{-w^4} damped(w)
};

exp_expr exp_expr_derivative(const exp_expr& f) {
  exp_expr g;
  g.plain = lpoly_derivative(f.plain);
  g.damped = lpoly_derivative(f.damped);
  for (const auto& [e, a] : f.damped) g.damped[e + 3] -= 4.0 * a;
  return g;
}

double exp_expr_eval(const exp_expr& f, double w) {
  return lpoly_eval(f.plain, w) + std::exp(-std::pow(w, 4)) * lpoly_eval(f.damped, w);
}

struct daw_expr {
  lpoly plain, daw; // plain(w) + dawson(w^2) daw(w)
};

daw_expr daw_expr_derivative(const daw_expr& f) {
  daw_expr g;
  g.plain = lpoly_derivative(f.plain);
  g.daw = lpoly_derivative(f.daw);
  for (const auto& [e, a] : f.daw) {
    g.plain[e + 1] += 2.0 * a;
    g.daw[e + 3] -= 4.0 * a;
  }
  return g;
}

double daw_expr_eval(const daw_expr& f, double w) {
  return lpoly_eval(f.plain, w) + dawson(w * w) * lpoly_eval(f.daw, w);
}

constexpr int max_k_y1 = 6;
constexpr int max_k_y2 = 7;
constexpr double series_switch_w = 0.75;

const std::vector<exp_expr>& f_derivative_table() {
  static const std::vector<exp_expr> table = [] {
    std::vector<exp_expr> t;
    exp_expr f;
    f.plain[-2] = 1.0;
    f.damped[-2] = -1.0;
    t.push_back(f);
    for (int k = 1; k <= max_k_y1; ++k) t.push_back(exp_expr_derivative(t.back()));
    return t;
  }();
  return table;
}

const std::vector<daw_expr>& h_derivative_table() {
  static const std::vector<daw_expr> table = [] {
    std::vector<daw_expr> t;
    daw_expr h;
    h.daw[-2] = 2.0;
    t.push_back(h);
    for (int k = 1; k <= max_k_y2; ++k) t.push_back(daw_expr_derivative(t.back()));
    return t;
  }();
  return table;
}

// Maclaurin branches:
//   f(w) = sum_{j>=1} (-1)^{j+1} w^{4j-2} / j!
//   h(w) = sum_{k>=0} (-1)^k 2^{k+1} / (2k+1)!! w^{4k}
// About twenty terms reach machine precision for w <= 0.75.
const std::vector<lpoly>& f_series_table() {
  static const std::vector<lpoly> table = [] {
    lpoly base;
    double fact = 1.0;
    for (int j = 1; j <= 24; ++j) {
      fact *= j;
      base[4 * j - 2] = (j % 2 == 1 ? 1.0 : -1.0) / fact;
    }
    std::vector<lpoly> t{base};
    for (int k = 1; k <= max_k_y1; ++k) t.push_back(lpoly_derivative(t.back()));
    return t;
  }();
  return table;
}

const std::vector<lpoly>& h_series_table() {
  static const std::vector<lpoly> table = [] {
    lpoly base;
    double coeff = 2.0; // 2^{k+1} / (2k+1)!! at k = 0
    for (int k = 0; k <= 22; ++k) {
      base[4 * k] = (k % 2 == 0 ? coeff : -coeff);
      coeff *= 2.0 / (2 * k + 3);
    }
    std::vector<lpoly> t{base};
    for (int k = 1; k <= max_k_y2; ++k) t.push_back(lpoly_derivative(t.back()));
    return t;
  }();
  return table;
}

// The Dawson ring expression for h^{(j)} is exact but its terms grow like
// w^{3j-2} while the true derivative decays like w^{-4-j}: beyond w ~ 2.5 the
// cancellation wipes out every significant digit. There the termwise
// derivative of the asymptotic expansion h ~ sum_k c_k w^{-4-4k},
// c_{k+1} = c_k (2k+1)/2, takes over; its terms are single-signed, and at
// w >= 2.5 optimal truncation bottoms out below 1e-10 even for j = 7.
constexpr double h_asymptotic_switch_w = 2.5;

double h_asymptotic_derivative(int j, double w) {
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  const double w4inv = 1.0 / (w * w * w * w);
  double wpow = std::pow(w, -4 - j);
  double c = 1.0;
  double sum = 0.0, prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 60; ++k) {
    double p = 1.0; // (4+4k)(5+4k)...(4+4k+j-1)
    for (int i = 0; i < j; ++i) p *= 4 + 4 * k + i;
    const double term = c * p * wpow;
    if (std::abs(term) > prev) break; // divergent tail reached
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    prev = std::abs(term);
    c *= (2 * k + 1) / 2.0;
    wpow *= w4inv;
  }
  return sign * sum;
}

} // namespace

double ibp_integrand_y1(int k, double w) {
  if (k < 0 || k > max_k_y1)
    throw_error(errc::domain, "ibp_integrand_y1: derivative order out of range");
  if (w < 0)
    throw_error(errc::invalid_argument, "ibp_integrand_y1: w must be >= 0");
  if (w < series_switch_w) return lpoly_eval(f_series_table()[k], w);
  return exp_expr_eval(f_derivative_table()[k], w);
}

double ibp_integrand_y2(int k, double w) {
  if (k < 0 || k > max_k_y2)
    throw_error(errc::domain, "ibp_integrand_y2: derivative order out of range");
  if (w < 0)
    throw_error(errc::invalid_argument, "ibp_integrand_y2: w must be >= 0");
  if (w < series_switch_w) return lpoly_eval(h_series_table()[k], w);
  if (k > 0 && w >= h_asymptotic_switch_w) return h_asymptotic_derivative(k, w);
  return daw_expr_eval(h_derivative_table()[k], w);
}

// ---------------------------------------------------------------------------
// Oscillatory quadrature: panel at kernel zeros, van Wijngaarden / Euler
// transformation of the alternating panel sums.

namespace {

class euler_accelerator {
 public:
  void add(double term) {
    if (w_.empty()) {
      w_.push_back(term);
      nterm_ = 1;
      increment_ = 0.5 * term;
      sum_ = increment_;
      return;
    }
    double tmp = w_[0];
    w_[0] = term;
    for (int j = 1; j < nterm_; ++j) {
      double dum = w_[j];
      w_[j] = 0.5 * (w_[j - 1] + tmp);
      tmp = dum;
    }
    const double next = 0.5 * (w_[nterm_ - 1] + tmp);
    if (std::abs(next) <= std::abs(w_[nterm_ - 1])) {
      w_.push_back(next);
      ++nterm_;
      increment_ = 0.5 * next;
    } else {
      increment_ = next;
    }
    sum_ += increment_;
  }

  double value() const { return sum_; }
  double last_increment() const { return increment_; }

 private:
  std::vector<double> w_;
  double sum_ = 0;
  double increment_ = 0;
  int nterm_ = 0;
};

// int_W^inf w^{-n} {cos,sin}(u w) dw by downward recursion to the sine
// integral; Si itself via Maclaurin, fine for the small u W used here.
double sine_integral_small(double z) {
  double term = z, sum = z;
  for (int k = 1; k < 40; ++k) {
    term *= -z * z / ((2 * k) * (2 * k + 1));
    sum += term / (2 * k + 1);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double power_tail_cos(int n, double u, double W);

double power_tail_sin(int n, double u, double W) {
  if (n == 1) return pi / 2 - sine_integral_small(u * W);
  return std::sin(u * W) / ((n - 1) * std::pow(W, n - 1)) +
         u / (n - 1) * power_tail_cos(n - 1, u, W);
}

double power_tail_cos(int n, double u, double W) {
  if (n < 2)
    throw_error(errc::invalid_argument, "power_tail_cos: divergent tail order");
  return std::cos(u * W) / ((n - 1) * std::pow(W, n - 1)) -
         u / (n - 1) * power_tail_sin(n - 1, u, W);
}

struct tail_term {
  int power;
  double coeff;
};

// Nearly non-oscillatory regime: straight adaptive quadrature on [0, W] plus
// analytic power-law tails of the integrand beyond W. tail_remainder is the
// integral of the first term omitted from the tail expansion.
template <class F>
quad_result integrate_direct(const F& f, double u, double W,
                             const std::vector<tail_term>& tails, double tail_remainder) {
  quad_result out;
  auto g = [&](double w) { return f(w) * std::cos(u * w); };
  const double cuts[] = {0.0, 1.0, 4.0, W};
  for (int s = 0; s < 3; ++s) {
    double err = 0;
    out.value += gk15::integrate(g, cuts[s], cuts[s + 1], 10, 1e-13, &err);
    out.error_estimate += err;
    ++out.panels_used;
  }
  for (const auto& tt : tails) out.value += tt.coeff * power_tail_cos(tt.power, u, W);
  out.error_estimate += tail_remainder;
  return out;
}

template <class F>
quad_result integrate_oscillatory(const F& f, double u, bool sine_kernel,
                                  const quadrature_spec& spec) {
  quad_result out;
  auto g = [&](double w) { return f(w) * (sine_kernel ? std::sin(u * w) : std::cos(u * w)); };
  const double period = pi / u;
  const double first_zero = sine_kernel ? period : 0.5 * period;

  // Panels span at most one oscillation, so shallow adaptive depth is enough;
  // deeper subdivision only churns on roundoff noise in the integrand.
  double err = 0;
  double head = gk15::integrate(g, 0.0, first_zero, 5, 1e-12, &err);
  out.error_estimate += err;
  ++out.panels_used;

  euler_accelerator acc;
  double prev_increment = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int n = 1; n <= spec.max_panels; ++n) {
    const double a = first_zero + (n - 1) * period;
    const double b = a + period;
    const double panel = gk15::integrate(g, a, b, 5, 1e-12, &err);
    out.error_estimate += err;
    ++out.panels_used;
    acc.add(panel);
    const double inc = std::abs(acc.last_increment());
    const double target =
        0.25 * (spec.abs_tol + spec.rel_tol * std::abs(head + acc.value()));
    if (n >= 6 && inc < target && prev_increment < target) {
      out.error_estimate += inc + prev_increment;
      converged = true;
      break;
    }
    prev_increment = inc;
  }
  if (!converged)
    throw_error(errc::quadrature,
                "oscillatory quadrature: panel budget exhausted before tolerance");
  out.value = head + acc.value();
  return out;
}

double f_integrand(double w) {
  if (w == 0) return 0.0;
  return -std::expm1(-std::pow(w, 4)) / (w * w);
}

double h_integrand(double w) {
  if (w == 0) return 2.0;
  return 2.0 * dawson(w * w) / (w * w);
}

constexpr double direct_u_max = 0.25;
constexpr double direct_W = 12.0;

void check_fourier_args(double t, double x, double B) {
  if (t <= 0 || B <= 0)
    throw_error(errc::invalid_argument, "fourier solution: need t > 0 and B > 0");
  if (x < 0)
    throw_error(errc::invalid_argument, "fourier solution: defined for x >= 0");
}

int select_ibp_order(double u, const quadrature_spec& spec, int hard_max) {
  int k = spec.ibp_order >= 0 ? spec.ibp_order : (u > 8.0 ? 2 : 0);
  if (k > hard_max)
    throw_error(errc::invalid_argument, "fourier solution: ibp_order too large");
  return k;
}

} // namespace

quad_result fourier_y1(double t, double x, double B, const quadrature_spec& spec) {
  check_fourier_args(t, x, B);
  const double s = quarter_root(B * t);
  const double u = x / s;
  const int k = select_ibp_order(u, spec, max_k_y1 / 2);

  quad_result raw;
  if (k == 0) {
    if (u < direct_u_max)
      // beyond W the damped part is e^{-W^4}-negligible, the 1/w^2 tail is exact
      raw = integrate_direct(f_integrand, u, direct_W, {{2, 1.0}}, 1e-16);
    else
      raw = integrate_oscillatory(f_integrand, u, false, spec);
  } else {
    // k partial integrations in pairs keep the cosine kernel:
    // I = (-1)^k u^{-2k} int f^{(2k)} cos(uw) dw
    auto g = [k](double w) { return ibp_integrand_y1(2 * k, w); };
    raw = integrate_oscillatory(g, u, false, spec);
    const double factor = (k % 2 == 0 ? 1.0 : -1.0) / std::pow(u, 2 * k);
    raw.value *= factor;
    raw.error_estimate *= std::abs(factor);
  }
  const double scale = -2.0 * s / pi;
  return {scale * raw.value, std::abs(scale) * raw.error_estimate, raw.panels_used};
}

quad_result fourier_y2(double t, double x, double B, const quadrature_spec& spec) {
  check_fourier_args(t, x, B);
  const double s = quarter_root(B * t);
  const double u = x / s;
  const int k = select_ibp_order(u, spec, (max_k_y2 - 1) / 2);

  quad_result raw;
  if (k == 0) {
    if (u < direct_u_max) {
      // next omitted asymptotic term of 2 dawson(w^2)/w^2 is 105/(8 w^20)
      const double rem = 105.0 / (8.0 * 19.0 * std::pow(direct_W, 19));
      raw = integrate_direct(h_integrand, u, direct_W,
                             {{4, 1.0}, {8, 0.5}, {12, 0.75}, {16, 1.875}}, rem);
    } else {
      raw = integrate_oscillatory(h_integrand, u, false, spec);
    }
  } else {
    // the odd 2k+1-th pass flips the kernel to sine:
    // I = (-1)^{k+1} u^{-(2k+1)} int h^{(2k+1)} sin(uw) dw
    auto g = [k](double w) { return ibp_integrand_y2(2 * k + 1, w); };
    raw = integrate_oscillatory(g, u, true, spec);
    const double factor = (k % 2 == 1 ? 1.0 : -1.0) / std::pow(u, 2 * k + 1);
    raw.value *= factor;
    raw.error_estimate *= std::abs(factor);
  }
  const double scale = 2.0 * s / pi;
  return {scale * raw.value, std::abs(scale) * raw.error_estimate, raw.panels_used};
}

double fourier_y2_xx_at_root(double t, double B, const quadrature_spec&) {
  if (t <= 0 || B <= 0)
    throw_error(errc::invalid_argument, "fourier solution: need t > 0 and B > 0");
  // d^2/dx^2 brings down -w^2, cancelling the w^{-2}: J = int 2 dawson(w^2) dw
  auto g = [](double w) { return 2.0 * dawson(w * w); };
  double value = 0, err = 0;
  const double cuts[] = {0.0, 1.0, 4.0, direct_W};
  for (int s = 0; s < 3; ++s)
    value += gk15::integrate(g, cuts[s], cuts[s + 1], 10, 1e-13, &err);
  // dawson(w^2) ~ 1/(2w^2) + 1/(4w^6) + 3/(8w^10) + 15/(16 w^14)
  const double W = direct_W;
  value += 1.0 / W + 1.0 / (10.0 * std::pow(W, 5)) + 1.0 / (12.0 * std::pow(W, 9)) +
           15.0 / (104.0 * std::pow(W, 13));
  const double s4 = quarter_root(B * t);
  return -2.0 / (pi * s4) * value;
}

double y_decaying_large_u(int i, double t, double x, double B, const quadrature_spec& spec) {
  if (i != 1 && i != 2)
    throw_error(errc::invalid_argument, "y_decaying_large_u: only the decaying pair (1, 2)");
  const quad_result a = fourier_y1(t, x, B, spec);
  const quad_result b = fourier_y2(t, x, B, spec);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double inv_sqrt2pi = 1.0 / std::sqrt(2.0 * pi);
  if (i == 1) return inv_sqrt2 * a.value + inv_sqrt2pi * b.value;
  return -inv_sqrt2 * a.value + inv_sqrt2pi * b.value;
}

} // namespace groovekit
