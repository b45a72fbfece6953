#include "groovekit/hypergeom.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "groovekit/errors.hpp"

namespace groovekit {

namespace {

constexpr double sqrt_pi = 1.7724538509055160273;

// Gamma at quarter steps, frozen from a 60-digit reference computation.
constexpr double gamma_quarter[7] = {
    3.6256099082219083119,  // 1/4
    1.7724538509055160273,  // 2/4
    1.2254167024651776451,  // 3/4
    1.0,                    // 4/4
    0.90640247705547707798, // 5/4
    0.88622692545275801365, // 6/4
    0.91906252684888323385, // 7/4
};

} // namespace

double pochhammer(double lambda, int k) {
  if (k < 0) throw_error(errc::invalid_argument, "pochhammer: negative order");
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= lambda + j;
  return p;
}

series_value pfq(const hyper_series& spec, double nu, const series_policy& policy) {
  if (spec.a.size() > spec.b.size())
    throw_error(errc::invalid_argument, "pfq: more numerator than denominator parameters");
  if (policy.rel_tolerance <= 0 || policy.max_terms < 8)
    throw_error(errc::invalid_argument, "pfq: invalid policy");
  for (const auto& b : spec.b) {
    if (b.den == 0) throw_error(errc::invalid_argument, "pfq: zero denominator in parameter");
    if (b.num % b.den == 0 && b.num / b.den <= 0 && b.num <= 0)
      throw_error(errc::invalid_argument, "pfq: denominator parameter is a nonpositive integer");
  }

  series_value out;
  double sum = 1.0;     // k = 0 term
  double sum_abs = 1.0;
  double term = 1.0;
  double prev_abs = 1.0;
  int small_run = 0;
  for (int k = 0; k < policy.max_terms; ++k) {
    double ratio = nu / (k + 1);
    for (const auto& a : spec.a) ratio *= a.value() + k;
    for (const auto& b : spec.b) ratio /= b.value() + k;
    prev_abs = std::fabs(term);
    term *= ratio;
    sum += term;
    sum_abs += std::fabs(term);
    out.terms_used = k + 2;
    if (std::fabs(term) < policy.rel_tolerance * std::fabs(sum) + policy.abs_floor) {
      if (++small_run >= policy.consecutive_small_terms) {
        out.value = sum;
        out.condition = sum_abs / std::max(std::fabs(sum), policy.abs_floor);
        double r = prev_abs > 0 ? std::fabs(term) / prev_abs : 0.0;
        out.truncation_bound =
            r < 1.0 ? std::fabs(term) * r / (1.0 - r) : std::fabs(term);
        return out;
      }
    } else {
      small_run = 0;
    }
  }
  throw_error(errc::non_convergence, "pfq: series did not converge within max_terms");
}

double gamma_rational(const rational& q) {
  if (q.den == 0) throw_error(errc::invalid_argument, "gamma_rational: zero denominator");
  long long num = q.num, den = q.den;
  if (den < 0) { num = -num; den = -den; }
  if (num <= 0) throw_error(errc::domain, "gamma_rational: argument must be positive");
  long long g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den == 1 || den == 2 || den == 4) {
    long long quarters = num * (4 / den);
    if (quarters >= 1 && quarters <= 7) return gamma_quarter[quarters - 1];
  }
  return std::tgamma(static_cast<double>(num) / static_cast<double>(den));
}

namespace {

double dawson_maclaurin(double x) {
  // F(x) = sum_k (-1)^k 2^k / (2k+1)!! x^{2k+1}
  double term = x;
  double sum = x;
  double x2 = x * x;
  for (int k = 0; k < 40; ++k) {
    term *= -2.0 * x2 / (2 * k + 3);
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return sum;
}

double dawson_sampled(double x) {
  // Exponentially convergent sampling series over the odd lattice nh:
  //   F(x) = (1/sqrt(pi)) sum_{n odd} exp(-(x-nh)^2)/n
  // with error ~ exp(-pi^2/(4h^2)); h = 0.25 keeps that below 1e-17.
  constexpr double h = 0.25;
  constexpr double span = 6.8; // exp(-span^2) ~ 8e-21
  int n_lo = std::max(1, static_cast<int>((x - span) / h));
  if (n_lo % 2 == 0) ++n_lo;
  int n_hi = static_cast<int>((x + span) / h) + 1;
  double s = 0.0;
  for (int n = n_lo; n <= n_hi; n += 2) {
    double dm = x - n * h;
    double dp = x + n * h;
    double t = std::exp(-dm * dm);
    if (dp < span) t -= std::exp(-dp * dp);
    s += t / n;
  }
  return s / sqrt_pi;
}

double dawson_asymptotic(double x) {
  // F(x) = 1/(2x) * sum_k (2k-1)!!/(2x^2)^k
  double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 30; ++k) {
    term *= (2 * k - 1) * inv2x2;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum / (2.0 * x);
}

} // namespace

double dawson(double x) {
  double ax = std::fabs(x);
  double v;
  if (ax < 0.5)
    v = dawson_maclaurin(ax);
  else if (ax <= 10.0)
    v = dawson_sampled(ax);
  else
    v = dawson_asymptotic(ax);
  return x < 0 ? -v : v;
}

double erfi_scaled(double w) { return (2.0 / sqrt_pi) * dawson(w * w); }

} // namespace groovekit
