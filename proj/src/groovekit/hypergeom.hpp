#pragma once

#include <vector>

namespace groovekit {

struct rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct series_policy {
  double rel_tolerance = 1e-14;
  double abs_floor = 1e-300;
  int max_terms = 10000;
  int consecutive_small_terms = 3;
};

// Extended result of a series summation: value plus convergence diagnostics.
struct series_value {
  double value = 0.0;
  double truncation_bound = 0.0; // estimate of the dropped tail magnitude
  double condition = 1.0;        // sum|term| / |sum term|, cancellation indicator
  int terms_used = 0;
};

// Generalized hypergeometric series parameters, kept as exact integer ratios.
struct hyper_series {
  std::vector<rational> a; // numerator parameters
  std::vector<rational> b; // denominator parameters
};

// Rising factorial lambda (lambda+1) ... (lambda+k-1); direct product, 1 for k = 0.
double pochhammer(double lambda, int k);

// pFq(a; b; nu) by term-recursive summation with the given stopping policy.
// Requires p <= q (entire series) and no denominator parameter equal to a
// nonpositive integer. Throws errc::non_convergence if max_terms is exhausted.
series_value pfq(const hyper_series& spec, double nu, const series_policy& policy = {});

// Gamma(q) for rational q > 0. The quarter- and half-integer arguments that the
// closed-form identities depend on are served from frozen high-precision
// constants; other positive arguments fall back to the standard approximation.
double gamma_rational(const rational& q);

// Dawson's integral F(x) = exp(-x^2) * int_0^x exp(t^2) dt.
double dawson(double x);

// exp(-w^4) * erfi(w^2), evaluated overflow-free as (2/sqrt(pi)) * dawson(w^2).
double erfi_scaled(double w);

} // namespace groovekit
