#include "groovekit/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include <json.hpp>

#include "groovekit/basis.hpp"
#include "groovekit/errors.hpp"
#include "groovekit/hypergeom.hpp"
#include "groovekit/parallel.hpp"
#include "groovekit/solutions.hpp"
#include "groovekit/transforms.hpp"

namespace groovekit {

namespace {

constexpr double pi = 3.14159265358979323846;

verify_check bound_check(std::string name, std::string detail, double measured, double tolerance) {
  verify_check c;
  c.name = std::move(name);
  c.detail = std::move(detail);
  c.measured = measured;
  c.tolerance = tolerance;
  c.passed = std::isfinite(measured) && measured < tolerance;
  return c;
}

// --- identities -----------------------------------------------------------

verify_check check_half_ddt() {
  const auto& D = d_matrix();
  double worst = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double dot = 0;
      for (int k = 0; k < 4; ++k) dot += D[i][k] * D[j][k];
      worst = std::max(worst, std::abs(0.5 * dot - (i == j ? 1.0 : 0.0)));
    }
  return bound_check("half-ddt-identity", "max |(1/2) D D^T - I|", worst, 1e-15);
}

verify_check check_kronecker_root() {
  double worst = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const double want = (i == j) ? std::tgamma(double(j)) : 0.0;
      worst = std::max(worst, std::abs(z_derivative(i, j - 1, 0.0) - want));
    }
  return bound_check("kronecker-root-derivatives",
                     "max |z_i^{(j-1)}(0) - delta_ij (j-1)!| over i,j in 1..4", worst, 1e-12);
}

verify_check check_ode_residual() {
  double worst = 0;
  for (int i = 1; i <= 4; ++i) {
    similarity_coeffs C;
    C.c[i - 1] = 1.0;
    for (int k = 0; k < 33; ++k) {
      const double u = -8.0 + 16.0 * k / 32.0;
      worst = std::max(worst, std::abs(ode_residual(C, u)));
    }
  }
  return bound_check("ode-residual",
                     "max |Z'''' - (u/4) Z' + (1/4) Z| for z_1..z_4, 33 points on [-8, 8]", worst,
                     1e-9);
}

verify_check check_basis_parity() {
  double worst = 0;
  for (int i = 1; i <= 4; ++i) {
    const double sign = (i % 2 == 1) ? 1.0 : -1.0; // z1, z3 even; z2, z4 odd
    for (double u : {0.3, 1.7, 4.2, 7.9}) worst = std::max(worst, std::abs(z(i, -u) - sign * z(i, u)));
  }
  return bound_check("basis-parity", "max |z_i(-u) - (-1)^{i-1} z_i(u)|", worst, 1e-15);
}

verify_check check_reflections() {
  double worst = 0;
  for (const auto& [t, B] : {std::pair{1.0, 1.0}, std::pair{3.0, 0.6}}) {
    const double scale = std::pow(B * t, 0.25);
    for (int k = 0; k <= 24; ++k) {
      const double u = -6.0 + 12.0 * k / 24.0;
      const double x = u * scale;
      worst = std::max(worst, std::abs(y(3, t, x, B) + y(1, t, -x, B)) / scale);
      worst = std::max(worst, std::abs(y(4, t, x, B) - y(2, t, -x, B)) / scale);
    }
  }
  return bound_check("mirror-pair-identities",
                     "max |y1(t,-x) + y3(t,x)|, |y2(t,-x) - y4(t,x)| over u in [-6, 6], "
                     "normalized by (Bt)^{1/4}",
                     worst, 1e-11);
}

similarity_coeffs mullins_coeffs(double m) {
  decay_weights w;
  w.c = {m / (2 * std::sqrt(2.0)), -m / (2 * std::sqrt(2.0)), 0.0, 0.0};
  return decay_weights_to_z(w);
}

verify_check check_depth_law() {
  double worst = 0;
  for (double m : {0.1, 0.3})
    for (double B : {0.5, 2.0})
      for (double t : {1.0, 16.0}) {
        const physical_params p{B, m};
        const double via_coeffs = boundary_derivatives(mullins_coeffs(m), t, p)[0];
        const double closed = groove_depth(p, t);
        worst = std::max(worst, std::abs(via_coeffs - closed) / std::abs(closed));
      }
  return bound_check("groove-depth-law",
                     "root value of the mullins profile via coefficient extraction vs "
                     "-m (Bt)^{1/4} / (2 sqrt(2) Gamma(5/4)), relative",
                     worst, 1e-12);
}

verify_check check_depth_scaling() {
  double worst = 0;
  for (double m : {0.1, 0.3})
    for (double B : {0.5, 2.0})
      for (double t : {1.0, 16.0}) {
        const physical_params p{B, m};
        worst = std::max(worst, std::abs(groove_depth(p, 16 * t) - 2.0 * groove_depth(p, t)));
      }
  return bound_check("depth-sixteenfold-time", "max |depth(16t) - 2 depth(t)|", worst, 1e-13);
}

verify_check check_named_root_conditions() {
  const double m = 0.2;
  double worst = 0;
  for (double t : {1.0, 4.0}) {
    const physical_params p{1.0, m};
    const auto mull = boundary_derivatives(mullins_coeffs(m), t, p);
    worst = std::max(worst, std::abs(mull[1] - m / 2));
    worst = std::max(worst, std::abs(mull[3]));

    decay_weights wa;
    wa.c = {0.0, -m / std::sqrt(2.0), 0.0, 0.0};
    const auto amr = boundary_derivatives(decay_weights_to_z(wa), t, p);
    worst = std::max(worst, std::abs(amr[1] - m / 2));
    worst = std::max(worst, std::abs(amr[2]));
  }
  return bound_check("named-root-conditions",
                     "mullins: |y_x - m/2|, |y_xxx|; amram: |y_x - m/2|, |y_xx| at the root",
                     worst, 1e-10);
}

std::vector<double> shallow_groove_series(int n_max) {
  // power series of (y1 - y2)/sqrt(2) about u = 0 via the z expansion
  decay_weights w;
  w.c = {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0, 0.0};
  const similarity_coeffs C = decay_weights_to_z(w);
  std::vector<double> a(std::size_t(n_max) + 1, 0.0);
  for (int i = 1; i <= 4; ++i) {
    const std::vector<double> zi = z_power_series(i, n_max);
    for (int n = 0; n <= n_max; ++n) a[std::size_t(n)] += C.c[i - 1] * zi[std::size_t(n)];
  }
  return a;
}

verify_check check_shallow_series_head() {
  const std::vector<double> a = shallow_groove_series(4);
  const double want[4] = {-(2.0 / pi) * std::tgamma(0.75), 1.0, -std::tgamma(0.25) / (4.0 * pi),
                          0.0};
  double worst = 0;
  for (int n = 0; n < 4; ++n) worst = std::max(worst, std::abs(a[std::size_t(n)] - want[n]));
  return bound_check("shallow-groove-series-head",
                     "leading coefficients of (y1 - y2)/sqrt(2): -(2/pi)Gamma(3/4), 1, "
                     "-Gamma(1/4)/(4 pi), 0",
                     worst, 1e-12);
}

verify_check check_series_recursion() {
  const std::vector<double> a = shallow_groove_series(12);
  double worst = 0;
  for (int n = 0; n + 4 <= 12; ++n) {
    const double want =
        (n - 1) * a[std::size_t(n)] / (4.0 * (n + 1) * (n + 2) * (n + 3) * (n + 4));
    worst = std::max(worst, std::abs(a[std::size_t(n) + 4] - want));
  }
  return bound_check("series-recursion",
                     "a_{n+4} = (n-1) a_n / [4 (n+1)(n+2)(n+3)(n+4)] for coefficients 4..12",
                     worst, 1e-13);
}

verify_check check_boundary_roundtrip() {
  double worst = 0;
  const std::array<std::array<double, 4>, 3> cases = {
      {{0.3, -0.5, 0.11, 0.07}, {1.0, 0.0, 0.0, 0.0}, {-0.2, 0.9, -1.3, 0.4}}};
  for (const auto& derivs : cases)
    for (double t : {0.5, 3.0})
      for (double B : {1.0, 1.7}) {
        const physical_params p{B, 0.0};
        const auto back = boundary_derivatives(coeffs_from_boundary(derivs, t, p), t, p);
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(back[i] - derivs[i]));
      }
  return bound_check("boundary-map-roundtrip",
                     "coeffs_from_boundary then boundary_derivatives returns the input", worst,
                     1e-13);
}

// --- routes ---------------------------------------------------------------

verify_check check_series_vs_laplace() {
  struct point {
    int i;
    double t, x;
  };
  const point pts[] = {
      {1, 0.5, 0.4}, {1, 1.0, 0.3}, {1, 1.0, 1.1}, {1, 2.0, 2.2}, {1, 4.0, 3.0},
      {2, 0.5, 0.2}, {2, 1.0, 0.7}, {2, 1.0, 1.9}, {2, 2.0, 2.8}, {2, 3.0, 1.3},
      {3, 0.5, -0.4}, {3, 1.0, -0.3}, {3, 1.0, -1.1}, {3, 2.0, -2.2}, {3, 4.0, -3.0},
      {4, 0.5, -0.2}, {4, 1.0, -0.7}, {4, 1.0, -1.9}, {4, 2.0, -2.8}, {4, 3.0, -1.3},
  };
  const double B = 1.0;
  double worst = 0;
  for (const auto& p : pts) {
    const double series = y(p.i, p.t, p.x, B, eval_route::series);
    const double contour = inverse_laplace(p.i, p.t, p.x, B);
    worst = std::max(worst, std::abs(series - contour) / std::abs(series));
  }
  return bound_check("series-vs-inverse-laplace",
                     "relative gap between the series route and the Talbot contour at 20 (i, t, x) "
                     "points",
                     worst, 1e-7);
}

verify_check check_laplace_known_transform() {
  // at x = 0 the second transform is B^{1/4} p^{-5/4}, inverting to
  // B^{1/4} t^{1/4} / Gamma(5/4)
  double worst = 0;
  for (double t : {0.5, 1.0, 2.0, 5.0})
    for (double B : {1.0, 2.0}) {
      const double got = inverse_laplace(2, t, 0.0, B);
      const double want = std::pow(B, 0.25) * std::pow(t, 0.25) / std::tgamma(1.25);
      worst = std::max(worst, std::abs(got - want) / want);
    }
  return bound_check("inverse-laplace-closed-form",
                     "numerical inversion of B^{1/4} p^{-5/4} vs B^{1/4} t^{1/4}/Gamma(5/4), "
                     "relative",
                     worst, 2e-8);
}

verify_check check_talbot_node_robustness() {
  talbot_options coarse;
  coarse.nodes = 32;
  const double full = inverse_laplace(1, 1.0, 0.8, 1.0);
  const double half = inverse_laplace(1, 1.0, 0.8, 1.0, coarse);
  return bound_check("talbot-node-robustness", "|value at 48 nodes - value at 32 nodes|",
                     std::abs(full - half), 1e-7);
}

verify_check check_fourier_route(int which) {
  const double t = 1.0, B = 1.0;
  const double scale = std::pow(B * t, 0.25);
  double worst = 0;
  for (int k = 0; k <= 11; ++k) {
    const double u = 0.5 + 5.5 * k / 11.0;
    const double x = u * scale;
    const double y1v = y(1, t, x, B, eval_route::series);
    const double y2v = y(2, t, x, B, eval_route::series);
    double integral = 0, series = 0;
    if (which == 1) {
      integral = fourier_y1(t, x, B).value;
      series = (y1v - y2v) / std::sqrt(2.0);
    } else {
      integral = fourier_y2(t, x, B).value;
      series = std::sqrt(pi) * (y1v + y2v) / std::sqrt(2.0);
    }
    worst = std::max(worst, std::abs(integral - series) / scale);
  }
  if (which == 1)
    return bound_check("fourier-decomposition-odd",
                       "first cosine integral vs (y1 - y2)/sqrt(2) on u in [0.5, 6], scaled by "
                       "(Bt)^{1/4}",
                       worst, 1e-7);
  return bound_check("fourier-decomposition-even",
                     "second cosine integral vs sqrt(pi)(y1 + y2)/sqrt(2) on u in [0.5, 6], "
                     "scaled by (Bt)^{1/4}",
                     worst, 1e-7);
}

verify_check check_root_integral_value() {
  const double got = fourier_y2(1.0, 0.0, 1.0).value;
  const double want = (2.0 / std::sqrt(pi)) * std::tgamma(0.75);
  return bound_check("root-integral-value", "second cosine integral at u = 0 vs (2/sqrt(pi)) "
                                            "Gamma(3/4)",
                     std::abs(got - want), 1e-8);
}

verify_check check_root_integral_curvature() {
  const double got = fourier_y2_xx_at_root(1.0, 1.0);
  const double want = -(2.0 / std::sqrt(pi)) * std::tgamma(1.25);
  return bound_check("root-integral-curvature",
                     "d^2/dx^2 of the second cosine integral at u = 0 vs -(2/sqrt(pi)) Gamma(5/4)",
                     std::abs(got - want), 1e-8);
}

verify_check check_scaled_erfi_small_w() {
  const double w = 1e-3;
  const double got = erfi_scaled(w) / (w * w);
  return bound_check("scaled-erfi-small-w", "exp(-w^4) erfi(w^2)/w^2 -> 2/sqrt(pi) as w -> 0",
                     std::abs(got - 2.0 / std::sqrt(pi)), 1e-10);
}

verify_check check_scaled_erfi_tail() {
  const double w = 6.0;
  const double got = erfi_scaled(w) * w * w;
  return bound_check("scaled-erfi-tail", "w^2 exp(-w^4) erfi(w^2) -> 1/sqrt(pi) as w -> inf",
                     std::abs(got - 1.0 / std::sqrt(pi)), 5e-4);
}

// --- asymptotics ----------------------------------------------------------

verify_check check_far_field_decay() {
  const double a = std::abs(y(1, 1.0, 25.0, 1.0, eval_route::quadrature));
  const double b = std::abs(y(2, 1.0, 25.0, 1.0, eval_route::quadrature));
  return bound_check("far-field-decay", "|y1(1, 25)| and |y2(1, 25)| via the integral route",
                     std::max(a, b), 1e-8);
}

verify_check check_far_field_growth() {
  const double y3 = y(3, 1.0, 25.0, 1.0, eval_route::series);
  const double y4 = y(4, 1.0, 25.0, 1.0, eval_route::series);
  verify_check c;
  c.name = "far-field-growth";
  c.detail = "y3(1, 25) and -y4(1, 25) via series must exceed the tolerance";
  c.measured = std::min(y3, -y4);
  c.tolerance = 1e3;
  c.passed = std::isfinite(c.measured) && c.measured > c.tolerance;
  return c;
}

verify_check check_initial_planarity() {
  auto pair_size = [](double t) {
    return std::abs(y(1, t, 2.0, 1.0)) + std::abs(y(2, t, 2.0, 1.0));
  };
  const double s1 = pair_size(1e-1), s2 = pair_size(1e-3), s3 = pair_size(1e-5);
  return bound_check("initial-planarity",
                     "|y1| + |y2| at x = 2 must shrink as t drops through 1e-1, 1e-3, 1e-5; "
                     "measured is the worst successive ratio",
                     std::max(s2 / s1, s3 / s2), 1.0);
}

verify_check check_decay_classification() {
  const auto good = classify_asymptotics(mullins_coeffs(0.2), side_kind::plus);
  decay_weights grower;
  grower.c = {0.0, 0.3, 0.4, 0.0};
  const auto bad = classify_asymptotics(decay_weights_to_z(grower), side_kind::plus);
  bool growing_flagged = !bad.decaying;
  bool third_listed = false;
  for (const auto& [idx, wgt] : bad.offending) third_listed = third_listed || idx == 3;
  verify_check c;
  c.name = "decay-classification";
  c.detail = "mullins weights classify as decaying; a y3 admixture is flagged with its index";
  c.measured = (good.decaying && good.offending.empty() && growing_flagged && third_listed) ? 0 : 1;
  c.tolerance = 0.5;
  c.passed = c.measured < c.tolerance;
  return c;
}

// --------------------------------------------------------------------------

using check_fn = std::function<verify_check()>;

std::vector<check_fn> suite_checks(const std::string& suite) {
  const std::vector<check_fn> identities = {
      check_half_ddt,        check_kronecker_root,     check_ode_residual,
      check_basis_parity,    check_reflections,        check_depth_law,
      check_depth_scaling,   check_named_root_conditions, check_shallow_series_head,
      check_series_recursion, check_boundary_roundtrip,
  };
  const std::vector<check_fn> routes = {
      check_series_vs_laplace,      check_laplace_known_transform,
      check_talbot_node_robustness, [] { return check_fourier_route(1); },
      [] { return check_fourier_route(2); }, check_root_integral_value,
      check_root_integral_curvature, check_scaled_erfi_small_w,
      check_scaled_erfi_tail,
  };
  const std::vector<check_fn> asymptotics = {
      check_far_field_decay,
      check_far_field_growth,
      check_initial_planarity,
      check_decay_classification,
  };

  if (suite == "identities") return identities;
  if (suite == "routes") return routes;
  if (suite == "asymptotics") return asymptotics;
  if (suite == "all") {
    std::vector<check_fn> all = identities;
    all.insert(all.end(), routes.begin(), routes.end());
    all.insert(all.end(), asymptotics.begin(), asymptotics.end());
    return all;
  }
  throw_error(errc::invalid_argument,
              "unknown verify suite '" + suite + "' (identities|routes|asymptotics|all)");
}

} // namespace

verify_report run_verify(const std::string& suite) {
  const auto checks = suite_checks(suite);
  verify_report report;
  report.suite = suite;
  report.checks.resize(checks.size());

  const auto start = std::chrono::steady_clock::now();
  parallel_for_index(int(checks.size()), [&](int i) {
    try {
      report.checks[std::size_t(i)] = checks[std::size_t(i)]();
    } catch (const std::exception& e) {
      verify_check c;
      c.name = "check-" + std::to_string(i);
      c.detail = std::string("threw: ") + e.what();
      c.measured = -1;
      c.tolerance = 0;
      c.passed = false;
      report.checks[std::size_t(i)] = c;
    }
  });
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  report.all_passed = true;
  for (const auto& c : report.checks) report.all_passed = report.all_passed && c.passed;
  return report;
}

std::string verify_report_json(const verify_report& report) {
  auto finite = [](double v) { return std::isfinite(v) ? v : -1.0; };
  nlohmann::json j;
  j["schema"] = "groovekit-verify/1";
  j["suite"] = report.suite;
  j["all_passed"] = report.all_passed;
  j["elapsed_seconds"] = finite(report.elapsed_seconds);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"detail", c.detail},
                      {"measured", finite(c.measured)},
                      {"tolerance", finite(c.tolerance)},
                      {"passed", c.passed}});
  j["checks"] = checks;
  return j.dump(2);
}

} // namespace groovekit
