// Release gate: every numbered check prints one PASS/FAIL line with the
// measured value against its pinned tolerance, and the binary exits nonzero
// if any line fails. Time budgets are part of the gate where stated.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "groovekit/basis.hpp"
#include "groovekit/fitting.hpp"
#include "groovekit/pde.hpp"
#include "groovekit/solutions.hpp"
#include "groovekit/transforms.hpp"

using namespace groovekit;

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct gate {
  int failed = 0;

  template <typename Fn>
  void run(int id, const std::string& name, double budget_seconds, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
      pass = fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
      pass = false;
      detail += " [over the " + num(budget_seconds) + " s budget]";
    }
    std::printf("[%2d] %s  %-44s %s  (%.2f s)\n", id, pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++failed;
  }
};

similarity_coeffs mullins_coeffs(double m) {
  decay_weights w;
  w.c = {m / (2.0 * std::sqrt(2.0)), -m / (2.0 * std::sqrt(2.0)), 0.0, 0.0};
  return decay_weights_to_z(w);
}

similarity_coeffs amram_coeffs(double m) {
  decay_weights w;
  w.c = {0.0, -m / std::sqrt(2.0), 0.0, 0.0};
  return decay_weights_to_z(w);
}

} // namespace

int main() {
  gate g;

  g.run(1, "basis root derivatives (Kronecker)", 1.0, [](std::string& d) {
    double worst = 0;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        const double expected = i == j ? std::tgamma(double(j)) : 0.0;
        worst = std::max(worst, std::abs(z_derivative(i, j - 1, 0.0) - expected));
      }
    d = "max dev " + num(worst) + " (tol 1e-12)";
    return worst < 1e-12;
  });

  g.run(2, "similarity ODE residual", 1.0, [](std::string& d) {
    double worst = 0;
    for (int i = 0; i < 4; ++i) {
      similarity_coeffs C;
      C.c = {0, 0, 0, 0};
      C.c[std::size_t(i)] = 1.0;
      for (int k = 0; k <= 32; ++k)
        worst = std::max(worst, std::abs(ode_residual(C, -8.0 + 16.0 * k / 32.0)));
    }
    d = "max residual " + num(worst) + " (tol 1e-9)";
    return worst < 1e-9;
  });

  g.run(3, "half D D^T identity", 1.0, [](std::string& d) {
    const auto D = d_matrix();
    double worst = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0;
        for (int k = 0; k < 4; ++k) s += D[std::size_t(i)][std::size_t(k)] * D[std::size_t(j)][std::size_t(k)];
        worst = std::max(worst, std::abs(0.5 * s - (i == j ? 1.0 : 0.0)));
      }
    d = "max dev " + num(worst) + " (tol 1e-15)";
    return worst < 1e-15;
  });

  g.run(4, "groove depth law and 16t doubling", 0.0, [](std::string& d) {
    double worst_rel = 0, worst_double = 0;
    for (double m : {0.1, 0.3})
      for (double B : {0.5, 2.0})
        for (double t : {1.0, 16.0}) {
          const physical_params p{B, m};
          const auto derivs = boundary_derivatives(mullins_coeffs(m), t, p);
          const double ref = groove_depth(p, t);
          worst_rel = std::max(worst_rel, std::abs(derivs[0] - ref) / std::abs(ref));
          worst_double = std::max(
              worst_double,
              std::abs(groove_depth(p, 16.0 * t) - 2.0 * ref) / std::abs(2.0 * ref));
        }
    d = "value rel " + num(worst_rel) + " (tol 1e-12), doubling rel " + num(worst_double) +
        " (tol 1e-13)";
    return worst_rel < 1e-12 && worst_double < 1e-13;
  });

  g.run(5, "named solution root conditions", 0.0, [](std::string& d) {
    double worst = 0;
    for (const auto& [m, B, t] : {std::tuple{0.2, 1.0, 1.0}, std::tuple{0.3, 2.0, 4.0}}) {
      const physical_params p{B, m};
      const auto dm = boundary_derivatives(mullins_coeffs(m), t, p);
      worst = std::max({worst, std::abs(dm[1] - m / 2.0), std::abs(dm[3])});
      const auto da = boundary_derivatives(amram_coeffs(m), t, p);
      worst = std::max({worst, std::abs(da[1] - m / 2.0), std::abs(da[2])});
    }
    d = "max dev " + num(worst) + " (tol 1e-10)";
    return worst < 1e-10;
  });

  g.run(6, "mirror pair identities", 0.0, [](std::string& d) {
    double worst = 0;
    for (const auto& [t, B] : {std::pair{1.0, 1.0}, std::pair{3.0, 0.6}}) {
      const double s = std::pow(B * t, 0.25);
      for (int k = 0; k <= 24; ++k) {
        const double x = (-6.0 + 12.0 * k / 24.0) * s;
        worst = std::max(worst, std::abs(y(3, t, x, B) + y(1, t, -x, B)) / s);
        worst = std::max(worst, std::abs(y(4, t, x, B) - y(2, t, -x, B)) / s);
      }
    }
    d = "max scaled dev " + num(worst) + " (tol 1e-11)";
    return worst < 1e-11;
  });

  g.run(7, "transform route cross-validation", 30.0, [](std::string& d) {
    const std::pair<double, double> pts[] = {{1.0, 0.5}, {1.0, 2.0}, {2.0, 1.0}, {0.5, 1.5}, {4.0, 3.0}};
    double worst_laplace = 0;
    for (int i = 1; i <= 4; ++i)
      for (const auto& [t, x0] : pts) {
        const double x = i <= 2 ? x0 : -x0;
        const double series = y(i, t, x, 1.0, eval_route::series);
        const double laplace = inverse_laplace(i, t, x, 1.0);
        worst_laplace = std::max(worst_laplace, std::abs(series - laplace) / std::abs(laplace));
      }

    const double root_value = std::abs(fourier_y2(1.0, 0.0, 1.0).value -
                                       2.0 / std::sqrt(M_PI) * std::tgamma(0.75));
    const double root_curv = std::abs(fourier_y2_xx_at_root(1.0, 1.0) +
                                      2.0 / std::sqrt(M_PI) * std::tgamma(1.25));

    double worst_overlap = 0;
    for (int k = 0; k < 12; ++k) {
      const double u = 0.5 + 5.5 * k / 11.0;
      const double y1v = y(1, 1.0, u, 1.0), y2v = y(2, 1.0, u, 1.0);
      worst_overlap = std::max(
          worst_overlap, std::abs(fourier_y1(1.0, u, 1.0).value - (y1v - y2v) / std::sqrt(2.0)));
      worst_overlap = std::max(
          worst_overlap, std::abs(fourier_y2(1.0, u, 1.0).value -
                                  std::sqrt(M_PI) * (y1v + y2v) / std::sqrt(2.0)));
    }
    d = "series:laplace rel " + num(worst_laplace) + " (tol 1e-7), root integrals " +
        num(root_value) + "/" + num(root_curv) + " (tol 1e-8), overlap " + num(worst_overlap) +
        " (tol 1e-7)";
    return worst_laplace < 1e-7 && root_value < 1e-8 && root_curv < 1e-8 && worst_overlap < 1e-7;
  });

  g.run(8, "shallow-groove series coefficients", 0.0, [](std::string& d) {
    decay_weights w;
    w.c = {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0, 0.0};
    const similarity_coeffs C = decay_weights_to_z(w);
    std::vector<double> a(13, 0.0);
    for (int j = 0; j < 4; ++j) {
      const std::vector<double> zj = z_power_series(j + 1, 12);
      for (std::size_t k = 0; k < a.size() && k < zj.size(); ++k)
        a[k] += C.c[std::size_t(j)] * zj[k];
    }
    const double targets[4] = {-2.0 / M_PI * std::tgamma(0.75), 1.0,
                               -std::tgamma(0.25) / (4.0 * M_PI), 0.0};
    double worst_head = 0;
    for (int k = 0; k < 4; ++k)
      worst_head = std::max(worst_head, std::abs(a[std::size_t(k)] - targets[k]));
    double worst_rec = 0;
    for (int n = 0; n + 4 <= 12; ++n) {
      const double rhs = double(n - 1) * a[std::size_t(n)] /
                         (4.0 * (n + 1) * (n + 2) * (n + 3) * (n + 4));
      worst_rec = std::max(worst_rec, std::abs(a[std::size_t(n) + 4] - rhs));
    }
    d = "head dev " + num(worst_head) + " (tol 1e-12), recursion dev " + num(worst_rec) +
        " (tol 1e-13)";
    return worst_head < 1e-12 && worst_rec < 1e-13;
  });

  g.run(9, "far-field decay, growth, initial planarity", 0.0, [](std::string& d) {
    const double q1 = std::abs(y(1, 1.0, 25.0, 1.0, eval_route::quadrature));
    const double q2 = std::abs(y(2, 1.0, 25.0, 1.0, eval_route::quadrature));
    const double g3 = y(3, 1.0, 25.0, 1.0, eval_route::series);
    const double g4 = y(4, 1.0, 25.0, 1.0, eval_route::series);
    bool planar = true;
    double prev = -1;
    for (double t : {1e-1, 1e-3, 1e-5}) {
      const double s = std::abs(y(1, t, 2.0, 1.0)) + std::abs(y(2, t, 2.0, 1.0));
      if (prev >= 0 && s >= prev) planar = false;
      prev = s;
    }
    d = "decay " + num(std::max(q1, q2)) + " (tol 1e-8), growth " + num(std::min(g3, -g4)) +
        " (> 1e3), planarity " + (planar ? std::string("monotone") : std::string("violated"));
    return q1 < 1e-8 && q2 < 1e-8 && g3 > 1e3 && g4 < -1e3 && planar;
  });

  g.run(10, "finite-difference oracle vs analytic solution", 60.0, [](std::string& d) {
    const physical_params p{1.0, 0.2};
    grid_spec base;
    base.n_cells = 1024;
    base.dt = 5e-4;
    base.t_end = 1.0;
    const pde_result r = solve(base, root_bc{}, p);

    std::vector<std::pair<double, double>> window;
    for (const auto& [t, depth] : r.depth_series)
      if (t >= 0.25) window.emplace_back(t, depth);
    const double expo = measure_depth_exponent(window);

    double pref = 0;
    for (const auto& [t, depth] : window) pref += depth / std::pow(t, 0.25);
    pref /= double(window.size());
    const double pref_rel = std::abs(pref - groove_depth(p, 1.0)) / std::abs(groove_depth(p, 1.0));

    double prev_err = 0, order = 0;
    for (int N : {256, 512}) {
      grid_spec fine;
      fine.n_cells = N;
      const double dx = fine.domain_length / N;
      fine.dt = 0.05 * dx * dx;
      fine.t_end = 1.0;
      const pde_result rr = solve(fine, root_bc{}, p);
      double err = 0;
      for (std::size_t j = 0; j < rr.x.size(); ++j)
        err = std::max(err, std::abs(rr.profiles.back()[j] - mullins_solution(p, 1.0, rr.x[j])));
      if (prev_err > 0) order = std::log2(prev_err / err);
      prev_err = err;
    }
    d = "exponent " + num(expo) + " (0.25 +- 0.01), prefactor rel " + num(pref_rel) +
        " (tol 0.01), order " + num(order) + " (>= 1.8)";
    return std::abs(expo - 0.25) < 0.01 && pref_rel < 0.01 && order >= 1.8;
  });

  g.run(11, "fitting recovery, discrimination, B search", 120.0, [](std::string& d) {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double worst_rel = 0;
    for (int trial = 0; trial < 50; ++trial) {
      two_sided_solution sol;
      sol.params = {1.0, 0.0};
      double norm = 0;
      for (int i = 0; i < 4; ++i) {
        sol.plus.c[std::size_t(i)] = unit(rng);
        sol.minus.c[std::size_t(i)] = unit(rng);
        norm = std::max({norm, std::abs(sol.plus.c[std::size_t(i)]),
                         std::abs(sol.minus.c[std::size_t(i)])});
      }
      groove_profile prof;
      prof.anneal_time = 1.0;
      for (int k = -64; k <= 64; ++k) {
        if (k == 0) continue;
        const double x = 6.0 * k / 64.0;
        prof.samples.emplace_back(x, evaluate(sol, 1.0, x));
      }
      const fit_result fr = fit_linear(prof, 1.0, fit_config{});
      for (int i = 0; i < 4; ++i) {
        worst_rel = std::max(
            worst_rel, std::abs(fr.coeffs.plus.c[std::size_t(i)] - sol.plus.c[std::size_t(i)]) / norm);
        worst_rel = std::max(
            worst_rel,
            std::abs(fr.coeffs.minus.c[std::size_t(i)] - sol.minus.c[std::size_t(i)]) / norm);
      }
    }

    std::mt19937 rng2(777);
    std::uniform_real_distribution<double> mdist(0.1, 0.4);
    std::uniform_real_distribution<double> unit2(-1.0, 1.0);
    const int n_side = 8, trials = 200;
    int correct = 0;
    for (int trial = 0; trial < trials; ++trial) {
      const int truth = trial % 3;
      const physical_params pp{1.0, mdist(rng2)};
      two_sided_solution sol;
      sol.params = pp;
      if (truth == 2)
        for (int i = 0; i < 4; ++i) {
          sol.plus.c[std::size_t(i)] = 0.3 * unit2(rng2);
          sol.minus.c[std::size_t(i)] = 0.3 * unit2(rng2);
        }
      groove_profile prof;
      prof.anneal_time = 1.0;
      double ymax = 0;
      for (int k = -n_side; k <= n_side; ++k) {
        if (k == 0) continue;
        const double x = 6.0 * k / n_side;
        const double v = truth == 0   ? mullins_solution(pp, 1.0, x)
                         : truth == 1 ? amram_solution(pp, 1.0, x)
                                      : evaluate(sol, 1.0, x);
        prof.samples.emplace_back(x, v);
        ymax = std::max(ymax, std::abs(v));
      }
      std::normal_distribution<double> gauss(0.0, 0.01 * ymax);
      for (auto& [x, v] : prof.samples) v += gauss(rng2);
      const std::string want = truth == 0 ? "mullins" : truth == 1 ? "amram" : "general4";
      for (const auto& row : compare_models(prof, fit_config{}))
        if (row.preferred && row.model == want) ++correct;
    }

    const physical_params pb{2.5, 0.2};
    groove_profile prof;
    prof.anneal_time = 1.0;
    const double s = std::pow(2.5, 0.25);
    for (int k = -64; k <= 64; ++k) {
      if (k == 0) continue;
      const double x = 6.0 * s * k / 64.0;
      prof.samples.emplace_back(x, mullins_solution(pb, 1.0, x));
    }
    fit_config cfg;
    cfg.fit_B = true;
    cfg.B_range = {0.25, 25.0};
    const double B_rel = std::abs(fit_with_B(prof, cfg).B_estimate - 2.5) / 2.5;

    d = "recovery rel " + num(worst_rel) + " (tol 1e-7), discrimination " +
        std::to_string(correct) + "/" + std::to_string(trials) + " (>= 190), B rel " + num(B_rel) +
        " (tol 0.02)";
    return worst_rel < 1e-7 && correct >= 190 && B_rel < 0.02;
  });

  if (g.failed == 0) {
    std::printf("all 11 checks passed\n");
    return 0;
  }
  std::printf("%d of 11 checks FAILED\n", g.failed);
  return 1;
}
