#include "groovekit/pde.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "groovekit/errors.hpp"

namespace groovekit {

namespace {

struct resolved_bc {
  // exactly two of the three are set after resolution
  std::optional<double> slope, curvature, third_deriv;
};

resolved_bc resolve_bc(const root_bc& bc, const physical_params& p) {
  resolved_bc r;
  switch (bc.kind) {
    case root_bc::family::mullins:
      r.slope = bc.slope.value_or(p.m / 2.0);
      r.third_deriv = bc.third_deriv.value_or(0.0);
      break;
    case root_bc::family::amram:
      r.slope = bc.slope.value_or(p.m / 2.0);
      r.curvature = bc.curvature.value_or(0.0);
      break;
    case root_bc::family::general: {
      const int set = int(bc.slope.has_value()) + int(bc.curvature.has_value()) +
                      int(bc.third_deriv.has_value());
      if (set != 2)
        throw_error(errc::invalid_argument,
                    "solve: general root bc needs exactly two of slope, curvature, third_deriv");
      r.slope = bc.slope;
      r.curvature = bc.curvature;
      r.third_deriv = bc.third_deriv;
      break;
    }
  }
  return r;
}

} // namespace

pde_result solve(const grid_spec& grid, const root_bc& bc, const physical_params& params) {
  const double L = grid.domain_length;
  const int N = grid.n_cells;
  const double dt = grid.dt;
  const double theta = grid.scheme_theta;
  const double B = params.B;
  if (L <= 0) throw_error(errc::invalid_argument, "solve: domain_length must be > 0");
  if (N < 64) throw_error(errc::invalid_argument, "solve: need at least 64 cells");
  if (dt <= 0) throw_error(errc::invalid_argument, "solve: dt must be > 0");
  if (grid.t_end <= dt) throw_error(errc::invalid_argument, "solve: t_end must exceed dt");
  if (theta < 0 || theta > 1)
    throw_error(errc::invalid_argument, "solve: scheme_theta must lie in [0, 1]");
  if (B <= 0) throw_error(errc::invalid_argument, "solve: B must be > 0");

  const double dx = L / N;
  if (theta < 0.5) {
    const double dt_max = std::pow(dx, 4) / (8.0 * B * (1.0 - 2.0 * theta));
    if (dt > dt_max)
      throw_error(errc::stability, "solve: dt " + std::to_string(dt) +
                                       " exceeds the explicit stability bound " +
                                       std::to_string(dt_max));
  }

  const resolved_bc rb = resolve_bc(bc, params);
  const double s0 = rb.slope.value_or(0.0);
  const double c0 = rb.curvature.value_or(0.0);
  const double v0 = rb.third_deriv.value_or(0.0);
  const bool have_slope = rb.slope.has_value();

  // dy/dt = -B (A y + b). Interior rows are flux differences
  // (F_{j+1/2} - F_{j-1/2})/dx with F = third central difference at the half
  // node; the root row is the half-cell balance (2/dx)(F_0 - F_{1/2}) so the
  // whole scheme telescopes and material is conserved when F_0 = 0.
  const int n = N + 1;
  const double inv4 = 1.0 / std::pow(dx, 4);
  Eigen::SparseMatrix<double> A(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(5 * n);
    auto add = [&](int r, int c, double v) { trips.emplace_back(r, c, v); };

    // Ghost elimination prefers the curvature condition (central second
    // difference, O(dx^4) ghost error); with slope + third derivative the
    // antisymmetric Taylor expansion y(-dx) = y(dx) - 2 s0 dx - v0 dx^3 / 3
    // keeps the ghost at O(dx^5). A plain central slope ghost would carry an
    // O(dx^3) error proportional to y_xxx(0) and cost an order of accuracy.
    if (have_slope && rb.third_deriv) {
      // F_0 = B v0 exactly
      add(0, 0, 2.0 * inv4 * 3.0);
      add(0, 1, 2.0 * inv4 * -4.0);
      add(0, 2, 2.0 * inv4 * 1.0);
      b[0] = 4.0 * s0 / std::pow(dx, 3) - 4.0 / 3.0 * v0 / dx;

      add(1, 0, inv4 * -4.0);
      add(1, 1, inv4 * 7.0);
      add(1, 2, inv4 * -4.0);
      add(1, 3, inv4 * 1.0);
      b[1] = -2.0 * s0 / std::pow(dx, 3) - v0 / (3.0 * dx);
    } else {
      // curvature ghost shared by the slope+curvature and curvature+third
      // cases: F_{1/2} = B (y2 - 2 y1 + y0 - c0 dx^2) / dx^3
      add(1, 0, inv4 * -2.0);
      add(1, 1, inv4 * 5.0);
      add(1, 2, inv4 * -4.0);
      add(1, 3, inv4 * 1.0);
      b[1] = c0 / (dx * dx);

      if (have_slope) {
        // one-sided F_0 from (16 y1 - y2 - 15 y0 - 14 s0 dx - 6 c0 dx^2),
        // chosen to cancel the fourth-derivative Taylor term
        add(0, 0, 2.0 * inv4 * 12.25);
        add(0, 1, 2.0 * inv4 * -14.0);
        add(0, 2, 2.0 * inv4 * 1.75);
        b[0] = 21.0 * s0 / std::pow(dx, 3) + 7.0 * c0 / (dx * dx);
      } else {
        // F_0 = B v0 exactly
        add(0, 0, 2.0 * inv4 * 1.0);
        add(0, 1, 2.0 * inv4 * -2.0);
        add(0, 2, 2.0 * inv4 * 1.0);
        b[0] = -2.0 * c0 / (dx * dx) - 2.0 * v0 / dx;
      }
    }

    for (int j = 2; j <= N - 2; ++j) {
      add(j, j - 2, inv4);
      add(j, j - 1, -4.0 * inv4);
      add(j, j, 6.0 * inv4);
      add(j, j + 1, -4.0 * inv4);
      add(j, j + 2, inv4);
    }

    // far field: y_N = 0 held as a constraint row, ghost y_{N+1} = y_{N-1}
    add(N - 1, N - 3, inv4);
    add(N - 1, N - 2, -4.0 * inv4);
    add(N - 1, N - 1, 7.0 * inv4);
    add(N - 1, N, -4.0 * inv4);
    A.setFromTriplets(trips.begin(), trips.end());
  }

  Eigen::SparseMatrix<double> identity(n, n);
  identity.setIdentity();

  auto factor = [&](double th) {
    Eigen::SparseMatrix<double> M = identity + (th * dt * B) * A;
    auto lu = std::make_unique<Eigen::SparseLU<Eigen::SparseMatrix<double>>>();
    lu->compute(M);
    if (lu->info() != Eigen::Success)
      throw_error(errc::solve, "solve: sparse factorization failed");
    return lu;
  };

  // incompatible start (y == 0 against suddenly-imposed root data) rings under
  // Crank-Nicolson; damp it with a few fully implicit startup steps
  const int n_startup = theta < 1.0 ? 4 : 0;
  auto lu_theta = factor(theta);
  auto lu_startup = n_startup > 0 ? factor(1.0) : nullptr;

  const long n_steps = std::max<long>(1, std::lround(grid.t_end / dt));

  std::vector<double> wanted = grid.output_times;
  if (wanted.empty()) wanted.push_back(grid.t_end);
  std::sort(wanted.begin(), wanted.end());
  for (double T : wanted)
    if (T <= 0 || T > grid.t_end + dt / 2)
      throw_error(errc::invalid_argument, "solve: output times must lie in (0, t_end]");

  pde_result out;
  out.x.resize(n);
  for (int j = 0; j < n; ++j) out.x[j] = j * dx;
  out.depth_series.reserve(n_steps);

  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  std::size_t next_output = 0;
  double mass = 0; // dx (y0/2 + y1 + ... + y_{N-1}), y_N = 0
  for (long step = 1; step <= n_steps; ++step) {
    const double th = step <= n_startup ? 1.0 : theta;
    Eigen::VectorXd rhs = y - ((1.0 - th) * dt * B) * (A * y + b) - (th * dt * B) * b;
    rhs[N] = 0.0;
    const auto& lu = step <= n_startup ? *lu_startup : *lu_theta;
    y = lu.solve(rhs);
    if (!y.allFinite()) throw_error(errc::solve, "solve: linear solve produced non-finite values");

    const double t_now = step * dt;
    out.depth_series.emplace_back(t_now, y[0]);

    double new_mass = 0.5 * y[0];
    for (int j = 1; j < N; ++j) new_mass += y[j];
    new_mass *= dx;
    const double l1 = dx * y.cwiseAbs().sum();
    if (step > 1 && l1 > 0)
      out.max_mass_drift = std::max(out.max_mass_drift, std::abs(new_mass - mass) / l1);
    mass = new_mass;

    while (next_output < wanted.size() && t_now >= wanted[next_output] - dt / 2) {
      out.times.push_back(t_now);
      out.profiles.emplace_back(y.data(), y.data() + n);
      ++next_output;
    }
  }
  return out;
}

double measure_depth_exponent(const std::vector<std::pair<double, double>>& depths) {
  if (depths.size() < 5)
    throw_error(errc::invalid_argument, "measure_depth_exponent: need at least 5 samples");
  double sx = 0, sy = 0;
  for (const auto& [t, d] : depths) {
    if (t <= 0) throw_error(errc::domain, "measure_depth_exponent: nonpositive time");
    if (d == 0) throw_error(errc::domain, "measure_depth_exponent: zero depth");
    sx += std::log(t);
    sy += std::log(std::abs(d));
  }
  const double mx = sx / depths.size(), my = sy / depths.size();
  double num = 0, den = 0;
  for (const auto& [t, d] : depths) {
    const double X = std::log(t) - mx;
    num += X * (std::log(std::abs(d)) - my);
    den += X * X;
  }
  if (den == 0)
    throw_error(errc::invalid_argument, "measure_depth_exponent: times must not be all equal");
  return num / den;
}

} // namespace groovekit
