#pragma once

// Groove-profile ingestion and least-squares fitting of the self-similar
// model y = (Bt)^{1/4} sum_i C_i z_i(u). The fit is linear in the C
// coefficients; B and a root offset enter through an outer 1-D / 2-D search.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "groovekit/solutions.hpp"

namespace groovekit {

struct groove_profile {
  std::vector<std::pair<double, double>> samples; // (x, y), sorted by x
  double anneal_time = 0;                         // seconds
  std::string length_unit = "nm";
  std::string height_unit = "nm";
  std::optional<double> B_hint;
  std::optional<double> root_hint; // x position of the groove root, if known
};

enum class fit_model { general4, mullins, amram };

struct fit_config {
  fit_model model = fit_model::general4;
  bool decay_constraint = false;     // restrict each side to its decaying pair
  bool continuity_constraint = false; // tie the profile value at the root
  bool fit_B = false;
  std::pair<double, double> B_range{0.1, 10.0};
  double fixed_B = 1.0;              // used when fit_B is off and no B_hint
  bool fit_root_offset = false;
};

struct model_comparison_row {
  std::string model;
  double rss = 0;
  int n_params = 0;
  double aicc = 0;
  bool preferred = false;
};

struct fit_result {
  two_sided_solution coeffs;
  std::array<double, 4> boundary_plus{};  // y, y_x, y_xx, y_xxx at 0+
  std::array<double, 4> boundary_minus{}; // same at 0-
  std::array<double, 4> stderr_plus{};
  std::array<double, 4> stderr_minus{};
  double residual_rss = 0;
  int n_samples = 0;
  int n_params = 0;
  double condition_plus = 0;  // spectral condition of the per-side z design
  double condition_minus = 0;
  double B_estimate = 0;
  bool B_fitted = false;
  std::pair<double, double> B_bracket{0, 0};
  double root_offset = 0;
  std::vector<model_comparison_row> model_comparison;
};

// CSV: metadata rows `# t_seconds=<v>` (required), `# B_hint=<v>` and
// `# root_hint=<v>` (optional), a header `x_nm,y_nm` or `x_um,y_um`, then
// numeric rows with strictly monotone x. Throws errc::parse with a line
// number, errc::unit for unknown or mixed units.
groove_profile load_profile(std::istream& in);
groove_profile load_profile_file(const std::string& path);
void write_profile_csv(std::ostream& out, const groove_profile& profile);

// n x 4 matrix with entry (k, j) = (Bt)^{1/4} z_{j+1}((x_k - x0)/(Bt)^{1/4})
// over the samples on the requested side of the root.
Eigen::MatrixXd design_matrix(const groove_profile& profile, double B, side_kind side,
                              double root_offset = 0.0);

// Linear least squares at fixed B. Throws errc::rank_deficient when the
// (possibly constrained) design loses rank, errc::invalid_argument when a
// fitted side has fewer than 8 samples.
fit_result fit_linear(const groove_profile& profile, double B, const fit_config& config);

// Separable fit: coarse 32-point log-B grid then golden-section refinement;
// the inner problem is fit_linear. Throws errc::no_minimum when the RSS has
// no interior minimum across B_range. With fit_root_offset set, a
// Nelder-Mead search over (log B, x0) refines both.
fit_result fit_with_B(const groove_profile& profile, const fit_config& config);

// Fits flat, mullins, amram, general-decaying and general4 under the same B
// policy and ranks them by small-sample corrected AIC.
std::vector<model_comparison_row> compare_models(const groove_profile& profile,
                                                 const fit_config& config);

// Four x-derivatives at the root per side: derivative_i = C_i (Bt)^{(2-i)/4} (i-1)!.
std::array<double, 4> boundary_report(const similarity_coeffs& side, double t, double B);

// Schema-versioned JSON rendering of a fit result ("groovekit-fit/1").
std::string fit_report_json(const fit_result& fit, const groove_profile& profile);

} // namespace groovekit
