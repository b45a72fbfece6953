#include "groovekit/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "groovekit/basis.hpp"
#include "groovekit/errors.hpp"
#include "groovekit/parallel.hpp"

namespace groovekit {

// ---------------------------------------------------------------------------
// CSV ingestion

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& text, int line_no, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw_error(errc::parse, "line " + std::to_string(line_no) + ": expected a number for " +
                                 what + ", got '" + text + "'");
  }
  if (used != text.size())
    throw_error(errc::parse, "line " + std::to_string(line_no) + ": trailing characters after " +
                                 what + " in '" + text + "'");
  return v;
}

bool known_length_unit(const std::string& u) { return u == "nm" || u == "um"; }

} // namespace

groove_profile load_profile(std::istream& in) {
  groove_profile p;
  bool have_t = false, have_header = false;
  std::string line;
  int line_no = 0;
  std::vector<int> row_lines;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = trim(line);
    if (s.empty()) continue;

    if (s[0] == '#') {
      const std::string meta = trim(s.substr(1));
      const auto eq = meta.find('=');
      if (eq == std::string::npos) continue; // plain comment
      const std::string key = trim(meta.substr(0, eq));
      const std::string value = trim(meta.substr(eq + 1));
      if (key == "t_seconds") {
        p.anneal_time = parse_number(value, line_no, "t_seconds");
        have_t = true;
      } else if (key == "B_hint") {
        p.B_hint = parse_number(value, line_no, "B_hint");
      } else if (key == "root_hint") {
        p.root_hint = parse_number(value, line_no, "root_hint");
      }
      // unknown metadata keys pass through silently
      continue;
    }

    if (!have_header) {
      const auto comma = s.find(',');
      if (comma == std::string::npos)
        throw_error(errc::parse,
                    "line " + std::to_string(line_no) + ": expected header 'x_<unit>,y_<unit>'");
      const std::string xcol = trim(s.substr(0, comma));
      const std::string ycol = trim(s.substr(comma + 1));
      if (xcol.rfind("x_", 0) != 0 || ycol.rfind("y_", 0) != 0)
        throw_error(errc::parse, "line " + std::to_string(line_no) +
                                     ": header columns must be named x_<unit>,y_<unit>");
      p.length_unit = xcol.substr(2);
      p.height_unit = ycol.substr(2);
      if (!known_length_unit(p.length_unit))
        throw_error(errc::unit, "line " + std::to_string(line_no) + ": unknown length unit '" +
                                    p.length_unit + "'");
      if (!known_length_unit(p.height_unit))
        throw_error(errc::unit, "line " + std::to_string(line_no) + ": unknown height unit '" +
                                    p.height_unit + "'");
      if (p.length_unit != p.height_unit)
        throw_error(errc::unit, "line " + std::to_string(line_no) +
                                    ": x and y must use the same unit, got '" + p.length_unit +
                                    "' and '" + p.height_unit + "'");
      have_header = true;
      continue;
    }

    const auto comma = s.find(',');
    if (comma == std::string::npos)
      throw_error(errc::parse, "line " + std::to_string(line_no) + ": expected 'x,y' data row");
    const double x = parse_number(trim(s.substr(0, comma)), line_no, "x");
    const double y = parse_number(trim(s.substr(comma + 1)), line_no, "y");
    p.samples.emplace_back(x, y);
    row_lines.push_back(line_no);
  }

  if (!have_header)
    throw_error(errc::parse, "line " + std::to_string(line_no) + ": missing column header row");
  if (!have_t)
    throw_error(errc::parse, "missing required metadata row '# t_seconds=<value>'");
  if (p.anneal_time <= 0)
    throw_error(errc::parse, "t_seconds must be positive, got " + std::to_string(p.anneal_time));
  if (p.samples.empty()) throw_error(errc::parse, "no data rows");

  if (p.samples.size() >= 2) {
    const bool increasing = p.samples[1].first > p.samples[0].first;
    for (std::size_t i = 1; i < p.samples.size(); ++i) {
      const double prev = p.samples[i - 1].first, cur = p.samples[i].first;
      if (cur == prev)
        throw_error(errc::parse,
                    "line " + std::to_string(row_lines[i]) + ": duplicate x value " +
                        std::to_string(cur));
      if ((cur > prev) != increasing)
        throw_error(errc::parse,
                    "line " + std::to_string(row_lines[i]) + ": x values must be strictly monotone");
    }
    if (!increasing) std::reverse(p.samples.begin(), p.samples.end());
  }
  return p;
}

groove_profile load_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_error(errc::io, "cannot open '" + path + "' for reading");
  return load_profile(in);
}

void write_profile_csv(std::ostream& out, const groove_profile& profile) {
  out.precision(17);
  out << "# t_seconds=" << profile.anneal_time << "\n";
  if (profile.B_hint) out << "# B_hint=" << *profile.B_hint << "\n";
  if (profile.root_hint) out << "# root_hint=" << *profile.root_hint << "\n";
  out << "x_" << profile.length_unit << ",y_" << profile.height_unit << "\n";
  for (const auto& [x, y] : profile.samples) out << x << "," << y << "\n";
}

// ---------------------------------------------------------------------------
// Design assembly and the constrained linear solve

namespace {

std::vector<std::pair<double, double>> side_samples(const groove_profile& p, side_kind side,
                                                    double x0) {
  std::vector<std::pair<double, double>> out;
  for (const auto& [x, y] : p.samples) {
    const double xs = x - x0;
    if (side == side_kind::plus ? xs >= 0 : xs < 0) out.emplace_back(xs, y);
  }
  return out;
}

// 4x4 matrix form of decay_weights_to_z
Eigen::Matrix4d weight_to_coeff_matrix() {
  static const Eigen::Matrix4d Z = [] {
    Eigen::Matrix4d out;
    for (int j = 0; j < 4; ++j) {
      decay_weights w;
      w.c[j] = 1.0;
      const similarity_coeffs C = decay_weights_to_z(w);
      for (int i = 0; i < 4; ++i) out(i, j) = C.c[i];
    }
    return out;
  }();
  return Z;
}

struct model_setup {
  Eigen::MatrixXd map_plus;  // 4 x p, C+ = map_plus q
  Eigen::MatrixXd map_minus; // 4 x p, C- = map_minus q
  int n_params = 0;
};

model_setup build_setup(const fit_config& cfg, bool has_plus, bool has_minus) {
  const Eigen::Matrix4d Z = weight_to_coeff_matrix();
  const double r2 = std::sqrt(2.0);
  model_setup s;

  if (cfg.model == fit_model::mullins || cfg.model == fit_model::amram) {
    // single slope parameter; the even extension fixes the minus side
    s.n_params = 1;
    Eigen::Vector4d wp = Eigen::Vector4d::Zero(), wm = Eigen::Vector4d::Zero();
    if (cfg.model == fit_model::mullins) {
      wp[0] = 1.0 / (2.0 * r2);
      wp[1] = -1.0 / (2.0 * r2);
      wm[2] = -1.0 / (2.0 * r2);
      wm[3] = -1.0 / (2.0 * r2);
    } else {
      wp[1] = -1.0 / r2;
      wm[3] = -1.0 / r2;
    }
    s.map_plus = has_plus ? Eigen::MatrixXd(Z * wp) : Eigen::MatrixXd::Zero(4, 1);
    s.map_minus = has_minus ? Eigen::MatrixXd(Z * wm) : Eigen::MatrixXd::Zero(4, 1);
    return s;
  }

  const int per_side = cfg.decay_constraint ? 2 : 4;
  const int p = per_side * (int(has_plus) + int(has_minus));
  s.n_params = p;
  s.map_plus = Eigen::MatrixXd::Zero(4, p);
  s.map_minus = Eigen::MatrixXd::Zero(4, p);
  int col = 0;
  if (has_plus) {
    if (cfg.decay_constraint)
      s.map_plus.middleCols(col, 2) = Z.leftCols(2); // weights on y1, y2
    else
      s.map_plus.middleCols(col, 4).setIdentity();
    col += per_side;
  }
  if (has_minus) {
    if (cfg.decay_constraint)
      s.map_minus.middleCols(col, 2) = Z.rightCols(2); // weights on y3, y4
    else
      s.map_minus.middleCols(col, 4).setIdentity();
  }

  if (cfg.continuity_constraint && has_plus && has_minus) {
    // tie the fitted value at the root: C1+ = C1-, one linear constraint
    Eigen::RowVectorXd constraint = s.map_plus.row(0) - s.map_minus.row(0);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(constraint);
    const Eigen::MatrixXd kernel = lu.kernel(); // p x (p-1)
    s.map_plus = s.map_plus * kernel;
    s.map_minus = s.map_minus * kernel;
    s.n_params = int(kernel.cols());
  }
  return s;
}

struct lsq_solution {
  Eigen::VectorXd q;
  Eigen::MatrixXd cov; // sigma^2 (X^T X)^{-1}
  double rss = 0;
};

lsq_solution solve_lsq(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const auto n = X.rows();
  const auto p = X.cols();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double tol = std::max(n, p) * std::numeric_limits<double>::epsilon() * sv(0);
  if (sv(sv.size() - 1) <= tol)
    throw_error(errc::rank_deficient, "fit_linear: design matrix rank " +
                                          std::to_string((sv.array() > tol).count()) +
                                          " below parameter count " + std::to_string(p));
  lsq_solution out;
  out.q = svd.solve(y);
  out.rss = (y - X * out.q).squaredNorm();
  const double sigma2 = n > p ? out.rss / double(n - p) : 0.0;
  const Eigen::VectorXd inv_s2 = sv.array().square().inverse();
  out.cov = sigma2 * svd.matrixV() * inv_s2.asDiagonal() * svd.matrixV().transpose();
  return out;
}

double condition_of(const Eigen::MatrixXd& X) {
  if (X.rows() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(X);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  return smin > 0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
}

} // namespace

Eigen::MatrixXd design_matrix(const groove_profile& profile, double B, side_kind side,
                              double root_offset) {
  if (B <= 0) throw_error(errc::invalid_argument, "design_matrix: B must be > 0");
  if (profile.anneal_time <= 0)
    throw_error(errc::invalid_argument, "design_matrix: anneal time must be > 0");
  const double s = std::pow(B * profile.anneal_time, 0.25);
  const auto rows = side_samples(profile, side, root_offset);
  Eigen::MatrixXd X(rows.size(), 4);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double u = rows[k].first / s;
    for (int j = 0; j < 4; ++j) X(long(k), j) = s * z(j + 1, u);
  }
  return X;
}

fit_result fit_linear(const groove_profile& profile, double B, const fit_config& config) {
  if (B <= 0) throw_error(errc::invalid_argument, "fit_linear: B must be > 0");
  if (profile.anneal_time <= 0)
    throw_error(errc::invalid_argument, "fit_linear: anneal time must be > 0");

  const double x0 = 0.0; // root offset is applied by callers via profile shifting
  const auto plus = side_samples(profile, side_kind::plus, x0);
  const auto minus = side_samples(profile, side_kind::minus, x0);
  for (const auto* v : {&plus, &minus})
    if (!v->empty() && v->size() < 8)
      throw_error(errc::invalid_argument, "fit_linear: a fitted side needs at least 8 samples, got " +
                                              std::to_string(v->size()));
  if (plus.empty() && minus.empty())
    throw_error(errc::invalid_argument, "fit_linear: profile has no samples");

  const Eigen::MatrixXd Dp = design_matrix(profile, B, side_kind::plus, x0);
  const Eigen::MatrixXd Dm = design_matrix(profile, B, side_kind::minus, x0);
  const model_setup setup = build_setup(config, !plus.empty(), !minus.empty());

  const long n = Dp.rows() + Dm.rows();
  Eigen::MatrixXd X(n, setup.n_params);
  Eigen::VectorXd yv(n);
  X.topRows(Dp.rows()) = Dp * setup.map_plus;
  X.bottomRows(Dm.rows()) = Dm * setup.map_minus;
  for (long k = 0; k < Dp.rows(); ++k) yv[k] = plus[k].second;
  for (long k = 0; k < Dm.rows(); ++k) yv[Dp.rows() + k] = minus[k].second;

  const lsq_solution sol = solve_lsq(X, yv);

  fit_result out;
  out.n_samples = int(n);
  out.n_params = setup.n_params;
  out.residual_rss = sol.rss;
  out.B_estimate = B;
  out.condition_plus = condition_of(Dp);
  out.condition_minus = condition_of(Dm);

  const Eigen::Vector4d Cp = setup.map_plus * sol.q;
  const Eigen::Vector4d Cm = setup.map_minus * sol.q;
  for (int i = 0; i < 4; ++i) {
    out.coeffs.plus.c[i] = plus.empty() ? 0.0 : Cp[i];
    out.coeffs.minus.c[i] = minus.empty() ? 0.0 : Cm[i];
  }
  out.coeffs.params = physical_params{B, 0.0};

  const Eigen::Matrix4d cov_p = setup.map_plus * sol.cov * setup.map_plus.transpose();
  const Eigen::Matrix4d cov_m = setup.map_minus * sol.cov * setup.map_minus.transpose();
  for (int i = 0; i < 4; ++i) {
    out.stderr_plus[i] = plus.empty() ? 0.0 : std::sqrt(std::max(0.0, cov_p(i, i)));
    out.stderr_minus[i] = minus.empty() ? 0.0 : std::sqrt(std::max(0.0, cov_m(i, i)));
  }

  const physical_params pp{B, 0.0};
  out.boundary_plus = boundary_derivatives(out.coeffs.plus, profile.anneal_time, pp);
  out.boundary_minus = boundary_derivatives(out.coeffs.minus, profile.anneal_time, pp);
  return out;
}

// ---------------------------------------------------------------------------
// Outer search over B (and optionally the root offset)

namespace {

groove_profile shifted(const groove_profile& p, double x0) {
  groove_profile out = p;
  for (auto& [x, y] : out.samples) x -= x0;
  return out;
}

double rss_at(const groove_profile& p, double B, const fit_config& cfg) {
  try {
    return fit_linear(p, B, cfg).residual_rss;
  } catch (const error&) {
    return std::numeric_limits<double>::infinity();
  }
}

// golden-section minimization on [lo, hi], returns the final bracket
std::pair<double, double> golden(const std::function<double(double)>& f, double lo, double hi,
                                 double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return {a, b};
}

// minimal Nelder-Mead, enough for the (log B, x0) landscape
Eigen::VectorXd nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& start, const Eigen::VectorXd& steps,
                            int max_iter) {
  const int d = int(start.size());
  std::vector<Eigen::VectorXd> pts(d + 1, start);
  std::vector<double> val(d + 1);
  for (int i = 0; i < d; ++i) pts[i + 1][i] += steps[i];
  for (int i = 0; i <= d; ++i) val[i] = f(pts[i]);

  for (int it = 0; it < max_iter; ++it) {
    std::vector<int> idx(d + 1);
    for (int i = 0; i <= d; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return val[a] < val[b]; });
    const int best = idx[0], worst = idx[d], second = idx[d - 1];
    if (std::abs(val[worst] - val[best]) <= 1e-14 * (1.0 + std::abs(val[best]))) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (int i = 0; i <= d; ++i)
      if (i != worst) centroid += pts[i];
    centroid /= d;

    Eigen::VectorXd refl = centroid + (centroid - pts[worst]);
    double frefl = f(refl);
    if (frefl < val[best]) {
      Eigen::VectorXd exp_pt = centroid + 2.0 * (centroid - pts[worst]);
      const double fexp = f(exp_pt);
      if (fexp < frefl) {
        pts[worst] = exp_pt;
        val[worst] = fexp;
      } else {
        pts[worst] = refl;
        val[worst] = frefl;
      }
    } else if (frefl < val[second]) {
      pts[worst] = refl;
      val[worst] = frefl;
    } else {
      Eigen::VectorXd contr = centroid + 0.5 * (pts[worst] - centroid);
      const double fcontr = f(contr);
      if (fcontr < val[worst]) {
        pts[worst] = contr;
        val[worst] = fcontr;
      } else {
        for (int i = 0; i <= d; ++i) {
          if (i == best) continue;
          pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
          val[i] = f(pts[i]);
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i <= d; ++i)
    if (val[i] < val[best]) best = i;
  return pts[best];
}

} // namespace

fit_result fit_with_B(const groove_profile& profile, const fit_config& config) {
  if (!config.fit_B && !config.fit_root_offset)
    return fit_linear(profile, profile.B_hint.value_or(config.fixed_B), config);

  double best_B = profile.B_hint.value_or(config.fixed_B);
  std::pair<double, double> bracket{best_B, best_B};

  if (config.fit_B) {
    const auto [B_min, B_max] = config.B_range;
    if (!(B_min > 0) || !(B_min < B_max))
      throw_error(errc::invalid_argument, "fit_with_B: need 0 < B_min < B_max");
    const int grid_n = 32;
    const double llo = std::log(B_min), lhi = std::log(B_max);
    std::vector<double> rss(grid_n);
    parallel_for_index(grid_n, [&](int i) {
      const double lb = llo + (lhi - llo) * i / (grid_n - 1);
      rss[i] = rss_at(profile, std::exp(lb), config);
    });
    int best = int(std::min_element(rss.begin(), rss.end()) - rss.begin());
    if (best == 0 || best == grid_n - 1 || !(rss[best] < rss[best - 1]) ||
        !(rss[best] < rss[best + 1]))
      throw_error(errc::no_minimum,
                  "fit_with_B: residual has no interior minimum across B_range");
    const double step = (lhi - llo) / (grid_n - 1);
    const double lb_best = llo + step * best;
    auto f = [&](double lb) { return rss_at(profile, std::exp(lb), config); };
    const auto [a, b] = golden(f, lb_best - step, lb_best + step, 1e-8);
    best_B = std::exp(0.5 * (a + b));
    bracket = {std::exp(a), std::exp(b)};
  }

  double offset = profile.root_hint.value_or(0.0);
  if (config.fit_root_offset) {
    const double scale = std::pow(best_B * profile.anneal_time, 0.25);
    if (config.fit_B) {
      Eigen::VectorXd start(2), steps(2);
      start << std::log(best_B), offset;
      steps << 0.05, 0.1 * scale;
      auto f = [&](const Eigen::VectorXd& v) {
        return rss_at(shifted(profile, v[1]), std::exp(v[0]), config);
      };
      const Eigen::VectorXd opt = nelder_mead(f, start, steps, 200);
      best_B = std::exp(opt[0]);
      offset = opt[1];
      bracket = {best_B, best_B};
    } else {
      auto f = [&](double x0) { return rss_at(shifted(profile, x0), best_B, config); };
      const auto [a, b] = golden(f, offset - 0.5 * scale, offset + 0.5 * scale, 1e-10 * scale);
      offset = 0.5 * (a + b);
    }
  }

  fit_result out = fit_linear(shifted(profile, offset), best_B, config);
  out.B_fitted = config.fit_B;
  out.B_bracket = bracket;
  out.root_offset = offset;
  return out;
}

// ---------------------------------------------------------------------------
// Model ranking

namespace {

double aicc(double rss, long n, int n_params) {
  const int K = n_params + 1; // + residual variance
  const double safe_rss = std::max(rss, 1e-300);
  double v = n * std::log(safe_rss / double(n)) + 2.0 * K;
  if (n - K - 1 > 0) v += 2.0 * K * (K + 1) / double(n - K - 1);
  return v;
}

} // namespace

std::vector<model_comparison_row> compare_models(const groove_profile& profile,
                                                 const fit_config& config) {
  struct candidate {
    const char* name;
    fit_model model;
    bool decay;
  };
  const candidate candidates[] = {
      {"mullins", fit_model::mullins, false},
      {"amram", fit_model::amram, false},
      {"general-decaying", fit_model::general4, true},
      {"general4", fit_model::general4, false},
  };

  const long n = long(profile.samples.size());
  std::vector<model_comparison_row> table;
  {
    model_comparison_row flat;
    flat.model = "flat";
    for (const auto& [x, y] : profile.samples) flat.rss += y * y;
    flat.n_params = 0;
    flat.aicc = aicc(flat.rss, n, 0);
    table.push_back(flat);
  }

  for (const auto& c : candidates) {
    fit_config cfg = config;
    cfg.model = c.model;
    cfg.decay_constraint = c.decay;
    fit_result fr;
    try {
      fr = fit_with_B(profile, cfg);
    } catch (const error& e) {
      if (e.code() != errc::no_minimum) throw;
      cfg.fit_B = false;
      fr = fit_with_B(profile, cfg);
    }
    model_comparison_row row;
    row.model = c.name;
    row.rss = fr.residual_rss;
    row.n_params = fr.n_params;
    row.aicc = aicc(fr.residual_rss, n, fr.n_params);
    table.push_back(row);
  }

  auto best = std::min_element(table.begin(), table.end(),
                               [](const auto& a, const auto& b) { return a.aicc < b.aicc; });
  best->preferred = true;
  return table;
}

std::array<double, 4> boundary_report(const similarity_coeffs& side, double t, double B) {
  return boundary_derivatives(side, t, physical_params{B, 0.0});
}

std::string fit_report_json(const fit_result& fit, const groove_profile& profile) {
  nlohmann::json j;
  j["schema"] = "groovekit-fit/1";
  j["t_seconds"] = profile.anneal_time;
  j["length_unit"] = profile.length_unit;
  j["n_samples"] = fit.n_samples;
  j["n_params"] = fit.n_params;
  j["rss"] = fit.residual_rss;
  j["B"] = {{"estimate", fit.B_estimate},
            {"fitted", fit.B_fitted},
            {"bracket", {fit.B_bracket.first, fit.B_bracket.second}}};
  j["root_offset"] = fit.root_offset;

  auto side_json = [&](const similarity_coeffs& C, const std::array<double, 4>& errs,
                       const std::array<double, 4>& bderivs, double cond) {
    nlohmann::json s;
    s["coeffs"] = C.c;
    s["stderr"] = errs;
    s["boundary_derivatives"] = bderivs;
    s["design_condition"] = cond;
    return s;
  };
  j["plus"] = side_json(fit.coeffs.plus, fit.stderr_plus, fit.boundary_plus, fit.condition_plus);
  j["minus"] =
      side_json(fit.coeffs.minus, fit.stderr_minus, fit.boundary_minus, fit.condition_minus);

  if (!fit.model_comparison.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : fit.model_comparison)
      rows.push_back({{"model", r.model},
                      {"rss", r.rss},
                      {"n_params", r.n_params},
                      {"aicc", r.aicc},
                      {"preferred", r.preferred}});
    j["model_comparison"] = rows;
  }
  return j.dump(2);
}

} // namespace groovekit
