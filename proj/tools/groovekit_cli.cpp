// groovekit command line tool. Talks to the library through the C interface
// only. Every CSV written here goes through gk_profile_* so the output is
// guaranteed to load back through the fit subcommand.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <groovekit.h>

namespace {

int exit_for(gk_status s) {
  switch (s) {
    case GK_OK: return 0;
    case GK_PARSE:
    case GK_UNIT: return 4;
    case GK_RANK_DEFICIENT: return 5;
    case GK_NO_MINIMUM: return 6;
    case GK_STABILITY:
    case GK_SOLVE: return 7;
    default: return 3;
  }
}

int report_error(gk_status s) {
  std::fprintf(stderr, "error: %s\n", gk_last_error());
  return exit_for(s);
}

void warn_m_range(double m) {
  if (!(m > 0.0 && m < 1.0 / 3.0))
    std::fprintf(stderr,
                 "warning: m=%g is outside the shallow-slope range (0, 1/3); "
                 "the linearized model may be inaccurate\n",
                 m);
}

// "start:stop:step", endpoints included within half a step
bool parse_grid(const std::string& text, std::vector<double>& out) {
  double start = 0, stop = 0, step = 0;
  char trail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &trail) != 3) {
    std::fprintf(stderr, "error: grid must be start:stop:step, got '%s'\n", text.c_str());
    return false;
  }
  if (step == 0 || (stop - start) * step < 0) {
    std::fprintf(stderr, "error: grid step must be nonzero and point from start to stop\n");
    return false;
  }
  const double astep = std::abs(step);
  const double sgn = step > 0 ? 1.0 : -1.0;
  out.clear();
  for (long k = 0;; ++k) {
    double v = start + double(k) * step;
    if ((v - stop) * sgn > 0.5 * astep + 1e-12 * astep) break;
    if (std::abs(v) < 1e-9 * astep) v = 0.0;
    else if (std::abs(v - stop) < 1e-9 * astep) v = stop;
    out.push_back(v);
    if (out.size() > 10'000'000) {
      std::fprintf(stderr, "error: grid has more than 1e7 points\n");
      return false;
    }
  }
  return true;
}

// serializes through a profile handle so the format stays canonical
int emit_csv(const std::string& path, double t_seconds, const std::vector<double>& xs,
             const std::vector<double>& ys) {
  gk_profile* p = nullptr;
  gk_status s = gk_profile_create(xs.data(), ys.data(), int(xs.size()), t_seconds, &p);
  if (s != GK_OK) return report_error(s);
  if (path.empty()) {
    char* csv = nullptr;
    s = gk_profile_to_csv(p, &csv);
    if (s == GK_OK) std::fputs(csv, stdout);
    gk_string_free(csv);
  } else {
    s = gk_profile_write_file(p, path.c_str());
  }
  gk_profile_free(p);
  return s == GK_OK ? 0 : report_error(s);
}

int write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
    if (text.empty() || text.back() != '\n') std::fputc('\n', stdout);
    return 0;
  }
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n", path.c_str());
    return 3;
  }
  std::fputs(text.c_str(), f);
  std::fclose(f);
  return 0;
}

struct eval_args {
  std::string named;
  std::vector<double> coeffs;
  double t = 1.0;
  double B = 1.0;
  double m = 0.0;
  bool m_given = false;
  std::string u_grid, x_grid;
  std::string output;
};

int run_eval(const eval_args& a) {
  const bool have_named = !a.named.empty();
  const bool have_coeffs = !a.coeffs.empty();
  if (have_named == have_coeffs) {
    std::fprintf(stderr, "error: give exactly one of --named or --coeffs\n");
    return 2;
  }
  if (have_coeffs && a.coeffs.size() != 4 && a.coeffs.size() != 8) {
    std::fprintf(stderr, "error: --coeffs takes 4 values (both sides) or 8 (plus then minus)\n");
    return 2;
  }
  if (a.u_grid.empty() == a.x_grid.empty()) {
    std::fprintf(stderr, "error: give exactly one of --u or --x\n");
    return 2;
  }

  const bool z_named = have_named && a.named.size() == 2 && a.named[0] == 'z';
  const bool y_named = have_named && a.named.size() == 2 && a.named[0] == 'y';
  const bool profile_named = a.named == "mullins" || a.named == "amram";
  if (have_named && !z_named && !y_named && !profile_named) {
    std::fprintf(stderr, "error: --named must be mullins, amram, y1..y4 or z1..z4\n");
    return 2;
  }
  if (z_named && !a.x_grid.empty()) {
    std::fprintf(stderr, "error: z1..z4 are functions of the similarity variable; use --u\n");
    return 2;
  }
  if (profile_named && !a.m_given) {
    std::fprintf(stderr, "error: %s needs --m\n", a.named.c_str());
    return 2;
  }
  if (profile_named) warn_m_range(a.m);

  std::vector<double> grid;
  if (!parse_grid(a.u_grid.empty() ? a.x_grid : a.u_grid, grid)) return 2;
  const bool grid_is_u = !a.u_grid.empty();
  const double scale = std::pow(a.B * a.t, 0.25);

  double c_plus[4] = {0, 0, 0, 0}, c_minus[4] = {0, 0, 0, 0};
  if (have_coeffs) {
    for (int i = 0; i < 4; ++i) {
      c_plus[i] = a.coeffs[std::size_t(i)];
      c_minus[i] = a.coeffs.size() == 8 ? a.coeffs[std::size_t(i) + 4] : a.coeffs[std::size_t(i)];
    }
  }

  std::vector<double> ys;
  ys.reserve(grid.size());
  for (double g : grid) {
    const double x = grid_is_u ? g * scale : g;
    double v = 0;
    gk_status s = GK_OK;
    if (z_named) {
      s = gk_basis_z(a.named[1] - '0', g, &v);
    } else if (y_named) {
      s = gk_solution_y(a.named[1] - '0', a.t, x, a.B, &v);
    } else if (profile_named) {
      s = gk_named_profile(a.named.c_str(), a.t, x, a.B, a.m, &v);
    } else if (x == 0.0) {
      // the root itself: take the plus-side boundary value
      double derivs[4];
      s = gk_boundary_derivatives(c_plus, a.t, a.B, derivs);
      v = derivs[0];
    } else {
      s = gk_evaluate_coeffs(c_plus, c_minus, a.t, x, a.B, &v);
    }
    if (s != GK_OK) return report_error(s);
    ys.push_back(v);
  }
  return emit_csv(a.output, a.t, grid, ys);
}

struct basis_args {
  std::string fn;
  int derivative = 0;
  std::string u_grid;
  std::string output;
};

int run_basis(const basis_args& a) {
  std::vector<double> grid;
  if (!parse_grid(a.u_grid, grid)) return 2;
  std::vector<double> ys;
  ys.reserve(grid.size());
  for (double u : grid) {
    double v = 0;
    const gk_status s = gk_basis_z_derivative(a.fn[1] - '0', a.derivative, u, &v);
    if (s != GK_OK) return report_error(s);
    ys.push_back(v);
  }
  return emit_csv(a.output, 1.0, grid, ys);
}

int run_verify(const std::string& suite, const std::string& output) {
  int all_passed = 0;
  char* json = nullptr;
  const gk_status s = gk_verify(suite.c_str(), &all_passed, &json);
  if (s != GK_OK) return report_error(s);
  const int rc = write_text(output, json);
  gk_string_free(json);
  if (rc != 0) return rc;
  return all_passed ? 0 : 1;
}

struct oracle_args {
  double L = 30.0;
  int cells = 1024;
  double dt = 5e-4;
  double t_end = 1.0;
  double theta = 0.5;
  std::string bc = "mullins";
  double m = 0.2;
  double B = 1.0;
  double slope = 0, curvature = 0, third = 0;
  bool has_slope = false, has_curvature = false, has_third = false;
  std::vector<double> output_times;
  std::string prefix;
};

int run_oracle(const oracle_args& a) {
  if (a.bc != "general") warn_m_range(a.m);
  if (a.output_times.size() > 1 && a.prefix.empty()) {
    std::fprintf(stderr, "error: several snapshot times need --out-prefix\n");
    return 2;
  }

  gk_pde_options o;
  gk_pde_options_init(&o);
  o.domain_length = a.L;
  o.n_cells = a.cells;
  o.dt = a.dt;
  o.t_end = a.t_end;
  o.theta = a.theta;
  o.bc_family = a.bc == "mullins" ? 0 : (a.bc == "amram" ? 1 : 2);
  o.B = a.B;
  o.m = a.m;
  if (a.has_slope) { o.has_slope = 1; o.slope = a.slope; }
  if (a.has_curvature) { o.has_curvature = 1; o.curvature = a.curvature; }
  if (a.has_third) { o.has_third = 1; o.third_derivative = a.third; }
  if (!a.output_times.empty()) {
    o.output_times = a.output_times.data();
    o.n_output_times = int(a.output_times.size());
  }

  gk_pde_result* r = nullptr;
  gk_status s = gk_pde_solve(&o, &r);
  if (s != GK_OK) return report_error(s);

  const std::size_t n = std::size_t(gk_pde_n_points(r));
  std::vector<double> x(n), y(n);
  for (int k = 0; k < gk_pde_n_snapshots(r); ++k) {
    double t_snap = 0;
    s = gk_pde_snapshot(r, k, &t_snap, x.data(), y.data());
    if (s != GK_OK) { gk_pde_result_free(r); return report_error(s); }
    const std::string path =
        a.prefix.empty() ? std::string() : a.prefix + "_snapshot_" + std::to_string(k + 1) + ".csv";
    const int rc = emit_csv(path, t_snap, x, y);
    if (rc != 0) { gk_pde_result_free(r); return rc; }
  }

  if (!a.prefix.empty()) {
    const std::size_t nd = std::size_t(gk_pde_n_depth_samples(r));
    std::vector<double> td(nd), depth(nd);
    for (std::size_t k = 0; k < nd; ++k) {
      s = gk_pde_depth_sample(r, int(k), &td[k], &depth[k]);
      if (s != GK_OK) { gk_pde_result_free(r); return report_error(s); }
    }
    // time in the x column, groove depth in the y column
    const int rc = emit_csv(a.prefix + "_depth.csv", a.t_end, td, depth);
    if (rc != 0) { gk_pde_result_free(r); return rc; }
  }
  gk_pde_result_free(r);
  return 0;
}

struct fit_args {
  std::string input;
  std::string model = "general4";
  bool decay = false, continuity = false, fit_B = false, fit_offset = false, compare = false;
  double B_min = 0.1, B_max = 10.0, fixed_B = 1.0;
  std::string json_path;
  std::string emit_model;
};

int run_fit(const fit_args& a, bool force_compare) {
  gk_profile* p = nullptr;
  gk_status s = gk_profile_load_file(a.input.c_str(), &p);
  if (s != GK_OK) return report_error(s);

  gk_fit_options o;
  gk_fit_options_init(&o);
  o.model = a.model == "mullins" ? 1 : (a.model == "amram" ? 2 : 0);
  o.decay_constraint = a.decay ? 1 : 0;
  o.continuity_constraint = a.continuity ? 1 : 0;
  o.fit_B = a.fit_B ? 1 : 0;
  o.B_min = a.B_min;
  o.B_max = a.B_max;
  o.fixed_B = a.fixed_B;
  o.fit_root_offset = a.fit_offset ? 1 : 0;
  o.compare = (a.compare || force_compare) ? 1 : 0;

  gk_fit_result* fit = nullptr;
  s = gk_fit(p, &o, &fit);
  if (s != GK_OK) { gk_profile_free(p); return report_error(s); }

  char* json = nullptr;
  s = gk_fit_report(fit, &json);
  int rc = s == GK_OK ? write_text(a.json_path, json) : report_error(s);
  gk_string_free(json);

  if (rc == 0 && !a.emit_model.empty()) {
    const std::size_t n = std::size_t(gk_profile_size(p));
    std::vector<double> xs(n), ys(n);
    double boundary_plus[4];
    gk_fit_boundary(fit, boundary_plus, nullptr);
    for (std::size_t k = 0; k < n; ++k) {
      double xv = 0, yv = 0;
      gk_profile_sample(p, int(k), &xv, &yv);
      double model_v = 0;
      if (gk_fit_model_value(fit, xv, &model_v) != GK_OK)
        model_v = boundary_plus[0]; // sample sits exactly on the fitted root
      xs[k] = xv;
      ys[k] = model_v;
    }
    rc = emit_csv(a.emit_model, gk_profile_time(p), xs, ys);
  }

  gk_fit_result_free(fit);
  gk_profile_free(p);
  return rc;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-similar thermal-groove profiles: evaluation, verification, "
               "finite-difference oracle and data fitting"};
  app.require_subcommand(1);

  eval_args ea;
  auto* eval = app.add_subcommand("eval", "evaluate a solution on a grid, emit CSV");
  eval->add_option("--named", ea.named, "mullins | amram | y1..y4 | z1..z4");
  eval->add_option("--coeffs", ea.coeffs, "4 or 8 basis weights (plus side, then minus)")
      ->delimiter(',');
  eval->add_option("--t", ea.t, "anneal time in seconds")->check(CLI::PositiveNumber);
  eval->add_option("--B", ea.B, "Mullins coefficient")->check(CLI::PositiveNumber);
  auto* m_opt = eval->add_option("--m", ea.m, "groove-root slope parameter");
  eval->add_option("--u", ea.u_grid, "similarity-variable grid start:stop:step");
  eval->add_option("--x", ea.x_grid, "physical-coordinate grid start:stop:step");
  eval->add_option("-o,--output", ea.output, "output CSV path (default stdout)");

  basis_args ba;
  auto* basis = app.add_subcommand("basis", "tabulate one basis function z_i");
  basis->add_option("--fn", ba.fn, "z1 | z2 | z3 | z4")
      ->required()
      ->check(CLI::IsMember({"z1", "z2", "z3", "z4"}));
  basis->add_option("--derivative", ba.derivative, "derivative order 0..4")
      ->check(CLI::Range(0, 4));
  basis->add_option("--u", ba.u_grid, "grid start:stop:step")->required();
  basis->add_option("-o,--output", ba.output, "output CSV path (default stdout)");

  std::string verify_suite = "all", verify_output;
  auto* verify = app.add_subcommand("verify", "run the invariant checks, emit JSON");
  verify->add_option("suite", verify_suite, "identities | routes | asymptotics | all")
      ->check(CLI::IsMember({"identities", "routes", "asymptotics", "all"}));
  verify->add_option("-o,--output", verify_output, "output JSON path (default stdout)");

  oracle_args oa;
  auto* oracle = app.add_subcommand("oracle", "finite-difference initial-value solve");
  oracle->add_option("--domain-length", oa.L, "domain length")->check(CLI::PositiveNumber);
  oracle->add_option("--cells", oa.cells, "number of cells")->check(CLI::PositiveNumber);
  oracle->add_option("--dt", oa.dt, "time step")->check(CLI::PositiveNumber);
  oracle->add_option("--t-end", oa.t_end, "final time")->check(CLI::PositiveNumber);
  oracle->add_option("--theta", oa.theta, "time scheme: 1 implicit Euler, 0.5 Crank-Nicolson");
  oracle->add_option("--bc", oa.bc, "root conditions: mullins | amram | general")
      ->check(CLI::IsMember({"mullins", "amram", "general"}));
  oracle->add_option("--m", oa.m, "groove-root slope parameter");
  oracle->add_option("--B", oa.B, "Mullins coefficient")->check(CLI::PositiveNumber);
  auto* slope_opt = oracle->add_option("--slope", oa.slope, "general bc: y_x at the root");
  auto* curv_opt = oracle->add_option("--curvature", oa.curvature, "general bc: y_xx at the root");
  auto* third_opt = oracle->add_option("--third", oa.third, "general bc: y_xxx at the root");
  oracle->add_option("--output-times", oa.output_times, "snapshot times (default t-end)")
      ->delimiter(',');
  oracle->add_option("--out-prefix", oa.prefix,
                     "write <prefix>_snapshot_<k>.csv and <prefix>_depth.csv "
                     "(default: single snapshot to stdout)");

  fit_args fa;
  auto* fit = app.add_subcommand("fit", "fit a measured profile, emit a JSON report");
  auto* cmp = app.add_subcommand("compare", "fit and rank the candidate models");
  for (CLI::App* sub : {fit, cmp}) {
    sub->add_option("input", fa.input, "profile CSV path")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--model", fa.model, "general4 | mullins | amram")
        ->check(CLI::IsMember({"general4", "mullins", "amram"}));
    sub->add_flag("--decay", fa.decay, "restrict each side to its decaying pair");
    sub->add_flag("--continuity", fa.continuity, "tie the profile value across the root");
    sub->add_flag("--fit-B", fa.fit_B, "search the Mullins coefficient");
    sub->add_option("--B-min", fa.B_min, "search range lower edge")->check(CLI::PositiveNumber);
    sub->add_option("--B-max", fa.B_max, "search range upper edge")->check(CLI::PositiveNumber);
    sub->add_option("--B", fa.fixed_B, "assumed B when not searching and the file has no hint")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--fit-offset", fa.fit_offset, "search the groove-root x offset");
    sub->add_option("--json", fa.json_path, "report path (default stdout)");
  }
  fit->add_flag("--compare", fa.compare, "include the model ranking in the report");
  fit->add_option("--emit-model", fa.emit_model, "write the fitted curve on the data grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  ea.m_given = m_opt->count() > 0;
  oa.has_slope = slope_opt->count() > 0;
  oa.has_curvature = curv_opt->count() > 0;
  oa.has_third = third_opt->count() > 0;

  if (eval->parsed()) return run_eval(ea);
  if (basis->parsed()) return run_basis(ba);
  if (verify->parsed()) return run_verify(verify_suite, verify_output);
  if (oracle->parsed()) return run_oracle(oa);
  if (fit->parsed()) return run_fit(fa, false);
  if (cmp->parsed()) return run_fit(fa, true);
  return 2;
}
