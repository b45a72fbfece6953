#include "groovekit.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "groovekit/errors.hpp"
#include "groovekit/fitting.hpp"
#include "groovekit/pde.hpp"
#include "groovekit/solutions.hpp"
#include "groovekit/transforms.hpp"
#include "groovekit/verify.hpp"

namespace gk = groovekit;

// the C enum mirrors errc value for value
static_assert(GK_OK == int(gk::errc::ok));
static_assert(GK_INVALID_ARGUMENT == int(gk::errc::invalid_argument));
static_assert(GK_NON_CONVERGENCE == int(gk::errc::non_convergence));
static_assert(GK_DOMAIN == int(gk::errc::domain));
static_assert(GK_TRUNCATION == int(gk::errc::truncation));
static_assert(GK_QUADRATURE == int(gk::errc::quadrature));
static_assert(GK_CONTOUR == int(gk::errc::contour));
static_assert(GK_STABILITY == int(gk::errc::stability));
static_assert(GK_SOLVE == int(gk::errc::solve));
static_assert(GK_PARSE == int(gk::errc::parse));
static_assert(GK_UNIT == int(gk::errc::unit));
static_assert(GK_RANK_DEFICIENT == int(gk::errc::rank_deficient));
static_assert(GK_NO_MINIMUM == int(gk::errc::no_minimum));
static_assert(GK_IO == int(gk::errc::io));

struct gk_profile {
  gk::groove_profile p;
};

struct gk_fit_result {
  gk::fit_result fit;
  gk::groove_profile profile; // kept for the JSON report and model evaluation
};

struct gk_pde_result {
  gk::pde_result r;
};

namespace {

thread_local std::string last_error_message;

template <typename Fn>
gk_status guarded(Fn&& fn) {
  last_error_message.clear();
  try {
    fn();
    return GK_OK;
  } catch (const gk::error& e) {
    last_error_message = e.what();
    return gk_status(int(e.code()));
  } catch (const std::exception& e) {
    last_error_message = e.what();
    return GK_INVALID_ARGUMENT;
  }
}

gk_status fail(gk_status code, const char* message) {
  last_error_message = message;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

} // namespace

extern "C" {

const char* gk_version(void) { return "1.0.0"; }

const char* gk_last_error(void) { return last_error_message.c_str(); }

const char* gk_status_name(gk_status status) {
  switch (status) {
    case GK_OK: return "ok";
    case GK_INVALID_ARGUMENT: return "invalid_argument";
    case GK_NON_CONVERGENCE: return "non_convergence";
    case GK_DOMAIN: return "domain";
    case GK_TRUNCATION: return "truncation";
    case GK_QUADRATURE: return "quadrature";
    case GK_CONTOUR: return "contour";
    case GK_STABILITY: return "stability";
    case GK_SOLVE: return "solve";
    case GK_PARSE: return "parse";
    case GK_UNIT: return "unit";
    case GK_RANK_DEFICIENT: return "rank_deficient";
    case GK_NO_MINIMUM: return "no_minimum";
    case GK_IO: return "io";
  }
  return "unknown";
}

void gk_string_free(char* s) { delete[] s; }

// --- basis ----------------------------------------------------------------

gk_status gk_basis_z(int i, double u, double* out) {
  if (!out) return fail(GK_INVALID_ARGUMENT, "gk_basis_z: out is NULL");
  return guarded([&] { *out = gk::z(i, u); });
}

gk_status gk_basis_z_derivative(int i, int order, double u, double* out) {
  if (!out) return fail(GK_INVALID_ARGUMENT, "gk_basis_z_derivative: out is NULL");
  return guarded([&] { *out = gk::z_derivative(i, order, u); });
}

// --- solutions ------------------------------------------------------------

gk_status gk_solution_y(int i, double t, double x, double B, double* out) {
  if (!out) return fail(GK_INVALID_ARGUMENT, "gk_solution_y: out is NULL");
  return guarded([&] { *out = gk::y(i, t, x, B); });
}

gk_status gk_named_profile(const char* name, double t, double x, double B, double m, double* out) {
  if (!out || !name) return fail(GK_INVALID_ARGUMENT, "gk_named_profile: NULL argument");
  return guarded([&] {
    const gk::physical_params p{B, m};
    const std::string n = name;
    if (n == "mullins")
      *out = gk::mullins_solution(p, t, x);
    else if (n == "amram")
      *out = gk::amram_solution(p, t, x);
    else
      gk::throw_error(gk::errc::invalid_argument,
                      "gk_named_profile: unknown profile '" + n + "' (mullins|amram)");
  });
}

gk_status gk_groove_depth(double t, double B, double m, double* out) {
  if (!out) return fail(GK_INVALID_ARGUMENT, "gk_groove_depth: out is NULL");
  return guarded([&] { *out = gk::groove_depth(gk::physical_params{B, m}, t); });
}

gk_status gk_evaluate_coeffs(const double c_plus[4], const double c_minus[4], double t, double x,
                             double B, double* out) {
  if (!out || !c_plus || !c_minus)
    return fail(GK_INVALID_ARGUMENT, "gk_evaluate_coeffs: NULL argument");
  return guarded([&] {
    gk::two_sided_solution sol;
    sol.params = gk::physical_params{B, 0.0};
    for (int i = 0; i < 4; ++i) {
      sol.plus.c[std::size_t(i)] = c_plus[i];
      sol.minus.c[std::size_t(i)] = c_minus[i];
    }
    *out = gk::evaluate(sol, t, x);
  });
}

gk_status gk_boundary_derivatives(const double coeffs[4], double t, double B, double out[4]) {
  if (!out || !coeffs) return fail(GK_INVALID_ARGUMENT, "gk_boundary_derivatives: NULL argument");
  return guarded([&] {
    gk::similarity_coeffs c;
    for (int i = 0; i < 4; ++i) c.c[std::size_t(i)] = coeffs[i];
    const auto d = gk::boundary_derivatives(c, t, gk::physical_params{B, 0.0});
    for (int i = 0; i < 4; ++i) out[i] = d[std::size_t(i)];
  });
}

gk_status gk_coeffs_from_boundary(const double derivs[4], double t, double B, double out[4]) {
  if (!out || !derivs) return fail(GK_INVALID_ARGUMENT, "gk_coeffs_from_boundary: NULL argument");
  return guarded([&] {
    std::array<double, 4> d;
    for (int i = 0; i < 4; ++i) d[std::size_t(i)] = derivs[i];
    const auto c = gk::coeffs_from_boundary(d, t, gk::physical_params{B, 0.0});
    for (int i = 0; i < 4; ++i) out[i] = c.c[std::size_t(i)];
  });
}

// --- routes ---------------------------------------------------------------

gk_status gk_inverse_laplace_y(int i, double t, double x, double B, double* out) {
  if (!out) return fail(GK_INVALID_ARGUMENT, "gk_inverse_laplace_y: out is NULL");
  return guarded([&] { *out = gk::inverse_laplace(i, t, x, B); });
}

gk_status gk_fourier_y(int which, double t, double x, double B, double* out) {
  if (!out) return fail(GK_INVALID_ARGUMENT, "gk_fourier_y: out is NULL");
  return guarded([&] {
    if (which == 1)
      *out = gk::fourier_y1(t, x, B).value;
    else if (which == 2)
      *out = gk::fourier_y2(t, x, B).value;
    else
      gk::throw_error(gk::errc::invalid_argument, "gk_fourier_y: which must be 1 or 2");
  });
}

// --- verification -----------------------------------------------------------

gk_status gk_verify(const char* suite, int* all_passed, char** json_report) {
  if (!suite || !all_passed) return fail(GK_INVALID_ARGUMENT, "gk_verify: NULL argument");
  return guarded([&] {
    const gk::verify_report rep = gk::run_verify(suite);
    *all_passed = rep.all_passed ? 1 : 0;
    if (json_report) *json_report = dup_string(gk::verify_report_json(rep));
  });
}

// --- profiles ---------------------------------------------------------------

gk_status gk_profile_load_file(const char* path, gk_profile** out) {
  if (!path || !out) return fail(GK_INVALID_ARGUMENT, "gk_profile_load_file: NULL argument");
  return guarded([&] { *out = new gk_profile{gk::load_profile_file(path)}; });
}

gk_status gk_profile_parse(const char* csv_text, gk_profile** out) {
  if (!csv_text || !out) return fail(GK_INVALID_ARGUMENT, "gk_profile_parse: NULL argument");
  return guarded([&] {
    std::istringstream in(csv_text);
    *out = new gk_profile{gk::load_profile(in)};
  });
}

gk_status gk_profile_create(const double* x, const double* y, int n, double t_seconds,
                            gk_profile** out) {
  if (!x || !y || !out) return fail(GK_INVALID_ARGUMENT, "gk_profile_create: NULL argument");
  if (n <= 0) return fail(GK_INVALID_ARGUMENT, "gk_profile_create: n must be positive");
  return guarded([&] {
    if (t_seconds <= 0)
      gk::throw_error(gk::errc::invalid_argument, "gk_profile_create: t_seconds must be > 0");
    gk::groove_profile p;
    p.anneal_time = t_seconds;
    p.samples.reserve(std::size_t(n));
    for (int k = 0; k < n; ++k) p.samples.emplace_back(x[k], y[k]);
    if (n >= 2) {
      const bool increasing = p.samples[1].first > p.samples[0].first;
      for (int k = 1; k < n; ++k) {
        const double prev = p.samples[std::size_t(k) - 1].first;
        const double cur = p.samples[std::size_t(k)].first;
        if (cur == prev || (cur > prev) != increasing)
          gk::throw_error(gk::errc::invalid_argument,
                          "gk_profile_create: x must be strictly monotone");
      }
      if (!increasing) std::reverse(p.samples.begin(), p.samples.end());
    }
    *out = new gk_profile{std::move(p)};
  });
}

gk_status gk_profile_write_file(const gk_profile* p, const char* path) {
  if (!p || !path) return fail(GK_INVALID_ARGUMENT, "gk_profile_write_file: NULL argument");
  return guarded([&] {
    std::ofstream out(path);
    if (!out) gk::throw_error(gk::errc::io, std::string("cannot open '") + path + "' for writing");
    gk::write_profile_csv(out, p->p);
    if (!out) gk::throw_error(gk::errc::io, std::string("write to '") + path + "' failed");
  });
}

gk_status gk_profile_to_csv(const gk_profile* p, char** out) {
  if (!p || !out) return fail(GK_INVALID_ARGUMENT, "gk_profile_to_csv: NULL argument");
  return guarded([&] {
    std::ostringstream os;
    gk::write_profile_csv(os, p->p);
    *out = dup_string(os.str());
  });
}

int gk_profile_size(const gk_profile* p) { return p ? int(p->p.samples.size()) : 0; }

double gk_profile_time(const gk_profile* p) { return p ? p->p.anneal_time : 0.0; }

gk_status gk_profile_sample(const gk_profile* p, int k, double* x, double* y) {
  if (!p || !x || !y) return fail(GK_INVALID_ARGUMENT, "gk_profile_sample: NULL argument");
  if (k < 0 || k >= int(p->p.samples.size()))
    return fail(GK_INVALID_ARGUMENT, "gk_profile_sample: index out of range");
  *x = p->p.samples[std::size_t(k)].first;
  *y = p->p.samples[std::size_t(k)].second;
  return GK_OK;
}

void gk_profile_free(gk_profile* p) { delete p; }

// --- fitting -----------------------------------------------------------------

void gk_fit_options_init(gk_fit_options* opts) {
  if (!opts) return;
  opts->model = 0;
  opts->decay_constraint = 0;
  opts->continuity_constraint = 0;
  opts->fit_B = 0;
  opts->B_min = 0.1;
  opts->B_max = 10.0;
  opts->fixed_B = 1.0;
  opts->fit_root_offset = 0;
  opts->compare = 0;
}

gk_status gk_fit(const gk_profile* p, const gk_fit_options* opts, gk_fit_result** out) {
  if (!p || !opts || !out) return fail(GK_INVALID_ARGUMENT, "gk_fit: NULL argument");
  return guarded([&] {
    gk::fit_config cfg;
    switch (opts->model) {
      case 0: cfg.model = gk::fit_model::general4; break;
      case 1: cfg.model = gk::fit_model::mullins; break;
      case 2: cfg.model = gk::fit_model::amram; break;
      default:
        gk::throw_error(gk::errc::invalid_argument, "gk_fit: model must be 0, 1 or 2");
    }
    cfg.decay_constraint = opts->decay_constraint != 0;
    cfg.continuity_constraint = opts->continuity_constraint != 0;
    cfg.fit_B = opts->fit_B != 0;
    cfg.B_range = {opts->B_min, opts->B_max};
    cfg.fixed_B = opts->fixed_B;
    cfg.fit_root_offset = opts->fit_root_offset != 0;

    gk::fit_result fit = gk::fit_with_B(p->p, cfg);
    if (opts->compare) fit.model_comparison = gk::compare_models(p->p, cfg);
    *out = new gk_fit_result{std::move(fit), p->p};
  });
}

double gk_fit_rss(const gk_fit_result* f) { return f ? f->fit.residual_rss : 0.0; }

double gk_fit_B_estimate(const gk_fit_result* f) { return f ? f->fit.B_estimate : 0.0; }

double gk_fit_root_offset(const gk_fit_result* f) { return f ? f->fit.root_offset : 0.0; }

int gk_fit_n_params(const gk_fit_result* f) { return f ? f->fit.n_params : 0; }

void gk_fit_coeffs(const gk_fit_result* f, double plus[4], double minus[4]) {
  if (!f) return;
  for (int i = 0; i < 4; ++i) {
    if (plus) plus[i] = f->fit.coeffs.plus.c[std::size_t(i)];
    if (minus) minus[i] = f->fit.coeffs.minus.c[std::size_t(i)];
  }
}

void gk_fit_stderrs(const gk_fit_result* f, double plus[4], double minus[4]) {
  if (!f) return;
  for (int i = 0; i < 4; ++i) {
    if (plus) plus[i] = f->fit.stderr_plus[std::size_t(i)];
    if (minus) minus[i] = f->fit.stderr_minus[std::size_t(i)];
  }
}

void gk_fit_boundary(const gk_fit_result* f, double plus[4], double minus[4]) {
  if (!f) return;
  for (int i = 0; i < 4; ++i) {
    if (plus) plus[i] = f->fit.boundary_plus[std::size_t(i)];
    if (minus) minus[i] = f->fit.boundary_minus[std::size_t(i)];
  }
}

gk_status gk_fit_model_value(const gk_fit_result* f, double x, double* out) {
  if (!f || !out) return fail(GK_INVALID_ARGUMENT, "gk_fit_model_value: NULL argument");
  return guarded([&] {
    *out = gk::evaluate(f->fit.coeffs, f->profile.anneal_time, x - f->fit.root_offset);
  });
}

gk_status gk_fit_report(const gk_fit_result* f, char** json) {
  if (!f || !json) return fail(GK_INVALID_ARGUMENT, "gk_fit_report: NULL argument");
  return guarded([&] { *json = dup_string(gk::fit_report_json(f->fit, f->profile)); });
}

void gk_fit_result_free(gk_fit_result* f) { delete f; }

// --- pde oracle --------------------------------------------------------------

void gk_pde_options_init(gk_pde_options* opts) {
  if (!opts) return;
  const gk::grid_spec defaults;
  opts->domain_length = defaults.domain_length;
  opts->n_cells = defaults.n_cells;
  opts->dt = defaults.dt;
  opts->t_end = defaults.t_end;
  opts->theta = defaults.scheme_theta;
  opts->bc_family = 0;
  opts->has_slope = 0;
  opts->slope = 0.0;
  opts->has_curvature = 0;
  opts->curvature = 0.0;
  opts->has_third = 0;
  opts->third_derivative = 0.0;
  opts->B = 1.0;
  opts->m = 0.0;
  opts->output_times = nullptr;
  opts->n_output_times = 0;
}

gk_status gk_pde_solve(const gk_pde_options* opts, gk_pde_result** out) {
  if (!opts || !out) return fail(GK_INVALID_ARGUMENT, "gk_pde_solve: NULL argument");
  return guarded([&] {
    gk::grid_spec grid;
    grid.domain_length = opts->domain_length;
    grid.n_cells = opts->n_cells;
    grid.dt = opts->dt;
    grid.t_end = opts->t_end;
    grid.scheme_theta = opts->theta;
    if (opts->output_times && opts->n_output_times > 0)
      grid.output_times.assign(opts->output_times, opts->output_times + opts->n_output_times);

    gk::root_bc bc;
    switch (opts->bc_family) {
      case 0: bc.kind = gk::root_bc::family::mullins; break;
      case 1: bc.kind = gk::root_bc::family::amram; break;
      case 2: bc.kind = gk::root_bc::family::general; break;
      default:
        gk::throw_error(gk::errc::invalid_argument, "gk_pde_solve: bc_family must be 0, 1 or 2");
    }
    if (opts->has_slope) bc.slope = opts->slope;
    if (opts->has_curvature) bc.curvature = opts->curvature;
    if (opts->has_third) bc.third_deriv = opts->third_derivative;

    const gk::physical_params params{opts->B, opts->m};
    *out = new gk_pde_result{gk::solve(grid, bc, params)};
  });
}

int gk_pde_n_points(const gk_pde_result* r) { return r ? int(r->r.x.size()) : 0; }

int gk_pde_n_snapshots(const gk_pde_result* r) { return r ? int(r->r.times.size()) : 0; }

gk_status gk_pde_snapshot(const gk_pde_result* r, int k, double* t, double* x, double* y) {
  if (!r || !t) return fail(GK_INVALID_ARGUMENT, "gk_pde_snapshot: NULL argument");
  if (k < 0 || k >= int(r->r.times.size()))
    return fail(GK_INVALID_ARGUMENT, "gk_pde_snapshot: index out of range");
  *t = r->r.times[std::size_t(k)];
  const std::size_t n = r->r.x.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (x) x[j] = r->r.x[j];
    if (y) y[j] = r->r.profiles[std::size_t(k)][j];
  }
  return GK_OK;
}

int gk_pde_n_depth_samples(const gk_pde_result* r) {
  return r ? int(r->r.depth_series.size()) : 0;
}

gk_status gk_pde_depth_sample(const gk_pde_result* r, int k, double* t, double* depth) {
  if (!r || !t || !depth) return fail(GK_INVALID_ARGUMENT, "gk_pde_depth_sample: NULL argument");
  if (k < 0 || k >= int(r->r.depth_series.size()))
    return fail(GK_INVALID_ARGUMENT, "gk_pde_depth_sample: index out of range");
  *t = r->r.depth_series[std::size_t(k)].first;
  *depth = r->r.depth_series[std::size_t(k)].second;
  return GK_OK;
}

double gk_pde_mass_drift(const gk_pde_result* r) { return r ? r->r.max_mass_drift : 0.0; }

void gk_pde_result_free(gk_pde_result* r) { delete r; }

gk_status gk_depth_exponent(const double* t, const double* depth, int n, double* out) {
  if (!t || !depth || !out) return fail(GK_INVALID_ARGUMENT, "gk_depth_exponent: NULL argument");
  return guarded([&] {
    std::vector<std::pair<double, double>> series;
    series.reserve(std::size_t(std::max(n, 0)));
    for (int k = 0; k < n; ++k) series.emplace_back(t[k], depth[k]);
    *out = gk::measure_depth_exponent(series);
  });
}

} // extern "C"
