#ifndef GROOVEKIT_H
#define GROOVEKIT_H

/* C interface to the groovekit library: self-similar solutions of the linear
 * surface-diffusion equation y_t + B y_xxxx = 0, their cross-validation
 * routes, a finite-difference oracle, and groove-profile fitting.
 *
 * Conventions:
 *   - every fallible call returns gk_status; 0 (GK_OK) means success
 *   - on failure, gk_last_error() describes the problem (thread-local)
 *   - char** outputs are allocated by the library; release with gk_string_free
 *   - opaque handles are released with their matching *_free function
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gk_status {
  GK_OK = 0,
  GK_INVALID_ARGUMENT,
  GK_NON_CONVERGENCE,
  GK_DOMAIN,
  GK_TRUNCATION,
  GK_QUADRATURE,
  GK_CONTOUR,
  GK_STABILITY,
  GK_SOLVE,
  GK_PARSE,
  GK_UNIT,
  GK_RANK_DEFICIENT,
  GK_NO_MINIMUM,
  GK_IO
} gk_status;

const char* gk_version(void);
/* Message for the most recent failing call on this thread ("" after success). */
const char* gk_last_error(void);
/* Stable identifier for a status value, e.g. "rank_deficient". */
const char* gk_status_name(gk_status status);
void gk_string_free(char* s);

/* --- similarity basis z1..z4 ------------------------------------------- */

/* z_i(u), i in 1..4. */
gk_status gk_basis_z(int i, double u, double* out);
/* d^order z_i / du^order, order in 0..4. */
gk_status gk_basis_z_derivative(int i, int order, double u, double* out);

/* --- similarity solutions ---------------------------------------------- */

/* y_i(t, x): y1, y2 decay as x -> +inf, y3, y4 as x -> -inf. */
gk_status gk_solution_y(int i, double t, double x, double B, double* out);
/* name is "mullins" or "amram"; m is the groove-root slope parameter. */
gk_status gk_named_profile(const char* name, double t, double x, double B, double m, double* out);
/* Mullins root depth -m (Bt)^{1/4} / (2 sqrt(2) Gamma(5/4)). */
gk_status gk_groove_depth(double t, double B, double m, double* out);
/* Two-sided evaluation: c_plus weights z1..z4 for x > 0, c_minus for x < 0.
 * The root x = 0 itself is not a valid sample point. */
gk_status gk_evaluate_coeffs(const double c_plus[4], const double c_minus[4], double t, double x,
                             double B, double* out);
/* derivs = (value, slope, curvature, third derivative) at the root. */
gk_status gk_boundary_derivatives(const double coeffs[4], double t, double B, double out[4]);
gk_status gk_coeffs_from_boundary(const double derivs[4], double t, double B, double out[4]);

/* --- independent evaluation routes ------------------------------------- */

/* Talbot-contour numerical inverse Laplace transform of y_i; valid on the
 * side where y_i decays (x >= 0 for i in {1,2}, x <= 0 for i in {3,4}). */
gk_status gk_inverse_laplace_y(int i, double t, double x, double B, double* out);
/* Fourier-cosine integral solutions (which = 1 or 2), x >= 0. */
gk_status gk_fourier_y(int which, double t, double x, double B, double* out);

/* --- verification -------------------------------------------------------- */

/* suite: "identities", "routes", "asymptotics" or "all". all_passed gets 1/0.
 * json_report (optional, may be NULL) receives the full schema-versioned
 * report; free with gk_string_free. Individual check failures set *all_passed
 * to 0 but still return GK_OK. */
gk_status gk_verify(const char* suite, int* all_passed, char** json_report);

/* --- measured profiles --------------------------------------------------- */

typedef struct gk_profile gk_profile;

/* CSV format: `# t_seconds=<v>` metadata (required), optional `# B_hint=<v>`
 * and `# root_hint=<v>`, header `x_nm,y_nm` or `x_um,y_um`, then `x,y` rows
 * with strictly monotone x. */
gk_status gk_profile_load_file(const char* path, gk_profile** out);
gk_status gk_profile_parse(const char* csv_text, gk_profile** out);
/* Builds a profile from arrays (unit "nm"); x must be strictly monotone. */
gk_status gk_profile_create(const double* x, const double* y, int n, double t_seconds,
                            gk_profile** out);
gk_status gk_profile_write_file(const gk_profile* p, const char* path);
/* Same CSV text as gk_profile_write_file; free with gk_string_free. */
gk_status gk_profile_to_csv(const gk_profile* p, char** out);
int gk_profile_size(const gk_profile* p);
double gk_profile_time(const gk_profile* p);
gk_status gk_profile_sample(const gk_profile* p, int k, double* x, double* y);
void gk_profile_free(gk_profile* p);

/* --- fitting ------------------------------------------------------------- */

typedef struct gk_fit_options {
  int model;                /* 0 general4, 1 mullins, 2 amram */
  int decay_constraint;     /* restrict each side to its decaying pair */
  int continuity_constraint;/* tie the profile value across the root */
  int fit_B;                /* search B over [B_min, B_max] */
  double B_min;
  double B_max;
  double fixed_B;           /* used when fit_B is off and the file has no B_hint */
  int fit_root_offset;      /* search the groove-root x offset */
  int compare;              /* also rank flat/mullins/amram/decaying/general4 */
} gk_fit_options;

void gk_fit_options_init(gk_fit_options* opts);

typedef struct gk_fit_result gk_fit_result;

gk_status gk_fit(const gk_profile* p, const gk_fit_options* opts, gk_fit_result** out);
double gk_fit_rss(const gk_fit_result* f);
double gk_fit_B_estimate(const gk_fit_result* f);
double gk_fit_root_offset(const gk_fit_result* f);
int gk_fit_n_params(const gk_fit_result* f);
void gk_fit_coeffs(const gk_fit_result* f, double plus[4], double minus[4]);
void gk_fit_stderrs(const gk_fit_result* f, double plus[4], double minus[4]);
/* (value, slope, curvature, third derivative) at the root per side. */
void gk_fit_boundary(const gk_fit_result* f, double plus[4], double minus[4]);
/* Fitted model evaluated at a profile coordinate (root offset applied). */
gk_status gk_fit_model_value(const gk_fit_result* f, double x, double* out);
/* Schema "groovekit-fit/1" JSON; free with gk_string_free. */
gk_status gk_fit_report(const gk_fit_result* f, char** json);
void gk_fit_result_free(gk_fit_result* f);

/* --- finite-difference oracle -------------------------------------------- */

typedef struct gk_pde_options {
  double domain_length;
  int n_cells;
  double dt;
  double t_end;
  double theta;             /* 1 = implicit Euler, 0.5 = Crank-Nicolson */
  int bc_family;            /* 0 mullins, 1 amram, 2 general */
  int has_slope;            /* general bc: exactly two of the three set */
  double slope;
  int has_curvature;
  double curvature;
  int has_third;
  double third_derivative;
  double B;
  double m;
  const double* output_times; /* NULL -> snapshot at t_end only */
  int n_output_times;
} gk_pde_options;

void gk_pde_options_init(gk_pde_options* opts);

typedef struct gk_pde_result gk_pde_result;

gk_status gk_pde_solve(const gk_pde_options* opts, gk_pde_result** out);
int gk_pde_n_points(const gk_pde_result* r);
int gk_pde_n_snapshots(const gk_pde_result* r);
/* Fills t and, when non-NULL, x[] and y[] (each gk_pde_n_points long). */
gk_status gk_pde_snapshot(const gk_pde_result* r, int k, double* t, double* x, double* y);
int gk_pde_n_depth_samples(const gk_pde_result* r);
gk_status gk_pde_depth_sample(const gk_pde_result* r, int k, double* t, double* depth);
double gk_pde_mass_drift(const gk_pde_result* r);
void gk_pde_result_free(gk_pde_result* r);

/* Least-squares slope of log|depth| vs log t (the t^{1/4} law check). */
gk_status gk_depth_exponent(const double* t, const double* depth, int n, double* out);

#ifdef __cplusplus
}
#endif

#endif /* GROOVEKIT_H */
