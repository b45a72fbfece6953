#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include <doctest.h>

#include <groovekit.h>

namespace {

const char* good_csv =
    "# t_seconds=120\n"
    "x_nm,y_nm\n"
    "-2.0,0.5\n"
    "-1.0,0.25\n"
    "1.0,0.3\n"
    "2.0,0.6\n";

std::string last() { return gk_last_error(); }

} // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(gk_version()) == "1.0.0");
  CHECK(std::string(gk_status_name(GK_OK)) == "ok");
  CHECK(std::string(gk_status_name(GK_PARSE)) == "parse");
  CHECK(std::string(gk_status_name(GK_UNIT)) == "unit");
  CHECK(std::string(gk_status_name(GK_RANK_DEFICIENT)) == "rank_deficient");
  CHECK(std::string(gk_status_name(GK_NO_MINIMUM)) == "no_minimum");
  CHECK(std::string(gk_status_name(GK_IO)) == "io");
  CHECK(std::string(gk_status_name(gk_status(99))) == "unknown");
}

TEST_CASE("basis evaluation and argument checking") {
  double v = 0.0;
  REQUIRE(gk_basis_z(2, 0.7, &v) == GK_OK);
  CHECK(v == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(last().empty());

  // z_i^(j-1)(0) = delta_ij (j-1)!
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      REQUIRE(gk_basis_z_derivative(i, j - 1, 0.0, &v) == GK_OK);
      const double expected = (i == j) ? std::tgamma(double(j)) : 0.0;
      CHECK(std::abs(v - expected) < 1e-12);
    }
  }

  CHECK(gk_basis_z(5, 0.0, &v) == GK_INVALID_ARGUMENT);
  CHECK_FALSE(last().empty());
  CHECK(gk_basis_z(1, 0.0, nullptr) == GK_INVALID_ARGUMENT);

  // success clears the sticky message
  REQUIRE(gk_basis_z(1, 0.0, &v) == GK_OK);
  CHECK(last().empty());
}

TEST_CASE("named profiles compose from the y_i") {
  const double t = 2.0, B = 1.3, m = 0.2, x = 1.7;
  double y1 = 0, y2 = 0, named = 0;
  REQUIRE(gk_solution_y(1, t, x, B, &y1) == GK_OK);
  REQUIRE(gk_solution_y(2, t, x, B, &y2) == GK_OK);

  REQUIRE(gk_named_profile("mullins", t, x, B, m, &named) == GK_OK);
  CHECK(named == doctest::Approx(m / (2.0 * std::sqrt(2.0)) * (y1 - y2)).epsilon(1e-12));

  REQUIRE(gk_named_profile("amram", t, x, B, m, &named) == GK_OK);
  CHECK(named == doctest::Approx(-m / std::sqrt(2.0) * y2).epsilon(1e-12));

  CHECK(gk_named_profile("parabola", t, x, B, m, &named) == GK_INVALID_ARGUMENT);

  double depth = 0;
  REQUIRE(gk_groove_depth(t, B, m, &depth) == GK_OK);
  const double closed = -m * std::pow(B * t, 0.25) / (2.0 * std::sqrt(2.0) * std::tgamma(1.25));
  CHECK(depth == doctest::Approx(closed).epsilon(1e-13));
}

TEST_CASE("coefficient evaluation and boundary round trip") {
  // weights (0,1,0,0) pick out z2(u) = u, so y = (Bt)^{1/4} u = x exactly
  const double plus[4] = {0, 1, 0, 0};
  const double minus[4] = {0, 0, 0, 0};
  double v = 0;
  REQUIRE(gk_evaluate_coeffs(plus, minus, 1.0, 2.0, 1.0, &v) == GK_OK);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-14));

  const double derivs[4] = {-2.0, 0.15, 0.01, -0.005};
  double coeffs[4], back[4];
  REQUIRE(gk_coeffs_from_boundary(derivs, 3.0, 0.7, coeffs) == GK_OK);
  REQUIRE(gk_boundary_derivatives(coeffs, 3.0, 0.7, back) == GK_OK);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(back[i] - derivs[i]) < 1e-10);
}

TEST_CASE("transform routes agree with the series") {
  double v = 0;
  REQUIRE(gk_inverse_laplace_y(2, 1.0, 0.0, 1.0, &v) == GK_OK);
  CHECK(v == doctest::Approx(1.0 / std::tgamma(1.25)).epsilon(1e-7));

  CHECK(gk_inverse_laplace_y(2, 1.0, -1.0, 1.0, &v) == GK_DOMAIN);

  const double t = 1.5, B = 0.8, x = 1.2;
  double y1 = 0, y2 = 0, f1 = 0;
  REQUIRE(gk_solution_y(1, t, x, B, &y1) == GK_OK);
  REQUIRE(gk_solution_y(2, t, x, B, &y2) == GK_OK);
  REQUIRE(gk_fourier_y(1, t, x, B, &f1) == GK_OK);
  CHECK(f1 == doctest::Approx((y1 - y2) / std::sqrt(2.0)).epsilon(1e-7));

  CHECK(gk_fourier_y(3, t, x, B, &f1) == GK_INVALID_ARGUMENT);
}

TEST_CASE("verify suites run through the C surface") {
  int ok = 0;
  char* json = nullptr;
  REQUIRE(gk_verify("identities", &ok, &json) == GK_OK);
  CHECK(ok == 1);
  REQUIRE(json != nullptr);
  CHECK(std::string(json).find("groovekit-verify/1") != std::string::npos);
  gk_string_free(json);

  // report pointer is optional
  REQUIRE(gk_verify("asymptotics", &ok, nullptr) == GK_OK);
  CHECK(ok == 1);

  CHECK(gk_verify("nope", &ok, nullptr) == GK_INVALID_ARGUMENT);
}

TEST_CASE("profile parsing, errors, and sample access") {
  gk_profile* p = nullptr;
  REQUIRE(gk_profile_parse(good_csv, &p) == GK_OK);
  REQUIRE(p != nullptr);
  CHECK(gk_profile_size(p) == 4);
  CHECK(gk_profile_time(p) == doctest::Approx(120.0));
  double x = 0, y = 0;
  REQUIRE(gk_profile_sample(p, 0, &x, &y) == GK_OK);
  CHECK(x == doctest::Approx(-2.0));
  CHECK(y == doctest::Approx(0.5));
  CHECK(gk_profile_sample(p, 4, &x, &y) == GK_INVALID_ARGUMENT);
  gk_profile_free(p);

  p = nullptr;
  CHECK(gk_profile_parse("# t_seconds=10\nx_nm,y_nm\n1.0,abc\n", &p) == GK_PARSE);
  CHECK(last().find("line") != std::string::npos);
  CHECK(p == nullptr);

  CHECK(gk_profile_parse("# t_seconds=10\nx_mm,y_mm\n1.0,2.0\n", &p) == GK_UNIT);
}

TEST_CASE("profile creation from arrays") {
  const double xs_desc[4] = {2.0, 1.0, -1.0, -2.0};
  const double ys_desc[4] = {0.6, 0.3, 0.25, 0.5};
  gk_profile* p = nullptr;
  REQUIRE(gk_profile_create(xs_desc, ys_desc, 4, 60.0, &p) == GK_OK);
  double x = 0, y = 0;
  REQUIRE(gk_profile_sample(p, 0, &x, &y) == GK_OK);
  CHECK(x == doctest::Approx(-2.0)); // stored ascending
  CHECK(y == doctest::Approx(0.5));
  gk_profile_free(p);

  const double xs_dup[3] = {0.5, 0.5, 1.0};
  const double ys[3] = {1, 2, 3};
  p = nullptr;
  CHECK(gk_profile_create(xs_dup, ys, 3, 60.0, &p) == GK_INVALID_ARGUMENT);
  CHECK(gk_profile_create(xs_desc, ys_desc, 0, 60.0, &p) == GK_INVALID_ARGUMENT);
  CHECK(gk_profile_create(xs_desc, ys_desc, 4, 0.0, &p) == GK_INVALID_ARGUMENT);
}

TEST_CASE("profile file round trip") {
  gk_profile* p = nullptr;
  REQUIRE(gk_profile_parse(good_csv, &p) == GK_OK);
  const char* path = "capi_roundtrip_tmp.csv";
  REQUIRE(gk_profile_write_file(p, path) == GK_OK);

  gk_profile* q = nullptr;
  REQUIRE(gk_profile_load_file(path, &q) == GK_OK);
  REQUIRE(gk_profile_size(q) == gk_profile_size(p));
  CHECK(gk_profile_time(q) == doctest::Approx(gk_profile_time(p)));
  for (int k = 0; k < gk_profile_size(p); ++k) {
    double xa, ya, xb, yb;
    REQUIRE(gk_profile_sample(p, k, &xa, &ya) == GK_OK);
    REQUIRE(gk_profile_sample(q, k, &xb, &yb) == GK_OK);
    CHECK(std::abs(xa - xb) < 1e-12);
    CHECK(std::abs(ya - yb) < 1e-12);
  }
  gk_profile_free(q);
  std::remove(path);

  // string serialization matches the file format
  char* csv = nullptr;
  REQUIRE(gk_profile_to_csv(p, &csv) == GK_OK);
  REQUIRE(csv != nullptr);
  gk_profile* r = nullptr;
  REQUIRE(gk_profile_parse(csv, &r) == GK_OK);
  CHECK(gk_profile_size(r) == gk_profile_size(p));
  gk_string_free(csv);
  gk_profile_free(r);
  gk_profile_free(p);

  CHECK(gk_profile_load_file("no_such_file_anywhere.csv", &q) == GK_IO);
}

TEST_CASE("fit recovers a synthetic groove") {
  const double t = 2.0, B = 1.3, m = 0.2;
  std::vector<double> xs, ys;
  for (int k = -24; k <= 24; ++k) {
    if (k == 0) continue;
    const double x = 0.25 * k;
    double v = 0;
    REQUIRE(gk_named_profile("mullins", t, x, B, m, &v) == GK_OK);
    xs.push_back(x);
    ys.push_back(v);
  }
  gk_profile* p = nullptr;
  REQUIRE(gk_profile_create(xs.data(), ys.data(), int(xs.size()), t, &p) == GK_OK);

  gk_fit_options opts;
  gk_fit_options_init(&opts);
  opts.model = 1; // mullins
  opts.fixed_B = B;
  opts.compare = 1;

  gk_fit_result* fit = nullptr;
  REQUIRE(gk_fit(p, &opts, &fit) == GK_OK);
  CHECK(gk_fit_rss(fit) < 1e-18);
  CHECK(gk_fit_B_estimate(fit) == doctest::Approx(B));
  CHECK(gk_fit_root_offset(fit) == 0.0);
  CHECK(gk_fit_n_params(fit) >= 1);

  double bp[4], bm[4];
  gk_fit_boundary(fit, bp, bm);
  CHECK(2.0 * bp[1] == doctest::Approx(m).epsilon(1e-10));
  CHECK(2.0 * bm[1] == doctest::Approx(-m).epsilon(1e-10)); // even profile, mirrored slope

  double cp[4], cm[4], sp[4], sm[4];
  gk_fit_coeffs(fit, cp, cm);
  gk_fit_stderrs(fit, sp, sm);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::isfinite(cp[i]));
    CHECK(std::isfinite(sp[i]));
    CHECK(std::isfinite(cm[i]));
    CHECK(std::isfinite(sm[i]));
  }

  double model = 0, truth = 0;
  REQUIRE(gk_fit_model_value(fit, 1.0, &model) == GK_OK);
  REQUIRE(gk_named_profile("mullins", t, 1.0, B, m, &truth) == GK_OK);
  CHECK(model == doctest::Approx(truth).epsilon(1e-9));

  char* json = nullptr;
  REQUIRE(gk_fit_report(fit, &json) == GK_OK);
  REQUIRE(json != nullptr);
  const std::string report = json;
  CHECK(report.find("groovekit-fit/1") != std::string::npos);
  CHECK(report.find("model_comparison") != std::string::npos);
  CHECK(report.find("preferred") != std::string::npos);
  gk_string_free(json);

  gk_fit_result_free(fit);
  gk_profile_free(p);
}

TEST_CASE("fit error paths surface as status codes") {
  // flat data has no interior optimum in B
  std::vector<double> xs, ys;
  for (int k = -10; k <= 10; ++k) {
    if (k == 0) continue;
    xs.push_back(0.5 * k);
    ys.push_back(0.0);
  }
  gk_profile* p = nullptr;
  REQUIRE(gk_profile_create(xs.data(), ys.data(), int(xs.size()), 1.0, &p) == GK_OK);

  gk_fit_options opts;
  gk_fit_options_init(&opts);
  opts.fit_B = 1;
  gk_fit_result* fit = nullptr;
  CHECK(gk_fit(p, &opts, &fit) == GK_NO_MINIMUM);
  CHECK_FALSE(last().empty());
  gk_profile_free(p);

  opts.fit_B = 0;
  opts.model = 7;
  CHECK(gk_fit(nullptr, &opts, &fit) == GK_INVALID_ARGUMENT);
}

TEST_CASE("pde oracle smoke run") {
  gk_pde_options opts;
  gk_pde_options_init(&opts);
  opts.domain_length = 16.0;
  opts.n_cells = 200;
  opts.dt = 1e-3;
  opts.t_end = 0.3;
  opts.m = 0.2;
  const double snaps[2] = {0.15, 0.3};
  opts.output_times = snaps;
  opts.n_output_times = 2;

  gk_pde_result* r = nullptr;
  REQUIRE(gk_pde_solve(&opts, &r) == GK_OK);
  CHECK(gk_pde_n_points(r) == 201);
  REQUIRE(gk_pde_n_snapshots(r) == 2);

  double tsnap = 0;
  std::vector<double> x(201), y(201);
  REQUIRE(gk_pde_snapshot(r, 1, &tsnap, x.data(), y.data()) == GK_OK);
  CHECK(tsnap == doctest::Approx(0.3));
  CHECK(x.front() == doctest::Approx(0.0));
  CHECK(x.back() == doctest::Approx(16.0));
  CHECK(y.front() < 0.0); // groove digs downward

  CHECK(gk_pde_n_depth_samples(r) >= 5);
  double td = 0, d = 0;
  REQUIRE(gk_pde_depth_sample(r, gk_pde_n_depth_samples(r) - 1, &td, &d) == GK_OK);
  CHECK(td == doctest::Approx(0.3));
  CHECK(d == doctest::Approx(y.front()).epsilon(1e-12));
  CHECK(std::isfinite(gk_pde_mass_drift(r)));
  CHECK(gk_pde_snapshot(r, 5, &tsnap, nullptr, nullptr) == GK_INVALID_ARGUMENT);
  gk_pde_result_free(r);

  opts.bc_family = 7;
  CHECK(gk_pde_solve(&opts, &r) == GK_INVALID_ARGUMENT);

  opts.bc_family = 0;
  opts.theta = 0.0; // explicit scheme, dt far above the h^4 bound
  CHECK(gk_pde_solve(&opts, &r) == GK_STABILITY);
}

TEST_CASE("depth exponent helper") {
  std::vector<double> t, d;
  for (int k = 1; k <= 20; ++k) {
    t.push_back(double(k));
    d.push_back(-0.37 * std::pow(double(k), 0.25));
  }
  double slope = 0;
  REQUIRE(gk_depth_exponent(t.data(), d.data(), int(t.size()), &slope) == GK_OK);
  CHECK(slope == doctest::Approx(0.25).epsilon(1e-12));

  CHECK(gk_depth_exponent(t.data(), d.data(), 3, &slope) == GK_INVALID_ARGUMENT);
}

TEST_CASE("null handles are tolerated") {
  gk_profile_free(nullptr);
  gk_fit_result_free(nullptr);
  gk_pde_result_free(nullptr);
  gk_string_free(nullptr);
  CHECK(gk_profile_size(nullptr) == 0);
  CHECK(gk_pde_n_points(nullptr) == 0);
  CHECK(gk_fit_rss(nullptr) == 0.0);
}
