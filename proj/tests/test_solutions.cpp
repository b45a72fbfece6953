#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "groovekit/basis.hpp"
#include "groovekit/errors.hpp"
#include "groovekit/hypergeom.hpp"
#include "groovekit/solutions.hpp"
#include "oracle_reference.hpp"

using namespace groovekit;

TEST_CASE("d_matrix structure") {
  const auto& D = d_matrix();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(D[0][0] == 0.0);
  CHECK(D[0][1] == doctest::Approx(inv_sqrt2).epsilon(1e-16));
  CHECK(D[0][2] == -1.0);
  CHECK(D[0][3] == doctest::Approx(inv_sqrt2).epsilon(1e-16));

  // (1/2) D D^T = I entrywise
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0;
      for (int k = 0; k < 4; ++k) s += D[i][k] * D[j][k];
      CHECK(std::abs(0.5 * s - (i == j ? 1.0 : 0.0)) < 1e-15);
    }
  }

  Eigen::Matrix4d M;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M(i, j) = D[i][j];
  CHECK(std::abs(std::abs(M.determinant()) - 4.0) < 1e-14);
}

TEST_CASE("y matches the reference on both routes") {
  for (const auto& pt : oracle::y12_values) {
    const double tol = pt.x <= 6.0 ? 1e-12 : 1e-9; // integral route beyond u=6
    CHECK(std::abs(y(1, 1.0, pt.x, 1.0) - pt.y1) < tol * (1.0 + std::abs(pt.y1)) + 1e-12);
    CHECK(std::abs(y(2, 1.0, pt.x, 1.0) - pt.y2) < tol * (1.0 + std::abs(pt.y2)) + 1e-12);
  }
  CHECK(y(1, 1.0, 0.0, 1.0) == 0.0);
  CHECK(y(2, 1.0, 0.0, 1.0) == doctest::Approx(oracle::y2_at_root).epsilon(1e-14));
  // (Bt)^{1/4}/Gamma(5/4) scaling at the root
  CHECK(y(2, 2.0, 0.0, 0.5) == doctest::Approx(oracle::y2_at_root).epsilon(1e-14));
  CHECK(y(2, 0.5, 0.0, 8.0) ==
        doctest::Approx(std::pow(4.0, 0.25) * oracle::y2_at_root).epsilon(1e-14));
}

TEST_CASE("explicit route selection is consistent") {
  const double s = y(1, 1.0, 5.0, 1.0, eval_route::series);
  const double q = y(1, 1.0, 5.0, 1.0, eval_route::quadrature);
  const double l = y(1, 1.0, 5.0, 1.0, eval_route::laplace);
  CHECK(std::abs(s - q) < 1e-8);
  CHECK(std::abs(s - l) < 1e-7 * std::abs(s) + 1e-9);

  CHECK_THROWS_AS(y(1, 1.0, -1.0, 1.0, eval_route::quadrature), error);
  CHECK_THROWS_AS(y(3, 1.0, 1.0, 1.0, eval_route::quadrature), error);
  CHECK_THROWS_AS(y(0, 1.0, 1.0, 1.0), error);
  CHECK_THROWS_AS(y(1, 0.0, 1.0, 1.0), error);
  CHECK_THROWS_AS(y(1, 1.0, 1.0, -2.0), error);
}

TEST_CASE("reflection identities") {
  for (double t : {0.7, 1.0}) {
    const double s = std::pow(t, 0.25);
    for (double u = -8.0; u <= 8.0 + 1e-9; u += 0.8) {
      const double x = u * s;
      CHECK(std::abs(y(3, t, x, 1.0) + y(1, t, -x, 1.0)) < 1e-11 * s);
      CHECK(std::abs(y(4, t, x, 1.0) - y(2, t, -x, 1.0)) < 1e-11 * s);
    }
  }
}

TEST_CASE("self-similar scaling") {
  for (double lambda : {0.5, 2.0, 3.0}) {
    for (int i = 1; i <= 4; ++i) {
      const double base = y(i, 1.0, 1.5, 1.0);
      const double scaled = y(i, std::pow(lambda, 4), lambda * 1.5, 1.0);
      CHECK(scaled == doctest::Approx(lambda * base).epsilon(1e-12));
    }
  }
}

TEST_CASE("each y_i satisfies the surface-diffusion equation") {
  // y_t = (1/4t)(y - u (Bt)^{1/4} Z'), y_xxxx = (Bt)^{1/4}/(Bt) Z''''
  const auto& D = d_matrix();
  const double g[4] = {1.0 / gamma_rational({5, 4}), 1.0,
                       1.0 / (2.0 * gamma_rational({3, 4})),
                       1.0 / (6.0 * gamma_rational({1, 2}))};
  for (double t : {0.5, 2.0}) {
    for (double B : {1.0, 3.0}) {
      const double s = std::pow(B * t, 0.25);
      for (int i = 1; i <= 4; ++i) {
        for (double u = -3.0; u <= 3.0 + 1e-9; u += 1.5) {
          double Z = 0, Zp = 0, Z4 = 0;
          for (int j = 0; j < 4; ++j) {
            Z += D[i - 1][j] * g[j] * z(j + 1, u);
            Zp += D[i - 1][j] * g[j] * z_derivative(j + 1, 1, u);
            Z4 += D[i - 1][j] * g[j] * z_derivative(j + 1, 4, u);
          }
          const double y_t = s / (4.0 * t) * (Z - u * Zp);
          const double y_xxxx = s / (B * t) * Z4;
          const double scale = std::abs(y_t) + std::abs(B * y_xxxx) + 1e-30;
          CHECK(std::abs(y_t + B * y_xxxx) / scale < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("boundary derivative matrix at the root") {
  const auto& D = d_matrix();
  const double diag[4] = {1.0 / gamma_rational({5, 4}), 1.0,
                          1.0 / gamma_rational({3, 4}), 1.0 / gamma_rational({1, 2})};
  const double t = 1.7, B = 0.6;
  const double g[4] = {1.0 / gamma_rational({5, 4}), 1.0,
                       1.0 / (2.0 * gamma_rational({3, 4})),
                       1.0 / (6.0 * gamma_rational({1, 2}))};
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      // d^{j-1} y_i / dx^{j-1} at 0 in units of (Bt)^{(2-j)/4}
      double deriv = 0;
      for (int k = 0; k < 4; ++k)
        deriv += D[i - 1][k] * g[k] * z_derivative(k + 1, j - 1, 0.0);
      const double want = D[i - 1][j - 1] * diag[j - 1];
      CHECK(std::abs(deriv - want) < 1e-13 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("coeffs_from_boundary and its inverse") {
  const physical_params p{2.0, 0.2};
  const similarity_coeffs slope_only =
      coeffs_from_boundary({0.0, 0.1, 0.0, 0.0}, 3.0, p);
  CHECK(slope_only.c[0] == 0.0);
  CHECK(slope_only.c[1] == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(slope_only.c[2] == 0.0);
  CHECK(slope_only.c[3] == 0.0);

  const similarity_coeffs zero = coeffs_from_boundary({0, 0, 0, 0}, 1.0, p);
  for (double v : zero.c) CHECK(v == 0.0);

  similarity_coeffs C;
  C.c = {0.3, -1.2, 0.07, 2.5};
  const auto derivs = boundary_derivatives(C, 0.8, p);
  const similarity_coeffs back = coeffs_from_boundary(derivs, 0.8, p);
  for (int i = 0; i < 4; ++i)
    CHECK(back.c[i] == doctest::Approx(C.c[i]).epsilon(1e-12));

  CHECK_THROWS_AS(coeffs_from_boundary({0, 0, 0, 0}, -1.0, p), error);
}

TEST_CASE("decay-weight map and its inverse") {
  similarity_coeffs zero;
  for (double v : z_to_decay_weights(zero).c) CHECK(v == 0.0);

  similarity_coeffs C;
  C.c = {1.1, -0.4, 0.9, 0.05};
  const similarity_coeffs back = decay_weights_to_z(z_to_decay_weights(C));
  for (int i = 0; i < 4; ++i)
    CHECK(back.c[i] == doctest::Approx(C.c[i]).epsilon(1e-14));

  // Mullins coefficients map to decay weights proportional to (1, -1, 0, 0)
  const double m = 0.2;
  similarity_coeffs mull;
  mull.c = {-m / (2.0 * std::sqrt(2.0) * gamma_rational({5, 4})), m / 2.0,
            -m / (4.0 * std::sqrt(2.0) * gamma_rational({3, 4})), 0.0};
  const decay_weights w = z_to_decay_weights(mull);
  const double expect = m / (2.0 * std::sqrt(2.0));
  CHECK(w.c[0] == doctest::Approx(expect).epsilon(1e-13));
  CHECK(w.c[1] == doctest::Approx(-expect).epsilon(1e-13));
  CHECK(std::abs(w.c[2]) < 1e-15);
  CHECK(std::abs(w.c[3]) < 1e-15);
}

TEST_CASE("evaluate basics") {
  two_sided_solution sol;
  sol.plus.c = {1.0, 0.0, 0.0, 0.0};
  sol.minus.c = {1.0, 0.0, 0.0, 0.0};
  sol.params = {1.0, 0.0};
  CHECK(evaluate(sol, 1.0, 2.0) == doctest::Approx(z(1, 2.0)).epsilon(1e-14));
  CHECK(evaluate(sol, 1.0, -2.0) == doctest::Approx(z(1, 2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(evaluate(sol, 1.0, 0.0), error);

  // different sides use different coefficients
  sol.minus.c = {0.0, 1.0, 0.0, 0.0};
  CHECK(evaluate(sol, 1.0, -0.7) == doctest::Approx(-0.7).epsilon(1e-14));

  // forward scaling
  sol.minus.c = {1.0, 0.0, 0.0, 0.0};
  for (double lambda : {0.5, 2.0}) {
    CHECK(evaluate(sol, std::pow(lambda, 4), lambda * 1.2) ==
          doctest::Approx(lambda * evaluate(sol, 1.0, 1.2)).epsilon(1e-12));
  }
}

TEST_CASE("evaluate reroutes decaying sides past the series switch") {
  const double m = 0.2;
  const physical_params p{1.0, m};
  two_sided_solution sol;
  sol.params = p;
  decay_weights wplus;
  wplus.c = {m / (2.0 * std::sqrt(2.0)), -m / (2.0 * std::sqrt(2.0)), 0.0, 0.0};
  sol.plus = decay_weights_to_z(wplus);
  // mirror of the plus side: y1(t, x) = -y3(t, -x) and y2(t, x) = y4(t, -x),
  // so the even extension carries weights -(1, 1) on the (y3, y4) pair
  decay_weights wminus;
  wminus.c = {0.0, 0.0, -m / (2.0 * std::sqrt(2.0)), -m / (2.0 * std::sqrt(2.0))};
  sol.minus = decay_weights_to_z(wminus);

  for (double x : {8.0, 10.0}) {
    CHECK(std::abs(evaluate(sol, 1.0, x) - mullins_solution(p, 1.0, x)) < 1e-9);
    CHECK(std::abs(evaluate(sol, 1.0, -x) - mullins_solution(p, 1.0, -x)) < 1e-9);
  }
  // continuity across the root at matched scales
  CHECK(evaluate(sol, 1.0, 1e-6) ==
        doctest::Approx(evaluate(sol, 1.0, -1e-6)).epsilon(1e-6));
}

TEST_CASE("named solutions match the reference") {
  const physical_params p{1.0, 0.2};
  CHECK(mullins_solution(p, 1.0, 0.5) ==
        doctest::Approx(oracle::mullins_1_05).epsilon(1e-12));
  CHECK(mullins_solution(p, 1.0, 2.0) ==
        doctest::Approx(oracle::mullins_1_2).epsilon(1e-12));
  CHECK(amram_solution(p, 1.0, 0.5) ==
        doctest::Approx(oracle::amram_1_05).epsilon(1e-12));
  CHECK(amram_solution(p, 1.0, 2.0) ==
        doctest::Approx(oracle::amram_1_2).epsilon(1e-12));

  const physical_params p4{4.0, 0.2};
  // same similarity coordinate through B t = 4
  CHECK(mullins_solution({1.0, 0.2}, 4.0, 1.0) ==
        doctest::Approx(oracle::mullins_4_1).epsilon(1e-12));
  CHECK(amram_solution({1.0, 0.2}, 4.0, 1.0) ==
        doctest::Approx(oracle::amram_4_1).epsilon(1e-12));
  CHECK(mullins_solution(p4, 1.0, 1.0) ==
        doctest::Approx(oracle::mullins_4_1).epsilon(1e-12));

  // even extension
  CHECK(mullins_solution(p, 1.0, -2.0) == mullins_solution(p, 1.0, 2.0));
  CHECK(amram_solution(p, 1.0, -0.5) == amram_solution(p, 1.0, 0.5));
}

TEST_CASE("named solutions' root conditions from assembled coefficients") {
  const double m = 0.2, t = 1.3, B = 0.8;
  const physical_params p{B, m};
  const double scale = std::pow(B * t, 0.25);

  decay_weights mull;
  mull.c = {m / (2.0 * std::sqrt(2.0)), -m / (2.0 * std::sqrt(2.0)), 0.0, 0.0};
  const auto dm = boundary_derivatives(decay_weights_to_z(mull), t, p);
  CHECK(dm[0] == doctest::Approx(groove_depth(p, t)).epsilon(1e-12));
  CHECK(dm[1] == doctest::Approx(m / 2.0).epsilon(1e-12));
  CHECK(std::abs(dm[3]) < 1e-10 / scale); // zero third derivative

  decay_weights amr;
  amr.c = {0.0, -m / std::sqrt(2.0), 0.0, 0.0};
  const auto da = boundary_derivatives(decay_weights_to_z(amr), t, p);
  CHECK(da[1] == doctest::Approx(m / 2.0).epsilon(1e-12));
  CHECK(std::abs(da[2]) < 1e-10); // zero curvature
  CHECK(da[0] ==
        doctest::Approx(-m / std::sqrt(2.0) * scale / gamma_rational({5, 4}))
            .epsilon(1e-12));
}

TEST_CASE("groove depth law") {
  CHECK(groove_depth({1.0, 0.2}, 0.0) == 0.0);
  for (const auto& d : oracle::depth_values) {
    CHECK(groove_depth({d.B, d.m}, d.t) == doctest::Approx(d.depth).epsilon(1e-12));
  }
  for (double t : {0.3, 1.0, 7.0}) {
    CHECK(groove_depth({2.0, 0.25}, 16.0 * t) ==
          doctest::Approx(2.0 * groove_depth({2.0, 0.25}, t)).epsilon(1e-13));
  }
  CHECK(groove_depth({1.0, 0.2}, 1.0) ==
        doctest::Approx(mullins_solution({1.0, 0.2}, 1.0, 0.0)).epsilon(1e-12));
  CHECK(groove_depth({1.0, 0.2}, 1.0) ==
        doctest::Approx(oracle::mullins_depth_1).epsilon(1e-13));
}

TEST_CASE("asymptotic classification") {
  const double m = 0.2;
  similarity_coeffs mull;
  mull.c = {-m / (2.0 * std::sqrt(2.0) * gamma_rational({5, 4})), m / 2.0,
            -m / (4.0 * std::sqrt(2.0) * gamma_rational({3, 4})), 0.0};
  CHECK(classify_asymptotics(mull, side_kind::plus).decaying);

  // mirrored coefficients decay on the minus side
  similarity_coeffs mirrored = mull;
  mirrored.c[1] = -mirrored.c[1];
  mirrored.c[3] = -mirrored.c[3];
  CHECK(classify_asymptotics(mirrored, side_kind::minus).decaying);
  CHECK_FALSE(classify_asymptotics(mirrored, side_kind::plus).decaying);

  const similarity_coeffs pure_y3 = decay_weights_to_z({{0.0, 0.0, 1.0, 0.0}});
  const asymptotics_report r = classify_asymptotics(pure_y3, side_kind::plus);
  CHECK_FALSE(r.decaying);
  REQUIRE(r.offending.size() == 1);
  CHECK(r.offending[0].first == 3);

  similarity_coeffs zero;
  CHECK(classify_asymptotics(zero, side_kind::plus).decaying);
}

TEST_CASE("large-x decay magnitudes") {
  CHECK(std::abs(std::abs(y(1, 1.0, 16.0, 1.0)) - oracle::abs_y1_16) < 1e-9);
  CHECK(std::abs(std::abs(y(1, 1.0, 20.0, 1.0)) - oracle::abs_y1_20) < 1e-9);
  CHECK(std::abs(y(1, 1.0, 25.0, 1.0)) < 1e-8);
  CHECK(std::abs(y(2, 1.0, 25.0, 1.0)) < 1e-8);

  // the growing pair at the same station, series route
  CHECK(y(3, 1.0, 25.0, 1.0, eval_route::series) ==
        doctest::Approx(oracle::y3_1_25).epsilon(1e-10));
  CHECK(y(4, 1.0, 25.0, 1.0, eval_route::series) ==
        doctest::Approx(oracle::y4_1_25).epsilon(1e-10));
  CHECK(y(3, 1.0, 25.0, 1.0) > 1e3);
  CHECK(y(4, 1.0, 25.0, 1.0) < -1e3);
}

TEST_CASE("initial planarity at fixed station") {
  double prev = 1e300;
  for (double t : {1e-1, 1e-3, 1e-5}) {
    const double total = std::abs(y(1, t, 2.0, 1.0)) + std::abs(y(2, t, 2.0, 1.0));
    CHECK(total < prev);
    prev = total;
  }
  CHECK(std::abs(y(1, 1e-1, 2.0, 1.0) - oracle::y1_t1em1_x2) < 1e-10);
  CHECK(std::abs(y(1, 1e-3, 2.0, 1.0) - oracle::y1_t1em3_x2) < 1e-9);
  CHECK(std::abs(y(1, 1e-5, 2.0, 1.0)) < 1e-10);
}

TEST_CASE("slope parameter plausibility helper") {
  CHECK(m_in_typical_range(0.2));
  CHECK_FALSE(m_in_typical_range(0.5));
  CHECK_FALSE(m_in_typical_range(-0.1));
}
