#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "groovekit/errors.hpp"
#include "groovekit/hypergeom.hpp"
#include "groovekit/solutions.hpp"
#include "groovekit/transforms.hpp"
#include "oracle_reference.hpp"

using namespace groovekit;

TEST_CASE("laplace_fundamental closed-form spot values") {
  CHECK(laplace_fundamental(1, {1.0, 0.0, 1.0}) == 0.0);
  CHECK(laplace_fundamental(2, {1.0, 0.0, 1.0}) == 1.0);
  CHECK(laplace_fundamental(2, {2.0, 0.0, 3.0}) ==
        doctest::Approx(std::pow(3.0, 0.25) * std::pow(2.0, -1.25)).epsilon(1e-15));
  CHECK(laplace_fundamental(4, {2.0, 0.0, 3.0}) ==
        laplace_fundamental(2, {2.0, 0.0, 3.0}));

  CHECK(laplace_fundamental(1, {1.0, 1.0, 1.0}) ==
        doctest::Approx(oracle::ybar1_t1_x1).epsilon(1e-14));
  CHECK(laplace_fundamental(2, {1.0, 1.0, 1.0}) ==
        doctest::Approx(oracle::ybar2_t1_x1).epsilon(1e-14));
  CHECK(laplace_fundamental(1, {2.0, 0.5, 1.0}) ==
        doctest::Approx(oracle::ybar1_t2_x05).epsilon(1e-14));
  CHECK(laplace_fundamental(2, {2.0, 0.5, 1.0}) ==
        doctest::Approx(oracle::ybar2_t2_x05).epsilon(1e-14));
  CHECK(laplace_fundamental(1, {0.5, 2.0, 1.0}) ==
        doctest::Approx(oracle::ybar1_t05_x2).epsilon(1e-14));
  CHECK(laplace_fundamental(2, {0.5, 2.0, 1.0}) ==
        doctest::Approx(oracle::ybar2_t05_x2).epsilon(1e-14));

  CHECK_THROWS_AS(laplace_fundamental(1, {-1.0, 0.0, 1.0}), error);
  CHECK_THROWS_AS(laplace_fundamental(5, {1.0, 0.0, 1.0}), error);
}

TEST_CASE("laplace boundary-derivative pattern is D^T-structured") {
  // x-derivatives of e^{-+rx}(a sin(rx) + b cos(rx)) rotate (a, b) by a known
  // linear map; at x = 0 only the cos weight survives. Expected pattern:
  // d/dx^{(i-1)} ybar_j at 0 = [D^T]_{ij} B^{(2-i)/4} p^{(i-6)/4}.
  const double p = 1.7, B = 2.3;
  const double r = std::pow(p, 0.25) / (std::pow(B, 0.25) * std::sqrt(2.0));
  const double amp = std::pow(B, 0.25) * std::pow(p, -1.25);
  const auto& D = d_matrix();
  for (int j = 1; j <= 4; ++j) {
    double a = (j == 1 || j == 3) ? 1.0 : 0.0; // sin weight
    double b = 1.0 - a;                        // cos weight
    const double sgn = j <= 2 ? -1.0 : 1.0;    // damping direction
    for (int i = 1; i <= 4; ++i) {
      const double deriv = amp * b;
      const double want = D[j - 1][i - 1] * std::pow(B, (2.0 - i) / 4.0) *
                          std::pow(p, (i - 6.0) / 4.0);
      CHECK(deriv == doctest::Approx(want).epsilon(1e-12));
      const double na = r * (sgn * a - b);
      const double nb = r * (a + sgn * b);
      a = na;
      b = nb;
    }
  }
}

TEST_CASE("inverse_laplace recovers known transforms") {
  // exact inverse of B^{1/4} p^{-5/4} is (Bt)^{1/4} / Gamma(5/4)
  for (double t : {0.5, 1.0, 4.0}) {
    const double want = std::pow(2.0 * t, 0.25) / gamma_rational({5, 4});
    CHECK(inverse_laplace(2, t, 0.0, 2.0) == doctest::Approx(want).epsilon(2e-8));
  }
  CHECK(std::abs(inverse_laplace(1, 1.0, 0.0, 1.0)) < 1e-12);
}

TEST_CASE("inverse_laplace agrees with the series route") {
  for (const auto& pt : oracle::y12_values) {
    if (pt.x > 3.0) continue; // contour roundoff floor ~1e-10 absolute
    CHECK(inverse_laplace(1, 1.0, pt.x, 1.0) ==
          doctest::Approx(pt.y1).epsilon(1e-7));
    CHECK(inverse_laplace(2, 1.0, pt.x, 1.0) ==
          doctest::Approx(pt.y2).epsilon(1e-7));
  }
  // mirrored pair on the negative axis
  CHECK(inverse_laplace(3, 1.0, -2.0, 1.0) ==
        doctest::Approx(-0.300913537732803451782640029324).epsilon(1e-7));
  CHECK(inverse_laplace(4, 1.0, -2.0, 1.0) ==
        doctest::Approx(0.0408598181061393812921778497293).epsilon(1e-6));
}

TEST_CASE("inverse_laplace node-count robustness and domain checks") {
  // contour roundoff grows like e^{2N/5}, so a 64-node run carries a few 1e-8
  // of absolute noise; agreement is checked at that scale, not at rel_tol
  talbot_options more;
  more.nodes = 64;
  const double a = inverse_laplace(1, 1.0, 1.0, 1.0);
  const double b = inverse_laplace(1, 1.0, 1.0, 1.0, more);
  CHECK(std::abs(a - b) < 2e-6);
  talbot_options fewer;
  fewer.nodes = 32;
  const double c = inverse_laplace(1, 1.0, 1.0, 1.0, fewer);
  CHECK(std::abs(a - c) < 1e-7);

  CHECK_THROWS_AS(inverse_laplace(1, 1.0, -0.5, 1.0), error);
  CHECK_THROWS_AS(inverse_laplace(4, 1.0, 0.5, 1.0), error);
  CHECK_THROWS_AS(inverse_laplace(1, -1.0, 0.5, 1.0), error);
}

TEST_CASE("fourier pair matches the reference across quadrature branches") {
  for (const auto& pt : oracle::fourier_values) {
    const quad_result a = fourier_y1(1.0, pt.x, 1.0);
    const quad_result b = fourier_y2(1.0, pt.x, 1.0);
    CHECK(std::abs(a.value - pt.y1) < 1e-9);
    CHECK(std::abs(b.value - pt.y2) < 1e-9);
    CHECK(a.error_estimate < 1e-7);
    CHECK(b.error_estimate < 1e-7);
  }
}

TEST_CASE("fourier pair at the root (direct branch)") {
  // yt2(t, 0) = (2/sqrt(pi)) (Bt)^{1/4} Gamma(3/4)
  CHECK(fourier_y2(1.0, 0.0, 1.0).value ==
        doctest::Approx(oracle::yt2_at_root).epsilon(1e-10));
  // yt1(t, 0) = -(2/pi) (Bt)^{1/4} Gamma(3/4), the leading series coefficient
  CHECK(fourier_y1(1.0, 0.0, 1.0).value ==
        doctest::Approx(oracle::martin_a[0]).epsilon(1e-10));
  // scale in (Bt)^{1/4}
  CHECK(fourier_y2(16.0, 0.0, 1.0).value ==
        doctest::Approx(2.0 * oracle::yt2_at_root).epsilon(1e-9));
}

TEST_CASE("second x-derivative of the erfi-type integral at the root") {
  CHECK(fourier_y2_xx_at_root(1.0, 1.0) ==
        doctest::Approx(oracle::yt2_xx_at_root).epsilon(1e-8));
  CHECK(fourier_y2_xx_at_root(16.0, 1.0) ==
        doctest::Approx(0.5 * oracle::yt2_xx_at_root).epsilon(1e-8));
}

TEST_CASE("integration-by-parts route agrees with the panel route") {
  quadrature_spec forced;
  for (double x : {6.0, 8.0, 10.0}) {
    forced.ibp_order = 0;
    const double plain1 = fourier_y1(1.0, x, 1.0, forced).value;
    const double plain2 = fourier_y2(1.0, x, 1.0, forced).value;
    forced.ibp_order = 2;
    const double ibp1 = fourier_y1(1.0, x, 1.0, forced).value;
    const double ibp2 = fourier_y2(1.0, x, 1.0, forced).value;
    CHECK(std::abs(plain1 - ibp1) < 1e-9);
    CHECK(std::abs(plain2 - ibp2) < 1e-9);
  }
}

TEST_CASE("series route and integral route agree on the overlap band") {
  // yt1 = (y1 - y2)/sqrt(2), yt2 = sqrt(pi)(y1 + y2)/sqrt(2) via the series
  const double sq2 = std::sqrt(2.0);
  const double sqpi = std::sqrt(4.0 * std::atan(1.0));
  for (double u = 0.1; u <= 6.0 + 1e-9; u += 0.35) {
    const double y1s = y(1, 1.0, u, 1.0, eval_route::series);
    const double y2s = y(2, 1.0, u, 1.0, eval_route::series);
    const double t1 = fourier_y1(1.0, u, 1.0).value;
    const double t2 = fourier_y2(1.0, u, 1.0).value;
    CHECK(std::abs(t1 - (y1s - y2s) / sq2) < 1e-8);
    CHECK(std::abs(t2 - sqpi * (y1s + y2s) / sq2) < 1e-8);
  }
}

TEST_CASE("decaying pair from the integral route") {
  for (const auto& pt : oracle::y12_values) {
    if (pt.x < 0.5) continue;
    CHECK(std::abs(y_decaying_large_u(1, 1.0, pt.x, 1.0) - pt.y1) < 1e-9);
    CHECK(std::abs(y_decaying_large_u(2, 1.0, pt.x, 1.0) - pt.y2) < 1e-9);
  }
  CHECK(std::abs(y_decaying_large_u(1, 1.0, 30.0, 1.0)) < 1e-10);
  CHECK(std::abs(y_decaying_large_u(2, 1.0, 30.0, 1.0)) < 1e-10);
  CHECK_THROWS_AS(y_decaying_large_u(3, 1.0, 1.0, 1.0), error);
}

TEST_CASE("ibp integrand derivatives: limits, continuity, finite differences") {
  CHECK(ibp_integrand_y1(0, 0.0) == 0.0);
  CHECK(ibp_integrand_y1(2, 0.0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(ibp_integrand_y1(1, 0.0) == 0.0);
  CHECK(ibp_integrand_y2(0, 0.0) == doctest::Approx(2.0).epsilon(1e-13));

  // branch seam at w = 0.75 (series -> closed form)
  for (int k = 0; k <= 4; ++k) {
    const double below = ibp_integrand_y1(k, 0.75 - 1e-9);
    const double above = ibp_integrand_y1(k, 0.75 + 1e-9);
    CHECK(std::abs(below - above) < 1e-6 * (1.0 + std::abs(below)));
    const double hb = ibp_integrand_y2(k, 0.75 - 1e-9);
    const double ha = ibp_integrand_y2(k, 0.75 + 1e-9);
    CHECK(std::abs(hb - ha) < 1e-6 * (1.0 + std::abs(hb)));
  }
  // branch seam at w = 2.5 (Dawson ring -> asymptotic series); the ring side
  // loses digits to cancellation as the order grows, so the band widens with k
  for (int k = 1; k <= 5; ++k) {
    const double hb = ibp_integrand_y2(k, 2.5 - 1e-9);
    const double ha = ibp_integrand_y2(k, 2.5 + 1e-9);
    const double band = (k <= 3 ? 1e-8 : 1e-5) * (1.0 + std::abs(hb));
    CHECK(std::abs(hb - ha) < band);
  }

  const double h = 1e-6;
  for (double w : {0.3, 1.3, 2.8}) {
    for (int k = 1; k <= 3; ++k) {
      const double fd =
          (ibp_integrand_y1(k - 1, w + h) - ibp_integrand_y1(k - 1, w - h)) / (2 * h);
      CHECK(ibp_integrand_y1(k, w) == doctest::Approx(fd).epsilon(1e-6));
      const double fd2 =
          (ibp_integrand_y2(k - 1, w + h) - ibp_integrand_y2(k - 1, w - h)) / (2 * h);
      CHECK(ibp_integrand_y2(k, w) == doctest::Approx(fd2).epsilon(1e-6));
    }
  }

  CHECK_THROWS_AS(ibp_integrand_y1(7, 1.0), error);
  CHECK_THROWS_AS(ibp_integrand_y2(8, 1.0), error);
  CHECK_THROWS_AS(ibp_integrand_y1(2, -1.0), error);
}

TEST_CASE("ibp integrands decay faster than w^-2") {
  // f^{(k)} ~ (-1)^k (k+1)! w^{-2-k}, h^{(k)} ~ c_k w^{-4-k}; w^2 |.| must
  // shrink along w = 10, 20, 40 and land near the algebraic-tail scale
  double factorial = 2.0; // (k+1)! at k = 1
  for (int k = 1; k <= 4; ++k) {
    factorial *= k + 1;
    double prev1 = 1e300, prev2 = 1e300;
    for (double w : {10.0, 20.0, 40.0}) {
      const double v1 = std::abs(ibp_integrand_y1(k, w)) * w * w;
      const double v2 = std::abs(ibp_integrand_y2(k, w)) * w * w;
      CHECK(v1 < prev1);
      CHECK(v2 < prev2);
      prev1 = v1;
      prev2 = v2;
    }
    CHECK(prev1 < 2.0 * factorial * std::pow(40.0, -k));
    CHECK(prev2 < 1e-3);
  }
}

TEST_CASE("halving quadrature tolerances stays within the reported estimate") {
  quadrature_spec tight;
  tight.abs_tol = 5e-11;
  tight.rel_tol = 5e-11;
  for (double x : {0.1, 1.0, 3.0, 7.0}) {
    const quad_result a1 = fourier_y1(1.0, x, 1.0);
    const quad_result b1 = fourier_y1(1.0, x, 1.0, tight);
    CHECK(std::abs(a1.value - b1.value) <= a1.error_estimate + 1e-14);
    const quad_result a2 = fourier_y2(1.0, x, 1.0);
    const quad_result b2 = fourier_y2(1.0, x, 1.0, tight);
    CHECK(std::abs(a2.value - b2.value) <= a2.error_estimate + 1e-14);
  }
}
