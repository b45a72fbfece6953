#pragma once

#include <complex>

namespace groovekit {

struct laplace_query {
  double p = 1; // Laplace variable, > 0
  double x = 0;
  double B = 1;
};

// Laplace-domain fundamental solutions, r = p^{1/4} / (B^{1/4} sqrt(2)):
//   i=1: B^{1/4} p^{-5/4} e^{-rx} sin(rx)    i=2: same with cos
//   i=3: B^{1/4} p^{-5/4} e^{+rx} sin(rx)    i=4: same with cos
double laplace_fundamental(int i, const laplace_query& q);
std::complex<double> laplace_fundamental_c(int i, std::complex<double> p, double x, double B);

struct talbot_options {
  int nodes = 48;
  double rel_tol = 1e-8; // node-halving agreement requirement
};

// Numerical inverse Laplace transform of the i-th fundamental solution on a
// fixed deformed contour. Valid for x >= 0 when i in {1,2} and x <= 0 when
// i in {3,4} (the transform grows in the other direction). Throws
// errc::contour when the node-halving diagnostic exceeds tolerance.
double inverse_laplace(int i, double t, double x, double B, const talbot_options& opts = {});

struct quadrature_spec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_panels = 4096;
  int ibp_order = -1; // integration-by-parts passes; -1 selects per u
};

struct quad_result {
  double value = 0;
  double error_estimate = 0;
  int panels_used = 0;
};

// Fourier-cosine integral solutions, u = x / (Bt)^{1/4}, x >= 0:
//   fourier_y1: -(2 (Bt)^{1/4} / pi) * int_0^inf (1 - e^{-w^4}) w^{-2} cos(uw) dw
//   fourier_y2:  (2 (Bt)^{1/4} / pi) * int_0^inf 2 dawson(w^2) w^{-2} cos(uw) dw
// Oscillation is tamed by splitting at kernel zeros with series acceleration,
// and for large u by integrating by parts (k passes) first.
quad_result fourier_y1(double t, double x, double B, const quadrature_spec& spec = {});
quad_result fourier_y2(double t, double x, double B, const quadrature_spec& spec = {});

// d^2/dx^2 of the second integral solution at x = 0.
double fourier_y2_xx_at_root(double t, double B, const quadrature_spec& spec = {});

// Decaying solutions from the integral pair:
//   y1 = yt1/sqrt(2) + yt2/sqrt(2 pi),  y2 = -yt1/sqrt(2) + yt2/sqrt(2 pi)
double y_decaying_large_u(int i, double t, double x, double B, const quadrature_spec& spec = {});

// k-th derivative of (1 - e^{-w^4})/w^2, from its closed form
// A(w) + e^{-w^4} B(w) with symbolically generated Laurent coefficients;
// a Maclaurin branch covers small w where the closed form cancels. k <= 6.
double ibp_integrand_y1(int k, double w);

// k-th derivative of 2 dawson(w^2)/w^2 (same machinery, Dawson ring). k <= 7.
double ibp_integrand_y2(int k, double w);

} // namespace groovekit
