// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference integrators: adaptive Gauss-Kronrod on intervals and
// rectangles, contour-rotated semi-infinite oscillatory integrals, and
// principal-value integrals on the circle.  Deliberately simple and slow;
// used only to certify the closed forms, never as fast paths.

#ifndef FADGREEN_QUADRATURE_HPP
#define FADGREEN_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace fadg::quad {

using cplx = std::complex<double>;

struct QuadratureSpec {
  double abs_tol = 1e-11;
  double rel_tol = 1e-9;
  int max_subdivisions = 4000;
  double pv_epsilon = 1e-2;       // PV excision radius
  double contour_angle = 0.7853981633974483;  // pi/4, in (0, pi/2)
  double upper_cutoff = 12.0;     // decay lengths before the algebraic tail map
  double beta_min = 1e-3;         // caustic excision radius (|beta| floor)
  double caustic_max_fraction = 0.25;
};

struct IntegralResult {
  cplx value;
  double err_est;
};

// Adaptive GK7/15 over [a, b].
IntegralResult integrate_adaptive(const std::function<cplx(double)>& f,
                                  double a, double b, const QuadratureSpec& q);

// Iterated adaptive rule over [ax, bx] x [ay, by]; f(x, y).
IntegralResult integrate_adaptive_2d(const std::function<cplx(double, double)>& f,
                                     double ax, double bx, double ay, double by,
                                     const QuadratureSpec& q);

// \int_0^inf f(r) dr where f carries oscillation e^{i osc_rate r} and is
// analytic in the rotation sector.  The ray is rotated by
// sign(osc_rate) * contour_angle; `poles` lets the routine detect a blocked
// rotation and fall back to real-axis panels plus a rotated tail.
IntegralResult integrate_semiinfinite_oscillatory(
    const std::function<cplx(cplx)>& f, double osc_rate, const QuadratureSpec& q,
    const std::vector<cplx>& poles = {});

// Principal value of \int_0^{2pi} f(phi) dphi with simple-pole singularities;
// symmetric excision at pv_epsilon and pv_epsilon/2, Richardson extrapolated.
IntegralResult integrate_pv_circle(const std::function<cplx(double)>& f,
                                   const std::vector<double>& singularities,
                                   const QuadratureSpec& q);

}  // namespace fadg::quad

#endif
