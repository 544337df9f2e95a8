// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0
//
// Full-space Faddeev-Green function: closed form of the radial kernel
// I(R,s;alpha,beta) via the exponential integral, its large-s series, the
// angular quadrature of the sphere, and the leading expansion coefficient.

#ifndef FADGREEN_FULLSPACE_HPP
#define FADGREEN_FULLSPACE_HPP

#include <complex>
#include <vector>

#include "fadgreen/geometry.hpp"
#include "fadgreen/quadrature.hpp"

namespace fadg::fullspace {

using cplx = std::complex<double>;

enum class Normalization {
  paper,             // G = \int e^{i xi.x} (xi^2 + 2 zeta.xi)^{-1} d xi, verbatim
  fourier_standard,  // -(2 pi)^{-3} times the paper value
};

struct RadialKernelParams {
  double R;
  double s;
  cplx alpha;
  double beta;
  cplx A() const { return 2.0 * s * alpha; }
  cplx B() const { return cplx(0.0, -R * beta); }
};

struct ExpansionTerm {
  int k;
  cplx coefficient;  // k!/(i^{k+1} 2^k alpha^k) / (R^{k+1} beta^{k+1})
  int s_power;       // always -k
};

struct SeriesResult {
  cplx value;
  std::vector<ExpansionTerm> terms;
};

struct AngularResult {
  cplx value;
  double err_est;
  double excised_measure;  // measure of |beta| < beta_min on the sphere (dOmega)
  cplx excised_strip;      // analytically restored strip + delta-mass value
};

// I(R,s;alpha,beta) = A ( e^{AB} Ei(-AB) + 1/(AB) ), principal branch only:
// requires |arg(AB)| < pi - margin (domain error otherwise).
cplx radial_integral_closed(const RadialKernelParams& p, double arg_margin = 1e-9);

// Same kernel continued across the Ei cut; valid whenever the pole -A is off
// the positive real axis.  Used by the angular quadrature, where alpha winds.
cplx radial_integral_continued(const RadialKernelParams& p);

// Brute-force reference for the defining integral of Eq.-(2.9) type
// (contour-rotated oscillatory quadrature).
quad::IntegralResult radial_integral_oracle(const RadialKernelParams& p,
                                            const quad::QuadratureSpec& q);

// Partial sum of the large-s series sum_{k=1}^{n} k!/(i^{k+1} 2^k alpha^k)
// R^{-(k+1)} beta^{-(k+1)} s^{-k}; requires alpha off the closed negative
// imaginary axis and |beta| >= beta_min.
SeriesResult radial_integral_series(const RadialKernelParams& p, int n,
                                    double beta_min = 1e-3);

// Angular quadrature of the radial kernel over the unit sphere, i.e. the
// value of the defining Fourier integral (ball limit).  The caustic strip
// |beta| < beta_min is integrated as a symmetric pair plus the analytic
// oscillatory mass 2 pi^2 / R of the layer; the strip measure is reported.
AngularResult g_zeta_fullspace(const geom::FieldPoint& p, const geom::DirectionSpec& d,
                               const quad::QuadratureSpec& q,
                               Normalization norm = Normalization::paper);

// k = 1 angular coefficient \int dphi \int sin th dth / (alpha beta^2),
// principal-value/finite-part quadrature (symmetric excision, extrapolated).
// k >= 2 is distributional and rejected.
quad::IntegralResult expansion_coefficient(const geom::FieldPoint& p,
                                           const geom::DirectionSpec& d, int k,
                                           const quad::QuadratureSpec& q);

// First-term reconstruction  (1/(i^2 2)) coeff R^{-2} s^{-1}.
cplx first_term_reconstruction(cplx coeff, double R, double s);

namespace detail {
// Inner integral over u = beta at fixed frame azimuth (exposed for the
// axial-symmetry tests); excludes the caustic delta mass.
cplx inner_integral(double phi_frame, const geom::FieldPoint& p,
                    const geom::DirectionSpec& d, const quad::QuadratureSpec& q);
}  // namespace detail

}  // namespace fadg::fullspace

#endif
