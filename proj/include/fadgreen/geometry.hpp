// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0
//
// Complex direction zeta on the quadric zeta.zeta = k0^2, spherical field
// points, and the angular kernels alpha, beta of the full-space construction.

#ifndef FADGREEN_GEOMETRY_HPP
#define FADGREEN_GEOMETRY_HPP

#include <array>
#include <complex>

namespace fadg::geom {

using cplx = std::complex<double>;
using cvec3 = std::array<cplx, 3>;
using rvec3 = std::array<double, 3>;

// bilinear dot product, no conjugation
inline cplx dot(const cvec3& a, const cvec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double hnorm(const cvec3& a) {
  double s = 0.0;
  for (const cplx& c : a) s += std::norm(c);
  return std::sqrt(s);
}

// zeta = s * zeta_dot with s = |zeta| (Hermitian norm) and the quadric
// constraint zeta.zeta = k0^2.  zeta_dot is stored as given.
struct DirectionSpec {
  cvec3 zeta;
  cvec3 zeta_dot;
  double s;
  double k0;
};

struct FieldPoint {
  double R;
  double psi;    // [0, pi]
  double omega;  // [0, 2pi)
  rvec3 cartesian() const;
};

// Validates |zeta_dot| = 1 (1e-12) and |zeta.zeta - k0^2| <= 1e-10 relative;
// throws constraint_error listing the residual otherwise.
DirectionSpec make_direction(const cvec3& zeta_dot, double s, double k0);

FieldPoint make_field_point(double R, double psi, double omega);

// alpha(theta, phi) = (k'. cos phi + l'. sin phi) sin theta + m'. cos theta
cplx alpha_fullspace(double theta, double phi, const DirectionSpec& d);

// beta(theta, phi; psi, omega) = sin th sin psi cos(phi - omega) + cos th cos psi
double beta_fullspace(double theta, double phi, const FieldPoint& p);

// Fourier-space unit vector of (theta, phi)
rvec3 unit_from_angles(double theta, double phi);

// Angles reduced mod 2pi (phi, omega); polar angles clamped within 1e-9.
double normalize_azimuth(double phi);
double normalize_polar(double theta);

}  // namespace fadg::geom

#endif
