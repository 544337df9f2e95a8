// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0

#include "fadgreen/geometry.hpp"

#include <cmath>

#include "fadgreen/errors.hpp"

namespace fadg::geom {

double normalize_azimuth(double phi) {
  const double two_pi = 2.0 * M_PI;
  double r = std::fmod(phi, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

double normalize_polar(double theta) {
  const double tol = 1e-9;
  if (theta < 0.0) {
    if (theta < -tol) throw domain_error("polar angle below 0");
    return 0.0;
  }
  if (theta > M_PI) {
    if (theta > M_PI + tol) throw domain_error("polar angle above pi");
    return M_PI;
  }
  return theta;
}

rvec3 FieldPoint::cartesian() const {
  return {R * std::sin(psi) * std::cos(omega), R * std::sin(psi) * std::sin(omega),
          R * std::cos(psi)};
}

DirectionSpec make_direction(const cvec3& zeta_dot, double s, double k0) {
  if (!(s > 0.0)) throw domain_error("make_direction: s must be positive");
  if (k0 < 0.0) throw domain_error("make_direction: k0 must be nonnegative");
  double n = hnorm(zeta_dot);
  if (std::abs(n - 1.0) > 1e-12)
    throw constraint_error("make_direction: |zeta_dot| != 1", std::abs(n - 1.0));
  cvec3 zeta = {s * zeta_dot[0], s * zeta_dot[1], s * zeta_dot[2]};
  cplx zz = dot(zeta, zeta);
  double residual = std::abs(zz - cplx(k0 * k0, 0.0));
  double scale = std::max(1.0, s * s);
  if (residual > 1e-10 * scale)
    throw constraint_error("make_direction: zeta.zeta != k0^2", residual);
  return {zeta, zeta_dot, s, k0};
}

FieldPoint make_field_point(double R, double psi, double omega) {
  if (!(R > 0.0)) throw domain_error("make_field_point: R must be positive");
  return {R, normalize_polar(psi), normalize_azimuth(omega)};
}

cplx alpha_fullspace(double theta, double phi, const DirectionSpec& d) {
  theta = normalize_polar(theta);
  phi = normalize_azimuth(phi);
  return (d.zeta_dot[0] * std::cos(phi) + d.zeta_dot[1] * std::sin(phi)) * std::sin(theta) +
         d.zeta_dot[2] * std::cos(theta);
}

double beta_fullspace(double theta, double phi, const FieldPoint& p) {
  theta = normalize_polar(theta);
  phi = normalize_azimuth(phi);
  return std::sin(theta) * std::sin(p.psi) * std::cos(phi - p.omega) +
         std::cos(theta) * std::cos(p.psi);
}

rvec3 unit_from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

}  // namespace fadg::geom
