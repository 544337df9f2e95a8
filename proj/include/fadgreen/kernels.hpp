// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared closed form for the oscillatory pole integral
//   N(q, p) = \int_0^inf e^{-i q t} / (t - p) dt ,  q real != 0, p off [0,inf).
// Equals e^{-iqp} E1(-iqp) on the principal branch; crossing the E1 cut is
// compensated by +-2*pi*i so the value stays the analytic continuation that
// the integral itself defines.  The correction lives where Re(-iqp) < 0, so
// everything is evaluated in scaled form and never overflows.

#ifndef FADGREEN_KERNELS_HPP
#define FADGREEN_KERNELS_HPP

#include <cmath>
#include <complex>

#include "fadgreen/errors.hpp"
#include "fadgreen/expint.hpp"

namespace fadg::kernels {

using cplx = std::complex<double>;

inline cplx oscillatory_pole_integral(double q, cplx p) {
  if (q == 0.0) throw domain_error("oscillatory_pole_integral: q = 0");
  cplx z = cplx(0.0, -q) * p;  // -i q p
  if (std::imag(p) == 0.0 && std::real(p) >= 0.0) {
    // pole on the ray: principal value, the mean of the two one-sided
    // continuations (sigma = 0 and sigma = -sign(q))
    if (std::real(p) == 0.0)
      throw domain_error("oscillatory_pole_integral: pole at the origin");
    double sgn = q > 0.0 ? 1.0 : -1.0;
    z = cplx(0.0, std::imag(z));  // -iqp is purely imaginary here
    return fadg::expint::detail::e1_scaled_side(z) -
           sgn * cplx(0.0, M_PI) * std::exp(z);
  }
  const double theta_u = (q > 0.0 ? 0.5 : -0.5) * M_PI + std::arg(-p);
  // when z falls onto the E1 cut numerically, evaluate the side of the
  // principal representative of the unwrapped angle so the value and the
  // 2 pi i correction stay one continuous continuation
  if (std::real(z) < 0.0 && std::abs(std::imag(z)) < 1e-13 * (-std::real(z))) {
    double side = (theta_u > M_PI || (theta_u > -M_PI && theta_u < 0.0)) ? -1.0 : 1.0;
    z = cplx(std::real(z), std::copysign(1e-13 * (-std::real(z)), side));
  }
  cplx v = fadg::expint::detail::e1_scaled_side(z);
  if (theta_u > M_PI)
    v -= cplx(0.0, 2.0 * M_PI) * std::exp(z);
  else if (theta_u < -M_PI)
    v += cplx(0.0, 2.0 * M_PI) * std::exp(z);
  return v;
}

}  // namespace fadg::kernels

#endif
