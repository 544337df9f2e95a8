// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0
//
// Exponential integrals E1 and Ei for complex argument off the negative
// real axis, their truncated asymptotic sums, and the optimal-truncation
// heuristic for the (divergent) large-argument series.

#ifndef FADGREEN_EXPINT_HPP
#define FADGREEN_EXPINT_HPP

#include <complex>
#include <cstddef>

namespace fadg::expint {

using cplx = std::complex<double>;

// Value together with an a-posteriori error estimate; callers that chain
// evaluations propagate the worst case.
struct Certified {
  cplx value;
  double err_est;
};

inline constexpr int kMaxAsymptoticOrder = 20;

// E1(z) = \int_z^\infty e^{-u}/u du, principal branch, |arg z| < pi, z != 0.
// Power series for |z| <= 4, modified-Lentz continued fraction beyond.
// Relative accuracy ~1e-13 for |arg z| <= pi - 0.1.
cplx e1(cplx z);
Certified e1_certified(cplx z);

// e^z E1(z), computed without forming the (possibly overflowing) factors.
cplx e1_scaled(cplx z);
Certified e1_scaled_certified(cplx z);

// Real exponential integral Ei(x), x > 0, equal to -PV E1(-x); all-positive
// power series, no cancellation.
double ei_real(double x);

// Partial sum S_n(z) = sum_{k=0}^{n} k!/z^{k+1} of the asymptotic series for
// e^{-z} Ei(z).  Requires |arg(-z)| <= pi - delta; the positive real axis is
// admitted as the principal-value limit (classical Ei).
cplx ei_asymptotic_partial_sum(cplx z, int n, double delta = 1e-9);

// Index minimising k!/|z|^{k+1}; the series' smallest-term truncation.
int optimal_truncation_order(cplx z);

namespace detail {
// e^z E1(z) without the public cut guard; the branch side on the cut is read
// from the sign of Im z (signed zeros included).  For the kernel closed forms.
cplx e1_scaled_side(cplx z);
}  // namespace detail

}  // namespace fadg::expint

#endif
