// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0

#include "fadgreen/expint.hpp"

#include <cmath>
#include <limits>

#include "fadgreen/errors.hpp"

namespace fadg::expint {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kSeriesRadius = 4.0;
// the continued fraction converges like exp(-4 sqrt(n|z|) cos(arg z / 2)),
// so it is handed the sector |arg z| <= pi - 0.3 and the near-cut strip goes
// through the reflection formula (|z| < 40) or the optimally truncated
// asymptotic sum, whose smallest term is ~sqrt(2 pi |z|) e^{-|z|} < 1e-16
// for |z| >= 40.
constexpr double kCutSector = 0.3;
constexpr double kAsymptoticRadius = 40.0;

bool on_cut_public(cplx z) {
  return std::real(z) < 0.0 && std::abs(std::imag(z)) <= 1e-14 * (-std::real(z));
}

// E1(z) = -gamma - log z + sum_{k>=1} (-1)^{k+1} z^k / (k k!)
Certified e1_series(cplx z) {
  cplx term(1.0, 0.0);
  cplx sum(0.0, 0.0);
  double magmax = 0.0;
  for (int k = 1; k <= 120; ++k) {
    term *= -z / static_cast<double>(k);
    cplx contrib = -term / static_cast<double>(k);
    sum += contrib;
    magmax = std::max(magmax, std::abs(contrib));
    if (std::abs(contrib) < 1e-18 * std::abs(sum) + 1e-300) break;
  }
  cplx v = -kEulerGamma - std::log(z) + sum;
  double eps = std::numeric_limits<double>::epsilon();
  return {v, eps * (magmax + std::abs(v)) * 4.0};
}

// Modified Lentz for e^z E1(z) = 1/(z+1- 1/(z+3- 4/(z+5- ...)))
Certified e1_cf_scaled(cplx z) {
  const double tiny = 1e-290;
  const double eps = 1e-16;
  const int max_iter = 40000;
  cplx b = z + 1.0;
  cplx c = cplx(1.0 / tiny, 0.0);
  cplx d = 1.0 / b;
  cplx h = d;
  double last_del = 1.0;
  for (int i = 1; i <= max_iter; ++i) {
    cplx a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    cplx del = c * d;
    h *= del;
    last_del = std::abs(del - 1.0);
    if (last_del < eps)
      return {h, (last_del + static_cast<double>(i) * 1e-17) * std::abs(h)};
  }
  return {h, last_del * std::abs(h)};
}

// e^z E1(z) by the optimally truncated asymptotic sum; |z| >= 40 gives full
// double precision uniformly in the argument.
Certified e1_asymptotic_scaled(cplx z) {
  double az = std::abs(z);
  int n_opt = static_cast<int>(az);
  cplx term = 1.0 / z;
  cplx sum = term;
  double smallest = std::abs(term);
  for (int k = 1; k <= n_opt; ++k) {
    term *= -static_cast<double>(k) / z;
    sum += term;
    smallest = std::abs(term);
  }
  return {sum, smallest + std::sqrt(2.0 * M_PI * az) * std::exp(-az) * 2.0};
}

// complex Ei power series, gamma + log w + sum w^k/(k k!); cancellation-free
// for small |arg w|
cplx ei_series_complex(cplx w) {
  cplx term(1.0, 0.0);
  cplx sum(0.0, 0.0);
  for (int k = 1; k <= 900; ++k) {
    term *= w / static_cast<double>(k);
    cplx contrib = term / static_cast<double>(k);
    sum += contrib;
    if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
  }
  return kEulerGamma + std::log(w) + sum;
}

// near-cut strip, |z| < 40: reflect through Ei, E1(z) = -Ei(-z) - i pi side,
// with the side read from the sign of Im z (signed zero included)
Certified e1_reflection(cplx z) {
  double side = std::signbit(std::imag(z)) ? -1.0 : 1.0;
  cplx w = -z;
  cplx eiw = ei_series_complex(w);
  cplx v = -eiw - cplx(0.0, side * M_PI);
  // cancellation in the series grows like e^{|w|(1 - cos arg w)}
  double canc = std::exp(std::abs(w) * (1.0 - std::cos(std::arg(w))));
  return {v, 1e-16 * (std::abs(v) + canc * std::exp(std::real(w)) /
                                         std::max(1.0, std::abs(w)))};
}

Certified e1_scaled_impl(cplx z) {
  double az = std::abs(z);
  if (az <= kSeriesRadius) {
    Certified r = e1_series(z);
    cplx ez = std::exp(z);
    return {ez * r.value, std::abs(ez) * r.err_est};
  }
  if (std::abs(std::arg(z)) <= M_PI - kCutSector) return e1_cf_scaled(z);
  if (az < kAsymptoticRadius) {
    Certified r = e1_reflection(z);
    cplx ez = std::exp(z);
    return {ez * r.value, std::abs(ez) * r.err_est};
  }
  return e1_asymptotic_scaled(z);
}

}  // namespace

namespace detail {

// One-sided evaluation used by the kernel closed forms: never rejects
// near-cut arguments, reads the branch side from the sign of Im z.
cplx e1_scaled_side(cplx z) { return e1_scaled_impl(z).value; }

}  // namespace detail

Certified e1_scaled_certified(cplx z) {
  if (z == cplx(0.0, 0.0) || on_cut_public(z))
    throw domain_error("e1: argument on the branch cut or zero");
  return e1_scaled_impl(z);
}

Certified e1_certified(cplx z) {
  Certified r = e1_scaled_certified(z);
  cplx emz = std::exp(-z);
  return {emz * r.value, std::abs(emz) * r.err_est};
}

cplx e1(cplx z) { return e1_certified(z).value; }
cplx e1_scaled(cplx z) { return e1_scaled_certified(z).value; }

double ei_real(double x) {
  if (!(x > 0.0)) throw domain_error("ei_real: requires x > 0");
  if (x > 700.0) throw domain_error("ei_real: overflow for x > 700");
  // Ei(x) = gamma + log x + sum_{k>=1} x^k/(k k!), all terms positive
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 1000; ++k) {
    term *= x / k;
    double contrib = term / k;
    sum += contrib;
    if (contrib < 1e-18 * sum) break;
  }
  return kEulerGamma + std::log(x) + sum;
}

cplx ei_asymptotic_partial_sum(cplx z, int n, double delta) {
  if (n < 0 || n > kMaxAsymptoticOrder)
    throw domain_error("ei_asymptotic_partial_sum: order outside [0, 20]");
  if (z == cplx(0.0, 0.0)) throw domain_error("ei_asymptotic_partial_sum: z = 0");
  bool positive_real_axis = std::imag(z) == 0.0 && std::real(z) > 0.0;
  if (!positive_real_axis) {
    double a = std::abs(std::arg(-z));
    if (a > M_PI - delta)
      throw domain_error("ei_asymptotic_partial_sum: |arg(-z)| > pi - delta");
  }
  cplx term = 1.0 / z;
  cplx sum = term;
  for (int k = 1; k <= n; ++k) {
    term *= static_cast<double>(k) / z;
    sum += term;
  }
  return sum;
}

int optimal_truncation_order(cplx z) {
  double az = std::abs(z);
  if (az == 0.0) throw domain_error("optimal_truncation_order: z = 0");
  // terms t_k = k!/|z|^{k+1} shrink while k < |z|; scan for the argmin
  double t = 1.0 / az;
  double best = t;
  int best_k = 0;
  int cap = static_cast<int>(az) + 4;
  for (int k = 1; k <= cap; ++k) {
    t *= k / az;
    if (t < best) {
      best = t;
      best_k = k;
    }
  }
  return best_k;
}

}  // namespace fadg::expint
