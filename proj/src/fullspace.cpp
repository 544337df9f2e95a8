// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0

#include "fadgreen/fullspace.hpp"

#include <algorithm>
#include <cmath>

#include "fadgreen/errors.hpp"
#include "fadgreen/expint.hpp"
#include "fadgreen/kernels.hpp"

namespace fadg::fullspace {

namespace {

using geom::rvec3;

cplx factor(Normalization n) {
  if (n == Normalization::fourier_standard) {
    double c = 2.0 * M_PI;
    return cplx(-1.0 / (c * c * c), 0.0);
  }
  return cplx(1.0, 0.0);
}

// I minus its odd pole term i/(R beta):  I_reg = -A N(-R beta, -A).
// The pole terms of a (beta, -beta) pair cancel exactly, so the angular
// quadrature never forms them.
cplx radial_regular_part(double R, double s, cplx alpha, double beta) {
  cplx A = 2.0 * s * alpha;
  return -A * kernels::oscillatory_pole_integral(-R * beta, -A);
}

struct Frame {
  rvec3 xhat, e1, e2;
  cplx czx, cz1, cz2;  // zeta_dot projections
};

rvec3 cross(const rvec3& a, const rvec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Frame aligned_frame(const geom::FieldPoint& p, const geom::DirectionSpec& d) {
  rvec3 x = p.cartesian();
  rvec3 xh = {x[0] / p.R, x[1] / p.R, x[2] / p.R};
  rvec3 helper = std::abs(xh[2]) < 0.9 ? rvec3{0.0, 0.0, 1.0} : rvec3{1.0, 0.0, 0.0};
  rvec3 e1 = cross(helper, xh);
  double n = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
  for (double& c : e1) c /= n;
  rvec3 e2 = cross(xh, e1);
  auto proj = [&](const rvec3& v) {
    return d.zeta_dot[0] * v[0] + d.zeta_dot[1] * v[1] + d.zeta_dot[2] * v[2];
  };
  return {xh, e1, e2, proj(xh), proj(e1), proj(e2)};
}

cplx frame_alpha(const Frame& f, double u, double phi) {
  double w = std::sqrt(std::max(0.0, 1.0 - u * u));
  return u * f.czx + w * (std::cos(phi) * f.cz1 + std::sin(phi) * f.cz2);
}

// adaptive integration over a list of seed edges
quad::IntegralResult integrate_edges(const std::function<cplx(double)>& f,
                                     const std::vector<double>& edges,
                                     const quad::QuadratureSpec& q) {
  cplx total(0.0, 0.0);
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    quad::IntegralResult r = quad::integrate_adaptive(f, edges[i], edges[i + 1], q);
    total += r.value;
    err += r.err_est;
  }
  return {total, err};
}

std::vector<double> u_edges(double lo, double hi, double s, double R) {
  std::vector<double> e = {lo};
  double scale = 4.0 / std::max(1.0, s * R);
  for (double x = scale; x < hi; x *= 4.0)
    if (x > lo) e.push_back(x);
  e.push_back(hi);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

cplx inner_integral_impl(double phi, const Frame& fr, const geom::FieldPoint& p,
                         double s, const quad::QuadratureSpec& q, double lo,
                         double hi, double* err_out) {
  auto paired = [&](double u) {
    return radial_regular_part(p.R, s, frame_alpha(fr, u, phi), u) +
           radial_regular_part(p.R, s, frame_alpha(fr, -u, phi), -u);
  };
  quad::QuadratureSpec inner = q;
  inner.abs_tol = std::max(q.abs_tol, 1e-10);
  inner.rel_tol = std::max(q.rel_tol * 0.1, 1e-9);
  quad::IntegralResult r = integrate_edges(paired, u_edges(lo, hi, s, p.R), inner);
  if (err_out) *err_out += r.err_est;
  return r.value;
}

}  // namespace

cplx radial_integral_closed(const RadialKernelParams& p, double arg_margin) {
  if (!(p.R > 0.0) || !(p.s > 0.0))
    throw domain_error("radial_integral_closed: R and s must be positive");
  if (p.beta == 0.0) throw domain_error("radial_integral_closed: beta = 0");
  // arg(AB) accumulated without wrapping: arg alpha -+ pi/2
  double arg_ab = std::arg(p.alpha) + (p.beta > 0.0 ? -0.5 : 0.5) * M_PI;
  if (std::abs(arg_ab) >= M_PI - arg_margin)
    throw domain_error("radial_integral_closed: arg(AB) within margin of the cut");
  cplx w = p.A() * p.B();
  // A ( e^w Ei(-w) + 1/w ) = A ( 1/w - e^w E1(w) )
  return p.A() * (1.0 / w - expint::e1_scaled(w));
}

cplx radial_integral_continued(const RadialKernelParams& p) {
  if (p.beta == 0.0) throw domain_error("radial_integral_continued: beta = 0");
  cplx pole_term = cplx(0.0, 1.0) / (p.R * p.beta);
  return pole_term + radial_regular_part(p.R, p.s, p.alpha, p.beta);
}

quad::IntegralResult radial_integral_oracle(const RadialKernelParams& p,
                                            const quad::QuadratureSpec& q) {
  cplx A = p.A();
  double rate = p.R * p.beta;
  auto f = [&](cplx r) { return r * std::exp(cplx(0.0, 1.0) * rate * r) / (r + A); };
  return quad::integrate_semiinfinite_oscillatory(f, rate, q, {-A});
}

SeriesResult radial_integral_series(const RadialKernelParams& p, int n,
                                    double beta_min) {
  if (n < 1) throw domain_error("radial_integral_series: n >= 1 required");
  if (std::abs(p.beta) < beta_min)
    throw domain_error("radial_integral_series: |beta| below caustic floor");
  // -pi/2 < arg alpha < 3pi/2 excludes the closed negative imaginary axis
  if (std::real(p.alpha) == 0.0 && std::imag(p.alpha) <= 0.0)
    throw domain_error("radial_integral_series: arg(alpha) outside (-pi/2, 3pi/2)");
  SeriesResult out;
  out.value = cplx(0.0, 0.0);
  const cplx i_unit(0.0, 1.0);
  double kfact = 1.0;
  cplx ipow = i_unit;       // i^{k+1}
  cplx apow(1.0, 0.0);      // alpha^k
  double twopow = 1.0;      // 2^k
  double Rpow = p.R;        // R^{k+1}
  double bpow = p.beta;     // beta^{k+1}
  double spow = 1.0;        // s^k
  for (int k = 1; k <= n; ++k) {
    kfact *= k;
    ipow *= i_unit;
    apow *= p.alpha;
    twopow *= 2.0;
    Rpow *= p.R;
    bpow *= p.beta;
    spow *= p.s;
    cplx coeff = kfact / (ipow * twopow * apow) / (Rpow * bpow);
    out.terms.push_back({k, coeff, -k});
    out.value += coeff / spow;
  }
  return out;
}

namespace detail {
cplx inner_integral(double phi_frame, const geom::FieldPoint& p,
                    const geom::DirectionSpec& d, const quad::QuadratureSpec& q) {
  Frame fr = aligned_frame(p, d);
  return inner_integral_impl(phi_frame, fr, p, d.s, q, 0.0, 1.0, nullptr);
}
}  // namespace detail

AngularResult g_zeta_fullspace(const geom::FieldPoint& p, const geom::DirectionSpec& d,
                               const quad::QuadratureSpec& q, Normalization norm) {
  if (q.beta_min >= q.caustic_max_fraction)
    throw quadrature_error("g_zeta_fullspace: excised fraction exceeds configured cap");
  Frame fr = aligned_frame(p, d);
  const double bmin = q.beta_min;
  double err = 0.0;

  // the caustic strip |u| < beta_min: symmetric pair plus the analytic
  // oscillatory mass of the layer, int dOmega pi delta(R beta) = 2 pi^2 / R
  double strip_err = 0.0;
  auto strip_val = [&](double phi) {
    return inner_integral_impl(phi, fr, p, d.s, q, 0.0, bmin, &strip_err);
  };

  auto outer = [&](double phi) {
    return inner_integral_impl(phi, fr, p, d.s, q, bmin, 1.0, &err) + strip_val(phi);
  };

  // seed the azimuthal panels at the angles where alpha is real on the
  // caustic circle (the characteristic ridge)
  std::vector<double> edges = {0.0, 2.0 * M_PI};
  double ia = std::imag(fr.cz1), ib = std::imag(fr.cz2);
  if (ia != 0.0 || ib != 0.0) {
    double r0 = std::atan2(-ia, ib);
    for (double cand : {r0, r0 + M_PI, r0 + 2.0 * M_PI, r0 - M_PI}) {
      if (cand > 1e-12 && cand < 2.0 * M_PI - 1e-12) edges.push_back(cand);
    }
  } else {
    edges.push_back(M_PI);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  quad::QuadratureSpec outer_spec = q;
  outer_spec.abs_tol = std::max(q.abs_tol, 1e-9);
  outer_spec.rel_tol = std::max(q.rel_tol, 1e-7);
  quad::IntegralResult ang = integrate_edges(outer, edges, outer_spec);

  cplx delta_mass = 2.0 * M_PI * M_PI / p.R;
  cplx total = ang.value + delta_mass;
  cplx f = factor(norm);
  return {f * total, std::abs(f) * (ang.err_est + err + strip_err),
          2.0 * M_PI * 2.0 * bmin, f * delta_mass};
}

quad::IntegralResult expansion_coefficient(const geom::FieldPoint& p,
                                           const geom::DirectionSpec& d, int k,
                                           const quad::QuadratureSpec& q) {
  if (k != 1)
    throw domain_error(
        "expansion_coefficient: only k = 1 is a function; k >= 2 is distributional");
  Frame fr = aligned_frame(p, d);
  // a real direction makes 1/alpha singular along azimuth lines; that case is
  // itself a principal value with u-independent singular angles when x
  // is perpendicular to the direction
  const bool real_direction = std::abs(std::imag(fr.cz1)) + std::abs(std::imag(fr.cz2)) +
                                  std::abs(std::imag(fr.czx)) < 1e-13;
  std::vector<double> phi_sing;
  if (real_direction) {
    if (std::abs(fr.czx) > 1e-10)
      throw quadrature_error(
          "expansion_coefficient: real direction with oblique field point is not "
          "PV-reducible; use a complex direction");
    double p0 = std::atan2(-std::real(fr.cz1), std::real(fr.cz2));
    phi_sing = {p0, p0 + M_PI};
  }
  auto value_at = [&](double eps, double& err) {
    auto outer = [&](double phi) {
      auto paired = [&](double u) {
        return (1.0 / frame_alpha(fr, u, phi) + 1.0 / frame_alpha(fr, -u, phi)) /
               (u * u);
      };
      quad::QuadratureSpec inner = q;
      inner.abs_tol = std::max(q.abs_tol, 1e-12);
      quad::IntegralResult r =
          integrate_edges(paired, u_edges(eps, 1.0, 1.0 / eps, 1.0), inner);
      err += r.err_est;
      return r.value;
    };
    quad::IntegralResult o =
        real_direction ? quad::integrate_pv_circle(outer, phi_sing, q)
                       : quad::integrate_adaptive(outer, 0.0, 2.0 * M_PI, q);
    err += o.err_est;
    return o.value;
  };
  double e1 = 0.0, e2 = 0.0;
  cplx v1 = value_at(q.pv_epsilon, e1);
  cplx v2 = value_at(0.5 * q.pv_epsilon, e2);
  return {2.0 * v2 - v1, std::abs(v2 - v1) + e1 + 2.0 * e2};
}

cplx first_term_reconstruction(cplx coeff, double R, double s) {
  return -0.5 * coeff / (R * R * s);
}

}  // namespace fadg::fullspace
