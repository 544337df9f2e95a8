// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0

#include "fadgreen/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "fadgreen/errors.hpp"

namespace fadg::quad {

namespace {

// 15-point Kronrod nodes (positive half) with the embedded 7-point Gauss rule.
constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
  double a, b;
  cplx value;
  double err;
};

Panel gk15(const std::function<cplx(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  cplx fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * xgk[i]);
    fv[14 - i] = f(c + h * xgk[i]);
  }
  fv[7] = f(c);
  cplx kron(0.0, 0.0), gauss(0.0, 0.0);
  for (int i = 0; i < 7; ++i) kron += wgk[i] * (fv[i] + fv[14 - i]);
  kron += wgk[7] * fv[7];
  for (int i = 0; i < 3; ++i) gauss += wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  gauss += wg[3] * fv[7];
  kron *= h;
  gauss *= h;
  double err = std::abs(kron - gauss);
  // QUADPACK-style sharpening of the raw difference
  err = std::min(err, std::pow(200.0 * err / std::max(std::abs(kron), 1e-300), 1.5) *
                          std::abs(kron));
  return {a, b, kron, err};
}

}  // namespace

IntegralResult integrate_adaptive(const std::function<cplx(double)>& f,
                                  double a, double b, const QuadratureSpec& q) {
  if (!(b > a)) return {cplx(0.0, 0.0), 0.0};
  std::vector<Panel> panels;
  panels.push_back(gk15(f, a, b));
  for (int iter = 0; iter < q.max_subdivisions; ++iter) {
    cplx total(0.0, 0.0);
    double err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      err += panels[i].err;
      if (panels[i].err > panels[worst].err) worst = i;
    }
    double tol = std::max(q.abs_tol, q.rel_tol * std::abs(total));
    if (err <= tol) break;
    Panel p = panels[worst];
    double mid = 0.5 * (p.a + p.b);
    if (mid <= p.a || mid >= p.b) break;  // interval exhausted to rounding
    panels[worst] = gk15(f, p.a, mid);
    panels.push_back(gk15(f, mid, p.b));
  }
  // accumulate in position order for reproducibility
  std::sort(panels.begin(), panels.end(),
            [](const Panel& l, const Panel& r) { return l.a < r.a; });
  cplx total(0.0, 0.0);
  double err = 0.0;
  for (const Panel& p : panels) {
    total += p.value;
    err += p.err;
  }
  double tol = std::max(q.abs_tol, q.rel_tol * std::abs(total));
  if (err > 50.0 * tol && static_cast<int>(panels.size()) >= q.max_subdivisions)
    throw quadrature_error("integrate_adaptive: subdivision budget exhausted");
  return {total, err};
}

IntegralResult integrate_adaptive_2d(const std::function<cplx(double, double)>& f,
                                     double ax, double bx, double ay, double by,
                                     const QuadratureSpec& q) {
  QuadratureSpec inner = q;
  inner.abs_tol = q.abs_tol / std::max(1.0, bx - ax) * 0.5;
  inner.rel_tol = q.rel_tol * 0.1;
  double inner_err = 0.0;
  auto outer = [&](double x) {
    IntegralResult r = integrate_adaptive([&](double y) { return f(x, y); }, ay, by, inner);
    inner_err = std::max(inner_err, r.err_est);
    return r.value;
  };
  IntegralResult out = integrate_adaptive(outer, ax, bx, q);
  out.err_est += inner_err * (bx - ax);
  return out;
}

IntegralResult integrate_semiinfinite_oscillatory(
    const std::function<cplx(cplx)>& f, double osc_rate, const QuadratureSpec& q,
    const std::vector<cplx>& poles) {
  if (osc_rate == 0.0)
    throw domain_error("integrate_semiinfinite_oscillatory: osc_rate = 0");
  const double gamma = (osc_rate > 0.0 ? 1.0 : -1.0) * q.contour_angle;
  const cplx rot = std::polar(1.0, gamma);

  // Rotation is legal when no pole lies in the swept sector; a pole too close
  // to either ray is a precondition violation.
  bool blocked = false;
  for (cplx p : poles) {
    double ang = std::arg(p);
    double lo = std::min(0.0, gamma), hi = std::max(0.0, gamma);
    if (ang > lo && ang < hi) blocked = true;
    double dray = std::abs(std::imag(p * std::conj(rot)));
    double dreal = std::abs(std::imag(p));
    if (std::abs(p) > 1e-14 && std::min(dray, dreal) < 1e-9 * std::abs(p) &&
        std::real(p) > 0.0)
      throw quadrature_error(
          "integrate_semiinfinite_oscillatory: pole on an integration ray");
  }

  const double decay = std::abs(osc_rate) * std::sin(q.contour_angle);
  auto ray_piece = [&](cplx origin, double& err) {
    // \int_0^inf f(origin + rot*t) rot dt, exponential decay at rate `decay`
    double T = q.upper_cutoff / decay;
    IntegralResult head = integrate_adaptive(
        [&](double t) { return f(origin + rot * t) * rot; }, 0.0, T, q);
    IntegralResult tail = integrate_adaptive(
        [&](double v) {
          double t = T + v / (1.0 - v);
          double jac = 1.0 / ((1.0 - v) * (1.0 - v));
          return f(origin + rot * t) * rot * jac;
        },
        0.0, 1.0 - 1e-14, q);
    err = head.err_est + tail.err_est;
    return head.value + tail.value;
  };

  if (!blocked) {
    double err = 0.0;
    cplx v = ray_piece(cplx(0.0, 0.0), err);
    return {v, err};
  }

  // Blocked rotation: real-axis panels past the poles, then rotate the tail.
  double rmax = 0.0;
  for (cplx p : poles) rmax = std::max(rmax, std::abs(p));
  double T = 2.0 * rmax + 8.0 * M_PI / std::abs(osc_rate);
  IntegralResult head = integrate_adaptive(
      [&](double t) { return f(cplx(t, 0.0)); }, 0.0, T, q);
  double tail_err = 0.0;
  cplx tail = ray_piece(cplx(T, 0.0), tail_err);
  return {head.value + tail, head.err_est + tail_err};
}

IntegralResult integrate_pv_circle(const std::function<cplx(double)>& f,
                                   const std::vector<double>& singularities,
                                   const QuadratureSpec& q) {
  const double two_pi = 2.0 * M_PI;
  std::vector<double> s = singularities;
  for (double& x : s) x = std::fmod(std::fmod(x, two_pi) + two_pi, two_pi);
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    double next = (i + 1 < s.size()) ? s[i + 1] : s[0] + two_pi;
    if (next - s[i] <= 4.0 * q.pv_epsilon)
      throw quadrature_error("integrate_pv_circle: singularities closer than 4*pv_epsilon");
  }

  auto excised = [&](double eps, double& err) {
    // integrate the complement of the excised arcs
    cplx total(0.0, 0.0);
    err = 0.0;
    if (s.empty()) {
      IntegralResult r = integrate_adaptive(f, 0.0, two_pi, q);
      err = r.err_est;
      return r.value;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      double a = s[i] + eps;
      double b = (i + 1 < s.size()) ? s[i + 1] - eps : s[0] + two_pi - eps;
      IntegralResult r = integrate_adaptive(
          [&](double x) { return f(std::fmod(x, two_pi)); }, a, b, q);
      total += r.value;
      err += r.err_est;
    }
    return total;
  };

  // excision bias is a + b eps + c eps^2 log-ish; eliminate the leading two
  // orders from the eps, eps/2, eps/4 ladder
  double e1 = 0.0, e2 = 0.0, e3 = 0.0;
  cplx v1 = excised(q.pv_epsilon, e1);
  cplx v2 = excised(0.5 * q.pv_epsilon, e2);
  cplx v3 = excised(0.25 * q.pv_epsilon, e3);
  cplx l1 = 2.0 * v2 - v1;
  cplx l2 = 2.0 * v3 - v2;
  cplx extrap = (4.0 * l2 - l1) / 3.0;
  double err = std::abs(l2 - l1) / 3.0 + e1 + e2 + e3;
  return {extrap, err};
}

}  // namespace fadg::quad
