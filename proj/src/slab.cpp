// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0

#include "fadgreen/slab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fadgreen/errors.hpp"
#include "fadgreen/expint.hpp"
#include "fadgreen/kernels.hpp"

namespace fadg::slab {

namespace {

const cplx kNaN{std::numeric_limits<double>::quiet_NaN(),
                std::numeric_limits<double>::quiet_NaN()};

cplx unit_alpha(double phi, double ld) {
  return cplx(std::cos(phi), ld * std::sin(phi));
}

// sector violations: alpha +- beta on the positive imaginary axis puts
// i(alpha +- beta) on the negative real axis, |arg| = pi.  Where alpha is
// itself purely imaginary both roots graze the boundary once; the root with
// the fewest grazes wins, a double graze is a genuine branch failure.
int branch_violations(cplx alpha, cplx beta) {
  auto on_pos_imag = [](cplx w) {
    return std::abs(std::real(w)) <= 1e-14 * std::abs(w) && std::imag(w) > 0.0;
  };
  return (on_pos_imag(alpha + beta) ? 1 : 0) + (on_pos_imag(alpha - beta) ? 1 : 0);
}

cplx pick_branch(cplx alpha, cplx beta) {
  int plus = branch_violations(alpha, beta);
  int minus = branch_violations(alpha, -beta);
  if (std::min(plus, minus) >= 2)
    throw domain_error("slab_kernel_params: no square-root branch satisfies the sector");
  return minus < plus ? -beta : beta;
}

}  // namespace

SlabConfig make_slab_config(double H, double k0, cplx m, double ell_dot_I, double z0) {
  if (!(H > 0.0)) throw domain_error("slab: H must be positive");
  if (!(k0 > 0.0)) throw domain_error("slab: k0 must be positive");
  if (!(z0 > 0.0 && z0 < H)) throw domain_error("slab: source depth outside (0, H)");
  if (std::abs(std::abs(ell_dot_I) - 1.0) < 1e-12)
    throw domain_error("slab: ell_dot_I = +-1 is excluded");
  return {H, k0, m, ell_dot_I, 0.0, 0.0, z0};
}

SlabModeData lambda_nu(int nu, const SlabConfig& cfg) {
  double half = (nu + 0.5) * M_PI / cfg.H;
  cplx lam2 = cfg.m * cfg.m + half * half;
  double rho2 = cfg.k0 * cfg.k0 + half * half;
  return {nu, std::sqrt(lam2), lam2, std::sqrt(rho2), rho2};
}

KernelParams slab_kernel_params(double phi, double s, int nu, const SlabConfig& cfg,
                                AlphaConvention conv) {
  if (!(s > 0.0)) throw domain_error("slab_kernel_params: s must be positive");
  const double ld = cfg.ell_dot_I;
  const cplx a_unit = unit_alpha(phi, ld);
  const cplx a = (conv == AlphaConvention::unit) ? a_unit : s * a_unit;
  SlabModeData md = lambda_nu(nu, cfg);
  // as printed in the construction: beta_nu^2 = alpha^2 - (1 - l') + rho_nu^2 / s^2
  cplx bnu = std::sqrt(a * a - (1.0 - ld) + md.rho_nu_sq / (s * s));
  cplx b0 = std::sqrt(a * a - (1.0 - ld));
  b0 = pick_branch(a, b0);
  bnu = pick_branch(a, bnu);
  // keep the two roots in the same half so beta_nu -> beta_0 termwise
  if (std::abs(bnu - b0) > std::abs(bnu + b0) &&
      branch_violations(a, -bnu) <= branch_violations(a, bnu))
    bnu = -bnu;
  return {s * a_unit, bnu, b0};
}

MnuResult m_nu_closed(double phi, const SlabFieldPoint& p, double s, int nu,
                      const SlabConfig& cfg, double cos_margin, double root_floor) {
  const double q = p.R * std::cos(p.theta - phi);
  if (std::abs(std::cos(p.theta - phi)) < cos_margin)
    throw domain_error("m_nu_closed: cos(theta - phi) within the singular margin");
  const cplx alpha_s = s * unit_alpha(phi, cfg.ell_dot_I);
  const cplx lam2 = lambda_nu(nu, cfg).lambda_nu_sq;
  // roots of r^2 - 2 alpha_s r - lambda^2; product is -lambda^2
  const cplx disc = std::sqrt(alpha_s * alpha_s + lam2);
  cplx r1 = alpha_s + disc, r2 = alpha_s - disc;
  cplx r_big = (std::abs(r1) >= std::abs(r2)) ? r1 : r2;
  cplx r_small = -lam2 / r_big;
  if (std::abs(r_big - r_small) < root_floor * (1.0 + std::abs(r_big)))
    throw domain_error("m_nu_closed: nearly degenerate roots");

  MnuResult out;
  out.value = (kernels::oscillatory_pole_integral(q, r_big) -
               kernels::oscillatory_pole_integral(q, r_small)) /
              (r_big - r_small);

  // the printed kernel formula verbatim, with the undefined beta read as beta_nu and alpha in
  // the s-independent reading; reported alongside, never certified.
  try {
    KernelParams kp = slab_kernel_params(phi, s, nu, cfg, AlphaConvention::unit);
    cplx au = unit_alpha(phi, cfg.ell_dot_I);
    cplx bn = kp.beta_nu;
    cplx w_minus = cplx(0.0, -q * s) * (au - bn);
    cplx w_plus = cplx(0.0, -q * s) * (au + bn);
    out.as_written = (au + bn) / (2.0 * bn) *
                     (expint::e1_scaled(w_plus) - expint::e1_scaled(w_minus));
  } catch (const domain_error&) {
    out.as_written = kNaN;
  }
  return out;
}

quad::IntegralResult m_nu_oracle(double phi, const SlabFieldPoint& p, double s,
                                 int nu, const SlabConfig& cfg,
                                 const quad::QuadratureSpec& q) {
  const double rate = -p.R * std::cos(p.theta - phi);
  const cplx alpha_s = s * unit_alpha(phi, cfg.ell_dot_I);
  const cplx lam2 = lambda_nu(nu, cfg).lambda_nu_sq;
  const cplx disc = std::sqrt(alpha_s * alpha_s + lam2);
  auto f = [&](cplx r) {
    return std::exp(cplx(0.0, rate) * r) / (r * r - 2.0 * alpha_s * r - lam2);
  };
  std::vector<cplx> poles = {alpha_s + disc, alpha_s - disc};

  // a root sitting on the integration ray makes the defining integral a
  // principal value; excise symmetrically, extrapolate, rotate the far tail
  double on_axis = -1.0;
  for (cplx r : poles)
    if (std::imag(r) == 0.0 && std::real(r) > 0.0) on_axis = std::real(r);
  if (on_axis < 0.0)
    return quad::integrate_semiinfinite_oscillatory(f, rate, q, poles);

  const double T = 2.0 * on_axis + 8.0 * M_PI / std::abs(rate);
  const cplx rot = std::polar(1.0, (rate > 0.0 ? 1.0 : -1.0) * q.contour_angle);
  auto fr = [&](double t) { return f(cplx(t, 0.0)); };
  auto excised = [&](double eps, double& err) {
    quad::IntegralResult a = quad::integrate_adaptive(fr, 0.0, on_axis - eps, q);
    quad::IntegralResult b = quad::integrate_adaptive(fr, on_axis + eps, T, q);
    quad::IntegralResult tail = quad::integrate_adaptive(
        [&](double v) {
          double u = v / (1.0 - v);
          return f(T + rot * u) * rot / ((1.0 - v) * (1.0 - v));
        },
        0.0, 1.0 - 1e-14, q);
    err = a.err_est + b.err_est + tail.err_est;
    return a.value + b.value + tail.value;
  };
  double e1 = 0.0, e2 = 0.0;
  double eps = std::min(q.pv_epsilon, 0.25 * on_axis);
  cplx v1 = excised(eps, e1);
  cplx v2 = excised(0.5 * eps, e2);
  return {2.0 * v2 - v1, std::abs(v2 - v1) + e1 + 2.0 * e2};
}

cplx m_nu_principal(double phi, const SlabFieldPoint& p, double s,
                    const SlabConfig& cfg, AlphaConvention conv, double cos_margin) {
  const double ld = cfg.ell_dot_I;
  const double c = std::cos(p.theta - phi);
  if (std::abs(c) < cos_margin)
    throw domain_error("m_nu_principal: cos(theta - phi) within the singular margin");
  const cplx a = (conv == AlphaConvention::unit) ? unit_alpha(phi, ld)
                                                 : s * unit_alpha(phi, ld);
  const cplx root = std::sqrt(a * a - (1.0 - ld));
  return -cplx(0.0, 1.0) / p.R * (a + root) / (1.0 - ld * ld) / c / s;
}

quad::IntegralResult i_nu_quadrature(const SlabFieldPoint& p, double s, int nu,
                                     const SlabConfig& cfg,
                                     const quad::QuadratureSpec& q) {
  auto f = [&](double phi) { return m_nu_closed(phi, p, s, nu, cfg).value; };
  std::vector<double> zeros = {p.theta + 0.5 * M_PI, p.theta + 1.5 * M_PI};
  return quad::integrate_pv_circle(f, zeros, q);
}

cplx g_angular(double R, double theta, double ell_dot_I, double sing_margin) {
  if (!(R > 0.0)) throw domain_error("g_angular: R must be positive");
  if (std::abs(theta - 0.5 * M_PI) < sing_margin ||
      std::abs(theta - 1.5 * M_PI) < sing_margin)
    throw domain_error("g_angular: theta at a singular angle pi/2 or 3pi/2");
  const double ld = ell_dot_I;
  const double chi = (theta > 0.5 * M_PI && theta < 1.5 * M_PI) ? 1.0 : 0.0;
  cplx bracket = 2.0 * M_PI - theta -
                 cplx(0.0, 1.0) * (std::log(std::abs(std::cos(theta))) -
                                   cplx(0.0, 1.0) * M_PI * chi);
  return -cplx(0.0, 1.0) / (1.0 - ld * ld) * std::exp(cplx(0.0, theta)) / R * bracket;
}

quad::IntegralResult g_angular_pv_oracle(double R, double theta, double ell_dot_I,
                                         const quad::QuadratureSpec& q) {
  const double ld = ell_dot_I;
  auto integrand = [&](double phi) {
    cplx a = unit_alpha(phi, ld);
    return (a + (a * a - (1.0 - ld) * (1.0 - ld))) / std::cos(theta - phi);
  };
  quad::IntegralResult pv = quad::integrate_pv_circle(
      integrand, {theta + 0.5 * M_PI, theta + 1.5 * M_PI}, q);
  cplx pref = -cplx(0.0, 1.0) / ((1.0 - ld * ld) * R);
  return {pref * pv.value, std::abs(pref) * pv.err_est};
}

cplx f_pairing(const TestFunction& psi, const SlabConfig& cfg, int n_images) {
  if (n_images < 1) throw domain_error("f_pairing: n_images >= 1 required");
  const double H = cfg.H, z0 = cfg.z0;
  cplx acc(0.0, 0.0);
  for (int nu = -n_images; nu <= n_images; ++nu) {
    double sgn = (nu % 2 == 0) ? 1.0 : -1.0;  // cos(pi nu)
    double z_plus = 2.0 * nu * H - z0;        // first comb, weight cos(pi(z+z0)/2H)
    if (z_plus > 0.0 && z_plus < H) acc += sgn * psi(z_plus);
    double z_minus = z0 + 2.0 * nu * H;       // second comb
    if (z_minus > 0.0 && z_minus < H) acc -= sgn * psi(z_minus);
  }
  return acc;
}

double vertical_term(int k, double z, double H) {
  return std::sin((k + 0.5) * M_PI * z / H);
}

double vertical_term_dz(int k, double z, double H) {
  // cos((k+1/2) pi z/H) = (-1)^k sin((k+1/2) pi (H-z)/H); the reflected form
  // vanishes exactly at z = H, matching the mixed boundary condition termwise
  double sgn = (k % 2 == 0) ? 1.0 : -1.0;
  return (k + 0.5) * M_PI / H * sgn * std::sin((k + 0.5) * M_PI * (H - z) / H);
}

cplx eigen_sum_pairing(const TestFunction& psi, const SlabConfig& cfg, int n_modes,
                       double abel, const quad::QuadratureSpec& q) {
  if (n_modes < 1) throw domain_error("eigen_sum_pairing: n_modes >= 1 required");
  if (!(abel > 0.0 && abel <= 1.0))
    throw domain_error("eigen_sum_pairing: abel must lie in (0, 1]");
  cplx acc(0.0, 0.0);
  double damp = 1.0;  // abel^k
  for (int k = 0; k < n_modes; ++k) {
    auto mode = [&](double z) { return psi(z) * vertical_term(k, z, cfg.H); };
    quad::IntegralResult sk = quad::integrate_adaptive(mode, 0.0, cfg.H, q);
    // nu = k and nu = -k-1 carry identical sine products, abel^k and abel^{k+1}
    acc += (damp + damp * abel) * vertical_term(k, cfg.z0, cfg.H) * sk.value;
    damp *= abel;
  }
  return acc;
}

cplx eigen_sum_pairing_extrapolated(const TestFunction& psi, const SlabConfig& cfg,
                                    int n_modes, const quad::QuadratureSpec& q) {
  const double grid[3] = {0.99, 0.995, 0.999};
  cplx v[3];
  for (int i = 0; i < 3; ++i) v[i] = eigen_sum_pairing(psi, cfg, n_modes, grid[i], q);
  // least-squares line v = v1 + c (1 - a) through the three samples
  double x[3] = {1.0 - grid[0], 1.0 - grid[1], 1.0 - grid[2]};
  double sx = x[0] + x[1] + x[2], sxx = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  cplx sv = v[0] + v[1] + v[2], sxv = x[0] * v[0] + x[1] * v[1] + x[2] * v[2];
  double det = 3.0 * sxx - sx * sx;
  return (sxx * sv - sx * sxv) / det;
}

int default_n_modes(const SlabConfig& cfg) {
  double target = 20.0 * std::max(std::abs(cfg.m), cfg.k0);
  int n = static_cast<int>(std::ceil(target * cfg.H / M_PI));
  return std::max(n, 4);
}

namespace {

SlabGreenResult slab_series(const SlabFieldPoint& p, double s, const SlabConfig& cfg,
                            int n_modes, const quad::QuadratureSpec& q,
                            const std::function<cplx(int)>& vertical_weight) {
  if (n_modes < 1) throw domain_error("g_zeta_slab: n_modes >= 1 required");
  const cplx pref = -std::exp(cplx(0.0, 1.0) * cfg.m * cfg.z0) /
                    (2.0 * M_PI * M_PI * cfg.H);
  cplx sum(0.0, 0.0);
  double quad_err = 0.0;
  double last_pair = 0.0;
  double i_first = 0.0, i_last = 0.0;
  for (int k = 0; k < n_modes; ++k) {
    quad::IntegralResult ik = i_nu_quadrature(p, s, k, cfg, q);
    quad_err += 2.0 * ik.err_est;
    if (k == 0) i_first = std::abs(ik.value);
    i_last = std::abs(ik.value);
    // nu = k then its mirror nu = -k-1 (identical contribution)
    cplx contrib = vertical_weight(k) * ik.value;
    sum += contrib;
    sum += contrib;
    last_pair = 2.0 * std::abs(contrib);
  }
  // the horizontal kernels only start decaying once (nu + 1/2) pi/H passes
  // sqrt(2 s); growing kernels by the end of the budget mean the truncation
  // is meaningless
  if (n_modes >= 8 && i_last > 1.05 * i_first)
    throw quadrature_error("g_zeta_slab: no tail decay by n_modes");
  return {pref * sum, std::abs(pref) * last_pair, std::abs(pref) * quad_err};
}

}  // namespace

SlabGreenResult g_zeta_slab_truncated(const SlabFieldPoint& p, double s,
                                      const SlabConfig& cfg, int n_modes,
                                      const quad::QuadratureSpec& q) {
  if (!(p.z > 0.0 && p.z < cfg.H)) throw domain_error("g_zeta_slab: z outside (0, H)");
  return slab_series(p, s, cfg, n_modes, q, [&](int k) {
    return cplx(vertical_term(k, cfg.z0, cfg.H) * vertical_term(k, p.z, cfg.H), 0.0);
  });
}

SlabGreenResult g_zeta_slab_paired(double R, double theta, const TestFunction& psi,
                                   double s, const SlabConfig& cfg, int n_modes,
                                   const quad::QuadratureSpec& q) {
  SlabFieldPoint p{R, theta, 0.5 * cfg.H};
  return slab_series(p, s, cfg, n_modes, q, [&](int k) {
    auto mode = [&](double z) { return psi(z) * vertical_term(k, z, cfg.H); };
    quad::IntegralResult sk = quad::integrate_adaptive(mode, 0.0, cfg.H, q);
    return vertical_term(k, cfg.z0, cfg.H) * sk.value;
  });
}

}  // namespace fadg::slab
