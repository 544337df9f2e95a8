// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0
//
// Faddeev-Green function in the slab 0 < z < H: separation spectrum, the
// horizontal kernels M_nu / I_nu via the exponential integral, the principal
// term and closed angular factor g, and the distributional vertical factor
// handled through pairings with test functions.

#ifndef FADGREEN_SLAB_HPP
#define FADGREEN_SLAB_HPP

#include <complex>
#include <functional>
#include <vector>

#include "fadgreen/quadrature.hpp"

namespace fadg::slab {

using cplx = std::complex<double>;

// Two readings of alpha in the horizontal kernel: `unit` treats
// alpha = cos phi + i l'. sin phi as s-independent (the reading under which
// beta_nu - beta_0 = O(1/s^2) holds); `scaled` keeps the factor s.
enum class AlphaConvention { unit, scaled };

struct SlabConfig {
  double H;
  double k0;
  cplx m;            // vertical component of zeta
  double ell_dot_I;  // zeta_par = (s, i s l'_I)
  double x0 = 0.0, y0 = 0.0;
  double z0;         // source depth, 0 < z0 < H
};

struct SlabModeData {
  int nu;
  cplx lambda_nu;
  cplx lambda_nu_sq;
  double rho_nu;
  double rho_nu_sq;
};

struct SlabFieldPoint {
  double R;      // horizontal distance from (x0, y0)
  double theta;  // horizontal polar angle, [0, 2pi)
  double z;      // 0 < z < H
};

struct KernelParams {
  cplx alpha_s;  // s (cos phi + i l'. sin phi)
  cplx beta_nu;
  cplx beta_0;
};

struct MnuResult {
  cplx value;       // re-derived partial-fraction closed form (certified path)
  cplx as_written;  // Eq.-(3.9)-as-printed value (beta read as beta_nu); NaN if
                    // its principal-branch expression is not evaluable
};

SlabConfig make_slab_config(double H, double k0, cplx m, double ell_dot_I, double z0);

SlabModeData lambda_nu(int nu, const SlabConfig& cfg);

KernelParams slab_kernel_params(double phi, double s, int nu, const SlabConfig& cfg,
                                AlphaConvention conv = AlphaConvention::unit);

// Horizontal kernel M_nu(phi) = \int_0^inf e^{-i R cos(theta-phi) r} /
// (r^2 - 2 alpha_s r - lambda_nu^2) dr by partial fractions over the roots,
// each piece an exponential-integral evaluation.
MnuResult m_nu_closed(double phi, const SlabFieldPoint& p, double s, int nu,
                      const SlabConfig& cfg, double cos_margin = 1e-12,
                      double root_floor = 1e-10);

// Brute-force reference for the same integral.
quad::IntegralResult m_nu_oracle(double phi, const SlabFieldPoint& p, double s,
                                 int nu, const SlabConfig& cfg,
                                 const quad::QuadratureSpec& q);

// Principal term of M_nu as printed (nu-independent):
//   -(i/R) (alpha + sqrt(alpha^2 - (1 - l'))) / (1 - l'^2) / cos(theta-phi) / s
cplx m_nu_principal(double phi, const SlabFieldPoint& p, double s,
                    const SlabConfig& cfg, AlphaConvention conv = AlphaConvention::unit,
                    double cos_margin = 1e-9);

// I_nu = \int_0^{2pi} M_nu dphi with symmetric excision at the two zeros of
// cos(theta - phi), Richardson extrapolated.
quad::IntegralResult i_nu_quadrature(const SlabFieldPoint& p, double s, int nu,
                                     const SlabConfig& cfg,
                                     const quad::QuadratureSpec& q);

// Closed angular factor of the formal expansion, Eq.-(3.17) verbatim.
cplx g_angular(double R, double theta, double ell_dot_I, double sing_margin = 1e-9);

// PV quadrature of the two printed angular integrals combined with the
// -i e / ((1 - l'^2) R) prefactor; the independent reference for g_angular.
quad::IntegralResult g_angular_pv_oracle(double R, double theta, double ell_dot_I,
                                         const quad::QuadratureSpec& q);

using TestFunction = std::function<cplx(double)>;

// <f(.; z0), psi> for the image-comb vertical factor: cosine-weighted delta
// evaluations over images |nu| <= n_images that land inside (0, H).
cplx f_pairing(const TestFunction& psi, const SlabConfig& cfg, int n_images);

// <sum_nu abel^{|nu|} sin_nu(z0) sin_nu(.), psi> with the z-integrals done by
// adaptive quadrature; converges to H psi(z0) as n_modes -> inf, abel -> 1.
cplx eigen_sum_pairing(const TestFunction& psi, const SlabConfig& cfg, int n_modes,
                       double abel, const quad::QuadratureSpec& q);

// Abel values at the damping grid extrapolated linearly in (1 - abel).
cplx eigen_sum_pairing_extrapolated(const TestFunction& psi, const SlabConfig& cfg,
                                    int n_modes, const quad::QuadratureSpec& q);

struct SlabGreenResult {
  cplx value;
  double tail_est;
  double quad_err;
};

// Mode-truncated eigenfunction series with I_nu from i_nu_quadrature,
// accumulated in the order nu = 0, -1, 1, -2, 2, ...
SlabGreenResult g_zeta_slab_truncated(const SlabFieldPoint& p, double s,
                                      const SlabConfig& cfg, int n_modes,
                                      const quad::QuadratureSpec& q);

// Same series paired against a vertical test function instead of evaluated
// at a point; the object whose magnitude obeys the slab 1/s law.
SlabGreenResult g_zeta_slab_paired(double R, double theta, const TestFunction& psi,
                                   double s, const SlabConfig& cfg, int n_modes,
                                   const quad::QuadratureSpec& q);

// Vertical eigenfunction pieces (exposed for the boundary-condition checks).
double vertical_term(int k, double z, double H);
double vertical_term_dz(int k, double z, double H);

// Default mode count: smallest N with (N + 1/2) pi / H >= 20 max(|m|, k0).
int default_n_modes(const SlabConfig& cfg);

}  // namespace fadg::slab

#endif
