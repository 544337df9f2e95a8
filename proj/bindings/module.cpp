// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fadgreen/errors.hpp"
#include "fadgreen/expint.hpp"
#include "fadgreen/fullspace.hpp"
#include "fadgreen/geometry.hpp"
#include "fadgreen/slab.hpp"
#include "fadgreen/sweep.hpp"
#include "fadgreen/validate.hpp"

namespace py = pybind11;
using cplx = std::complex<double>;

namespace {

fadg::quad::QuadratureSpec spec_from_kwargs(double abs_tol, double rel_tol,
                                            double pv_epsilon, double beta_min) {
  fadg::quad::QuadratureSpec q;
  q.abs_tol = abs_tol;
  q.rel_tol = rel_tol;
  q.pv_epsilon = pv_epsilon;
  q.beta_min = beta_min;
  return q;
}

}  // namespace

PYBIND11_MODULE(_fadgreen, m) {
  m.doc() = "Faddeev-Green function evaluators: exponential-integral closed "
            "forms, large-parameter series, and certified angular quadratures";

  // exponential integral family
  m.def("e1", &fadg::expint::e1, py::arg("z"),
        "E1(z) for complex z off the negative real axis");
  m.def("e1_scaled", &fadg::expint::e1_scaled, py::arg("z"), "e^z E1(z)");
  m.def("ei_real", &fadg::expint::ei_real, py::arg("x"), "Ei(x), x > 0");
  m.def("ei_asymptotic_partial_sum", &fadg::expint::ei_asymptotic_partial_sum,
        py::arg("z"), py::arg("n"), py::arg("delta") = 1e-9,
        "partial sum of the asymptotic series for e^{-z} Ei(z)");
  m.def("optimal_truncation_order", &fadg::expint::optimal_truncation_order,
        py::arg("z"));

  // geometry
  py::class_<fadg::geom::DirectionSpec>(m, "DirectionSpec")
      .def_readonly("s", &fadg::geom::DirectionSpec::s)
      .def_readonly("k0", &fadg::geom::DirectionSpec::k0)
      .def_readonly("zeta", &fadg::geom::DirectionSpec::zeta)
      .def_readonly("zeta_dot", &fadg::geom::DirectionSpec::zeta_dot);
  m.def(
      "make_direction",
      [](std::array<cplx, 3> zd, double s, double k0) {
        return fadg::geom::make_direction(zd, s, k0);
      },
      py::arg("zeta_dot"), py::arg("s"), py::arg("k0"));
  m.def("alpha_fullspace", &fadg::geom::alpha_fullspace, py::arg("theta"),
        py::arg("phi"), py::arg("direction"));
  m.def(
      "beta_fullspace",
      [](double theta, double phi, double R, double psi, double omega) {
        return fadg::geom::beta_fullspace(theta, phi,
                                          fadg::geom::make_field_point(R, psi, omega));
      },
      py::arg("theta"), py::arg("phi"), py::arg("R"), py::arg("psi"),
      py::arg("omega"));

  // full space
  m.def(
      "radial_integral_closed",
      [](double R, double s, cplx alpha, double beta) {
        return fadg::fullspace::radial_integral_closed({R, s, alpha, beta});
      },
      py::arg("R"), py::arg("s"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "radial_integral_series",
      [](double R, double s, cplx alpha, double beta, int n) {
        auto r = fadg::fullspace::radial_integral_series({R, s, alpha, beta}, n);
        std::vector<std::tuple<int, cplx, int>> terms;
        for (const auto& t : r.terms) terms.emplace_back(t.k, t.coefficient, t.s_power);
        return py::make_tuple(r.value, terms);
      },
      py::arg("R"), py::arg("s"), py::arg("alpha"), py::arg("beta"), py::arg("n"));
  m.def(
      "g_zeta_fullspace",
      [](double R, double psi, double omega, std::array<cplx, 3> zeta_dot, double s,
         double k0, const std::string& normalization, double abs_tol, double rel_tol,
         double pv_epsilon, double beta_min) {
        auto q = spec_from_kwargs(abs_tol, rel_tol, pv_epsilon, beta_min);
        auto norm = normalization == "paper"
                        ? fadg::fullspace::Normalization::paper
                        : fadg::fullspace::Normalization::fourier_standard;
        auto g = fadg::fullspace::g_zeta_fullspace(
            fadg::geom::make_field_point(R, psi, omega),
            fadg::geom::make_direction(zeta_dot, s, k0), q, norm);
        return py::make_tuple(g.value, g.err_est, g.excised_measure);
      },
      py::arg("R"), py::arg("psi"), py::arg("omega"), py::arg("zeta_dot"),
      py::arg("s"), py::arg("k0") = 0.0, py::arg("normalization") = "paper",
      py::arg("abs_tol") = 1e-11, py::arg("rel_tol") = 1e-9,
      py::arg("pv_epsilon") = 1e-2, py::arg("beta_min") = 1e-3);
  m.def(
      "expansion_coefficient",
      [](double R, double psi, double omega, std::array<cplx, 3> zeta_dot, double s,
         double k0, int k) {
        fadg::quad::QuadratureSpec q;
        auto c = fadg::fullspace::expansion_coefficient(
            fadg::geom::make_field_point(R, psi, omega),
            fadg::geom::make_direction(zeta_dot, s, k0), k, q);
        return py::make_tuple(c.value, c.err_est);
      },
      py::arg("R"), py::arg("psi"), py::arg("omega"), py::arg("zeta_dot"),
      py::arg("s"), py::arg("k0") = 0.0, py::arg("k") = 1);

  // slab
  py::class_<fadg::slab::SlabConfig>(m, "SlabConfig")
      .def_readonly("H", &fadg::slab::SlabConfig::H)
      .def_readonly("k0", &fadg::slab::SlabConfig::k0)
      .def_readonly("m", &fadg::slab::SlabConfig::m)
      .def_readonly("ell_dot_I", &fadg::slab::SlabConfig::ell_dot_I)
      .def_readonly("z0", &fadg::slab::SlabConfig::z0);
  m.def("make_slab_config", &fadg::slab::make_slab_config, py::arg("H"),
        py::arg("k0"), py::arg("m"), py::arg("ell_dot_I"), py::arg("z0"));
  m.def(
      "lambda_nu",
      [](int nu, const fadg::slab::SlabConfig& cfg) {
        auto md = fadg::slab::lambda_nu(nu, cfg);
        return py::make_tuple(md.lambda_nu, md.rho_nu);
      },
      py::arg("nu"), py::arg("cfg"));
  m.def(
      "slab_kernel_params",
      [](double phi, double s, int nu, const fadg::slab::SlabConfig& cfg,
         const std::string& conv) {
        auto kp = fadg::slab::slab_kernel_params(
            phi, s, nu, cfg,
            conv == "scaled" ? fadg::slab::AlphaConvention::scaled
                             : fadg::slab::AlphaConvention::unit);
        return py::make_tuple(kp.alpha_s, kp.beta_nu, kp.beta_0);
      },
      py::arg("phi"), py::arg("s"), py::arg("nu"), py::arg("cfg"),
      py::arg("alpha_convention") = "unit");
  m.def(
      "m_nu_closed",
      [](double phi, double R, double theta, double z, double s, int nu,
         const fadg::slab::SlabConfig& cfg) {
        auto r = fadg::slab::m_nu_closed(phi, {R, theta, z}, s, nu, cfg);
        return py::make_tuple(r.value, r.as_written);
      },
      py::arg("phi"), py::arg("R"), py::arg("theta"), py::arg("z"), py::arg("s"),
      py::arg("nu"), py::arg("cfg"));
  m.def(
      "m_nu_principal",
      [](double phi, double R, double theta, double z, double s,
         const fadg::slab::SlabConfig& cfg, const std::string& conv) {
        return fadg::slab::m_nu_principal(
            phi, {R, theta, z}, s, cfg,
            conv == "scaled" ? fadg::slab::AlphaConvention::scaled
                             : fadg::slab::AlphaConvention::unit);
      },
      py::arg("phi"), py::arg("R"), py::arg("theta"), py::arg("z"), py::arg("s"),
      py::arg("cfg"), py::arg("alpha_convention") = "unit");
  m.def(
      "i_nu_quadrature",
      [](double R, double theta, double z, double s, int nu,
         const fadg::slab::SlabConfig& cfg) {
        fadg::quad::QuadratureSpec q;
        auto r = fadg::slab::i_nu_quadrature({R, theta, z}, s, nu, cfg, q);
        return py::make_tuple(r.value, r.err_est);
      },
      py::arg("R"), py::arg("theta"), py::arg("z"), py::arg("s"), py::arg("nu"),
      py::arg("cfg"));
  m.def("g_angular", &fadg::slab::g_angular, py::arg("R"), py::arg("theta"),
        py::arg("ell_dot_I"), py::arg("sing_margin") = 1e-9);
  m.def(
      "f_pairing",
      [](const std::function<cplx(double)>& psi, const fadg::slab::SlabConfig& cfg,
         int n_images) { return fadg::slab::f_pairing(psi, cfg, n_images); },
      py::arg("psi"), py::arg("cfg"), py::arg("n_images") = 4);
  m.def(
      "eigen_sum_pairing",
      [](const std::function<cplx(double)>& psi, const fadg::slab::SlabConfig& cfg,
         int n_modes, double abel) {
        fadg::quad::QuadratureSpec q;
        return fadg::slab::eigen_sum_pairing(psi, cfg, n_modes, abel, q);
      },
      py::arg("psi"), py::arg("cfg"), py::arg("n_modes") = 60,
      py::arg("abel") = 1.0);
  m.def(
      "g_zeta_slab",
      [](double R, double theta, double z, double s, const fadg::slab::SlabConfig& cfg,
         int n_modes) {
        fadg::quad::QuadratureSpec q;
        int n = n_modes > 0 ? n_modes : fadg::slab::default_n_modes(cfg);
        auto g = fadg::slab::g_zeta_slab_truncated({R, theta, z}, s, cfg, n, q);
        return py::make_tuple(g.value, g.tail_est, g.quad_err);
      },
      py::arg("R"), py::arg("theta"), py::arg("z"), py::arg("s"), py::arg("cfg"),
      py::arg("n_modes") = 0);

  // harness
  m.def(
      "fit_loglog_slope",
      [](const std::vector<std::pair<double, double>>& points) {
        std::vector<fadg::sweep::SweepRow> rows;
        for (auto [s, v] : points)
          rows.push_back({s, 0, cplx(v, 0.0), cplx(0.0, 0.0), v, v, 0.0});
        auto fit = fadg::sweep::fit_loglog_slope(rows, fadg::sweep::FitField::magnitude);
        return py::make_tuple(fit.slope, fit.stderr_);
      },
      py::arg("points"), "least-squares slope of log(value) vs log(s)");

  py::register_exception<fadg::domain_error>(m, "DomainError");
  py::register_exception<fadg::quadrature_error>(m, "QuadratureError");

  m.attr("__version__") = "0.1.0";
}
