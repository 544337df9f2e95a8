// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one numbered criterion per invocation, each printing a
// single PASS/FAIL line with the measured figures.  Criteria encode the two
// quantitative asymptotic claims (the 1/s law and the s^{-(n+1)} remainder)
// plus the oracle certifications; where a printed formula and the certified
// quadrature disagree, the criterion says so rather than papering over it.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "fadgreen/expint.hpp"
#include "fadgreen/fullspace.hpp"
#include "fadgreen/geometry.hpp"
#include "fadgreen/slab.hpp"
#include "fadgreen/sweep.hpp"
#include "fadgreen/validate.hpp"

using cplx = std::complex<double>;
namespace fs = fadg::fullspace;
namespace geo = fadg::geom;
namespace sl = fadg::slab;
namespace sw = fadg::sweep;

namespace {

const fadg::quad::QuadratureSpec kQ;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

sl::TestFunction bump(double c, double w) {
  return [c, w](double z) -> cplx {
    double t = (z - c) / w;
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
  };
}

// --- criterion implementations ---

Outcome criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  fadg::validate::Check c = fadg::validate::check_e1_grid(100, kQ);
  double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "max rel err %.3g (tol 1e-10), %.1f s (limit 10 s)",
                c.metric, dt);
  return {c.metric <= 1e-10 && dt < 10.0, buf};
}

Outcome criterion_2() {
  auto t0 = std::chrono::steady_clock::now();
  fadg::validate::Check c = fadg::validate::check_radial_closed(200, 2024, kQ);
  double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "max rel err %.3g (tol 1e-8) on 200 points, %.1f s "
                "(limit 60 s)", c.metric, dt);
  return {c.metric <= 1e-8 && dt < 60.0, buf};
}

Outcome criterion_3() {
  std::string detail;
  bool ok = true;
  for (int n : {1, 2, 3}) {
    sw::SweepConfig cfg;
    cfg.target = sw::Target::radial;
    cfg.s_values = sw::geometric_grid(20.0, 320.0, 9);
    cfg.orders = {n};
    cfg.fixed = {{"R", 1.0}, {"alpha_re", 1.0}, {"beta", 1.0}};
    auto rows = sw::run_sweep(cfg);
    auto fit = sw::fit_loglog_slope(rows, sw::FitField::abs_err);
    char buf[64];
    std::snprintf(buf, sizeof buf, "n=%d slope %.4f; ", n, fit.slope);
    detail += buf;
    if (std::abs(fit.slope + (n + 1.0)) > 0.1) ok = false;
  }
  detail += "(targets -2, -3, -4 within 0.1)";
  return {ok, detail};
}

Outcome criterion_4() {
  auto t0 = std::chrono::steady_clock::now();
  geo::cvec3 zd = {cplx(1.0 / std::sqrt(2.0), 0.0), cplx(0.0, 1.0 / std::sqrt(2.0)),
                   cplx(0.0, 0.0)};
  struct Point {
    double R, psi, omega;
  };
  std::vector<Point> points = {{1.0, M_PI / 3.0, 0.0},
                               {2.0, M_PI / 4.0, 0.0},
                               {0.7, 2.0 * M_PI / 5.0, 0.0}};
  std::string detail;
  bool ok = true;
  for (const Point& pt : points) {
    auto p = fadg::geom::make_field_point(pt.R, pt.psi, pt.omega);
    std::vector<sw::SweepRow> rows;
    for (double s : sw::geometric_grid(50.0, 400.0, 6)) {
      auto d = fadg::geom::make_direction(zd, s, 0.0);
      auto g = fs::g_zeta_fullspace(p, d, kQ);
      rows.push_back({s, 0, g.value, cplx(0.0, 0.0), 0.0, 0.0, g.err_est});
    }
    auto fit = sw::fit_loglog_slope(rows, sw::FitField::magnitude);
    char buf[96];
    std::snprintf(buf, sizeof buf, "R=%.1f psi=%.2f slope %.3f; ", pt.R, pt.psi,
                  fit.slope);
    detail += buf;
    if (std::abs(fit.slope + 1.0) > 0.1) ok = false;
  }
  double dt = seconds_since(t0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.0f s (limit 300 s); target -1 within 0.1", dt);
  detail += buf;
  if (dt >= 300.0) ok = false;
  return {ok, detail};
}

Outcome criterion_5() {
  geo::cvec3 zd = {cplx(1.0 / std::sqrt(2.0), 0.0), cplx(0.0, 1.0 / std::sqrt(2.0)),
                   cplx(0.0, 0.0)};
  auto p = fadg::geom::make_field_point(1.0, M_PI / 3.0, 0.0);
  auto d0 = fadg::geom::make_direction(zd, 40.0, 0.0);
  cplx coeff = fs::expansion_coefficient(p, d0, 1, kQ).value;
  std::vector<sw::SweepRow> rows;
  for (double s : sw::geometric_grid(40.0, 320.0, 6)) {
    auto d = fadg::geom::make_direction(zd, s, 0.0);
    auto g = fs::g_zeta_fullspace(p, d, kQ);
    cplx recon = fs::first_term_reconstruction(coeff, p.R, s);
    rows.push_back({s, 0, g.value, recon, std::abs(g.value - recon),
                    std::abs(recon) > 0 ? std::abs(g.value - recon) / std::abs(recon)
                                        : 0.0,
                    g.err_est});
  }
  auto fit = sw::fit_loglog_slope(rows, sw::FitField::abs_err);
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "|coeff| = %.2e, |G - recon| slope %.3f (target -2 within 0.15)",
                std::abs(coeff), fit.slope);
  return {std::abs(fit.slope + 2.0) <= 0.15, buf};
}

Outcome criterion_6() {
  fadg::validate::Check closed = fadg::validate::check_mnu_closed(100, 2024, kQ);
  fadg::validate::Check aw = fadg::validate::check_mnu_as_written(100, 2025);
  fadg::validate::Report rep;
  rep.checks = {closed, aw};
  std::filesystem::create_directories("acceptance_report");
  fadg::validate::write_text(rep, "acceptance_report/slab_kernel.txt");
  fadg::validate::write_csv(rep, "acceptance_report/slab_kernel.csv");
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "re-derived max rel err %.3g (tol 1e-6); as-written diff %.3g "
                "reported to acceptance_report/slab_kernel.*",
                closed.metric, aw.metric);
  return {closed.verdict == "PASS", buf};
}

Outcome criterion_7() {
  auto cfg = sl::make_slab_config(M_PI, 1.0, 0.0, 0.3, 1.0);
  double worst_lo = 1e300, worst_hi = 0.0;
  for (double phi : {0.3, 1.2, 2.5, 4.0, 5.3}) {
    auto a = sl::slab_kernel_params(phi, 10.0, 0, cfg);
    auto b = sl::slab_kernel_params(phi, 100.0, 0, cfg);
    double ratio = std::abs(a.beta_nu - a.beta_0) / std::abs(b.beta_nu - b.beta_0);
    worst_lo = std::min(worst_lo, ratio);
    worst_hi = std::max(worst_hi, ratio);
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "shrink ratios in [%.1f, %.1f] (target 100 +- 20%%)",
                worst_lo, worst_hi);
  return {worst_lo >= 80.0 && worst_hi <= 120.0, buf};
}

Outcome criterion_8() {
  double ld = 0.3, R = 1.0;
  double worst_closed = 0.0, worst_pv_err = 0.0, worst_pv_vs_analytic = 0.0;
  int used = 0;
  for (int i = 0; i < 24 && used < 20; ++i) {
    double theta = 2.0 * M_PI * (i + 0.5) / 24.0;
    if (std::abs(theta - 0.5 * M_PI) < 0.15 || std::abs(theta - 1.5 * M_PI) < 0.15)
      continue;
    ++used;
    auto pv = sl::g_angular_pv_oracle(R, theta, ld, kQ);
    cplx closed = sl::g_angular(R, theta, ld);
    worst_closed = std::max(worst_closed, std::abs(closed - pv.value));
    worst_pv_err = std::max(worst_pv_err, pv.err_est);
    cplx analytic = -cplx(0.0, 1.0) / ((1.0 - ld * ld) * R) * 2.0 * M_PI *
                    cplx(std::cos(theta), ld * std::sin(theta));
    worst_pv_vs_analytic = std::max(worst_pv_vs_analytic,
                                    std::abs(pv.value - analytic));
  }
  fadg::validate::Report rep;
  rep.checks = {fadg::validate::check_g_angular(20, kQ)};
  std::filesystem::create_directories("acceptance_report");
  fadg::validate::write_text(rep, "acceptance_report/angular_factor.txt");
  bool agreement = worst_closed <= 1e-6;
  bool certified = worst_pv_err <= 1e-7 && worst_pv_vs_analytic <= 1e-6;
  char buf[224];
  std::snprintf(buf, sizeof buf,
                "closed-vs-PV max diff %.3g at %d angles; PV oracle stable to %.1e "
                "and matches its analytic value to %.1e; discrepancy report written",
                worst_closed, used, worst_pv_err, worst_pv_vs_analytic);
  return {(agreement || certified), buf};
}

Outcome criterion_9() {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double H = M_PI;
  double worst_f = 0.0, worst_eigen = 0.0, worst_ratio = 0.0;
  for (int i = 0; i < 10; ++i) {
    double c = H * (0.2 + 0.6 * u01(rng));
    double w = std::min({H * (0.08 + 0.12 * u01(rng)), c - 1e-3, H - c - 1e-3});
    auto cfg = sl::make_slab_config(H, 1.0, 0.0, 0.3, c);
    auto psi = bump(c, w);
    cplx fp = sl::f_pairing(psi, cfg, 6);
    worst_f = std::max(worst_f, std::abs(fp + psi(c)));
    cplx ep = sl::eigen_sum_pairing_extrapolated(psi, cfg, 200, kQ);
    worst_eigen = std::max(worst_eigen, std::abs(ep - H * psi(c)) / std::abs(H * psi(c)));
    worst_ratio = std::max(worst_ratio, std::abs(ep / fp + H) / H);
  }
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "f-pairing exactness %.1e; eigen rel err %.2e (tol 1e-3); ratio "
                "dev %.2e (tol 1e-3)",
                worst_f, worst_eigen, worst_ratio);
  return {worst_f < 1e-14 && worst_eigen <= 1e-3 && worst_ratio <= 1e-3, buf};
}

Outcome criterion_10() {
  auto cfg = sl::make_slab_config(M_PI, 1.0, 0.0, 0.3, 1.0);
  auto psi = bump(0.5 * cfg.H, 0.2 * cfg.H);
  std::vector<sw::SweepRow> rows;
  for (double s : sw::geometric_grid(50.0, 400.0, 5)) {
    auto g = sl::g_zeta_slab_paired(1.0, M_PI / 3.0, psi, s, cfg, 6, kQ);
    rows.push_back({s, 0, g.value, cplx(0.0, 0.0), 0.0, 0.0, g.quad_err});
  }
  auto fit = sw::fit_loglog_slope(rows, sw::FitField::magnitude);
  char buf[96];
  std::snprintf(buf, sizeof buf, "paired |G| slope %.3f (target -1 within 0.15)",
                fit.slope);
  return {std::abs(fit.slope + 1.0) <= 0.15, buf};
}

Outcome criterion_11() {
  for (int k = 0; k < 40; ++k) {
    if (sl::vertical_term(k, 0.0, 2.7) != 0.0)
      return {false, "sin term nonzero at z = 0"};
    if (sl::vertical_term_dz(k, 2.7, 2.7) != 0.0)
      return {false, "cos derivative nonzero at z = H"};
  }
  return {true, "termwise exact zeros at z = 0 (value) and z = H (derivative), "
                "40 modes"};
}

Outcome criterion_12() {
  // exact synthetic slopes
  std::vector<sw::SweepRow> rows;
  for (double s : {1.0, 10.0, 100.0})
    rows.push_back({s, 1, cplx(1.0 / s, 0.0), cplx(0.0, 0.0), 1.0 / s, 1.0 / s, 0.0});
  auto fit = sw::fit_loglog_slope(rows, sw::FitField::abs_err);
  if (std::abs(fit.slope + 1.0) > 1e-12 || fit.stderr_ > 1e-12)
    return {false, "synthetic power-law recovery beyond 1e-12"};
  // lossless round-trip and byte-identical reruns
  sw::SweepConfig cfg;
  cfg.target = sw::Target::radial;
  cfg.s_values = {20.0, 40.0, 80.0};
  cfg.orders = {1, 2};
  cfg.fixed = {{"R", 1.3}, {"alpha_re", 0.9}, {"alpha_im", 0.1}, {"beta", -0.8}};
  cfg.output_path = "acceptance_sweep_a.csv";
  auto rows_a = sw::run_sweep(cfg);
  auto parsed = sw::parse_csv("acceptance_sweep_a.csv");
  if (parsed.size() != rows_a.size()) return {false, "csv row count mismatch"};
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (std::memcmp(&parsed[i].value, &rows_a[i].value, sizeof(cplx)) != 0 ||
        parsed[i].s != rows_a[i].s || parsed[i].err_est != rows_a[i].err_est)
      return {false, "csv round-trip not lossless"};
  }
  cfg.output_path = "acceptance_sweep_b.csv";
  sw::run_sweep(cfg);
  std::ifstream fa("acceptance_sweep_a.csv", std::ios::binary);
  std::ifstream fb("acceptance_sweep_b.csv", std::ios::binary);
  std::string sa((std::istreambuf_iterator<char>(fa)), {});
  std::string sb((std::istreambuf_iterator<char>(fb)), {});
  std::remove("acceptance_sweep_a.csv");
  std::remove("acceptance_sweep_b.csv");
  if (sa != sb || sa.empty()) return {false, "reruns differ at byte level"};
  return {true, "slope recovery exact, csv lossless, reruns byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0) criterion = std::atoi(argv[i + 1]);
  if (criterion < 1 || criterion > 12) {
    std::fprintf(stderr, "usage: acceptance --criterion 1..12\n");
    return 2;
  }
  static const char* kLabels[12] = {
      "exponential-integral engine vs quadrature oracle",
      "radial closed form vs oscillatory oracle (200 random points)",
      "remainder law: series truncation error slopes -(n+1)",
      "full-space 1/s law at three fixed field points",
      "coefficient consistency of the first-term reconstruction",
      "slab kernel closed form certified; printed form diffed",
      "beta_nu - beta_0 shrinks by 100x per 10x in s",
      "angular factor closed form vs PV quadrature (report on disagreement)",
      "distributional vertical factor pairings",
      "slab 1/s law for the paired, mode-truncated Green function",
      "vertical boundary conditions, termwise exact",
      "harness: slope recovery, lossless csv, reproducibility"};
  Outcome (*fn[12])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                         criterion_5, criterion_6, criterion_7, criterion_8,
                         criterion_9, criterion_10, criterion_11, criterion_12};
  Outcome out = fn[criterion - 1]();
  std::printf("[%s] criterion %d: %s -- %s\n", out.pass ? "PASS" : "FAIL", criterion,
              kLabels[criterion - 1], out.detail.c_str());
  return out.pass ? 0 : 1;
}
