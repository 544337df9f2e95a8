// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0

#include "fadgreen/validate.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "fadgreen/errors.hpp"
#include "fadgreen/expint.hpp"
#include "fadgreen/fullspace.hpp"
#include "fadgreen/geometry.hpp"
#include "fadgreen/slab.hpp"

namespace fadg::validate {

namespace {

Check pass_fail(std::string id, std::string what, double metric, double threshold,
                std::string note = "") {
  Check c{std::move(id), std::move(what), metric, threshold, "", std::move(note)};
  c.verdict = metric <= threshold ? "PASS" : "FAIL";
  return c;
}

Check report_only(std::string id, std::string what, double metric, std::string note) {
  return {std::move(id), std::move(what), metric, 0.0, "REPORT", std::move(note)};
}

slab::TestFunction make_bump(double center, double width) {
  return [center, width](double z) -> cplx {
    double t = (z - center) / width;
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
  };
}

// random full-space kernel parameters respecting |arg(AB)| < pi - margin
fullspace::RadialKernelParams random_radial(std::mt19937& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double R = 0.5 + 2.0 * u01(rng);
  double s = 3.0 + 50.0 * u01(rng);
  double beta = (0.1 + 0.9 * u01(rng)) * (u01(rng) < 0.5 ? -1.0 : 1.0);
  double amag = 0.3 + 1.2 * u01(rng);
  double lo = beta > 0.0 ? -0.5 * M_PI + 0.1 : -M_PI + 0.1;
  double hi = beta > 0.0 ? M_PI - 0.1 : 0.5 * M_PI - 0.1;
  double aarg = lo + (hi - lo) * u01(rng);
  return {R, s, std::polar(amag, aarg), beta};
}

struct MnuSample {
  double phi;
  slab::SlabFieldPoint p;
  double s;
  int nu;
  slab::SlabConfig cfg;
};

MnuSample random_mnu(std::mt19937& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (;;) {
    double phi = 2.0 * M_PI * u01(rng);
    double theta = 2.0 * M_PI * u01(rng);
    if (std::abs(std::cos(theta - phi)) < 0.2) continue;
    double R = 0.5 + 1.5 * u01(rng);
    double s = 5.0 + 55.0 * u01(rng);
    double ld = -0.8 + 1.6 * u01(rng);
    if (std::abs(std::abs(ld) - 1.0) < 0.05) continue;
    int nu = static_cast<int>(3.0 * u01(rng));
    cplx m(2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0);
    slab::SlabConfig cfg = slab::make_slab_config(M_PI, 1.0, m, ld, 1.0);
    // keep both denominator roots away from the positive real axis
    cplx alpha_s = s * cplx(std::cos(phi), ld * std::sin(phi));
    cplx lam2 = slab::lambda_nu(nu, cfg).lambda_nu_sq;
    cplx disc = std::sqrt(alpha_s * alpha_s + lam2);
    bool ok = true;
    for (cplx r : {alpha_s + disc, alpha_s - disc}) {
      if (std::real(r) > 0.0 && std::abs(std::imag(r)) < 0.05 * (1.0 + std::abs(r)))
        ok = false;
      if (std::abs(r) < 1e-3) ok = false;
    }
    if (!ok) continue;
    return {phi, {R, theta, 0.5 * M_PI}, s, nu, cfg};
  }
}

}  // namespace

bool Report::all_certified() const {
  for (const Check& c : checks)
    if (c.verdict == "FAIL") return false;
  return true;
}

cplx e1_quadrature_oracle(cplx z, const quad::QuadratureSpec& q) {
  // e^{z} E1(z) = \int_0^inf e^{-t}/(z+t) dt along the horizontal ray; the
  // exact prefactor e^{-z} is reattached afterwards so the quadrature always
  // works at O(1/|z|) scale
  auto f = [&](double t) { return std::exp(-t) / (z + t); };
  double T = 45.0;
  std::vector<double> pts = {0.0};
  if (std::real(z) < 0.0 && -std::real(z) < T) pts.push_back(-std::real(z));
  pts.push_back(T);
  cplx head(0.0, 0.0);
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    quad::IntegralResult r = quad::integrate_adaptive(f, pts[i], pts[i + 1], q);
    head += r.value;
    err += r.err_est;
  }
  quad::IntegralResult tail = quad::integrate_adaptive(
      [&](double v) {
        double t = T + v / (1.0 - v);
        return f(t) / ((1.0 - v) * (1.0 - v));
      },
      0.0, 1.0 - 1e-14, q);
  return std::exp(-z) * (head + tail.value);
}

Check check_e1_grid(int n, const quad::QuadratureSpec& q) {
  int nmag = std::max(2, static_cast<int>(std::round(std::sqrt(double(n)))));
  int narg = (n + nmag - 1) / nmag;
  double worst = 0.0;
  for (int i = 0; i < nmag; ++i) {
    double mag = 0.1 * std::pow(1000.0, double(i) / (nmag - 1));
    for (int j = 0; j < narg; ++j) {
      double arg = -0.75 * M_PI + 1.5 * M_PI * (j + 0.5) / narg;
      cplx z = std::polar(mag, arg);
      cplx ref = e1_quadrature_oracle(z, q);
      double rel = std::abs(expint::e1(z) - ref) / std::abs(ref);
      worst = std::max(worst, rel);
    }
  }
  return pass_fail("e1-oracle",
                   "E1 vs independent ray quadrature on the |z|,arg grid", worst,
                   1e-10);
}

Check check_radial_closed(int n, unsigned seed, const quad::QuadratureSpec& q) {
  std::mt19937 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    fullspace::RadialKernelParams p = random_radial(rng);
    cplx closed = fullspace::radial_integral_closed(p);
    quad::IntegralResult ref = fullspace::radial_integral_oracle(p, q);
    worst = std::max(worst, std::abs(closed - ref.value) / std::abs(ref.value));
  }
  return pass_fail("eq-radial-closed",
                   "radial closed form vs contour-rotated oscillatory oracle", worst,
                   1e-8);
}

Check check_radial_identity(int n, unsigned seed) {
  // I + A e^{AB} E1(AB) = 1/B  (antiderivative identity)
  std::mt19937 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    fullspace::RadialKernelParams p = random_radial(rng);
    cplx w = p.A() * p.B();
    cplx lhs = fullspace::radial_integral_closed(p) + p.A() * expint::e1_scaled(w);
    cplx rhs = 1.0 / p.B();
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return pass_fail("eq-radial-identity", "I + A e^{AB} E1(AB) = 1/B", worst, 1e-12);
}

Check check_mnu_closed(int n, unsigned seed, const quad::QuadratureSpec& q) {
  std::mt19937 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    MnuSample smp = random_mnu(rng);
    cplx closed = slab::m_nu_closed(smp.phi, smp.p, smp.s, smp.nu, smp.cfg).value;
    quad::IntegralResult ref = slab::m_nu_oracle(smp.phi, smp.p, smp.s, smp.nu,
                                                 smp.cfg, q);
    worst = std::max(worst, std::abs(closed - ref.value) / std::abs(ref.value));
  }
  return pass_fail("eq-slab-kernel-closed",
                   "slab kernel partial-fraction form vs oscillatory oracle", worst,
                   1e-6);
}

Check check_mnu_as_written(int n, unsigned seed) {
  std::mt19937 rng(seed);
  double worst = 0.0;
  int evaluable = 0;
  for (int i = 0; i < n; ++i) {
    MnuSample smp = random_mnu(rng);
    slab::MnuResult r = slab::m_nu_closed(smp.phi, smp.p, smp.s, smp.nu, smp.cfg);
    if (std::isfinite(std::real(r.as_written))) {
      ++evaluable;
      worst = std::max(worst,
                       std::abs(r.as_written - r.value) / std::abs(r.value));
    }
  }
  std::ostringstream note;
  note << "printed prefactor (alpha+beta_nu)/(2 beta) vs derived 1/(r+ - r-); "
       << evaluable << "/" << n << " points evaluable on principal branches; "
       << "certified path is the partial-fraction form";
  return report_only("eq-slab-kernel-as-written",
                     "printed kernel formula vs re-derived closed form (max rel diff)",
                     worst, note.str());
}

Check check_beta0_variants() {
  // (1 - l') under the root as printed vs the (1 - l'^2) used downstream
  double ld = 0.3;
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    double phi = 2.0 * M_PI * (i + 0.5) / 8.0;
    cplx a(std::cos(phi), ld * std::sin(phi));
    cplx b_printed = std::sqrt(a * a - (1.0 - ld));
    cplx b_consistent = std::sqrt(a * a - (1.0 - ld * ld));
    worst = std::max(worst, std::abs(b_printed - b_consistent));
  }
  return report_only("eq-slab-beta0-variants",
                     "beta_0 with (1 - l') vs (1 - l'^2) under the root (max diff)",
                     worst,
                     "the (1 - l'^2) variant makes alpha^2 - beta_0^2 = 1 - l'^2 "
                     "exactly; the printed (1 - l') is kept in the kernel params");
}

Check check_alpha_convention() {
  slab::SlabConfig cfg = slab::make_slab_config(M_PI, 1.0, 0.0, 0.3, 1.0);
  slab::SlabFieldPoint p{1.0, M_PI / 3.0, 1.0};
  double phi = 0.2;
  double s = 100.0;
  cplx u1 = slab::m_nu_principal(phi, p, s, cfg, slab::AlphaConvention::unit);
  cplx u2 = slab::m_nu_principal(phi, p, 2.0 * s, cfg, slab::AlphaConvention::unit);
  cplx s1 = slab::m_nu_principal(phi, p, s, cfg, slab::AlphaConvention::scaled);
  cplx s2 = slab::m_nu_principal(phi, p, 2.0 * s, cfg, slab::AlphaConvention::scaled);
  double unit_ratio = std::abs(u1) / std::abs(u2);
  double scaled_ratio = std::abs(s1) / std::abs(s2);
  std::ostringstream note;
  note << "principal-term magnitude ratio s->2s: unit " << unit_ratio << ", scaled "
       << scaled_ratio << "; the unit reading yields the clean 1/s law";
  return report_only("alpha-convention", "s-independent vs s-scaled alpha reading",
                     unit_ratio, note.str());
}

Check check_g_angular(int n_theta, const quad::QuadratureSpec& q) {
  double ld = 0.3, R = 1.0;
  double worst = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    double theta = 2.0 * M_PI * (i + 0.5) / n_theta;
    if (std::abs(theta - 0.5 * M_PI) < 0.2 || std::abs(theta - 1.5 * M_PI) < 0.2)
      continue;
    cplx closed = slab::g_angular(R, theta, ld);
    quad::IntegralResult pv = slab::g_angular_pv_oracle(R, theta, ld, q);
    worst = std::max(worst, std::abs(closed - pv.value));
  }
  return report_only(
      "eq-slab-angular-factor",
      "printed closed form g vs PV quadrature of the printed integrals (max abs diff)",
      worst,
      "the combination integrates to 2 pi (cos th + i l' sin th) under symmetric PV, "
      "not to the printed e^{i th}(2 pi - th - i log|cos th|...) form; the PV value "
      "is the certified one");
}

Check check_f_pairing(int n_bumps, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double H = M_PI;
  double worst = 0.0;
  for (int i = 0; i < n_bumps; ++i) {
    double z0 = H * (0.15 + 0.7 * u01(rng));
    double c = H * (0.15 + 0.7 * u01(rng));
    double w = H * (0.05 + 0.1 * u01(rng));
    w = std::min({w, c - 1e-3, H - c - 1e-3});
    slab::SlabConfig cfg = slab::make_slab_config(H, 1.0, 0.0, 0.3, z0);
    slab::TestFunction psi = make_bump(c, w);
    cplx got = slab::f_pairing(psi, cfg, 6);
    worst = std::max(worst, std::abs(got + psi(z0)));
  }
  return pass_fail("eq-slab-image-comb", "<f, psi> = -psi(z0) by image enumeration",
                   worst, 1e-14);
}

Check check_eigen_pairing(int n_bumps, unsigned seed, const quad::QuadratureSpec& q) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double H = M_PI;
  double worst = 0.0;
  for (int i = 0; i < n_bumps; ++i) {
    double c = H * (0.2 + 0.6 * u01(rng));
    double w = H * (0.08 + 0.12 * u01(rng));
    w = std::min({w, c - 1e-3, H - c - 1e-3});
    double z0 = c;  // pairing target H psi(z0) is largest at the bump center
    slab::SlabConfig cfg = slab::make_slab_config(H, 1.0, 0.0, 0.3, z0);
    slab::TestFunction psi = make_bump(c, w);
    cplx got = slab::eigen_sum_pairing_extrapolated(psi, cfg, 200, q);
    cplx want = H * psi(z0);
    worst = std::max(worst, std::abs(got - want) / std::abs(want));
  }
  return pass_fail("eq-slab-eigen-pairing",
                   "Abel-summed eigenfunction pairing -> H psi(z0)", worst, 1e-3);
}

Check check_pairing_ratio(int n_bumps, unsigned seed, const quad::QuadratureSpec& q) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double H = M_PI;
  double worst = 0.0;
  for (int i = 0; i < n_bumps; ++i) {
    double c = H * (0.2 + 0.6 * u01(rng));
    double w = H * (0.08 + 0.12 * u01(rng));
    w = std::min({w, c - 1e-3, H - c - 1e-3});
    slab::SlabConfig cfg = slab::make_slab_config(H, 1.0, 0.0, 0.3, c);
    slab::TestFunction psi = make_bump(c, w);
    cplx ratio = slab::eigen_sum_pairing_extrapolated(psi, cfg, 200, q) /
                 slab::f_pairing(psi, cfg, 6);
    worst = std::max(worst, std::abs(ratio + H) / H);
  }
  return pass_fail("eq-slab-pairing-ratio",
                   "eigen pairing / image pairing = -H (sign bookkeeping)", worst,
                   1e-3);
}

Check check_k1_coefficient(const quad::QuadratureSpec& q) {
  geom::cvec3 zd = {cplx(1.0 / std::sqrt(2.0), 0.0), cplx(0.0, 1.0 / std::sqrt(2.0)),
                    cplx(0.0, 0.0)};
  geom::DirectionSpec d = geom::make_direction(zd, 30.0, 0.0);
  geom::FieldPoint p = geom::make_field_point(1.0, M_PI / 3.0, 0.0);
  quad::IntegralResult c1 = fullspace::expansion_coefficient(p, d, 1, q);
  return report_only(
      "eq-fullspace-k1-coefficient",
      "PV angular coefficient of the first formal term (|value| at the fixture)",
      std::abs(c1.value),
      "vanishes identically at complex directions: the azimuthal residue pairs of "
      "1/alpha cancel between the two sides of the caustic, so the printed first "
      "term carries no pointwise content there");
}

Check check_slab_coefficient(const quad::QuadratureSpec& q) {
  slab::SlabConfig cfg = slab::make_slab_config(M_PI, 1.0, 0.0, 0.3, 1.0);
  slab::SlabFieldPoint p{1.0, M_PI / 3.0, 1.0};
  quad::IntegralResult i400 = slab::i_nu_quadrature(p, 400.0, 0, cfg, q);
  quad::IntegralResult i800 = slab::i_nu_quadrature(p, 800.0, 0, cfg, q);
  cplx measured = 2.0 * 800.0 * i800.value - 400.0 * i400.value;
  cplx printed = slab::g_angular(p.R, p.theta, cfg.ell_dot_I);
  std::ostringstream note;
  note << "lim s I_nu = " << measured.real() << (measured.imag() < 0 ? " - " : " + ")
       << std::abs(measured.imag()) << "i vs printed g = " << printed.real()
       << (printed.imag() < 0 ? " - " : " + ") << std::abs(printed.imag())
       << "i; the 1/s decay itself is confirmed, the printed coefficient is not";
  return report_only("eq-slab-principal-coefficient",
                     "measured 1/s coefficient of I_nu vs printed angular factor "
                     "(abs diff)",
                     std::abs(measured - printed), note.str());
}

Report run_all(unsigned seed, const quad::QuadratureSpec& q) {
  Report r;
  r.checks.push_back(check_e1_grid(36, q));
  r.checks.push_back(check_radial_closed(40, seed, q));
  r.checks.push_back(check_radial_identity(40, seed + 1));
  r.checks.push_back(check_mnu_closed(30, seed + 2, q));
  r.checks.push_back(check_mnu_as_written(30, seed + 3));
  r.checks.push_back(check_beta0_variants());
  r.checks.push_back(check_alpha_convention());
  r.checks.push_back(check_g_angular(12, q));
  r.checks.push_back(check_f_pairing(6, seed + 4));
  r.checks.push_back(check_eigen_pairing(4, seed + 5, q));
  r.checks.push_back(check_pairing_ratio(4, seed + 6, q));
  r.checks.push_back(check_k1_coefficient(q));
  r.checks.push_back(check_slab_coefficient(q));
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "formula certification and discrepancy report\n";
  out << "============================================\n";
  for (const Check& c : r.checks) {
    out << "[" << c.verdict << "] " << c.id << ": " << c.what << "\n";
    out << "    metric " << c.metric;
    if (c.verdict != "REPORT") out << " (threshold " << c.threshold << ")";
    out << "\n";
    if (!c.note.empty()) out << "    " << c.note << "\n";
  }
  return out.str();
}

void write_text(const Report& r, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("write_text: cannot open '" + path + "'");
  std::string s = render_text(r);
  std::fwrite(s.data(), 1, s.size(), f);
  std::fclose(f);
}

void write_csv(const Report& r, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("write_csv: cannot open '" + path + "'");
  std::fputs("id,verdict,metric,threshold,what\n", f);
  for (const Check& c : r.checks)
    std::fprintf(f, "%s,%s,%.17g,%.17g,\"%s\"\n", c.id.c_str(), c.verdict.c_str(),
                 c.metric, c.threshold, c.what.c_str());
  std::fclose(f);
}

}  // namespace fadg::validate
