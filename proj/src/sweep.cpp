// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0

#include "fadgreen/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fadgreen/errors.hpp"
#include "fadgreen/expint.hpp"
#include "fadgreen/fullspace.hpp"
#include "fadgreen/geometry.hpp"
#include "fadgreen/slab.hpp"

namespace fadg::sweep {

namespace {

double get(const std::map<std::string, double>& m, const std::string& key,
           const char* target) {
  auto it = m.find(key);
  if (it == m.end())
    throw domain_error(std::string("run_sweep: missing parameter '") + key +
                       "' for target " + target);
  return it->second;
}

double get_or(const std::map<std::string, double>& m, const std::string& key,
              double fallback) {
  auto it = m.find(key);
  return it == m.end() ? fallback : it->second;
}

SweepRow make_row(double s, int n, cplx value, cplx reference, double err_est) {
  double abs_err = std::abs(value - reference);
  double rel_err = std::abs(reference) > 0.0 ? abs_err / std::abs(reference) : 0.0;
  return {s, n, value, reference, abs_err, rel_err, err_est};
}

slab::TestFunction bump(double center, double width) {
  return [center, width](double z) -> cplx {
    double t = (z - center) / width;
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
  };
}

std::vector<SweepRow> sweep_radial(const SweepConfig& cfg) {
  const char* tg = "radial";
  cplx alpha(get(cfg.fixed, "alpha_re", tg), get_or(cfg.fixed, "alpha_im", 0.0));
  double R = get(cfg.fixed, "R", tg);
  double beta = get(cfg.fixed, "beta", tg);
  std::vector<SweepRow> rows;
  for (double s : cfg.s_values) {
    fullspace::RadialKernelParams p{R, s, alpha, beta};
    cplx closed = fullspace::radial_integral_closed(p);
    for (int n : cfg.orders) {
      fullspace::SeriesResult sr = fullspace::radial_integral_series(p, n);
      rows.push_back(make_row(s, n, sr.value, closed, 0.0));
    }
  }
  return rows;
}

std::vector<SweepRow> sweep_ei(const SweepConfig& cfg) {
  std::vector<SweepRow> rows;
  for (double s : cfg.s_values) {
    // reference: e^{-s} Ei(s) for real s via the cancellation-free series
    cplx ref = std::exp(-s) * expint::ei_real(s);
    for (int n : cfg.orders) {
      cplx v = expint::ei_asymptotic_partial_sum(cplx(s, 0.0), n);
      rows.push_back(make_row(s, n, v, ref, 0.0));
    }
  }
  return rows;
}

std::vector<SweepRow> sweep_fg3(const SweepConfig& cfg) {
  const char* tg = "fg3";
  geom::cvec3 zd = {cplx(get(cfg.fixed, "zd0_re", tg), get_or(cfg.fixed, "zd0_im", 0.0)),
                    cplx(get_or(cfg.fixed, "zd1_re", 0.0), get_or(cfg.fixed, "zd1_im", 0.0)),
                    cplx(get_or(cfg.fixed, "zd2_re", 0.0), get_or(cfg.fixed, "zd2_im", 0.0))};
  double k0 = get_or(cfg.fixed, "k0", 0.0);
  geom::FieldPoint fp = geom::make_field_point(get(cfg.fixed, "R", tg),
                                               get(cfg.fixed, "psi", tg),
                                               get_or(cfg.fixed, "omega", 0.0));
  std::vector<SweepRow> rows;
  cplx coeff(0.0, 0.0);
  bool have_coeff = false;
  for (double s : cfg.s_values) {
    geom::DirectionSpec d = geom::make_direction(zd, s, k0);
    if (!have_coeff) {
      coeff = fullspace::expansion_coefficient(fp, d, 1, cfg.quadrature).value;
      have_coeff = true;
    }
    fullspace::AngularResult g = fullspace::g_zeta_fullspace(fp, d, cfg.quadrature);
    cplx recon = fullspace::first_term_reconstruction(coeff, fp.R, s);
    rows.push_back(make_row(s, 0, g.value, recon, g.err_est));
  }
  return rows;
}

std::vector<SweepRow> sweep_slab(const SweepConfig& cfg) {
  const char* tg = "slab";
  slab::SlabConfig sc = slab::make_slab_config(
      get(cfg.fixed, "H", tg), get(cfg.fixed, "k0", tg),
      cplx(get_or(cfg.fixed, "m_re", 0.0), get_or(cfg.fixed, "m_im", 0.0)),
      get(cfg.fixed, "ell_dot_I", tg), get(cfg.fixed, "z0", tg));
  double R = get(cfg.fixed, "R", tg);
  double theta = get(cfg.fixed, "theta", tg);
  int n_modes = static_cast<int>(get_or(cfg.fixed, "n_modes", 6));
  slab::TestFunction psi = bump(get_or(cfg.fixed, "bump_center", 0.5 * sc.H),
                                get_or(cfg.fixed, "bump_width", 0.2 * sc.H));
  std::vector<SweepRow> rows;
  for (double s : cfg.s_values) {
    slab::SlabGreenResult g =
        slab::g_zeta_slab_paired(R, theta, psi, s, sc, n_modes, cfg.quadrature);
    rows.push_back(make_row(s, 0, g.value, cplx(0.0, 0.0), g.quad_err + g.tail_est));
  }
  return rows;
}

}  // namespace

Target target_from_string(const std::string& name) {
  if (name == "fg3") return Target::fg3;
  if (name == "slab") return Target::slab;
  if (name == "radial") return Target::radial;
  if (name == "ei") return Target::ei;
  throw domain_error("unknown sweep target '" + name + "'");
}

std::string to_string(Target t) {
  switch (t) {
    case Target::fg3: return "fg3";
    case Target::slab: return "slab";
    case Target::radial: return "radial";
    case Target::ei: return "ei";
  }
  return "?";
}

std::vector<double> geometric_grid(double start, double stop, int count) {
  if (count < 2 || !(stop > start) || !(start > 0.0))
    throw domain_error("geometric_grid: need stop > start > 0 and count >= 2");
  std::vector<double> g(count);
  double ratio = std::pow(stop / start, 1.0 / (count - 1));
  double v = start;
  for (int i = 0; i < count; ++i) {
    g[i] = v;
    v *= ratio;
  }
  g.back() = stop;
  return g;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  if (cfg.s_values.size() < 1) throw domain_error("run_sweep: empty s grid");
  for (std::size_t i = 1; i < cfg.s_values.size(); ++i)
    if (cfg.s_values[i] <= cfg.s_values[i - 1])
      throw domain_error("run_sweep: s grid must be strictly increasing");

  std::vector<int> orders = cfg.orders;
  if (orders.empty()) orders.push_back(0);
  SweepConfig local = cfg;
  local.orders = orders;

  std::vector<SweepRow> rows;
  try {
    switch (cfg.target) {
      case Target::radial: rows = sweep_radial(local); break;
      case Target::ei: rows = sweep_ei(local); break;
      case Target::fg3: rows = sweep_fg3(local); break;
      case Target::slab: rows = sweep_slab(local); break;
    }
  } catch (const std::exception& e) {
    // partial results still land on disk before the error propagates
    if (!cfg.output_path.empty()) emit_csv(rows, cfg.output_path);
    throw;
  }
  if (!cfg.output_path.empty()) emit_csv(rows, cfg.output_path);
  return rows;
}

SlopeFit fit_loglog_slope(const std::vector<SweepRow>& rows, FitField field) {
  std::vector<double> xs, ys;
  for (const SweepRow& r : rows) {
    double v = 0.0;
    switch (field) {
      case FitField::abs_err: v = r.abs_err; break;
      case FitField::rel_err: v = r.rel_err; break;
      case FitField::magnitude: v = std::abs(r.value); break;
    }
    if (!(v > 0.0) || !std::isfinite(v) || !(r.s > 0.0))
      throw domain_error("fit_loglog_slope: nonpositive or non-finite field value");
    xs.push_back(std::log(r.s));
    ys.push_back(std::log(v));
  }
  std::size_t n = xs.size();
  if (n < 2) throw domain_error("fit_loglog_slope: need at least 2 rows");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw domain_error("fit_loglog_slope: degenerate abscissae");
  double slope = sxy / sxx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double pred = my + slope * (xs[i] - mx);
    ss_res += (ys[i] - pred) * (ys[i] - pred);
  }
  double stderr_ = (n > 2) ? std::sqrt(ss_res / (n - 2) / sxx) : 0.0;
  return {slope, stderr_};
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("emit_csv: cannot open '" + path + "'");
  std::fputs("s,n,value_re,value_im,ref_re,ref_im,abs_err,rel_err,err_est\n", f);
  for (const SweepRow& r : rows) {
    std::fprintf(f, "%.17g,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.s, r.n,
                 r.value.real(), r.value.imag(), r.reference.real(),
                 r.reference.imag(), r.abs_err, r.rel_err, r.err_est);
  }
  if (std::fclose(f) != 0)
    throw std::runtime_error("emit_csv: write failure on '" + path + "'");
}

std::vector<SweepRow> parse_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("parse_csv: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("parse_csv: empty file '" + path + "'");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    double v[9];
    for (int i = 0; i < 9; ++i) {
      if (!std::getline(ss, cell, ','))
        throw std::runtime_error("parse_csv: short row in '" + path + "'");
      v[i] = std::strtod(cell.c_str(), nullptr);
    }
    rows.push_back({v[0], static_cast<int>(v[1]), cplx(v[2], v[3]), cplx(v[4], v[5]),
                    v[6], v[7], v[8]});
  }
  return rows;
}

}  // namespace fadg::sweep
