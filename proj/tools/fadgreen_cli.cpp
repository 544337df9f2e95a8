// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line harness: point evaluations, parameter sweeps with CSV output,
// oracle validation suites, and the discrepancy report.
//
// Exit codes: 0 success, 1 usage error, 2 numerical-domain error,
//             3 validation-suite failure.

#include <CLI11.hpp>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "config_file.hpp"
#include "fadgreen/errors.hpp"
#include "fadgreen/expint.hpp"
#include "fadgreen/fullspace.hpp"
#include "fadgreen/geometry.hpp"
#include "fadgreen/slab.hpp"
#include "fadgreen/sweep.hpp"
#include "fadgreen/validate.hpp"

namespace {

using cplx = std::complex<double>;

struct GlobalOpts {
  std::string config_path;
  std::string normalization = "paper";
  std::string alpha_convention = "unit";
  unsigned seed = 2024;
  fadg::tools::ConfigFile config;
};

std::vector<double> parse_s_grid(const std::string& spec) {
  // start:stop:count, geometric
  double start, stop;
  int count;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &start, &stop, &count) != 3)
    throw CLI::ValidationError("--s-grid expects start:stop:count");
  return fadg::sweep::geometric_grid(start, stop, count);
}

std::vector<int> parse_orders(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

void print_complex(const char* label, cplx v) {
  std::printf("%s = %.17g %+.17gi\n", label, v.real(), v.imag());
}

fadg::quad::QuadratureSpec quad_from_config(const GlobalOpts& g) {
  fadg::quad::QuadratureSpec q;
  q.abs_tol = g.config.get_double("quadrature", "abs_tol", q.abs_tol);
  q.rel_tol = g.config.get_double("quadrature", "rel_tol", q.rel_tol);
  q.pv_epsilon = g.config.get_double("quadrature", "pv_epsilon", q.pv_epsilon);
  q.beta_min = g.config.get_double("quadrature", "beta_min", q.beta_min);
  q.max_subdivisions = static_cast<int>(
      g.config.get_double("quadrature", "max_subdivisions", q.max_subdivisions));
  return q;
}

// flags (already parsed into `fixed` when set) win over config-file keys
void merge_section(const fadg::tools::ConfigFile& cf, const std::string& section,
                   std::map<std::string, double>& fixed) {
  for (const auto& [path, value] : cf.raw()) {
    auto slash = path.find('/');
    if (path.substr(0, slash) != section) continue;
    std::string key = path.substr(slash + 1);
    if (key == "target" || key == "s_grid" || key == "orders" || key == "out") continue;
    if (!fixed.count(key)) fixed[key] = std::stod(value);
  }
}

int run_sweep_cli(fadg::sweep::SweepConfig cfg, const GlobalOpts& g,
                  const std::string& preset,
                  const std::map<std::string, double>& defaults = {}) {
  if (!preset.empty()) {
    std::string section = "preset." + preset;
    if (!g.config.has(section, "target"))
      throw CLI::ValidationError("unknown preset '" + preset + "'");
    cfg.target = fadg::sweep::target_from_string(g.config.get(section, "target"));
    if (g.config.has(section, "s_grid"))
      cfg.s_values = parse_s_grid(g.config.get(section, "s_grid"));
    if (g.config.has(section, "orders"))
      cfg.orders = parse_orders(g.config.get(section, "orders"));
    if (cfg.output_path.empty()) cfg.output_path = g.config.get(section, "out");
    merge_section(g.config, section, cfg.fixed);
  }
  merge_section(g.config, fadg::sweep::to_string(cfg.target), cfg.fixed);
  for (const auto& [key, value] : defaults)
    if (!cfg.fixed.count(key)) cfg.fixed[key] = value;
  if (cfg.s_values.empty())
    throw CLI::ValidationError("no s grid given (use --s-grid or a preset)");
  std::vector<fadg::sweep::SweepRow> rows = fadg::sweep::run_sweep(cfg);
  std::printf("# target=%s rows=%zu%s%s\n", fadg::sweep::to_string(cfg.target).c_str(),
              rows.size(), cfg.output_path.empty() ? "" : " -> ",
              cfg.output_path.c_str());
  for (const auto& r : rows)
    std::printf("s=%-10.6g n=%-3d |value|=%-14.8g abs_err=%-12.6g rel_err=%-12.6g\n",
                r.s, r.n, std::abs(r.value), r.abs_err, r.rel_err);
  if (rows.size() >= 2) {
    try {
      auto fit = fadg::sweep::fit_loglog_slope(rows, fadg::sweep::FitField::magnitude);
      std::printf("# log-log slope of |value| vs s: %.6g (stderr %.2g)\n", fit.slope,
                  fit.stderr_);
    } catch (const fadg::domain_error&) {
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faddeev-Green function evaluator and certification harness"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--config", g.config_path, "config file (sectioned key=value)");
  app.add_option("--normalization", g.normalization, "paper | fourier-standard")
      ->check(CLI::IsMember({"paper", "fourier-standard"}));
  app.add_option("--alpha-convention", g.alpha_convention, "unit | scaled")
      ->check(CLI::IsMember({"unit", "scaled"}));
  app.add_option("--seed", g.seed, "seed for randomized suites");

  // --- ei ---
  auto* ei = app.add_subcommand("ei", "exponential integral E1 / asymptotic sums");
  double ei_re = 1.0, ei_im = 0.0;
  int ei_order = -1;
  std::string ei_grid, ei_orders, ei_out;
  ei->add_option("--re", ei_re, "Re z");
  ei->add_option("--im", ei_im, "Im z");
  ei->add_option("--order", ei_order, "also print the asymptotic partial sum S_n(z)");
  ei->add_option("--s-grid", ei_grid, "run the remainder sweep on this grid");
  ei->add_option("--orders", ei_orders, "orders for the sweep (comma list)");
  ei->add_option("--out", ei_out, "CSV output path for the sweep");

  // --- fg3 ---
  auto* fg3 = app.add_subcommand("fg3", "full-space Faddeev-Green function");
  fg3->require_subcommand(1);
  double fp_R = 1.0, fp_psi = M_PI / 3.0, fp_omega = 0.0, fg_s = 30.0, fg_k0 = 0.0;
  std::vector<double> zd_flat = {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0),
                                 0.0, 0.0};
  auto add_fg3_opts = [&](CLI::App* c) {
    c->add_option("--R", fp_R, "field radius");
    c->add_option("--psi", fp_psi, "polar angle of x");
    c->add_option("--omega", fp_omega, "azimuth of x");
    c->add_option("--s", fg_s, "|zeta|");
    c->add_option("--k0", fg_k0, "wavenumber (0 = Laplacian case)");
    c->add_option("--zeta-dot", zd_flat,
                  "unit direction, 6 reals: re0 im0 re1 im1 re2 im2")
        ->expected(6);
  };
  auto* fg3_eval = fg3->add_subcommand("eval", "single evaluation");
  add_fg3_opts(fg3_eval);
  auto* fg3_sweep = fg3->add_subcommand("sweep", "sweep over s (targets fg3/radial/ei)");
  add_fg3_opts(fg3_sweep);
  std::string fg_target = "fg3", fg_grid, fg_orders, fg_out, fg_preset;
  fg3_sweep->add_option("--target", fg_target, "fg3 | radial | ei");
  fg3_sweep->add_option("--s-grid", fg_grid, "start:stop:count (geometric)");
  fg3_sweep->add_option("--orders", fg_orders, "comma list of series orders");
  fg3_sweep->add_option("--out", fg_out, "CSV output path");
  fg3_sweep->add_option("--preset", fg_preset, "preset name from the config file");

  // --- slab ---
  auto* slab_cmd = app.add_subcommand("slab", "slab Faddeev-Green function");
  slab_cmd->require_subcommand(1);
  double sl_H = M_PI, sl_k0 = 1.0, sl_mre = 0.0, sl_mim = 0.0, sl_ld = 0.3, sl_z0 = 1.0;
  double sl_R = 1.0, sl_theta = M_PI / 3.0, sl_z = 1.5, sl_s = 100.0;
  int sl_modes = 0;
  auto add_slab_opts = [&](CLI::App* c) {
    c->add_option("--H", sl_H, "slab height");
    c->add_option("--k0", sl_k0, "wavenumber");
    c->add_option("--m-re", sl_mre, "Re m");
    c->add_option("--m-im", sl_mim, "Im m");
    c->add_option("--ell-dot", sl_ld, "l'_I of zeta_par = (s, i s l'_I)");
    c->add_option("--z0", sl_z0, "source depth");
    c->add_option("--R", sl_R, "horizontal radius");
    c->add_option("--theta", sl_theta, "horizontal angle");
    c->add_option("--z", sl_z, "receiver depth");
    c->add_option("--s", sl_s, "|zeta_par|");
    c->add_option("--n-modes", sl_modes, "mode pairs (0 = automatic)");
  };
  auto* slab_eval = slab_cmd->add_subcommand("eval", "single evaluation");
  add_slab_opts(slab_eval);
  auto* slab_sweep = slab_cmd->add_subcommand("sweep", "sweep over s");
  add_slab_opts(slab_sweep);
  std::string sl_grid, sl_out, sl_preset;
  slab_sweep->add_option("--s-grid", sl_grid, "start:stop:count (geometric)");
  slab_sweep->add_option("--out", sl_out, "CSV output path");
  slab_sweep->add_option("--preset", sl_preset, "preset name from the config file");

  // --- validate / report ---
  auto* validate_cmd =
      app.add_subcommand("validate", "run all oracle suites, write the report");
  std::string val_dir = "report";
  validate_cmd->add_option("--out-dir", val_dir, "report output directory");
  auto* report_cmd = app.add_subcommand("report", "render the discrepancy report");
  report_cmd->add_option("--out-dir", val_dir, "report output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (!g.config_path.empty()) g.config = fadg::tools::ConfigFile::load(g.config_path);
    fadg::quad::QuadratureSpec q = quad_from_config(g);
    auto norm = g.normalization == "paper" ? fadg::fullspace::Normalization::paper
                                           : fadg::fullspace::Normalization::fourier_standard;

    if (*ei) {
      if (!ei_grid.empty()) {
        fadg::sweep::SweepConfig sc;
        sc.target = fadg::sweep::Target::ei;
        sc.s_values = parse_s_grid(ei_grid);
        sc.orders = ei_orders.empty() ? std::vector<int>{2} : parse_orders(ei_orders);
        sc.output_path = ei_out;
        sc.quadrature = q;
        return run_sweep_cli(sc, g, "");
      }
      cplx z(ei_re, ei_im);
      print_complex("E1(z)", fadg::expint::e1(z));
      print_complex("Ei(-z)", -fadg::expint::e1(z));
      if (ei_order >= 0) {
        print_complex("S_n(z)", fadg::expint::ei_asymptotic_partial_sum(z, ei_order));
        std::printf("optimal truncation order: %d\n",
                    fadg::expint::optimal_truncation_order(z));
      }
      return 0;
    }

    if (*fg3) {
      fadg::geom::cvec3 zd = {cplx(zd_flat[0], zd_flat[1]), cplx(zd_flat[2], zd_flat[3]),
                              cplx(zd_flat[4], zd_flat[5])};
      if (*fg3_eval) {
        auto d = fadg::geom::make_direction(zd, fg_s, fg_k0);
        auto p = fadg::geom::make_field_point(fp_R, fp_psi, fp_omega);
        auto r = fadg::fullspace::g_zeta_fullspace(p, d, q, norm);
        print_complex("G_zeta", r.value);
        std::printf("err_est = %.3g, excised measure = %.3g\n", r.err_est,
                    r.excised_measure);
        return 0;
      }
      fadg::sweep::SweepConfig sc;
      sc.target = fadg::sweep::target_from_string(fg_target);
      if (!fg_grid.empty()) sc.s_values = parse_s_grid(fg_grid);
      if (!fg_orders.empty()) sc.orders = parse_orders(fg_orders);
      sc.output_path = fg_out;
      sc.quadrature = q;
      // user-passed flags beat presets/config; untouched flags only provide
      // fallbacks after the merge
      auto seed = [&](const char* flag, const char* key, double v) {
        if (fg3_sweep->count(flag)) sc.fixed[key] = v;
      };
      seed("--R", "R", fp_R);
      seed("--psi", "psi", fp_psi);
      seed("--omega", "omega", fp_omega);
      seed("--k0", "k0", fg_k0);
      if (fg3_sweep->count("--zeta-dot")) {
        const char* keys[6] = {"zd0_re", "zd0_im", "zd1_re",
                               "zd1_im", "zd2_re", "zd2_im"};
        for (int i = 0; i < 6; ++i) sc.fixed[keys[i]] = zd_flat[i];
      }
      std::map<std::string, double> defaults = {
          {"R", fp_R},       {"psi", fp_psi},     {"omega", fp_omega},
          {"k0", fg_k0},     {"zd0_re", zd_flat[0]}, {"zd0_im", zd_flat[1]},
          {"zd1_re", zd_flat[2]}, {"zd1_im", zd_flat[3]},
          {"zd2_re", zd_flat[4]}, {"zd2_im", zd_flat[5]},
          {"alpha_re", 1.0}, {"beta", 1.0}};
      return run_sweep_cli(sc, g, fg_preset, defaults);
    }

    if (*slab_cmd) {
      auto cfg = fadg::slab::make_slab_config(sl_H, sl_k0, cplx(sl_mre, sl_mim), sl_ld,
                                              sl_z0);
      int n_modes = sl_modes > 0 ? sl_modes : fadg::slab::default_n_modes(cfg);
      if (*slab_eval) {
        fadg::slab::SlabFieldPoint p{sl_R, sl_theta, sl_z};
        auto r = fadg::slab::g_zeta_slab_truncated(p, sl_s, cfg, n_modes, q);
        print_complex("G_zeta(slab)", r.value);
        std::printf("tail_est = %.3g, quad_err = %.3g, n_modes = %d\n", r.tail_est,
                    r.quad_err, n_modes);
        return 0;
      }
      fadg::sweep::SweepConfig sc;
      sc.target = fadg::sweep::Target::slab;
      if (!sl_grid.empty()) sc.s_values = parse_s_grid(sl_grid);
      sc.output_path = sl_out;
      sc.quadrature = q;
      auto seed = [&](const char* flag, const char* key, double v) {
        if (slab_sweep->count(flag)) sc.fixed[key] = v;
      };
      seed("--H", "H", sl_H);
      seed("--k0", "k0", sl_k0);
      seed("--m-re", "m_re", sl_mre);
      seed("--m-im", "m_im", sl_mim);
      seed("--ell-dot", "ell_dot_I", sl_ld);
      seed("--z0", "z0", sl_z0);
      seed("--R", "R", sl_R);
      seed("--theta", "theta", sl_theta);
      seed("--n-modes", "n_modes", double(n_modes));
      std::map<std::string, double> defaults = {
          {"H", sl_H},   {"k0", sl_k0},       {"m_re", sl_mre},
          {"m_im", sl_mim}, {"ell_dot_I", sl_ld}, {"z0", sl_z0},
          {"R", sl_R},   {"theta", sl_theta}, {"n_modes", double(n_modes)}};
      return run_sweep_cli(sc, g, sl_preset, defaults);
    }

    if (*validate_cmd || *report_cmd) {
      fadg::validate::Report rep = fadg::validate::run_all(g.seed, q);
      std::filesystem::create_directories(val_dir);
      fadg::validate::write_text(rep, val_dir + "/discrepancies.txt");
      fadg::validate::write_csv(rep, val_dir + "/discrepancies.csv");
      std::fputs(fadg::validate::render_text(rep).c_str(), stdout);
      std::printf("report written to %s/discrepancies.{txt,csv}\n", val_dir.c_str());
      if (*validate_cmd && !rep.all_certified()) return 3;
      return 0;
    }
  } catch (const CLI::Error& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  } catch (const fadg::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  } catch (const fadg::constraint_error& e) {
    std::fprintf(stderr, "constraint error: %s\n", e.what());
    return 2;
  } catch (const fadg::quadrature_error& e) {
    std::fprintf(stderr, "quadrature error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
