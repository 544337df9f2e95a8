// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps over the large parameter s, log-log convergence-rate
// fitting, and CSV emission.

#ifndef FADGREEN_SWEEP_HPP
#define FADGREEN_SWEEP_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "fadgreen/quadrature.hpp"

namespace fadg::sweep {

using cplx = std::complex<double>;

enum class Target { fg3, slab, radial, ei };

struct SweepConfig {
  Target target = Target::radial;
  std::vector<double> s_values;          // strictly increasing
  std::vector<int> orders;               // may be empty for fg3/slab
  std::map<std::string, double> fixed;   // target-specific parameters
  std::string output_path;               // empty: no file written
  quad::QuadratureSpec quadrature;
};

struct SweepRow {
  double s;
  int n;
  cplx value;
  cplx reference;
  double abs_err;
  double rel_err;
  double err_est;
};

enum class FitField { abs_err, rel_err, magnitude };

struct SlopeFit {
  double slope;
  double stderr_;
};

Target target_from_string(const std::string& name);
std::string to_string(Target t);

// One row per (s, n), ordered by (s, n); rows are also streamed to
// cfg.output_path when set.  Parameter errors carry the offending (s, n).
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

// Least-squares slope of log(field) vs log(s) with its standard error.
SlopeFit fit_loglog_slope(const std::vector<SweepRow>& rows, FitField field);

// header: s,n,value_re,value_im,ref_re,ref_im,abs_err,rel_err,err_est
// 17 significant digits, '\n' separators.
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);
std::vector<SweepRow> parse_csv(const std::string& path);

// geometric grid start..stop with `count` points
std::vector<double> geometric_grid(double start, double stop, int count);

}  // namespace fadg::sweep

#endif
