// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0
//
// Oracle certification suites and the discrepancy report: every closed form
// is checked against its brute-force reference, and each place where the
// printed formulas disagree among themselves (or with the certified path)
// is quantified rather than silently resolved.

#ifndef FADGREEN_VALIDATE_HPP
#define FADGREEN_VALIDATE_HPP

#include <complex>
#include <string>
#include <vector>

#include "fadgreen/quadrature.hpp"

namespace fadg::validate {

using cplx = std::complex<double>;

struct Check {
  std::string id;
  std::string what;
  double metric;     // measured figure (max rel error, ratio, ...)
  double threshold;  // acceptance threshold; 0 for report-only entries
  std::string verdict;  // "PASS", "FAIL", or "REPORT"
  std::string note;
};

struct Report {
  std::vector<Check> checks;
  bool all_certified() const;  // no FAIL among PASS/FAIL entries
};

// Independent quadrature oracle for E1 along the horizontal ray z + t.
cplx e1_quadrature_oracle(cplx z, const quad::QuadratureSpec& q);

// Individual suites (n controls grid sizes); deterministic in `seed`.
Check check_e1_grid(int n, const quad::QuadratureSpec& q);
Check check_radial_closed(int n, unsigned seed, const quad::QuadratureSpec& q);
Check check_radial_identity(int n, unsigned seed);
Check check_mnu_closed(int n, unsigned seed, const quad::QuadratureSpec& q);
Check check_mnu_as_written(int n, unsigned seed);
Check check_beta0_variants();
Check check_alpha_convention();
Check check_g_angular(int n_theta, const quad::QuadratureSpec& q);
Check check_f_pairing(int n_bumps, unsigned seed);
Check check_eigen_pairing(int n_bumps, unsigned seed, const quad::QuadratureSpec& q);
Check check_pairing_ratio(int n_bumps, unsigned seed, const quad::QuadratureSpec& q);
Check check_k1_coefficient(const quad::QuadratureSpec& q);
Check check_slab_coefficient(const quad::QuadratureSpec& q);

Report run_all(unsigned seed, const quad::QuadratureSpec& q);

std::string render_text(const Report& r);
void write_text(const Report& r, const std::string& path);
void write_csv(const Report& r, const std::string& path);

}  // namespace fadg::validate

#endif
