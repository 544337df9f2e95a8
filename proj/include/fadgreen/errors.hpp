// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FADGREEN_ERRORS_HPP
#define FADGREEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fadg {

// Argument outside an evaluator's mathematical domain (branch cut, zero
// argument, excluded sector, ...).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A validated constraint failed (quadric residual, norm mismatch, ...).
class constraint_error : public std::invalid_argument {
 public:
  constraint_error(const std::string& what, double residual)
      : std::invalid_argument(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Quadrature did not reach the requested tolerance or exhausted its budget.
class quadrature_error : public std::runtime_error {
 public:
  explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fadg

#endif
