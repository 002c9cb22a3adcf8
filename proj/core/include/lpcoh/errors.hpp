// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPCOH_ERRORS_HPP_
#define LPCOH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lpcoh {

/// Bad parameters or malformed input. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation would exceed the configured vertex budget. CLI exit code 3.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative solver did not reach the requested tolerance. CLI exit code 4.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual, int iterations)
      : std::runtime_error(what), final_residual(residual), iterations(iterations) {}
  double final_residual;
  int iterations;
};

}  // namespace lpcoh

#endif  // LPCOH_ERRORS_HPP_
