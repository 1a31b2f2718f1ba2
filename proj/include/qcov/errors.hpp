// Error types shared across the qcov library.
#pragma once

#include <stdexcept>
#include <string>

namespace qcov {

// Raised when a ratio estimator (rho, beta) has a nonpositive two-scale
// diagonal and the estimate is therefore undefined. Carries both diagonal
// values so callers can report them.
class UndefinedEstimate : public std::runtime_error {
 public:
  UndefinedEstimate(const std::string& what, double diag_a, double diag_b)
      : std::runtime_error(what), diag_a_(diag_a), diag_b_(diag_b) {}

  double diag_a() const { return diag_a_; }
  double diag_b() const { return diag_b_; }

 private:
  double diag_a_;
  double diag_b_;
};

// Malformed input file (bad header, unparseable structure).
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that contains no usable rows.
class EmptyInput : public std::runtime_error {
 public:
  explicit EmptyInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcov
