#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compound {

// Inputs failed a structural precondition.  The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LengthMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A required coprimality condition fails.  Indices are 1-based positions of
// the two offending entries; 0 means "not applicable" (scalar inputs).
class GcdViolation : public ValidationError {
 public:
  explicit GcdViolation(std::string msg) : ValidationError(std::move(msg)) {}
  GcdViolation(std::size_t i, std::size_t j, std::string msg)
      : ValidationError(std::move(msg)), i_(i), j_(j) {}
  std::size_t index_a() const { return i_; }
  std::size_t index_b() const { return j_; }

 private:
  std::size_t i_ = 0;
  std::size_t j_ = 0;
};

class IndexOutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A tower shift c_i is a rational b_i-th power.  Index is 1-based.
class PerfectPowerViolation : public ValidationError {
 public:
  PerfectPowerViolation(std::size_t index, std::string msg)
      : ValidationError(std::move(msg)), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Weierstrass weights are only defined for genus >= 2.
class GenusTooSmall : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// An enumeration would exceed the configured cap.  CLI exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cross-check between two independent routes failed, or a division that
// must be exact left a remainder.  Always a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace compound
