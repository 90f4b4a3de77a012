#pragma once

#include <stdexcept>
#include <string>

namespace exrobin {

// Input violates a precondition: invalid domain descriptor, parameter outside
// its documented range. Scalar-domain violations use std::domain_error; this
// type covers structured inputs (domain specs, problem definitions).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation finished without reaching its accuracy target. Carries the
// error estimate that was actually achieved.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& msg, double achieved_estimate)
      : std::runtime_error(msg), achieved_(achieved_estimate) {}
  double achieved_estimate() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// An iterative solver exhausted its budget. Carries the last bracket examined
// so the caller can report where the search stood.
class solver_error : public std::runtime_error {
 public:
  solver_error(const std::string& msg, double bracket_lo, double bracket_hi)
      : std::runtime_error(msg), lo_(bracket_lo), hi_(bracket_hi) {}
  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

}  // namespace exrobin
