#pragma once

#include <stdexcept>
#include <string>

namespace lerchlab {

// Argument outside the documented parameter range (table sizes, config knobs).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of a special function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested series or integral diverges at this point.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A closed form was requested for a parameter set with no matching corollary.
class UnsupportedCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An oracle did not reach its error target within its configured budget.
class NonConvergedError : public std::runtime_error {
 public:
  NonConvergedError(const std::string& what, double estimate, double err)
      : std::runtime_error(what), estimate_(estimate), err_(err) {}

  double estimate() const noexcept { return estimate_; }
  double err() const noexcept { return err_; }

 private:
  double estimate_;
  double err_;
};

// Malformed command line.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lerchlab
