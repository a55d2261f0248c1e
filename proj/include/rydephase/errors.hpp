#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rydephase {

// Bad argument to a library function (precondition violated).
class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two atoms closer than the minimum separation.
class DegenerateGeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lookup outside the tabulated range; no extrapolation is attempted.
class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Truncated excitation distribution whose tail exceeds the allowed mass.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required_m_max)
      : std::runtime_error(what), required_m_max_(required_m_max) {}
  int required_m_max() const noexcept { return required_m_max_; }

 private:
  int required_m_max_;
};

// An integral or series that did not reach its tolerance.
class NumericalFailureError : public std::runtime_error {
 public:
  NumericalFailureError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// Experiment configuration rejected; carries every violated field.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rydephase
