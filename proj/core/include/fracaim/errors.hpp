#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracaim {

/// Thrown when a runtime growth guard trips during time stepping.
class DivergedError : public std::runtime_error {
 public:
  DivergedError(const std::string& what, std::size_t step_index)
      : std::runtime_error(what + " (step " + std::to_string(step_index) + ")"),
        step_index_(step_index) {}

  std::size_t step_index() const { return step_index_; }

 private:
  std::size_t step_index_;
};

/// Numeric failure outside of time stepping (e.g. series non-convergence).
class NumericError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File I/O failure; the message carries the offending path.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fracaim
