#pragma once

#include <stdexcept>

namespace fracaim {

/// Derivative order strictly inside (0,1). Boundary values are rejected:
/// the operators below are only defined for proper fractional orders.
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
      throw std::invalid_argument("fractional order must lie strictly in (0,1)");
  }

  double value() const { return alpha_; }
  double complement() const { return 1.0 - alpha_; }

 private:
  double alpha_;
};

}  // namespace fracaim
