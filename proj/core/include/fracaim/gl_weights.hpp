#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "fracaim/fractional_order.hpp"

namespace fracaim {

/// Signed binomial weights (-1)^j C(alpha, j), j = 0..n_max, built by the
/// stable recurrence w_j = w_{j-1} (j - 1 - alpha) / j.
class GLWeightTable {
 public:
  GLWeightTable(FractionalOrder alpha, std::int64_t n_max);

  double alpha() const { return alpha_.value(); }
  FractionalOrder order() const { return alpha_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t j) const { return weights_[j]; }
  std::span<const double> weights() const { return weights_; }

  /// Sum of w_0..w_m. Positive and non-increasing in m for alpha in (0,1).
  double partial_sum(std::size_t m) const;

 private:
  FractionalOrder alpha_;
  std::vector<double> weights_;
};

GLWeightTable gl_weights(FractionalOrder alpha, std::int64_t n_max);

/// Process-wide memo keyed on (alpha, n_max); synchronized internally.
/// Returned tables are immutable and safe to share across threads.
std::shared_ptr<const GLWeightTable> shared_gl_weights(FractionalOrder alpha,
                                                       std::int64_t n_max);

}  // namespace fracaim
