#include "fracaim/gl_weights.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace fracaim {

GLWeightTable::GLWeightTable(FractionalOrder alpha, std::int64_t n_max) : alpha_(alpha) {
  if (n_max < 0) throw std::invalid_argument("weight table length must be non-negative");
  weights_.resize(static_cast<std::size_t>(n_max) + 1);
  weights_[0] = 1.0;
  const double a = alpha.value();
  for (std::size_t j = 1; j < weights_.size(); ++j)
    weights_[j] = weights_[j - 1] * (static_cast<double>(j) - 1.0 - a) / static_cast<double>(j);
}

double GLWeightTable::partial_sum(std::size_t m) const {
  double s = 0.0;
  for (std::size_t j = 0; j <= m && j < weights_.size(); ++j) s += weights_[j];
  return s;
}

GLWeightTable gl_weights(FractionalOrder alpha, std::int64_t n_max) {
  return GLWeightTable(alpha, n_max);
}

std::shared_ptr<const GLWeightTable> shared_gl_weights(FractionalOrder alpha,
                                                       std::int64_t n_max) {
  static std::mutex mutex;
  static std::map<std::pair<double, std::int64_t>, std::weak_ptr<const GLWeightTable>> memo;

  const auto key = std::make_pair(alpha.value(), n_max);
  std::lock_guard lock(mutex);
  if (auto it = memo.find(key); it != memo.end())
    if (auto table = it->second.lock()) return table;
  auto table = std::make_shared<const GLWeightTable>(alpha, n_max);
  memo[key] = table;
  return table;
}

}  // namespace fracaim
