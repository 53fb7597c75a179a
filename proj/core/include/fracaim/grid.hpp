#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fracaim {

using Vector = Eigen::VectorXd;

/// Uniform discretization of [0, t_end] with node(k) = k * step.
class UniformGrid {
 public:
  UniformGrid(double t_end, double step) : t_end_(t_end), step_(step) {
    if (!(t_end > 0.0)) throw std::invalid_argument("grid horizon must be positive");
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    const double ratio = t_end / step;
    count_ = static_cast<std::size_t>(std::llround(ratio)) + 1;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio))
      throw std::invalid_argument("grid horizon is not an integer multiple of the step");
  }

  double t_end() const { return t_end_; }
  double step() const { return step_; }
  std::size_t count() const { return count_; }
  double node(std::size_t k) const { return static_cast<double>(k) * step_; }

  bool commensurate(double h) const {
    if (!(h > 0.0)) return false;
    const double ratio = h / step_;
    return std::abs(ratio - std::round(ratio)) <= 1e-9 * std::max(1.0, ratio) &&
           std::llround(ratio) >= 1;
  }

  /// Number of grid steps per lag h; throws if h is not an exact multiple.
  std::size_t steps_per(double h) const {
    if (!commensurate(h))
      throw std::invalid_argument("lag is not an integer multiple of the grid step");
    return static_cast<std::size_t>(std::llround(h / step_));
  }

  bool operator==(const UniformGrid& other) const {
    return t_end_ == other.t_end_ && step_ == other.step_;
  }

 private:
  double t_end_;
  double step_;
  std::size_t count_;
};

/// Immutable sampled vector-valued function on a UniformGrid.
class Trajectory {
 public:
  Trajectory(UniformGrid grid, std::size_t dim, std::vector<Vector> values)
      : grid_(grid), dim_(dim), values_(std::move(values)) {
    if (dim_ < 1) throw std::invalid_argument("trajectory dimension must be >= 1");
    if (values_.size() != grid_.count())
      throw std::invalid_argument("trajectory must have one value per grid node");
    for (const auto& v : values_)
      if (static_cast<std::size_t>(v.size()) != dim_)
        throw std::invalid_argument("trajectory value has wrong dimension");
  }

  static Trajectory sample(const UniformGrid& grid, std::size_t dim,
                           const std::function<Vector(double)>& fn) {
    std::vector<Vector> values;
    values.reserve(grid.count());
    for (std::size_t k = 0; k < grid.count(); ++k) values.push_back(fn(grid.node(k)));
    return Trajectory(grid, dim, std::move(values));
  }

  static Trajectory sample_scalar(const UniformGrid& grid,
                                  const std::function<double(double)>& fn) {
    return sample(grid, 1, [&fn](double t) {
      Vector v(1);
      v[0] = fn(t);
      return v;
    });
  }

  const UniformGrid& grid() const { return grid_; }
  std::size_t dim() const { return dim_; }
  const Vector& operator[](std::size_t k) const { return values_.at(k); }
  const std::vector<Vector>& values() const { return values_; }

 private:
  UniformGrid grid_;
  std::size_t dim_;
  std::vector<Vector> values_;
};

}  // namespace fracaim
