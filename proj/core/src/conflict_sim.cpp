#include "fracaim/conflict_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracaim/gl_weights.hpp"

namespace fracaim {

ControlGrid::ControlGrid(std::vector<Vector> points) {
  if (points.empty()) throw std::invalid_argument("control grid must be nonempty");
  dim_ = static_cast<std::size_t>(points.front().size());
  for (const auto& p : points)
    if (static_cast<std::size_t>(p.size()) != dim_)
      throw std::invalid_argument("control grid points must share a dimension");

  // Deduplicate, keeping first occurrence order.
  for (auto& p : points) {
    bool seen = false;
    for (const auto& q : points_)
      if ((p - q).lpNorm<Eigen::Infinity>() == 0.0) {
        seen = true;
        break;
      }
    if (!seen) points_.push_back(std::move(p));
  }

  lo_ = points_.front();
  hi_ = points_.front();
  for (const auto& p : points_) {
    lo_ = lo_.cwiseMin(p);
    hi_ = hi_.cwiseMax(p);
  }
}

ControlGrid ControlGrid::uniform_interval(double lo, double hi, std::size_t count) {
  if (count < 1) throw std::invalid_argument("control grid needs at least one point");
  if (!(hi >= lo)) throw std::invalid_argument("control interval bounds out of order");
  std::vector<Vector> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Vector p(1);
    p[0] = count == 1 ? lo
                      : lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(count - 1);
    points.push_back(std::move(p));
  }
  return ControlGrid(std::move(points));
}

Vector ControlGrid::clamp(const Vector& v) const {
  return v.cwiseMax(lo_).cwiseMin(hi_);
}

AimingPartition::AimingPartition(std::vector<double> nodes, const UniformGrid& grid)
    : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw std::invalid_argument("partition needs at least two nodes");
  if (nodes_.front() != 0.0) throw std::invalid_argument("partition must start at 0");
  if (std::abs(nodes_.back() - grid.t_end()) > 1e-9)
    throw std::invalid_argument("partition must end at the horizon");
  indices_.reserve(nodes_.size());
  double prev = -1.0;
  for (double node : nodes_) {
    if (!(node > prev)) throw std::invalid_argument("partition nodes must increase");
    const double ratio = node / grid.step();
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio))
      throw std::invalid_argument("partition node does not sit on the grid");
    indices_.push_back(static_cast<std::size_t>(std::llround(ratio)));
    prev = node;
  }
}

AimingPartition AimingPartition::uniform(const UniformGrid& grid, double delta) {
  const std::size_t stride = grid.steps_per(delta);
  std::vector<double> nodes;
  for (std::size_t k = 0; k < grid.count(); k += stride) nodes.push_back(grid.node(k));
  if (nodes.back() != grid.t_end()) nodes.push_back(grid.t_end());
  return AimingPartition(std::move(nodes), grid);
}

double AimingPartition::diameter() const {
  double d = 0.0;
  for (std::size_t j = 0; j + 1 < nodes_.size(); ++j)
    d = std::max(d, nodes_[j + 1] - nodes_[j]);
  return d;
}

namespace {

void check_growth(const ConflictDynamics& d, const Vector& gx, const Vector& x,
                  std::size_t k, const char* which) {
  if (!gx.allFinite() || gx.norm() > (1.0 + x.norm()) * d.growth_guard)
    throw DivergedError(std::string(which) + ": growth guard violated", k);
}

double max_over_q(const ConflictDynamics& d, double t, const Vector& x, const Vector& s,
                  const Vector& u) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.Q.size(); ++i)
    best = std::max(best, s.dot(d.g(t, x, u, d.Q[i])));
  return best;
}

double min_over_p(const ConflictDynamics& d, double t, const Vector& x, const Vector& s,
                  const Vector& v) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.P.size(); ++i)
    best = std::min(best, s.dot(d.g(t, x, d.P[i], v)));
  return best;
}

}  // namespace

double hamiltonian(const ConflictDynamics& d, double t, const Vector& x, const Vector& s) {
  const Vector probe = d.g(t, x, d.P[0], d.Q[0]);
  check_growth(d, probe, x, 0, "hamiltonian");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.P.size(); ++i)
    best = std::min(best, max_over_q(d, t, x, s, d.P[i]));
  return best;
}

Vector extremal_u(const ConflictDynamics& d, double t, const Vector& x, const Vector& s) {
  std::size_t best_idx = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.P.size(); ++i) {
    const double value = max_over_q(d, t, x, s, d.P[i]);
    if (value < best) {
      best = value;
      best_idx = i;
    }
  }
  return d.P[best_idx];
}

Vector extremal_v(const ConflictDynamics& d, double t, const Vector& x_tilde,
                  const Vector& s) {
  std::size_t best_idx = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.Q.size(); ++i) {
    const double value = min_over_p(d, t, x_tilde, s, d.Q[i]);
    if (value > best) {
      best = value;
      best_idx = i;
    }
  }
  return d.Q[best_idx];
}

SaddleReport saddle_check(const ConflictDynamics& d, std::span<const SaddleSample> samples,
                          double tolerance) {
  if (samples.empty()) throw std::invalid_argument("saddle_check: no samples");
  SaddleReport report;
  report.max_gap = 0.0;
  report.gaps.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& sample = samples[i];
    const double minmax = hamiltonian(d, sample.t, sample.x, sample.s);
    double maxmin = -std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < d.Q.size(); ++q)
      maxmin = std::max(maxmin, min_over_p(d, sample.t, sample.x, sample.s, d.Q[q]));
    const double gap = minmax - maxmin;
    report.gaps.push_back(gap);
    report.max_gap = std::max(report.max_gap, gap);
    if (gap > tolerance) report.flagged.push_back(i);
  }
  return report;
}

AimingResult run_aiming(const ConflictDynamics& d, FractionalOrder alpha, const Vector& x0,
                        const UniformGrid& grid, double h, const AimingPartition& partition,
                        const Realization& v_exo, const Realization& u_tilde_exo) {
  const std::size_t lag = grid.steps_per(h);
  const std::size_t n = grid.count();
  if (!(v_exo.grid() == grid) || !(u_tilde_exo.grid() == grid))
    throw std::invalid_argument("run_aiming: exogenous realizations must use the Euler grid");
  if (v_exo.dim() != d.Q.dim() || u_tilde_exo.dim() != d.P.dim())
    throw std::invalid_argument("run_aiming: exogenous realization dimension mismatch");

  const auto dim = x0.size();
  const FractionalOrder gl_order(alpha.complement());
  auto weights = shared_gl_weights(gl_order, static_cast<std::int64_t>(n / lag));
  const double hfac = std::pow(h, alpha.value() - 1.0);
  const double a = alpha.value();
  const double step = grid.step();
  const double bscale = std::pow(step, a) / std::tgamma(a + 1.0);

  std::vector<double> b(n);
  for (std::size_t m = 0; m < n; ++m)
    b[m] = bscale * (std::pow(static_cast<double>(m) + 1.0, a) -
                     std::pow(static_cast<double>(m), a));

  std::vector<Vector> x, y, xt, f_hist, u_real, v_real, ut_real, vt_real;
  x.reserve(n);
  y.reserve(n);
  xt.reserve(n);
  f_hist.reserve(n);
  x.push_back(x0);
  y.push_back(Vector::Zero(dim));

  const auto& part_idx = partition.node_indices();
  std::size_t next_node = 0;
  Vector u_cur = d.P[0];
  Vector vt_cur = d.Q[0];

  for (std::size_t k = 0; k < n; ++k) {
    // Reconstructed state from the y history available so far.
    const std::size_t m = k / lag;
    Vector gl = Vector::Zero(dim);
    for (std::size_t j = 0; j <= m; ++j) gl += (*weights)[j] * y[k - j * lag];
    xt.push_back(x0 + hfac * gl);

    if (next_node < part_idx.size() && part_idx[next_node] == k) {
      const double t = grid.node(k);
      const Vector s = x[k] - xt[k];
      u_cur = extremal_u(d, t, x[k], s);
      vt_cur = extremal_v(d, t, xt[k], s);
      ++next_node;
    }

    u_real.push_back(u_cur);
    vt_real.push_back(vt_cur);
    v_real.push_back(d.Q.clamp(v_exo[k]));
    ut_real.push_back(d.P.clamp(u_tilde_exo[k]));

    if (k + 1 < n) {
      const double t = grid.node(k);
      Vector gx = d.g(t, x[k], u_cur, v_real[k]);
      check_growth(d, gx, x[k], k, "run_aiming (fractional)");
      f_hist.push_back(std::move(gx));
      Vector next = x0;
      for (std::size_t j = 0; j <= k; ++j) next += b[k - j] * f_hist[j];
      x.push_back(std::move(next));

      const Vector gy = d.g(t, xt[k], ut_real[k], vt_cur);
      check_growth(d, gy, xt[k], k, "run_aiming (retarded)");
      y.push_back(y[k] + step * gy);
    }
  }

  const std::size_t state_dim = static_cast<std::size_t>(dim);
  Trajectory xtraj(grid, state_dim, std::move(x));
  Trajectory ytraj(grid, state_dim, std::move(y));
  Trajectory xttraj(grid, state_dim, std::move(xt));
  double err = 0.0;
  for (std::size_t k = 0; k < n; ++k) err = std::max(err, (xtraj[k] - xttraj[k]).norm());

  return AimingResult{std::move(xtraj),
                      std::move(ytraj),
                      std::move(xttraj),
                      Trajectory(grid, d.P.dim(), std::move(u_real)),
                      Trajectory(grid, d.Q.dim(), std::move(v_real)),
                      Trajectory(grid, d.P.dim(), std::move(ut_real)),
                      Trajectory(grid, d.Q.dim(), std::move(vt_real)),
                      err};
}

}  // namespace fracaim
