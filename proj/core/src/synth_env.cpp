#include "hetpref/synth_env.hpp"

#include <cmath>
#include <stdexcept>

namespace hetpref {

void CircularEnvConfig::validate() const {
  if (n < 2) throw std::invalid_argument("circular env: n must be at least 2");
  if (shifts.empty() || shifts.size() != decays.size() || shifts.size() != scales.size()) {
    throw std::invalid_argument("circular env: shifts/decays/scales sizes must match");
  }
  for (double d : decays) {
    if (!(d > 0.0)) throw std::invalid_argument("circular env: decays must be positive");
  }
  for (double s : scales) {
    if (!(s > 0.0)) throw std::invalid_argument("circular env: scales must be positive");
  }
  if (!(beta > 0.0)) throw std::invalid_argument("circular env: beta must be positive");
}

std::size_t circular_distance(std::size_t a, std::size_t b, std::size_t n) {
  std::size_t diff = a >= b ? a - b : b - a;
  return std::min(diff, n - diff);
}

double env_reward(const CircularEnvConfig& cfg, std::size_t x, std::size_t y, std::size_t u) {
  if (x >= cfg.n || y >= cfg.n || u >= cfg.num_types()) {
    throw std::out_of_range("env_reward: index out of range");
  }
  long target = static_cast<long>(x) + cfg.shifts[u];
  long n = static_cast<long>(cfg.n);
  std::size_t wrapped = static_cast<std::size_t>(((target % n) + n) % n);
  std::size_t d = circular_distance(wrapped, y, cfg.n);
  return cfg.scales[u] * std::max(0.0, 1.0 - cfg.decays[u] * static_cast<double>(d));
}

RewardTable CircularEnvConfig::reward_table() const {
  validate();
  RewardTable r(n, n, num_types());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t u = 0; u < num_types(); ++u) {
        r.at(x, y, u) = env_reward(*this, x, y, u);
      }
    }
  }
  return r;
}

OneDCurve reduce_1d(const Grid& values) {
  if (values.rows() != values.cols()) {
    throw std::invalid_argument("reduce_1d: square array required");
  }
  std::size_t n = values.rows();
  OneDCurve curve;
  curve.mean.resize(n);
  curve.stderr_.resize(n);
  for (std::size_t d = 0; d < n; ++d) {
    double sum = 0.0;
    for (std::size_t x = 0; x < n; ++x) sum += values(x, (x + d) % n);
    double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      double diff = values(x, (x + d) % n) - mean;
      ss += diff * diff;
    }
    curve.mean[d] = mean;
    curve.stderr_[d] =
        n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n))
              : 0.0;
  }
  return curve;
}

}  // namespace hetpref
