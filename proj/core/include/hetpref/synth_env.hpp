#pragma once

#include <vector>

#include "hetpref/grid.hpp"
#include "hetpref/population.hpp"
#include "hetpref/reward_table.hpp"

namespace hetpref {

// Circular discrete environment: n prompts, n responses, and per-type rewards
// that decay linearly (floored at zero) with the circular distance between the
// response and the type's shifted target.
struct CircularEnvConfig {
  std::size_t n = 40;
  std::vector<int> shifts = {-10, 0, 10};
  std::vector<double> decays = {0.075, 0.1, 0.075};
  std::vector<double> scales = {4.0, 1.5, 4.0};
  double beta = 1.0;

  std::size_t num_types() const { return shifts.size(); }
  void validate() const;
  UserPopulation population() const { return UserPopulation::uniform(num_types()); }
  RewardTable reward_table() const;
};

std::size_t circular_distance(std::size_t a, std::size_t b, std::size_t n);

double env_reward(const CircularEnvConfig& cfg, std::size_t x, std::size_t y, std::size_t u);

// Mean and standard error across prompts of values at offset delta = y - x
// (mod n). Index d holds the statistics of value(x, (x + d) mod n).
struct OneDCurve {
  std::vector<double> mean;
  std::vector<double> stderr_;

  std::size_t size() const { return mean.size(); }
};

OneDCurve reduce_1d(const Grid& values);

}  // namespace hetpref
