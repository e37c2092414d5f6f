#pragma once

#include "hetpref/grid.hpp"
#include "hetpref/population.hpp"

namespace hetpref {

// Ground-truth reward r(x, y; u) indexed by (prompt, response, type).
class RewardTable {
 public:
  RewardTable() = default;
  RewardTable(std::size_t prompts, std::size_t responses, std::size_t types)
      : values_(prompts, responses, types) {}

  std::size_t num_prompts() const { return values_.dim0(); }
  std::size_t num_responses() const { return values_.dim1(); }
  std::size_t num_types() const { return values_.dim2(); }

  double& at(std::size_t x, std::size_t y, std::size_t u) { return values_(x, y, u); }
  double at(std::size_t x, std::size_t y, std::size_t u) const { return values_(x, y, u); }

  // All entries finite; throws otherwise.
  void validate() const;

  // User-weighted mean reward per (prompt, response).
  Grid average(const UserPopulation& pop) const;

  // Rewards of one (prompt, type) slice across responses.
  std::vector<double> response_slice(std::size_t x, std::size_t u) const;

  Cube& raw() { return values_; }
  const Cube& raw() const { return values_; }

 private:
  Cube values_;
};

}  // namespace hetpref
