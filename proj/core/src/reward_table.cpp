#include "hetpref/reward_table.hpp"

#include <cmath>
#include <stdexcept>

namespace hetpref {

void RewardTable::validate() const {
  for (double v : values_.flat()) {
    if (!std::isfinite(v)) throw std::invalid_argument("reward table: non-finite entry");
  }
}

Grid RewardTable::average(const UserPopulation& pop) const {
  if (pop.size() != num_types()) {
    throw std::invalid_argument("reward table: population size mismatch");
  }
  Grid avg(num_prompts(), num_responses());
  for (std::size_t x = 0; x < num_prompts(); ++x) {
    for (std::size_t y = 0; y < num_responses(); ++y) {
      double acc = 0.0;
      for (std::size_t u = 0; u < num_types(); ++u) {
        acc += pop.weights[u] * values_(x, y, u);
      }
      avg(x, y) = acc;
    }
  }
  return avg;
}

std::vector<double> RewardTable::response_slice(std::size_t x, std::size_t u) const {
  std::vector<double> out(num_responses());
  for (std::size_t y = 0; y < num_responses(); ++y) out[y] = values_(x, y, u);
  return out;
}

}  // namespace hetpref
