#include "hetpref/population.hpp"

#include <cmath>
#include <stdexcept>

namespace hetpref {

void UserPopulation::validate() const {
  if (types.size() != weights.size()) {
    throw std::invalid_argument("population: |types| != |weights|");
  }
  if (types.empty()) {
    throw std::invalid_argument("population: at least one type required");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("population: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("population: weights must sum to 1");
  }
}

bool UserPopulation::equal_weights(double tol) const {
  if (weights.empty()) return true;
  double expect = 1.0 / static_cast<double>(weights.size());
  for (double w : weights) {
    if (std::abs(w - expect) > tol) return false;
  }
  return true;
}

UserPopulation UserPopulation::uniform(std::size_t count) {
  UserPopulation pop;
  pop.types.reserve(count);
  pop.weights.assign(count, 1.0 / static_cast<double>(count));
  for (std::size_t i = 0; i < count; ++i) {
    pop.types.push_back("u" + std::to_string(i));
  }
  return pop;
}

}  // namespace hetpref
