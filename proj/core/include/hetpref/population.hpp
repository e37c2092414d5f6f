#pragma once

#include <string>
#include <vector>

namespace hetpref {

// Finite set of user types with a probability weight per type.
struct UserPopulation {
  std::vector<std::string> types;
  std::vector<double> weights;

  std::size_t size() const { return types.size(); }

  // |types| == |weights|, weights nonnegative, sum within 1e-12 of 1.
  void validate() const;

  bool equal_weights(double tol = 1e-12) const;

  static UserPopulation uniform(std::size_t count);
};

}  // namespace hetpref
