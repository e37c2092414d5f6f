#pragma once

#include <span>

#include "hetpref/grid.hpp"
#include "hetpref/link.hpp"
#include "hetpref/population.hpp"
#include "hetpref/reward_table.hpp"

namespace hetpref {

// Square matrix of win probabilities: entry (i, j) is the probability that
// option i beats option j. Complement-symmetric with 0.5 on the diagonal.
class PairwiseMatrix {
 public:
  explicit PairwiseMatrix(Grid entries);

  std::size_t size() const { return entries_.rows(); }
  double at(std::size_t i, std::size_t j) const { return entries_(i, j); }
  std::span<const double> row(std::size_t i) const { return entries_.row(i); }
  const Grid& entries() const { return entries_; }

  // Mixture win probabilities from per-group rewards (one row per group,
  // one column per option).
  static PairwiseMatrix from_group_rewards(const Grid& rewards, std::span<const double> weights,
                                           const LinkFunction& link);

  // Same, for one prompt of a reward table.
  static PairwiseMatrix from_rewards(const RewardTable& r, const UserPopulation& pop,
                                     const LinkFunction& link, std::size_t x);

  // NBC under an explicit alternative distribution: score(i) = sum_j D(j) P(i,j).
  std::vector<double> nbc(std::span<const double> dist) const;

 private:
  Grid entries_;
};

struct CycleProducts {
  double forward;
  double reverse;
};

// Directed three-cycle probability products P(i,j)P(j,k)P(k,i) and its
// reversal. Equal for any single Bradley-Terry table; mixtures can break the
// identity.
CycleProducts cycle_products(const PairwiseMatrix& p, std::size_t i, std::size_t j,
                             std::size_t k);

}  // namespace hetpref
