#include "hetpref/pairwise.hpp"

#include <cmath>
#include <stdexcept>

namespace hetpref {

PairwiseMatrix::PairwiseMatrix(Grid entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("pairwise matrix must be square");
  }
  for (std::size_t i = 0; i < entries_.rows(); ++i) {
    if (std::abs(entries_(i, i) - 0.5) > 1e-12) {
      throw std::invalid_argument("pairwise matrix diagonal must be 0.5");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(entries_(i, j) + entries_(j, i) - 1.0) > 1e-12) {
        throw std::invalid_argument("pairwise matrix entries must sum to 1 with their mirror");
      }
    }
  }
}

PairwiseMatrix PairwiseMatrix::from_group_rewards(const Grid& rewards,
                                                  std::span<const double> weights,
                                                  const LinkFunction& link) {
  if (rewards.rows() != weights.size()) {
    throw std::invalid_argument("pairwise matrix: one weight per group required");
  }
  std::size_t n = rewards.cols();
  Grid p(n, n, 0.5);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double acc = 0.0;
      for (std::size_t u = 0; u < rewards.rows(); ++u) {
        acc += weights[u] * link.value(rewards(u, i) - rewards(u, j));
      }
      p(i, j) = acc;
      p(j, i) = 1.0 - acc;
    }
  }
  return PairwiseMatrix(std::move(p));
}

PairwiseMatrix PairwiseMatrix::from_rewards(const RewardTable& r, const UserPopulation& pop,
                                            const LinkFunction& link, std::size_t x) {
  Grid rewards(r.num_types(), r.num_responses());
  for (std::size_t u = 0; u < r.num_types(); ++u) {
    for (std::size_t y = 0; y < r.num_responses(); ++y) {
      rewards(u, y) = r.at(x, y, u);
    }
  }
  return from_group_rewards(rewards, pop.weights, link);
}

std::vector<double> PairwiseMatrix::nbc(std::span<const double> dist) const {
  if (dist.size() != size()) throw std::invalid_argument("nbc: distribution size mismatch");
  std::vector<double> scores(size(), 0.0);
  for (std::size_t i = 0; i < size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < size(); ++j) acc += dist[j] * entries_(i, j);
    scores[i] = acc;
  }
  return scores;
}

CycleProducts cycle_products(const PairwiseMatrix& p, std::size_t i, std::size_t j,
                             std::size_t k) {
  if (i == j || j == k || i == k) {
    throw std::invalid_argument("cycle products need three distinct options");
  }
  return {p.at(i, j) * p.at(j, k) * p.at(k, i), p.at(i, k) * p.at(k, j) * p.at(j, i)};
}

}  // namespace hetpref
