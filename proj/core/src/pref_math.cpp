#include "hetpref/pref_math.hpp"

#include <cmath>
#include <stdexcept>

namespace hetpref {

namespace {

void check_pair(const RewardTable& r, std::size_t x, std::size_t y1, std::size_t y2) {
  if (x >= r.num_prompts() || y1 >= r.num_responses() || y2 >= r.num_responses()) {
    throw std::out_of_range("preference query index out of range");
  }
}

}  // namespace

double pref_prob_type(const RewardTable& r, const LinkFunction& link, std::size_t x,
                      std::size_t y1, std::size_t y2, std::size_t u) {
  check_pair(r, x, y1, y2);
  if (u >= r.num_types()) throw std::out_of_range("type index out of range");
  return link.value(r.at(x, y2, u) - r.at(x, y1, u));
}

double pref_prob_marginal(const RewardTable& r, const UserPopulation& pop,
                          const LinkFunction& link, std::size_t x, std::size_t y1,
                          std::size_t y2) {
  check_pair(r, x, y1, y2);
  double acc = 0.0;
  for (std::size_t u = 0; u < pop.size(); ++u) {
    acc += pop.weights[u] * link.value(r.at(x, y2, u) - r.at(x, y1, u));
  }
  return acc;
}

std::vector<double> nbc_scores(const RewardTable& r, const UserPopulation& pop,
                               const LinkFunction& link, const SamplingDistribution& D,
                               std::size_t x) {
  std::size_t n = r.num_responses();
  if (D.num_responses() != n) throw std::invalid_argument("nbc: distribution width mismatch");
  auto d = D.row(x);
  std::vector<double> scores(n, 0.0);
  for (std::size_t y = 0; y < n; ++y) {
    double acc = 0.0;
    for (std::size_t alt = 0; alt < n; ++alt) {
      double win = (alt == y) ? 0.5 : pref_prob_marginal(r, pop, link, x, alt, y);
      acc += d[alt] * win;
    }
    scores[y] = acc;
  }
  return scores;
}

Policy optimal_policy_from_average(const Grid& avg_reward, const Policy& pi_ref, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("optimal_policy: beta must be positive");
  Grid logits(avg_reward.rows(), avg_reward.cols());
  Grid ref_log = pi_ref.log_prob_table();
  for (std::size_t x = 0; x < avg_reward.rows(); ++x) {
    for (std::size_t y = 0; y < avg_reward.cols(); ++y) {
      logits(x, y) = ref_log(x, y) + avg_reward(x, y) / beta;
    }
  }
  // Softmax of these logits normalizes per prompt; max subtraction inside
  // softmax guards the exponentials.
  return Policy(std::move(logits));
}

Policy optimal_policy(const RewardTable& r, const UserPopulation& pop, const Policy& pi_ref,
                      double beta) {
  return optimal_policy_from_average(r.average(pop), pi_ref, beta);
}

double induced_reward_diff(const Policy& pi, const Policy& pi_ref, double beta, std::size_t x,
                           std::size_t y1, std::size_t y2) {
  auto lp = pi.log_probs(x);
  auto lref = pi_ref.log_probs(x);
  return beta * ((lp[y2] - lref[y2]) - (lp[y1] - lref[y1]));
}

}  // namespace hetpref
