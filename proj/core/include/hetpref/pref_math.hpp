#pragma once

#include "hetpref/link.hpp"
#include "hetpref/policy.hpp"
#include "hetpref/population.hpp"
#include "hetpref/reward_table.hpp"

namespace hetpref {

// Probability that a type-u annotator prefers y2 over y1: sigma(r(y2;u) - r(y1;u)).
double pref_prob_type(const RewardTable& r, const LinkFunction& link, std::size_t x,
                      std::size_t y1, std::size_t y2, std::size_t u);

// Population-level probability that y2 is preferred over y1: the type-weighted
// mixture of the per-type probabilities.
double pref_prob_marginal(const RewardTable& r, const UserPopulation& pop,
                          const LinkFunction& link, std::size_t x, std::size_t y1,
                          std::size_t y2);

// Normalized Borda count at prompt x: NBC(y) is the probability that a
// random-type annotator prefers y over an alternative drawn from D. The
// self-comparison term enters with probability 1/2, i.e. the score includes
// D(y) * 0.5.
std::vector<double> nbc_scores(const RewardTable& r, const UserPopulation& pop,
                               const LinkFunction& link, const SamplingDistribution& D,
                               std::size_t x);

// KL-regularized optimum for the user-weighted average reward:
// pi*(y|x) proportional to pi_ref(y|x) * exp(avg_reward(x,y) / beta).
Policy optimal_policy(const RewardTable& r, const UserPopulation& pop, const Policy& pi_ref,
                      double beta);
Policy optimal_policy_from_average(const Grid& avg_reward, const Policy& pi_ref, double beta);

// Difference of the rewards induced by pi relative to pi_ref:
// beta*log(pi(y2)/pi_ref(y2)) - beta*log(pi(y1)/pi_ref(y1)).
// Antisymmetric in (y1, y2).
double induced_reward_diff(const Policy& pi, const Policy& pi_ref, double beta, std::size_t x,
                           std::size_t y1, std::size_t y2);

}  // namespace hetpref
