#pragma once

#include <span>

#include "hetpref/datasets.hpp"
#include "hetpref/objective.hpp"
#include "hetpref/population.hpp"
#include "hetpref/reward_table.hpp"

namespace hetpref {

// Pairwise-choice negative log-likelihood over a grid of reward entries
// (one row per prompt, one column per response) for a single user type's
// anonymous dataset.
class RewardNllObjective : public Objective {
 public:
  RewardNllObjective(const AnonymousDataset& data, std::size_t num_prompts,
                     std::size_t num_responses, double eps_log = 1e-8);

  std::size_t num_records() const override { return data_->size(); }
  std::size_t param_rows() const override { return rows_; }
  std::size_t param_cols() const override { return cols_; }
  LossValue evaluate(const Grid& rewards, std::span<const std::size_t> batch) const override;

 private:
  const AnonymousDataset* data_;
  std::size_t rows_;
  std::size_t cols_;
  double eps_log_;
};

struct RewardMleConfig {
  double lr = 0.1;
  std::size_t steps = 2000;  // full-batch steps per type
  double eps_log = 1e-8;
};

struct PerTypeRewardFit {
  // Fitted per-type rewards, zero-mean over identified entries per (prompt, type).
  RewardTable rewards;
  // User-weighted mean reward, zero-mean per prompt.
  Grid average;
  // identified[(x * num_responses + y) * num_types + u] == 1 when response y
  // was observed for type u at prompt x; unidentified entries stay at 0.
  std::vector<std::uint8_t> identified;

  bool is_identified(std::size_t x, std::size_t y, std::size_t u) const {
    return identified[(x * rewards.num_responses() + y) * rewards.num_types() + u] != 0;
  }
};

// Fits one reward grid per type by gradient descent on the pairwise-choice
// negative log-likelihood, then averages with the population weights.
PerTypeRewardFit per_type_reward_mle(std::span<const AnonymousDataset> per_type_data,
                                     const UserPopulation& pop, std::size_t num_prompts,
                                     std::size_t num_responses,
                                     const RewardMleConfig& cfg = {});

}  // namespace hetpref
