#pragma once

#include "hetpref/grid.hpp"

namespace hetpref {

// Per-prompt categorical distribution over responses stored as logits.
// Probabilities come from a max-shifted softmax, so rows sum to 1 and every
// probability is strictly positive for finite logits.
class Policy {
 public:
  Policy() = default;
  explicit Policy(Grid logits) : logits_(std::move(logits)) {}

  static Policy uniform(std::size_t prompts, std::size_t responses) {
    return Policy(Grid(prompts, responses, 0.0));
  }

  std::size_t num_prompts() const { return logits_.rows(); }
  std::size_t num_responses() const { return logits_.cols(); }

  Grid& logits() { return logits_; }
  const Grid& logits() const { return logits_; }

  std::vector<double> probs(std::size_t x) const;
  std::vector<double> log_probs(std::size_t x) const;
  Grid prob_table() const;
  Grid log_prob_table() const;

 private:
  Grid logits_;
};

// Max-shifted softmax of one logit row.
std::vector<double> softmax(std::span<const double> logits);
std::vector<double> log_softmax(std::span<const double> logits);

// Distribution used to draw alternative responses, one row per prompt.
struct SamplingDistribution {
  Grid probs;

  static SamplingDistribution uniform(std::size_t prompts, std::size_t responses);

  std::size_t num_prompts() const { return probs.rows(); }
  std::size_t num_responses() const { return probs.cols(); }
  std::span<const double> row(std::size_t x) const { return probs.row(x); }

  // Rows sum to 1 within 1e-12, entries nonnegative.
  void validate() const;
};

}  // namespace hetpref
