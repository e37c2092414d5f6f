#include "hetpref/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetpref {

std::vector<double> softmax(std::span<const double> logits) {
  std::vector<double> out(logits.size());
  double zmax = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - zmax);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

std::vector<double> log_softmax(std::span<const double> logits) {
  std::vector<double> out(logits.size());
  double zmax = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double z : logits) sum += std::exp(z - zmax);
  double lse = zmax + std::log(sum);
  for (std::size_t i = 0; i < logits.size(); ++i) out[i] = logits[i] - lse;
  return out;
}

std::vector<double> Policy::probs(std::size_t x) const { return softmax(logits_.row(x)); }

std::vector<double> Policy::log_probs(std::size_t x) const { return log_softmax(logits_.row(x)); }

Grid Policy::prob_table() const {
  Grid out(num_prompts(), num_responses());
  for (std::size_t x = 0; x < num_prompts(); ++x) {
    auto p = probs(x);
    std::copy(p.begin(), p.end(), out.row(x).begin());
  }
  return out;
}

Grid Policy::log_prob_table() const {
  Grid out(num_prompts(), num_responses());
  for (std::size_t x = 0; x < num_prompts(); ++x) {
    auto lp = log_probs(x);
    std::copy(lp.begin(), lp.end(), out.row(x).begin());
  }
  return out;
}

SamplingDistribution SamplingDistribution::uniform(std::size_t prompts, std::size_t responses) {
  SamplingDistribution d;
  d.probs = Grid(prompts, responses, 1.0 / static_cast<double>(responses));
  return d;
}

void SamplingDistribution::validate() const {
  for (std::size_t x = 0; x < probs.rows(); ++x) {
    double sum = 0.0;
    for (double p : probs.row(x)) {
      if (!(p >= 0.0)) throw std::invalid_argument("sampling distribution: negative entry");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("sampling distribution: row does not sum to 1");
    }
  }
}

}  // namespace hetpref
