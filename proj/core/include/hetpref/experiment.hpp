#pragma once

#include <string>

#include "hetpref/datasets.hpp"
#include "hetpref/losses.hpp"
#include "hetpref/pref_math.hpp"
#include "hetpref/ranking.hpp"
#include "hetpref/reward_mle.hpp"
#include "hetpref/synth_env.hpp"
#include "hetpref/train.hpp"

namespace hetpref {

enum class Method { dpo, corrected_dpo, consistent, alt_consistent, avg_reward_relabel };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct ExperimentConfig {
  CircularEnvConfig env;
  std::size_t n_samples = 500000;
  std::uint64_t seed = 0;
  double alpha = 1.0;  // correction strength for corrected_dpo
  TrainConfig train;
  std::uint64_t joint_n_min = 10;
  RewardMleConfig mle;
  // Near-tie plateau width for ordinal comparisons; the zero-reward region
  // produces large blocks of almost-equal scores.
  double tie_tol = 1e-3;
};

struct ExperimentReport {
  Method method = Method::dpo;
  OneDCurve policy_curve;
  OneDCurve optimal_curve;
  OneDCurve nbc_curve;
  KendallTau tau_vs_nbc;
  KendallTau tau_vs_optimal;
  double kl_to_optimal = 0.0;
  // Fraction of records kept by agreement filtering; NaN when not applicable.
  double usable_fraction = 0.0;
  TrainResult training;
};

// Generates data for the method, trains a tabular policy, and evaluates it
// against the KL-optimal policy and the Borda scores of the environment.
ExperimentReport run_experiment(Method method, const ExperimentConfig& cfg);

// Kendall tau between two curves over offsets where both differ by more than
// tie_tol.
KendallTau ordinal_metrics(const OneDCurve& a, const OneDCurve& b, double tie_tol);

// KL(pi || target) averaged over prompts.
double mean_kl(const Policy& pi, const Policy& target);

// Borda scores per (prompt, response) under D.
Grid nbc_table(const RewardTable& r, const UserPopulation& pop, const LinkFunction& link,
               const SamplingDistribution& D);

}  // namespace hetpref
