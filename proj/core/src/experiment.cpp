#include "hetpref/experiment.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "hetpref/rng.hpp"

namespace hetpref {

std::string to_string(Method m) {
  switch (m) {
    case Method::dpo:
      return "dpo";
    case Method::corrected_dpo:
      return "corrected_dpo";
    case Method::consistent:
      return "consistent";
    case Method::alt_consistent:
      return "alt_consistent";
    case Method::avg_reward_relabel:
      return "avg_reward_relabel";
  }
  throw std::logic_error("unknown method");
}

Method method_from_string(const std::string& s) {
  if (s == "dpo") return Method::dpo;
  if (s == "corrected_dpo" || s == "corrected-dpo") return Method::corrected_dpo;
  if (s == "consistent") return Method::consistent;
  if (s == "alt_consistent" || s == "alt-consistent") return Method::alt_consistent;
  if (s == "avg_reward_relabel" || s == "avg-reward-relabel") return Method::avg_reward_relabel;
  throw std::invalid_argument("unknown method '" + s + "'");
}

KendallTau ordinal_metrics(const OneDCurve& a, const OneDCurve& b, double tie_tol) {
  if (a.size() != b.size()) throw std::invalid_argument("ordinal metrics: length mismatch");
  return kendall_tau(a.mean, b.mean, tie_tol);
}

double mean_kl(const Policy& pi, const Policy& target) {
  if (pi.num_prompts() != target.num_prompts() ||
      pi.num_responses() != target.num_responses()) {
    throw std::invalid_argument("mean_kl: shape mismatch");
  }
  double total = 0.0;
  for (std::size_t x = 0; x < pi.num_prompts(); ++x) {
    auto lp = pi.log_probs(x);
    auto lq = target.log_probs(x);
    double kl = 0.0;
    for (std::size_t y = 0; y < lp.size(); ++y) {
      kl += std::exp(lp[y]) * (lp[y] - lq[y]);
    }
    total += kl;
  }
  return total / static_cast<double>(pi.num_prompts());
}

Grid nbc_table(const RewardTable& r, const UserPopulation& pop, const LinkFunction& link,
               const SamplingDistribution& D) {
  Grid out(r.num_prompts(), r.num_responses());
  for (std::size_t x = 0; x < r.num_prompts(); ++x) {
    auto scores = nbc_scores(r, pop, link, D, x);
    std::copy(scores.begin(), scores.end(), out.row(x).begin());
  }
  return out;
}

ExperimentReport run_experiment(Method method, const ExperimentConfig& cfg) {
  cfg.env.validate();
  const std::size_t n = cfg.env.n;
  RewardTable rewards = cfg.env.reward_table();
  UserPopulation pop = cfg.env.population();
  LinkFunction link;
  SamplingDistribution response_dist = SamplingDistribution::uniform(n, n);
  std::vector<double> prompt_dist(n, 1.0 / static_cast<double>(n));
  Policy pi_ref = Policy::uniform(n, n);
  Policy pi_star = optimal_policy(rewards, pop, pi_ref, cfg.env.beta);

  ExperimentReport report;
  report.method = method;
  report.optimal_curve = reduce_1d(pi_star.prob_table());
  report.nbc_curve = reduce_1d(nbc_table(rewards, pop, link, response_dist));
  report.usable_fraction = std::numeric_limits<double>::quiet_NaN();

  LossConfig loss_cfg;
  loss_cfg.beta = cfg.env.beta;
  loss_cfg.alpha = cfg.alpha;

  // Datasets must outlive the objective; keep them in scope until training ends.
  AnonymousDataset anon;
  PairedDataset paired;
  FullDataset full;
  JointLikelihoodTable joint(cfg.joint_n_min);
  std::unique_ptr<Objective> objective;

  switch (method) {
    case Method::dpo:
      anon = sample_anonymous(rewards, pop, link, prompt_dist, response_dist, cfg.n_samples,
                              cfg.seed);
      objective = std::make_unique<DpoObjective>(pi_ref, anon, loss_cfg);
      break;
    case Method::corrected_dpo:
      anon = sample_anonymous(rewards, pop, link, prompt_dist, response_dist, cfg.n_samples,
                              cfg.seed);
      paired = sample_paired(rewards, pop, link, prompt_dist, response_dist, cfg.n_samples,
                             Rng::split(cfg.seed, 2));
      joint = estimate_joint(paired, cfg.joint_n_min);
      objective = std::make_unique<CorrectedDpoObjective>(pi_ref, anon, joint, loss_cfg);
      break;
    case Method::consistent:
    case Method::alt_consistent: {
      full = sample_full_vector(rewards, pop, link, prompt_dist, response_dist, cfg.n_samples,
                                cfg.seed);
      report.usable_fraction = agreement_filter(full).usable_fraction();
      if (method == Method::consistent) {
        objective = std::make_unique<AgreementObjective>(pi_ref, full, loss_cfg);
      } else {
        objective = std::make_unique<AltAgreementObjective>(pi_ref, full, loss_cfg);
      }
      break;
    }
    case Method::avg_reward_relabel: {
      std::vector<AnonymousDataset> per_type;
      std::size_t per_type_n = std::max<std::size_t>(1, cfg.n_samples / pop.size());
      for (std::size_t u = 0; u < pop.size(); ++u) {
        UserPopulation solo;
        solo.types = {pop.types[u]};
        solo.weights = {1.0};
        RewardTable slice(n, n, 1);
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) slice.at(x, y, 0) = rewards.at(x, y, u);
        }
        per_type.push_back(sample_anonymous(slice, solo, link, prompt_dist, response_dist,
                                            per_type_n, Rng::split(cfg.seed, 10 + u)));
      }
      PerTypeRewardFit fit = per_type_reward_mle(per_type, pop, n, n, cfg.mle);
      auto triples = sample_triples(prompt_dist, response_dist, cfg.n_samples,
                                    Rng::split(cfg.seed, 3));
      anon = relabel_with_reward(triples, fit.average, link, RelabelMode::stochastic,
                                 Rng::split(cfg.seed, 4));
      objective = std::make_unique<DpoObjective>(pi_ref, anon, loss_cfg);
      break;
    }
  }

  TrainConfig train_cfg = cfg.train;
  if (train_cfg.seed == 0) train_cfg.seed = Rng::split(cfg.seed, 1);
  report.training = train(*objective, Grid(n, n), train_cfg);

  Policy trained(report.training.params);
  report.policy_curve = reduce_1d(trained.prob_table());
  report.tau_vs_nbc = ordinal_metrics(report.policy_curve, report.nbc_curve, cfg.tie_tol);
  report.tau_vs_optimal = ordinal_metrics(report.policy_curve, report.optimal_curve, cfg.tie_tol);
  report.kl_to_optimal = mean_kl(trained, pi_star);
  return report;
}

}  // namespace hetpref
