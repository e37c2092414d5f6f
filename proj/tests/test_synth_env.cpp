#include <doctest.h>

#include <cmath>

#include "hetpref/experiment.hpp"
#include "hetpref/synth_env.hpp"

using namespace hetpref;

TEST_CASE("circular environment rewards") {
  CircularEnvConfig cfg;

  SUBCASE("peak value at the shifted target") {
    CHECK(env_reward(cfg, 0, 30, 0) == doctest::Approx(4.0).epsilon(1e-15));  // (0 - 10) mod 40
    CHECK(env_reward(cfg, 5, 5, 1) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(env_reward(cfg, 5, 15, 2) == doctest::Approx(4.0).epsilon(1e-15));
  }

  SUBCASE("floor beyond the decay range") {
    // Type 1 decays at 0.1: zero from distance 10 onward.
    CHECK(env_reward(cfg, 0, 10, 1) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(env_reward(cfg, 0, 20, 1) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(env_reward(cfg, 0, 9, 1) > 0.0);
  }

  SUBCASE("rewards depend only on the offset") {
    RewardTable r = cfg.reward_table();
    for (std::size_t u = 0; u < 3; ++u) {
      Grid slice(cfg.n, cfg.n);
      for (std::size_t x = 0; x < cfg.n; ++x) {
        for (std::size_t y = 0; y < cfg.n; ++y) slice(x, y) = r.at(x, y, u);
      }
      OneDCurve curve = reduce_1d(slice);
      for (double se : curve.stderr_) CHECK(se == doctest::Approx(0.0).epsilon(1e-12));
    }
  }

  SUBCASE("config validation") {
    CircularEnvConfig bad = cfg;
    bad.decays = {0.1};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }
}

TEST_CASE("1d reduction") {
  SUBCASE("uniform policy reduces to a flat curve") {
    Policy pi = Policy::uniform(8, 8);
    OneDCurve curve = reduce_1d(pi.prob_table());
    for (double m : curve.mean) CHECK(m == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
    for (double se : curve.stderr_) CHECK(se == doctest::Approx(0.0).epsilon(1e-14));
  }

  SUBCASE("average reward curve is bimodal at the side shifts") {
    CircularEnvConfig cfg;
    RewardTable r = cfg.reward_table();
    Grid avg = r.average(cfg.population());
    OneDCurve curve = reduce_1d(avg);
    std::size_t at_plus10 = 10;
    std::size_t at_minus10 = cfg.n - 10;
    CHECK(curve.mean[at_plus10] > curve.mean[0]);
    CHECK(curve.mean[at_minus10] > curve.mean[0]);
    CHECK(curve.mean[at_plus10] == doctest::Approx(curve.mean[at_minus10]).epsilon(1e-12));
  }
}

TEST_CASE("environment-level invariants") {
  CircularEnvConfig cfg;
  cfg.n = 16;  // small instance keeps this quick
  cfg.shifts = {-4, 0, 4};
  RewardTable r = cfg.reward_table();
  UserPopulation pop = cfg.population();
  LinkFunction link;

  SUBCASE("optimal policy is symmetric under offset negation") {
    Policy pi = optimal_policy(r, pop, Policy::uniform(cfg.n, cfg.n), cfg.beta);
    OneDCurve curve = reduce_1d(pi.prob_table());
    for (std::size_t d = 1; d < cfg.n; ++d) {
      CHECK(curve.mean[d] == doctest::Approx(curve.mean[cfg.n - d]).epsilon(1e-10));
    }
  }

  SUBCASE("weighted Borda scores sum to one half") {
    SamplingDistribution d = SamplingDistribution::uniform(cfg.n, cfg.n);
    Grid scores = nbc_table(r, pop, link, d);
    for (std::size_t x = 0; x < cfg.n; ++x) {
      double acc = 0.0;
      for (std::size_t y = 0; y < cfg.n; ++y) acc += scores(x, y) / static_cast<double>(cfg.n);
      CHECK(acc == doctest::Approx(0.5).epsilon(1e-10));
    }
  }
}

TEST_CASE("ordinal metrics on curves") {
  OneDCurve a{{0.1, 0.2, 0.3, 0.4}, {0, 0, 0, 0}};

  SUBCASE("identical curves give tau 1") {
    auto t = ordinal_metrics(a, a, 1e-9);
    CHECK(t.defined);
    CHECK(t.tau == doctest::Approx(1.0));
  }

  SUBCASE("reversed curves give tau -1") {
    OneDCurve b{{0.4, 0.3, 0.2, 0.1}, {0, 0, 0, 0}};
    auto t = ordinal_metrics(a, b, 1e-9);
    CHECK(t.tau == doctest::Approx(-1.0));
  }

  SUBCASE("flat curve is flagged undefined") {
    OneDCurve flat{{0.2, 0.2, 0.2, 0.2}, {0, 0, 0, 0}};
    auto t = ordinal_metrics(a, flat, 1e-3);
    CHECK_FALSE(t.defined);
  }
}

TEST_CASE("mean kl") {
  Policy p = Policy::uniform(2, 3);
  CHECK(mean_kl(p, p) == doctest::Approx(0.0).epsilon(1e-14));
  Grid shifted(2, 3);
  shifted(0, 0) = 1.0;
  Policy q(shifted);
  CHECK(mean_kl(q, p) > 0.0);
}

TEST_CASE("small end-to-end experiment run") {
  // Tiny instance: checks plumbing, not the full-scale thresholds.
  ExperimentConfig cfg;
  cfg.env.n = 12;
  cfg.env.shifts = {-3, 0, 3};
  cfg.env.decays = {0.15, 0.2, 0.15};
  cfg.env.scales = {4.0, 1.5, 4.0};
  cfg.n_samples = 30000;
  cfg.seed = 5;
  cfg.train.epochs = 8;
  cfg.train.batch_size = 1024;

  auto report = run_experiment(Method::dpo, cfg);
  CHECK(report.policy_curve.size() == 12);
  CHECK(report.tau_vs_nbc.defined);
  CHECK(report.tau_vs_nbc.tau > 0.5);
  CHECK(std::isnan(report.usable_fraction));

  auto consistent = run_experiment(Method::consistent, cfg);
  CHECK(consistent.usable_fraction > 0.0);
  CHECK(consistent.usable_fraction < 1.0);
  CHECK(consistent.kl_to_optimal < mean_kl(Policy::uniform(12, 12),
                                           optimal_policy(cfg.env.reward_table(),
                                                          cfg.env.population(),
                                                          Policy::uniform(12, 12),
                                                          cfg.env.beta)));

  // Re-running with the same config reproduces the result bitwise.
  auto again = run_experiment(Method::dpo, cfg);
  CHECK(again.training.params == report.training.params);
}
