#include <doctest.h>

#include <cmath>

#include "hetpref/reward_mle.hpp"
#include "hetpref/rng.hpp"
#include "hetpref/train.hpp"
#include "test_helpers.hpp"

using namespace hetpref;

namespace {

// Enumerated outcome weights: both labels for every ordered pair, weighted by
// the exact choice probabilities of the given reward vector.
AnonymousDataset exact_dataset(const std::vector<double>& reward) {
  LinkFunction link;
  AnonymousDataset data;
  std::size_t n = reward.size();
  for (std::uint32_t y1 = 0; y1 < n; ++y1) {
    for (std::uint32_t y2 = 0; y2 < n; ++y2) {
      if (y1 == y2) continue;
      double p = link.value(reward[y2] - reward[y1]);
      data.records.push_back({0, y1, y2, 1});
      data.weights.push_back(p);
      data.records.push_back({0, y1, y2, 0});
      data.weights.push_back(1.0 - p);
    }
  }
  return data;
}

}  // namespace

TEST_CASE("reward mle") {
  SUBCASE("exact probabilities recover the reward gaps") {
    std::vector<double> truth{0.0, 0.9, -0.4};
    std::vector<AnonymousDataset> per_type{exact_dataset(truth)};
    RewardMleConfig cfg;
    cfg.steps = 4000;
    auto fit = per_type_reward_mle(per_type, UserPopulation::uniform(1), 1, 3, cfg);
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        double gap = fit.rewards.at(0, b, 0) - fit.rewards.at(0, a, 0);
        CHECK(gap == doctest::Approx(truth[b] - truth[a]).epsilon(1e-3));
      }
    }
  }

  SUBCASE("two options at win rate 3/4 give a log-3 gap") {
    AnonymousDataset data;
    data.records.push_back({0, 0, 1, 1});
    data.weights.push_back(0.75);
    data.records.push_back({0, 0, 1, 0});
    data.weights.push_back(0.25);
    std::vector<AnonymousDataset> per_type{data};
    RewardMleConfig cfg;
    cfg.steps = 4000;
    auto fit = per_type_reward_mle(per_type, UserPopulation::uniform(1), 1, 2, cfg);
    CHECK(fit.rewards.at(0, 1, 0) - fit.rewards.at(0, 0, 0) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-3));
    // Zero-mean gauge per prompt.
    CHECK(fit.rewards.at(0, 0, 0) + fit.rewards.at(0, 1, 0) ==
          doctest::Approx(0.0).epsilon(1e-9));
  }

  SUBCASE("symmetric data fits a flat reward") {
    std::vector<AnonymousDataset> per_type{exact_dataset({0.7, 0.7, 0.7})};
    auto fit = per_type_reward_mle(per_type, UserPopulation::uniform(1), 1, 3, {});
    for (std::size_t y = 0; y < 3; ++y) {
      CHECK(fit.average(0, y) == doctest::Approx(0.0).epsilon(1e-6));
    }
  }

  SUBCASE("unseen responses stay at zero and are flagged") {
    AnonymousDataset data;
    data.records.push_back({0, 0, 1, 1});
    data.records.push_back({0, 0, 1, 1});
    data.records.push_back({0, 0, 1, 0});
    std::vector<AnonymousDataset> per_type{data};
    auto fit = per_type_reward_mle(per_type, UserPopulation::uniform(1), 1, 3, {});
    CHECK(fit.is_identified(0, 0, 0));
    CHECK(fit.is_identified(0, 1, 0));
    CHECK_FALSE(fit.is_identified(0, 2, 0));
    CHECK(fit.rewards.at(0, 2, 0) == 0.0);
  }

  SUBCASE("weighted average respects population weights") {
    std::vector<AnonymousDataset> per_type{exact_dataset({0.0, 1.0}),
                                           exact_dataset({0.0, -1.0})};
    UserPopulation pop{{"a", "b"}, {0.75, 0.25}};
    RewardMleConfig cfg;
    cfg.steps = 4000;
    auto fit = per_type_reward_mle(per_type, pop, 1, 2, cfg);
    double gap = fit.average(0, 1) - fit.average(0, 0);
    CHECK(gap == doctest::Approx(0.75 * 1.0 + 0.25 * -1.0).epsilon(1e-3));
  }

  SUBCASE("gradient matches finite differences") {
    Rng rng(21);
    AnonymousDataset data;
    for (int i = 0; i < 60; ++i) {
      auto y1 = static_cast<std::uint32_t>(rng.below(5));
      auto y2 = y1;
      while (y2 == y1) y2 = static_cast<std::uint32_t>(rng.below(5));
      data.records.push_back({static_cast<std::uint32_t>(rng.below(5)), y1, y2,
                              static_cast<std::uint8_t>(rng.bernoulli(0.5))});
    }
    RewardNllObjective objective(data, 5, 5);
    Grid params = testing::random_grid(rng, 5, 5);
    CHECK(grad_check(objective, params) < 1e-4);
  }
}
