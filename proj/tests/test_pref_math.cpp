#include <doctest.h>

#include <cmath>

#include "hetpref/pref_math.hpp"
#include "test_helpers.hpp"

using namespace hetpref;
using hetpref::testing::random_table;
using hetpref::testing::single_prompt_table;

namespace {

SamplingDistribution dist_from(const std::vector<double>& row) {
  SamplingDistribution d;
  d.probs = Grid(1, row.size());
  std::copy(row.begin(), row.end(), d.probs.row(0).begin());
  return d;
}

}  // namespace

TEST_CASE("preference probabilities") {
  LinkFunction link;

  SUBCASE("zero reward gap is a coin flip") {
    RewardTable r = single_prompt_table({{1.3, 1.3}, {-0.2, -0.2}});
    UserPopulation pop = UserPopulation::uniform(2);
    CHECK(pref_prob_marginal(r, pop, link, 0, 0, 1) == doctest::Approx(0.5).epsilon(1e-15));
  }

  SUBCASE("tyranny mixture value") {
    RewardTable r = single_prompt_table({{0.5, 1.0}, {0.5, -10.0}});
    UserPopulation pop{{"A", "B"}, {0.9, 0.1}};
    // Pr(y1 preferred over y2) = 0.9*sigma(-0.5) + 0.1*sigma(10.5).
    CHECK(pref_prob_marginal(r, pop, link, 0, 1, 0) ==
          doctest::Approx(0.4397838483492194).epsilon(1e-12));
  }

  SUBCASE("two types, equal weights") {
    RewardTable r = single_prompt_table({{0.0, 1.0}, {0.0, -0.5}});
    UserPopulation pop = UserPopulation::uniform(2);
    CHECK(pref_prob_marginal(r, pop, link, 0, 0, 1) ==
          doctest::Approx(0.5542996237140752).epsilon(1e-12));
    CHECK(pref_prob_type(r, link, 0, 0, 1, 0) ==
          doctest::Approx(1.0 / (1.0 + std::exp(-1.0))).epsilon(1e-14));
  }

  SUBCASE("complement identity over random tables") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      RewardTable r = random_table(rng, 2, 4, 3);
      UserPopulation pop = UserPopulation::uniform(3);
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
          double fwd = pref_prob_marginal(r, pop, link, 1, a, b);
          double bwd = pref_prob_marginal(r, pop, link, 1, b, a);
          CHECK(fwd + bwd == doctest::Approx(1.0).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("nbc worked scenarios") {
  LinkFunction link;

  SUBCASE("tyranny scores") {
    RewardTable r = single_prompt_table({{0.5, 1.0}, {0.5, -10.0}});
    UserPopulation pop{{"A", "B"}, {0.9, 0.1}};
    auto nbc = nbc_scores(r, pop, link, dist_from({0.5, 0.5}), 0);
    CHECK(nbc[0] == doctest::Approx(0.47).epsilon(0.011));
    CHECK(nbc[1] == doctest::Approx(0.53).epsilon(0.011));
    CHECK(nbc[0] == doctest::Approx(0.4698919241746097).epsilon(1e-12));
    CHECK(nbc[1] == doctest::Approx(0.5301080758253903).epsilon(1e-12));
  }

  SUBCASE("irrelevant alternative scores") {
    RewardTable r = single_prompt_table({{6.0, 1.0, 2.0}, {3.0, 9.0, 2.0}});
    UserPopulation pop = UserPopulation::uniform(2);
    auto nbc = nbc_scores(r, pop, link, dist_from({1.0 / 3, 1.0 / 3, 1.0 / 3}), 0);
    CHECK(nbc[0] == doctest::Approx(0.6181420234833772).epsilon(1e-12));
    CHECK(nbc[1] == doctest::Approx(0.5453750996572074).epsilon(1e-12));
    CHECK(nbc[0] > nbc[1]);
  }

  SUBCASE("sampling sensitivity sign change") {
    RewardTable r = single_prompt_table({{6.0, 1.0, 4.0}, {3.0, 9.0, 4.0}});
    UserPopulation pop = UserPopulation::uniform(2);
    auto at = [&](double d) {
      auto nbc = nbc_scores(r, pop, link, dist_from({(1 - d) / 2, (1 - d) / 2, d}), 0);
      return nbc[0] - nbc[1];
    };
    CHECK(at(0.02) < 0.0);
    CHECK(at(0.04) > 0.0);
  }

  SUBCASE("weighted self-term bookkeeping") {
    Rng rng(23);
    UserPopulation pop = UserPopulation::uniform(3);
    for (int trial = 0; trial < 25; ++trial) {
      RewardTable r = random_table(rng, 1, 5, 3);
      std::vector<double> d(5);
      double total = 0.0;
      for (double& v : d) {
        v = rng.uniform() + 0.01;
        total += v;
      }
      for (double& v : d) v /= total;
      auto nbc = nbc_scores(r, pop, link, dist_from(d), 0);
      double acc = 0.0;
      for (std::size_t y = 0; y < 5; ++y) acc += d[y] * nbc[y];
      CHECK(acc == doctest::Approx(0.5).epsilon(1e-10));
    }
  }
}

TEST_CASE("per-type reward shifts are unobservable") {
  Rng rng(5);
  LinkFunction link;
  UserPopulation pop = UserPopulation::uniform(3);
  RewardTable r = random_table(rng, 2, 4, 3);
  RewardTable shifted = r;
  std::vector<double> offsets{1.7, -23.0, 0.004};
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      for (std::size_t u = 0; u < 3; ++u) shifted.at(x, y, u) += offsets[u];
    }
  }
  SamplingDistribution d = SamplingDistribution::uniform(2, 4);
  Policy ref = Policy::uniform(2, 4);
  for (std::size_t x = 0; x < 2; ++x) {
    auto n1 = nbc_scores(r, pop, link, d, x);
    auto n2 = nbc_scores(shifted, pop, link, d, x);
    for (std::size_t y = 0; y < 4; ++y) CHECK(n1[y] == doctest::Approx(n2[y]).epsilon(1e-10));
    CHECK(pref_prob_marginal(r, pop, link, x, 0, 1) ==
          doctest::Approx(pref_prob_marginal(shifted, pop, link, x, 0, 1)).epsilon(1e-10));
  }
  Policy p1 = optimal_policy(r, pop, ref, 0.7);
  Policy p2 = optimal_policy(shifted, pop, ref, 0.7);
  for (std::size_t x = 0; x < 2; ++x) {
    auto a = p1.probs(x);
    auto b = p2.probs(x);
    for (std::size_t y = 0; y < 4; ++y) CHECK(a[y] == doctest::Approx(b[y]).epsilon(1e-10));
  }
}

TEST_CASE("optimal policy") {
  SUBCASE("softmax of scaled average rewards") {
    RewardTable r(1, 2, 1);
    r.at(0, 0, 0) = 0.0;
    r.at(0, 1, 0) = std::log(2.0);
    UserPopulation pop = UserPopulation::uniform(1);
    Policy pi = optimal_policy(r, pop, Policy::uniform(1, 2), 1.0);
    auto p = pi.probs(0);
    CHECK(p[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  }

  SUBCASE("constant reward returns the reference") {
    Rng rng(3);
    Grid ref_logits = testing::random_grid(rng, 2, 3);
    Policy ref(ref_logits);
    RewardTable r(2, 3, 2);
    for (double& v : r.raw().flat()) v = 1.23;
    Policy pi = optimal_policy(r, UserPopulation::uniform(2), ref, 0.5);
    for (std::size_t x = 0; x < 2; ++x) {
      auto a = pi.probs(x);
      auto b = ref.probs(x);
      for (std::size_t y = 0; y < 3; ++y) CHECK(a[y] == doctest::Approx(b[y]).epsilon(1e-12));
    }
  }

  SUBCASE("huge rewards stay finite under the max shift") {
    RewardTable r(1, 3, 1);
    r.at(0, 0, 0) = 5000.0;
    r.at(0, 1, 0) = 4999.0;
    r.at(0, 2, 0) = 0.0;
    Policy pi = optimal_policy(r, UserPopulation::uniform(1), Policy::uniform(1, 3), 1.0);
    auto p = pi.probs(0);
    CHECK(std::isfinite(p[0]));
    CHECK(p[0] + p[1] + p[2] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(p[0] > p[1]);
  }
}

TEST_CASE("induced reward differences") {
  SUBCASE("identity policy gives zero") {
    Rng rng(9);
    Policy ref(testing::random_grid(rng, 1, 4));
    CHECK(induced_reward_diff(ref, ref, 2.0, 0, 1, 3) == doctest::Approx(0.0).epsilon(1e-15));
  }

  SUBCASE("direct substitution") {
    Grid logits(1, 2);
    logits(0, 1) = 1.0;  // pi(y2)/pi_ref(y2) = e * pi(y1)/pi_ref(y1)
    Policy pi(logits);
    Policy ref = Policy::uniform(1, 2);
    CHECK(induced_reward_diff(pi, ref, 2.0, 0, 0, 1) == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("round trip through the optimal policy recovers reward gaps") {
    Rng rng(17);
    UserPopulation pop = UserPopulation::uniform(3);
    for (int trial = 0; trial < 20; ++trial) {
      RewardTable r = random_table(rng, 2, 5, 3);
      double beta = 0.5 + 2.0 * rng.uniform();
      Policy ref = Policy::uniform(2, 5);
      Policy pi = optimal_policy(r, pop, ref, beta);
      Grid avg = r.average(pop);
      for (std::size_t x = 0; x < 2; ++x) {
        double h = induced_reward_diff(pi, ref, beta, x, 0, 3);
        CHECK(h == doctest::Approx(avg(x, 3) - avg(x, 0)).epsilon(1e-10));
        double h12 = induced_reward_diff(pi, ref, beta, x, 1, 2);
        double h21 = induced_reward_diff(pi, ref, beta, x, 2, 1);
        CHECK(h12 == doctest::Approx(-h21).epsilon(1e-12));
      }
    }
  }
}
