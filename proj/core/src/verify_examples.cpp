#include "hetpref/verify_examples.hpp"

#include <cmath>
#include <cstdio>

#include "hetpref/pairwise.hpp"
#include "hetpref/pref_math.hpp"
#include "hetpref/ranking.hpp"

namespace hetpref {

namespace {

// One prompt, one reward vector per type.
RewardTable make_table(const std::vector<std::vector<double>>& per_type_rewards) {
  std::size_t num_types = per_type_rewards.size();
  std::size_t num_responses = per_type_rewards[0].size();
  RewardTable r(1, num_responses, num_types);
  for (std::size_t u = 0; u < num_types; ++u) {
    for (std::size_t y = 0; y < num_responses; ++y) {
      r.at(0, y, u) = per_type_rewards[u][y];
    }
  }
  return r;
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

std::vector<double> nbc_with(const RewardTable& r, const UserPopulation& pop,
                             const LinkFunction& link, std::span<const double> dist) {
  SamplingDistribution d;
  d.probs = Grid(1, dist.size());
  std::copy(dist.begin(), dist.end(), d.probs.row(0).begin());
  return nbc_scores(r, pop, link, d, 0);
}

CheckResult check_tyranny() {
  RewardTable r = make_table({{0.5, 1.0}, {0.5, -10.0}});
  UserPopulation pop{{"A", "B"}, {0.9, 0.1}};
  LinkFunction link;
  std::vector<double> uniform{0.5, 0.5};
  auto nbc = nbc_with(r, pop, link, uniform);
  CheckResult out;
  out.name = "tyranny: majority dominates the Borda score";
  out.pass = std::abs(nbc[0] - 0.47) <= 0.005 && std::abs(nbc[1] - 0.53) <= 0.005;
  out.detail = fmt("expected (0.47, 0.53) +-0.005, computed (%.4f, %.4f)", nbc[0], nbc[1]);
  return out;
}

CheckResult check_iia() {
  UserPopulation pop = UserPopulation::uniform(2);
  LinkFunction link;
  RewardTable two = make_table({{6.0, 1.0}, {3.0, 9.0}});
  std::vector<double> d2{0.5, 0.5};
  auto nbc2 = nbc_with(two, pop, link, d2);
  RewardTable three = make_table({{6.0, 1.0, 2.0}, {3.0, 9.0, 2.0}});
  std::vector<double> d3(3, 1.0 / 3.0);
  auto nbc3 = nbc_with(three, pop, link, d3);
  CheckResult out;
  out.name = "irrelevant alternative: adding y3 flips the y1/y2 order";
  bool values_ok = std::abs(nbc3[0] - 0.62) <= 0.005 && std::abs(nbc3[1] - 0.55) <= 0.005;
  bool flip_ok = nbc2[1] > nbc2[0] && nbc3[0] > nbc3[1];
  out.pass = values_ok && flip_ok;
  out.detail = fmt("expected (0.62, 0.55) +-0.005 and an order flip, computed (%.4f, %.4f)",
                   nbc3[0], nbc3[1]);
  return out;
}

CheckResult check_sampling_sensitivity() {
  RewardTable r = make_table({{6.0, 1.0, 4.0}, {3.0, 9.0, 4.0}});
  UserPopulation pop = UserPopulation::uniform(2);
  LinkFunction link;
  auto gap_at = [&](double d) {
    std::vector<double> dist{(1.0 - d) / 2.0, (1.0 - d) / 2.0, d};
    auto nbc = nbc_with(r, pop, link, dist);
    return nbc[0] - nbc[1];
  };
  double lo = gap_at(0.02);
  double hi = gap_at(0.04);
  CheckResult out;
  out.name = "sampling sensitivity: top pair flips between D(y3)=0.02 and 0.04";
  out.pass = lo < 0.0 && hi > 0.0;
  out.detail = fmt("score gaps %.5f at 0.02 (want < 0) and %.5f at 0.04 (want > 0)", lo, hi);
  return out;
}

CheckResult check_temperature() {
  RewardTable r = make_table({{6.0, 1.0, 4.0}, {3.0, 9.0, 4.0}});
  UserPopulation pop = UserPopulation::uniform(2);
  std::vector<double> uniform(3, 1.0 / 3.0);
  auto gap_at = [&](double temp) {
    LinkFunction link{LinkKind::logistic, temp};
    auto nbc = nbc_with(r, pop, link, uniform);
    return nbc[0] - nbc[1];
  };
  double t1 = gap_at(1.0);
  double t2 = gap_at(2.0);
  CheckResult out;
  out.name = "temperature sensitivity: raising it to 2 flips the y1/y2 order";
  out.pass = t1 > 0.0 && t2 < 0.0;
  out.detail = fmt("score gaps %.5f at temp 1 (want > 0) and %.5f at temp 2 (want < 0)", t1, t2);
  return out;
}

CheckResult check_mediocrity() {
  // Options: short, med, long.
  RewardTable r = make_table({{0.0, 1.0, 4.0}, {4.0, 1.0, 0.0}, {0.0, 1.0, 0.0}});
  UserPopulation pop = UserPopulation::uniform(3);
  LinkFunction link;
  std::vector<double> uniform(3, 1.0 / 3.0);
  auto nbc = nbc_with(r, pop, link, uniform);
  Policy pi_star = optimal_policy(r, pop, Policy::uniform(1, 3), 1.0);
  auto probs = pi_star.probs(0);
  CheckResult out;
  out.name = "mediocrity: Borda ranks med first, optimal policy ties short/long first";
  bool nbc_ok = nbc[1] > nbc[0] && nbc[1] > nbc[2] && std::abs(nbc[0] - nbc[2]) < 1e-12;
  bool pi_ok = std::abs(probs[0] - probs[2]) < 1e-12 && probs[0] > probs[1];
  out.pass = nbc_ok && pi_ok;
  out.detail = fmt("NBC med %.4f vs short/long %.4f; ", nbc[1], nbc[0]) +
               fmt("policy short/long %.4f vs med %.4f", probs[0], probs[1]);
  return out;
}

CheckResult check_mixture_cycle() {
  Grid rewards(2, 3);
  rewards(0, 0) = 1.0;
  rewards(0, 1) = 2.0;
  rewards(0, 2) = 3.0;
  rewards(1, 0) = 1.0;
  rewards(1, 1) = 2.0;
  rewards(1, 2) = 4.0;
  std::vector<double> weights{0.5, 0.5};
  LinkFunction link;
  auto mix = cycle_products(PairwiseMatrix::from_group_rewards(rewards, weights, link), 0, 1, 2);

  Grid single(1, 3);
  single(0, 0) = 1.0;
  single(0, 1) = 2.0;
  single(0, 2) = 3.0;
  std::vector<double> one{1.0};
  auto bt = cycle_products(PairwiseMatrix::from_group_rewards(single, one, link), 0, 1, 2);

  CheckResult out;
  out.name = "mixture: cycle products split where any single model keeps them equal";
  bool mixture_ok = std::abs(mix.forward - 0.04785) <= 5e-5 &&
                    std::abs(mix.reverse - 0.04909) <= 5e-5 &&
                    std::abs(mix.forward - mix.reverse) > 1e-3;
  bool single_ok = std::abs(bt.forward - bt.reverse) < 1e-12;
  out.pass = mixture_ok && single_ok;
  out.detail = fmt("mixture products (%.5f, %.5f), ", mix.forward, mix.reverse) +
               fmt("single-model |difference| %.2e (want < 1e-12)",
                   std::abs(bt.forward - bt.reverse), 0.0);
  return out;
}

}  // namespace

std::vector<CheckResult> verify_examples() {
  return {check_tyranny(),     check_iia(),        check_sampling_sensitivity(),
          check_temperature(), check_mediocrity(), check_mixture_cycle()};
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace hetpref
