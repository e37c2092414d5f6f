#include "hetpref/sensitivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "hetpref/lp.hpp"

namespace hetpref {

TvFlip min_tv_flip(const PairwiseMatrix& p, std::size_t i, std::size_t j, double eps,
                   double delta) {
  std::size_t n = p.size();
  if (i >= n || j >= n || i == j) throw std::invalid_argument("min_tv_flip: bad option pair");
  std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
  auto scores = p.nbc(uniform);
  if (!(scores[i] > scores[j])) {
    throw std::invalid_argument("min_tv_flip: option i must outrank j under uniform");
  }

  // Variables q_0..q_{n-1}, s_0..s_{n-1}; minimize (1/2) sum s subject to
  //   q_k - s_k <= 1/n,  q_k + s_k >= 1/n   (s bounds |q - uniform|)
  //   (P_i - P_j) q <= -delta               (j beats i with margin delta)
  //   sum q = 1, q >= eps, s >= 0.
  LPProblem lp;
  lp.objective.assign(2 * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) lp.objective[n + k] = 0.5;
  lp.lower_bounds.assign(2 * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) lp.lower_bounds[k] = eps;

  double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> row(2 * n, 0.0);
    row[k] = 1.0;
    row[n + k] = -1.0;
    lp.rows.push_back(row);
    lp.senses.push_back(RowSense::le);
    lp.rhs.push_back(inv_n);

    row.assign(2 * n, 0.0);
    row[k] = 1.0;
    row[n + k] = 1.0;
    lp.rows.push_back(row);
    lp.senses.push_back(RowSense::ge);
    lp.rhs.push_back(inv_n);
  }
  {
    std::vector<double> row(2 * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) row[k] = p.at(i, k) - p.at(j, k);
    lp.rows.push_back(row);
    lp.senses.push_back(RowSense::le);
    lp.rhs.push_back(-delta);
  }
  {
    std::vector<double> row(2 * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) row[k] = 1.0;
    lp.rows.push_back(row);
    lp.senses.push_back(RowSense::eq);
    lp.rhs.push_back(1.0);
  }

  LPSolution sol = simplex_solve(lp);
  TvFlip out;
  if (sol.status != LPStatus::optimal) return out;
  out.feasible = true;
  out.tv = sol.objective;
  out.q.assign(sol.x.begin(), sol.x.begin() + static_cast<long>(n));
  return out;
}

SensitivityScanResult sensitivity_scan(std::span<const SurveyQuestion> questions,
                                       std::span<const double> D0, double eps, double delta,
                                       double smoothing) {
  SensitivityScanResult out;
  LinkFunction link;
  for (const SurveyQuestion& raw : questions) {
    QuestionSensitivity qs;
    qs.id = raw.id;
    if (raw.num_options() < 3) {
      out.per_question.push_back(qs);
      continue;
    }
    qs.analyzed = true;
    ++out.num_analyzed;

    SurveyQuestion q = raw.normalized();
    std::size_t n = q.num_options();
    std::vector<double> dist;
    if (D0.empty()) {
      dist.assign(n, 1.0 / static_cast<double>(n));
    } else {
      if (D0.size() != n) throw std::invalid_argument("sensitivity scan: D0 size mismatch");
      dist.assign(D0.begin(), D0.end());
    }

    LuceShepardResult ls = luce_shepard_rewards(q, smoothing);
    std::vector<double> weights;
    for (const auto& g : q.groups) weights.push_back(g.weight);
    PairwiseMatrix p = pairwise_matrix(ls.rewards, weights, link);
    auto scores = p.nbc(dist);
    std::size_t top = rank(scores, 0.0).top();

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || !(scores[a] > scores[b])) continue;
        TvFlip flip = min_tv_flip(p, a, b, eps, delta);
        if (!flip.feasible) continue;
        if (!qs.flippable || flip.tv < qs.min_tv) {
          qs.flippable = true;
          qs.min_tv = flip.tv;
          qs.from = a;
          qs.to = b;
        }
        if (a == top && (!qs.top_flippable || flip.tv < qs.top_min_tv)) {
          qs.top_flippable = true;
          qs.top_min_tv = flip.tv;
        }
      }
    }
    if (qs.flippable) ++out.num_flippable;
    out.per_question.push_back(qs);
  }

  std::vector<double> tvs;
  for (const auto& qs : out.per_question) {
    if (qs.flippable) tvs.push_back(qs.min_tv);
  }
  std::sort(tvs.begin(), tvs.end());
  for (std::size_t k = 0; k < tvs.size(); ++k) {
    out.cdf.emplace_back(tvs[k],
                         static_cast<double>(k + 1) / static_cast<double>(tvs.size()));
  }
  return out;
}

}  // namespace hetpref
