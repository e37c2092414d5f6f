#include "hetpref/survey.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace hetpref {

SurveyQuestion SurveyQuestion::normalized() const {
  SurveyQuestion out;
  out.id = id;
  out.options = options;
  double total_weight = 0.0;
  for (const auto& g : groups) {
    long long total = 0;
    for (long long c : g.counts) total += c;
    if (total == 0) continue;  // empty response groups are discarded
    out.groups.push_back(g);
    total_weight += g.weight;
  }
  if (out.groups.empty()) throw std::invalid_argument("survey: all groups empty");
  if (!(total_weight > 0.0)) throw std::invalid_argument("survey: nonpositive total weight");
  for (auto& g : out.groups) g.weight /= total_weight;
  return out;
}

void SurveyQuestion::validate() const {
  if (options.size() < 2) throw std::invalid_argument("survey: at least two options required");
  if (groups.empty()) throw std::invalid_argument("survey: at least one group required");
  for (const auto& g : groups) {
    if (g.counts.size() != options.size()) {
      throw std::invalid_argument("survey: counts length must match options");
    }
    if (!(g.weight >= 0.0)) throw std::invalid_argument("survey: negative group weight");
    for (long long c : g.counts) {
      if (c < 0) throw std::invalid_argument("survey: negative count");
    }
  }
}

SurveyQuestion parse_survey_question(const std::string& json_line) {
  nlohmann::json j = nlohmann::json::parse(json_line);
  SurveyQuestion q;
  q.id = j.at("id").get<std::string>();
  for (const auto& opt : j.at("options")) q.options.push_back(opt.get<std::string>());
  for (const auto& jg : j.at("groups")) {
    SurveyGroup g;
    g.name = jg.at("name").get<std::string>();
    g.weight = jg.at("weight").get<double>();
    for (const auto& c : jg.at("counts")) g.counts.push_back(c.get<long long>());
    q.groups.push_back(std::move(g));
  }
  q.validate();
  return q;
}

std::vector<SurveyQuestion> read_survey_jsonl(std::istream& is) {
  std::vector<SurveyQuestion> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    out.push_back(parse_survey_question(line));
  }
  return out;
}

LuceShepardResult luce_shepard_rewards(const SurveyQuestion& q, double smoothing) {
  q.validate();
  if (smoothing < 0.0) throw std::invalid_argument("survey: negative smoothing");
  LuceShepardResult out;
  out.rewards = Grid(q.groups.size(), q.num_options());
  out.flagged.assign(q.groups.size() * q.num_options(), 0);
  for (std::size_t u = 0; u < q.groups.size(); ++u) {
    const auto& g = q.groups[u];
    double total = 0.0;
    for (long long c : g.counts) total += static_cast<double>(c) + smoothing;
    if (!(total > 0.0)) throw std::invalid_argument("survey: group has no observations");
    for (std::size_t i = 0; i < q.num_options(); ++i) {
      double smoothed = static_cast<double>(g.counts[i]) + smoothing;
      if (smoothed <= 0.0) {
        out.flagged[u * q.num_options() + i] = 1;
        out.rewards(u, i) = -std::numeric_limits<double>::infinity();
      } else {
        out.rewards(u, i) = std::log(smoothed / total);
      }
    }
  }
  return out;
}

PairwiseMatrix pairwise_matrix(const Grid& rewards, std::span<const double> weights,
                               const LinkFunction& link) {
  for (double r : rewards.flat()) {
    if (!std::isfinite(r)) throw std::invalid_argument("pairwise matrix: non-finite reward");
  }
  return PairwiseMatrix::from_group_rewards(rewards, weights, link);
}

SurveyRankings survey_rankings(const SurveyQuestion& q, std::span<const double> D,
                               double smoothing, double rank_tol) {
  SurveyQuestion question = q.normalized();
  std::size_t n = question.num_options();
  std::vector<double> dist;
  if (D.empty()) {
    dist.assign(n, 1.0 / static_cast<double>(n));
  } else {
    if (D.size() != n) throw std::invalid_argument("survey rankings: D size mismatch");
    dist.assign(D.begin(), D.end());
  }

  LuceShepardResult ls = luce_shepard_rewards(question, smoothing);
  std::vector<double> weights;
  for (const auto& g : question.groups) weights.push_back(g.weight);
  LinkFunction link;
  PairwiseMatrix p = pairwise_matrix(ls.rewards, weights, link);

  SurveyRankings out;
  out.nbc_scores = p.nbc(dist);
  out.avg_reward_scores.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t u = 0; u < weights.size(); ++u) {
      out.avg_reward_scores[i] += weights[u] * ls.rewards(u, i);
    }
  }
  out.nbc_ranking = rank(out.nbc_scores, rank_tol);
  out.avg_reward_ranking = rank(out.avg_reward_scores, rank_tol);
  return out;
}

}  // namespace hetpref
