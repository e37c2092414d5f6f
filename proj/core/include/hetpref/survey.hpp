#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hetpref/grid.hpp"
#include "hetpref/link.hpp"
#include "hetpref/pairwise.hpp"
#include "hetpref/ranking.hpp"

namespace hetpref {

struct SurveyGroup {
  std::string name;
  double weight = 0.0;
  std::vector<long long> counts;
};

// One multiple-choice question with per-group option counts. Groups play the
// role of user types; their weights are population shares.
struct SurveyQuestion {
  std::string id;
  std::vector<std::string> options;
  std::vector<SurveyGroup> groups;

  std::size_t num_options() const { return options.size(); }

  // Drops groups with zero total count and renormalizes weights to sum to 1.
  SurveyQuestion normalized() const;
  void validate() const;
};

// One question per line:
// {"id":str,"options":[str],"groups":[{"name":str,"weight":float,"counts":[int]}]}
std::vector<SurveyQuestion> read_survey_jsonl(std::istream& is);
SurveyQuestion parse_survey_question(const std::string& json_line);

// Log choice probabilities per (group, option): the softmax-model inverse of
// observed choice frequencies, with additive smoothing on the counts.
// Options whose smoothed count is zero are flagged (reward -inf).
struct LuceShepardResult {
  Grid rewards;  // one row per group, one column per option
  std::vector<std::uint8_t> flagged;
};

LuceShepardResult luce_shepard_rewards(const SurveyQuestion& q, double smoothing = 0.5);

// Mixture win probabilities from per-group rewards.
PairwiseMatrix pairwise_matrix(const Grid& rewards, std::span<const double> weights,
                               const LinkFunction& link);

struct SurveyRankings {
  std::vector<double> nbc_scores;
  std::vector<double> avg_reward_scores;
  Ranking nbc_ranking;
  Ranking avg_reward_ranking;
};

// Borda scores under D (self term included) and group-weighted average
// rewards under the log-probability gauge. Empty D means uniform.
SurveyRankings survey_rankings(const SurveyQuestion& q, std::span<const double> D = {},
                               double smoothing = 0.5, double rank_tol = 1e-9);

}  // namespace hetpref
