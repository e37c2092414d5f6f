#pragma once

#include <span>
#include <string>
#include <vector>

#include "hetpref/pairwise.hpp"
#include "hetpref/survey.hpp"

namespace hetpref {

struct TvFlip {
  bool feasible = false;
  double tv = 0.0;
  std::vector<double> q;
};

// Smallest total-variation move of the alternative distribution (away from
// uniform) that makes option j's Borda score exceed option i's by at least
// delta, keeping support of at least eps everywhere. Requires that i beats j
// under the uniform distribution.
TvFlip min_tv_flip(const PairwiseMatrix& p, std::size_t i, std::size_t j, double eps = 1e-5,
                   double delta = 1e-5);

struct QuestionSensitivity {
  std::string id;
  bool analyzed = false;  // questions with fewer than three options are skipped
  bool flippable = false;
  double min_tv = 0.0;
  std::size_t from = 0;  // pair attaining the minimum (from outranks to at uniform)
  std::size_t to = 0;
  bool top_flippable = false;  // some flip demotes the uniform-NBC top choice
  double top_min_tv = 0.0;
};

struct SensitivityScanResult {
  std::vector<QuestionSensitivity> per_question;
  // CDF over flippable questions: (tv, cumulative fraction), tv ascending.
  std::vector<std::pair<double, double>> cdf;
  std::size_t num_analyzed = 0;
  std::size_t num_flippable = 0;
};

// Runs min_tv_flip over every strictly ordered Borda pair of each question
// and aggregates the per-question minima into a CDF.
SensitivityScanResult sensitivity_scan(std::span<const SurveyQuestion> questions,
                                       std::span<const double> D0 = {}, double eps = 1e-5,
                                       double delta = 1e-5, double smoothing = 0.5);

}  // namespace hetpref
