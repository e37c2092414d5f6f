#include "hetpref/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hetpref {

std::size_t Ranking::group_of(std::size_t item) const {
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (order[p] == item) return group[p];
  }
  throw std::out_of_range("ranking: item not present");
}

bool Ranking::same_grouping(const Ranking& other) const {
  if (order.size() != other.order.size()) return false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (group_of(i) != other.group_of(i)) return false;
  }
  return true;
}

Ranking rank(std::span<const double> scores, double tol) {
  for (double s : scores) {
    if (!std::isfinite(s)) throw std::invalid_argument("rank: non-finite score");
  }
  if (tol < 0.0) throw std::invalid_argument("rank: negative tolerance");
  Ranking r;
  r.order.resize(scores.size());
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });
  r.group.resize(scores.size());
  std::size_t g = 0;
  for (std::size_t p = 0; p < r.order.size(); ++p) {
    if (p > 0 && scores[r.order[p - 1]] - scores[r.order[p]] > tol) ++g;
    r.group[p] = g;
  }
  return r;
}

KendallTau kendall_tau(std::span<const double> a, std::span<const double> b, double tie_tol) {
  if (a.size() != b.size()) throw std::invalid_argument("kendall: length mismatch");
  std::size_t concordant = 0;
  std::size_t discordant = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      double da = a[i] - a[j];
      double db = b[i] - b[j];
      if (std::abs(da) <= tie_tol || std::abs(db) <= tie_tol) continue;
      if (da * db > 0.0) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  KendallTau out;
  out.pairs = concordant + discordant;
  if (out.pairs == 0) {
    out.defined = false;
    out.tau = std::nan("");
    return out;
  }
  out.defined = true;
  out.tau = (static_cast<double>(concordant) - static_cast<double>(discordant)) /
            static_cast<double>(out.pairs);
  return out;
}

}  // namespace hetpref
