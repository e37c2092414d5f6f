#pragma once

#include <cstdint>
#include <unordered_map>

#include "hetpref/datasets.hpp"

namespace hetpref {

// Empirical second moments of same-annotator label pairs for one ordered
// triple. j1 estimates E_u[sigma(dr)^2], j2 estimates E_u[sigma(dr)(1-sigma(dr))].
struct JointCell {
  std::uint64_t n11 = 0;
  std::uint64_t n10 = 0;
  std::uint64_t n01 = 0;
  std::uint64_t n00 = 0;

  std::uint64_t total() const { return n11 + n10 + n01 + n00; }
  double j1() const;
  double j2() const;
};

// Per-triple second-moment estimates keyed by ordered (x, y1, y2). Each paired
// record is folded into both orientations (the mirrored triple swaps the roles
// of n11 and n00), which is exact by label complementarity.
class JointLikelihoodTable {
 public:
  explicit JointLikelihoodTable(std::uint64_t n_min = 10) : n_min_(n_min) {}

  void add(const PairedSample& rec);
  const JointCell* find(std::uint32_t x, std::uint32_t y1, std::uint32_t y2) const;
  bool low_confidence(const JointCell& cell) const { return cell.total() < n_min_; }

  std::size_t num_triples() const { return cells_.size(); }
  std::uint64_t n_min() const { return n_min_; }

 private:
  static std::uint64_t key(std::uint32_t x, std::uint32_t y1, std::uint32_t y2) {
    return (static_cast<std::uint64_t>(x) << 40) | (static_cast<std::uint64_t>(y1) << 20) |
           static_cast<std::uint64_t>(y2);
  }

  std::uint64_t n_min_;
  std::unordered_map<std::uint64_t, JointCell> cells_;
};

// Counts label pairs per triple. Paired records whose two halves disagree on
// the triple are rejected (the estimator needs same-triple pairs).
JointLikelihoodTable estimate_joint(const PairedDataset& data, std::uint64_t n_min = 10);

}  // namespace hetpref
