#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hetpref {

// Descending ordering with tie groups. `order[p]` is the index ranked at
// position p; `group[p]` is its tie-group id (0 = best group). Scores within
// tol of the previous sorted score chain into the same group; exact ties break
// deterministically by index.
struct Ranking {
  std::vector<std::size_t> order;
  std::vector<std::size_t> group;

  std::size_t num_groups() const { return order.empty() ? 0 : group.back() + 1; }
  std::size_t top() const { return order.front(); }

  // Group id of a given item index.
  std::size_t group_of(std::size_t item) const;

  // Same partition into ordered tie groups.
  bool same_grouping(const Ranking& other) const;
};

Ranking rank(std::span<const double> scores, double tol);

// Kendall rank correlation over index pairs where both sequences differ by
// more than tie_tol. `defined` is false when no such pair exists.
struct KendallTau {
  double tau = 0.0;
  std::size_t pairs = 0;
  bool defined = false;
};

KendallTau kendall_tau(std::span<const double> a, std::span<const double> b, double tie_tol);

}  // namespace hetpref
