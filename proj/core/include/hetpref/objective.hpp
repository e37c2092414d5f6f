#pragma once

#include <span>
#include <vector>

#include "hetpref/grid.hpp"

namespace hetpref {

// Loss plus gradient with respect to the parameter grid, averaged over the
// evaluated records (weighted when the dataset carries weights).
struct LossValue {
  double loss = 0.0;
  Grid grad;
  std::size_t variance_clamps = 0;  // variance estimates capped at the safety bound
  std::size_t log_clamps = 0;       // stable-log floor hits
};

// A differentiable training objective over a grid of parameters (policy
// logits or reward entries). Evaluation over a batch of record indices is a
// pure function of its inputs.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::size_t num_records() const = 0;
  virtual std::size_t param_rows() const = 0;
  virtual std::size_t param_cols() const = 0;
  virtual LossValue evaluate(const Grid& params, std::span<const std::size_t> batch) const = 0;

  LossValue evaluate_all(const Grid& params) const {
    std::vector<std::size_t> all(num_records());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return evaluate(params, all);
  }
};

}  // namespace hetpref
