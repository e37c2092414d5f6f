#pragma once

#include "hetpref/grid.hpp"

namespace hetpref {

struct AdamConfig {
  double lr = 1e-2;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  std::size_t step = 0;
  Grid m;
  Grid v;

  static AdamState init(std::size_t rows, std::size_t cols) {
    return {0, Grid(rows, cols), Grid(rows, cols)};
  }
};

// Bias-corrected Adam update, in place. lr_override < 0 uses cfg.lr.
// Throws on non-finite gradient entries.
void adam_step(Grid& params, AdamState& state, const Grid& grad, const AdamConfig& cfg,
               double lr_override = -1.0);

}  // namespace hetpref
