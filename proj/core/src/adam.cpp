#include "hetpref/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace hetpref {

void adam_step(Grid& params, AdamState& state, const Grid& grad, const AdamConfig& cfg,
               double lr_override) {
  if (!params.same_shape(grad) || !params.same_shape(state.m) || !params.same_shape(state.v)) {
    throw std::invalid_argument("adam: shape mismatch");
  }
  for (double g : grad.flat()) {
    if (!std::isfinite(g)) throw std::runtime_error("adam: non-finite gradient entry");
  }
  double lr = lr_override >= 0.0 ? lr_override : cfg.lr;
  ++state.step;
  double c1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(state.step));
  double c2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(state.step));
  for (std::size_t i = 0; i < params.size(); ++i) {
    double g = grad[i];
    state.m[i] = cfg.beta1 * state.m[i] + (1.0 - cfg.beta1) * g;
    state.v[i] = cfg.beta2 * state.v[i] + (1.0 - cfg.beta2) * g * g;
    double mhat = state.m[i] / c1;
    double vhat = state.v[i] / c2;
    params[i] -= lr * mhat / (std::sqrt(vhat) + cfg.eps);
  }
}

}  // namespace hetpref
