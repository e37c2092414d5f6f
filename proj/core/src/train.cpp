#include "hetpref/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "hetpref/format.hpp"
#include "hetpref/rng.hpp"

namespace hetpref {

TrainResult train(const Objective& objective, Grid init, const TrainConfig& cfg) {
  if (init.rows() != objective.param_rows() || init.cols() != objective.param_cols()) {
    throw std::invalid_argument("train: init parameter shape mismatch");
  }
  TrainResult result;
  result.params = std::move(init);
  AdamState state = AdamState::init(result.params.rows(), result.params.cols());
  Rng rng(cfg.seed);

  std::size_t n = objective.num_records();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::size_t batch = cfg.batch_size == 0 ? n : std::min(cfg.batch_size, n);
  std::size_t steps_per_epoch = (n + batch - 1) / batch;
  std::size_t total_steps = std::max<std::size_t>(1, cfg.epochs * steps_per_epoch);

  std::size_t global_step = 0;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    if (cfg.batch_size != 0) rng.shuffle(order);
    double epoch_loss = 0.0;
    std::size_t epoch_batches = 0;
    for (std::size_t start = 0; start < n; start += batch) {
      std::size_t end = std::min(n, start + batch);
      std::span<const std::size_t> indices(order.data() + start, end - start);
      LossValue lv = objective.evaluate(result.params, indices);
      if (!std::isfinite(lv.loss)) {
        throw std::runtime_error("train: non-finite loss at step " + std::to_string(global_step));
      }
      result.variance_clamps += lv.variance_clamps;
      result.log_clamps += lv.log_clamps;
      double lr = cfg.adam.lr;
      if (cfg.schedule == LrSchedule::linear_decay) {
        lr *= 1.0 - static_cast<double>(global_step) / static_cast<double>(total_steps);
      }
      adam_step(result.params, state, lv.grad, cfg.adam, lr);
      epoch_loss += lv.loss;
      ++epoch_batches;
      ++global_step;
    }
    EpochStat stat;
    stat.epoch = epoch;
    stat.loss = epoch_batches ? epoch_loss / static_cast<double>(epoch_batches) : 0.0;
    if (cfg.eval_fn && cfg.eval_every != 0 &&
        (epoch % cfg.eval_every == 0 || epoch + 1 == cfg.epochs)) {
      stat.metrics = cfg.eval_fn(result.params);
    }
    result.trace.push_back(std::move(stat));
  }
  return result;
}

double grad_check(const Objective& objective, const Grid& params, double step) {
  LossValue analytic = objective.evaluate_all(params);
  Grid probe = params;
  double worst = 0.0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    double saved = probe[i];
    probe[i] = saved + step;
    double up = objective.evaluate_all(probe).loss;
    probe[i] = saved - step;
    double down = objective.evaluate_all(probe).loss;
    probe[i] = saved;
    double numeric = (up - down) / (2.0 * step);
    double denom = std::max({std::abs(analytic.grad[i]), std::abs(numeric), 1e-8});
    worst = std::max(worst, std::abs(analytic.grad[i] - numeric) / denom);
  }
  return worst;
}

void write_trace_csv(std::ostream& os, const TrainResult& result,
                     std::span<const std::string> eval_names) {
  os << "epoch,loss";
  for (const auto& name : eval_names) os << "," << name;
  os << "\n";
  for (const auto& stat : result.trace) {
    os << stat.epoch << "," << format_full(stat.loss);
    for (std::size_t k = 0; k < eval_names.size(); ++k) {
      os << ",";
      if (k < stat.metrics.size()) os << format_full(stat.metrics[k]);
    }
    os << "\n";
  }
}

}  // namespace hetpref
