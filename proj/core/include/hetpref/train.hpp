#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "hetpref/adam.hpp"
#include "hetpref/objective.hpp"

namespace hetpref {

enum class LrSchedule { constant, linear_decay };

struct TrainConfig {
  std::size_t epochs = 20;
  std::size_t batch_size = 1024;  // 0 runs one full-batch step per epoch
  AdamConfig adam;
  LrSchedule schedule = LrSchedule::constant;
  std::uint64_t seed = 0;
  // Extra trace columns, computed every eval_every epochs (0 disables).
  std::size_t eval_every = 0;
  std::function<std::vector<double>(const Grid&)> eval_fn;
  std::vector<std::string> eval_names;
};

struct EpochStat {
  std::size_t epoch = 0;
  double loss = 0.0;
  std::vector<double> metrics;
};

struct TrainResult {
  Grid params;
  std::vector<EpochStat> trace;
  std::size_t variance_clamps = 0;
  std::size_t log_clamps = 0;
};

// Minibatch Adam with seeded shuffling. The per-epoch loss is the mean of the
// minibatch losses seen during that epoch. Throws on non-finite loss with the
// offending step in the message.
TrainResult train(const Objective& objective, Grid init, const TrainConfig& cfg);

// Central finite differences against the analytic gradient over the full
// dataset. Returns the max relative error with denominator
// max(|analytic|, |numeric|, 1e-8).
double grad_check(const Objective& objective, const Grid& params, double step = 1e-5);

// Loss-trace CSV: epoch,loss[,eval columns].
void write_trace_csv(std::ostream& os, const TrainResult& result,
                     std::span<const std::string> eval_names = {});

}  // namespace hetpref
