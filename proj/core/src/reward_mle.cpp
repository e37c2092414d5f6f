#include "hetpref/reward_mle.hpp"

#include <cmath>
#include <stdexcept>

#include "hetpref/adam.hpp"

namespace hetpref {

namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

RewardNllObjective::RewardNllObjective(const AnonymousDataset& data, std::size_t num_prompts,
                                       std::size_t num_responses, double eps_log)
    : data_(&data), rows_(num_prompts), cols_(num_responses), eps_log_(eps_log) {
  if (data.size() == 0) throw std::invalid_argument("reward mle: empty dataset");
  for (const auto& rec : data.records) {
    if (rec.x >= rows_ || rec.y1 >= cols_ || rec.y2 >= cols_) {
      throw std::out_of_range("reward mle: record outside declared dimensions");
    }
  }
}

LossValue RewardNllObjective::evaluate(const Grid& rewards,
                                       std::span<const std::size_t> batch) const {
  if (rewards.rows() != rows_ || rewards.cols() != cols_) {
    throw std::invalid_argument("reward mle: parameter shape mismatch");
  }
  LossValue out;
  out.grad = Grid(rows_, cols_);
  double loss_acc = 0.0;
  double weight_acc = 0.0;
  for (std::size_t idx : batch) {
    const AnonymousSample& rec = data_->records[idx];
    double w = data_->weight(idx);
    std::uint32_t winner = rec.o ? rec.y2 : rec.y1;
    std::uint32_t loser = rec.o ? rec.y1 : rec.y2;
    double p = sigmoid(rewards(rec.x, winner) - rewards(rec.x, loser));
    double dloss = 0.0;
    if (p < eps_log_) {
      loss_acc += w * -std::log(eps_log_);
      ++out.log_clamps;
    } else {
      loss_acc += w * -std::log(p);
      dloss = -(1.0 - p);
    }
    out.grad(rec.x, winner) += w * dloss;
    out.grad(rec.x, loser) -= w * dloss;
    weight_acc += w;
  }
  if (weight_acc > 0.0) {
    out.loss = loss_acc / weight_acc;
    for (double& g : out.grad.flat()) g /= weight_acc;
  }
  return out;
}

PerTypeRewardFit per_type_reward_mle(std::span<const AnonymousDataset> per_type_data,
                                     const UserPopulation& pop, std::size_t num_prompts,
                                     std::size_t num_responses, const RewardMleConfig& cfg) {
  pop.validate();
  if (per_type_data.size() != pop.size()) {
    throw std::invalid_argument("reward mle: one dataset per type required");
  }
  PerTypeRewardFit fit;
  fit.rewards = RewardTable(num_prompts, num_responses, pop.size());
  fit.identified.assign(num_prompts * num_responses * pop.size(), 0);
  auto mark = [&](std::uint32_t x, std::uint32_t y, std::size_t u) {
    fit.identified[(x * num_responses + y) * pop.size() + u] = 1;
  };

  for (std::size_t u = 0; u < pop.size(); ++u) {
    const AnonymousDataset& data = per_type_data[u];
    RewardNllObjective objective(data, num_prompts, num_responses, cfg.eps_log);
    for (const auto& rec : data.records) {
      mark(rec.x, rec.y1, u);
      mark(rec.x, rec.y2, u);
    }
    Grid params(num_prompts, num_responses);
    AdamState state = AdamState::init(num_prompts, num_responses);
    AdamConfig adam;
    adam.lr = cfg.lr;
    for (std::size_t step = 0; step < cfg.steps; ++step) {
      LossValue lv = objective.evaluate_all(params);
      adam_step(params, state, lv.grad, adam);
    }
    // Gauge: zero mean over identified entries; unidentified entries stay 0.
    for (std::size_t x = 0; x < num_prompts; ++x) {
      double sum = 0.0;
      std::size_t count = 0;
      for (std::size_t y = 0; y < num_responses; ++y) {
        if (fit.identified[(x * num_responses + y) * pop.size() + u]) {
          sum += params(x, y);
          ++count;
        }
      }
      double mean = count ? sum / static_cast<double>(count) : 0.0;
      for (std::size_t y = 0; y < num_responses; ++y) {
        bool seen = fit.identified[(x * num_responses + y) * pop.size() + u];
        fit.rewards.at(x, y, u) = seen ? params(x, y) - mean : 0.0;
      }
    }
  }

  fit.average = fit.rewards.average(pop);
  for (std::size_t x = 0; x < num_prompts; ++x) {
    double mean = 0.0;
    for (double v : fit.average.row(x)) mean += v;
    mean /= static_cast<double>(num_responses);
    for (double& v : fit.average.row(x)) v -= mean;
  }
  return fit;
}

}  // namespace hetpref
