#include "hetpref/losses.hpp"

#include <cmath>
#include <stdexcept>

namespace hetpref {

namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

struct PairGrad {
  double loss = 0.0;
  double dloss_dh = 0.0;
  bool log_clamped = false;
};

// -log(max(p_hat, eps)) for a likelihood p_hat with derivative dp_dh.
PairGrad neg_log_likelihood(double p_hat, double dp_dh, double eps) {
  PairGrad out;
  if (p_hat < eps) {
    out.loss = -std::log(eps);
    out.dloss_dh = 0.0;
    out.log_clamped = true;
  } else {
    out.loss = -std::log(p_hat);
    out.dloss_dh = -dp_dh / p_hat;
  }
  return out;
}

}  // namespace

void LossConfig::validate() const {
  if (!(beta > 0.0)) throw std::invalid_argument("loss config: beta must be positive");
  if (!(alpha >= 0.0)) throw std::invalid_argument("loss config: alpha must be nonnegative");
  if (!(eps_log > 0.0 && eps_log < 0.5)) {
    throw std::invalid_argument("loss config: eps_log must lie in (0, 0.5)");
  }
}

double variance_from_moments(double j1, double j2, double h) {
  double p = sigmoid(h);
  double sp = p * (1.0 - p);
  double sum = j1 + j2;
  return (j1 - sum * sum) / (sp * sp);
}

DpoObjective::DpoObjective(const Policy& pi_ref, const AnonymousDataset& data, LossConfig cfg)
    : data_(&data), ref_log_(pi_ref.log_prob_table()), cfg_(cfg) {
  cfg_.validate();
  if (data.size() == 0) throw std::invalid_argument("dpo: empty dataset");
}

CorrectedDpoObjective::CorrectedDpoObjective(const Policy& pi_ref, const AnonymousDataset& data,
                                             const JointLikelihoodTable& joint, LossConfig cfg)
    : DpoObjective(pi_ref, data, cfg) {
  joint_ = &joint;
}

LossValue DpoObjective::evaluate(const Grid& logits, std::span<const std::size_t> batch) const {
  if (!logits.same_shape(ref_log_)) throw std::invalid_argument("dpo: logits shape mismatch");
  LossValue out;
  out.grad = Grid(logits.rows(), logits.cols());
  double loss_acc = 0.0;
  double weight_acc = 0.0;
  for (std::size_t idx : batch) {
    const AnonymousSample& rec = data_->records[idx];
    double w = data_->weight(idx);
    std::uint32_t winner = rec.o ? rec.y2 : rec.y1;
    std::uint32_t loser = rec.o ? rec.y1 : rec.y2;
    double h = cfg_.beta * ((logits(rec.x, winner) - ref_log_(rec.x, winner)) -
                            (logits(rec.x, loser) - ref_log_(rec.x, loser)));
    double p = sigmoid(h);
    double sp = p * (1.0 - p);
    double correction = 0.0;
    double dcorrection = 0.0;
    if (joint_ != nullptr) {
      if (const JointCell* cell = joint_->find(rec.x, loser, winner)) {
        double sum = cell->j1() + cell->j2();
        double numerator = cell->j1() - sum * sum;
        double v = numerator / (sp * sp);
        bool clamped = !std::isfinite(v) || std::abs(v) > kMaxVariance;
        if (clamped) {
          v = std::copysign(kMaxVariance, numerator);
          ++out.variance_clamps;
        }
        double spp = sp * (1.0 - 2.0 * p);
        double sppp = sp * ((1.0 - 2.0 * p) * (1.0 - 2.0 * p) - 2.0 * sp);
        correction = 0.5 * cfg_.alpha * spp * v;
        if (cfg_.detach_variance || clamped) {
          dcorrection = 0.5 * cfg_.alpha * sppp * v;
        } else {
          // d/dh of sigma''(h) * c / sigma'(h)^2 with c fixed.
          dcorrection = 0.5 * cfg_.alpha * v * (sppp - 2.0 * spp * spp / sp);
        }
      }
    }
    PairGrad pg = neg_log_likelihood(p + correction, sp + dcorrection, cfg_.eps_log);
    out.log_clamps += pg.log_clamped;
    loss_acc += w * pg.loss;
    double g = w * cfg_.beta * pg.dloss_dh;
    out.grad(rec.x, winner) += g;
    out.grad(rec.x, loser) -= g;
    weight_acc += w;
  }
  if (weight_acc > 0.0) {
    out.loss = loss_acc / weight_acc;
    for (double& g : out.grad.flat()) g /= weight_acc;
  }
  return out;
}

AgreementObjective::AgreementObjective(const Policy& pi_ref, const FullDataset& data,
                                       LossConfig cfg)
    : data_(&data), ref_log_(pi_ref.log_prob_table()), cfg_(cfg) {
  cfg_.validate();
  if (data.size() == 0) throw std::invalid_argument("agreement loss: empty dataset");
  if (data.num_types == 0) throw std::invalid_argument("agreement loss: no user types");
}

LossValue AgreementObjective::evaluate(const Grid& logits,
                                       std::span<const std::size_t> batch) const {
  if (!logits.same_shape(ref_log_)) {
    throw std::invalid_argument("agreement loss: logits shape mismatch");
  }
  double scale = static_cast<double>(data_->num_types);
  LossValue out;
  out.grad = Grid(logits.rows(), logits.cols());
  double loss_acc = 0.0;
  double weight_acc = 0.0;
  for (std::size_t idx : batch) {
    const FullAnnotationSample& rec = data_->records[idx];
    double w = data_->weight(idx);
    weight_acc += w;  // disagreement records count in the normalization
    std::uint32_t lo, hi;
    if (rec.all_ones()) {
      lo = rec.y1;
      hi = rec.y2;
    } else if (rec.all_zeros()) {
      lo = rec.y2;
      hi = rec.y1;
    } else {
      continue;
    }
    double arg = scale * cfg_.beta *
                 ((logits(rec.x, hi) - ref_log_(rec.x, hi)) -
                  (logits(rec.x, lo) - ref_log_(rec.x, lo)));
    double p = sigmoid(arg);
    PairGrad pg = neg_log_likelihood(p, p * (1.0 - p), cfg_.eps_log);
    out.log_clamps += pg.log_clamped;
    loss_acc += w * pg.loss;
    double g = w * scale * cfg_.beta * pg.dloss_dh;
    out.grad(rec.x, hi) += g;
    out.grad(rec.x, lo) -= g;
  }
  if (weight_acc > 0.0) {
    out.loss = loss_acc / weight_acc;
    for (double& g : out.grad.flat()) g /= weight_acc;
  }
  return out;
}

double agreement_integral(double theta, std::size_t num_types) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw std::domain_error("agreement integral: theta must lie in (0, 1]");
  }
  // Binomial expansion of ((1 - v)/v)^m integrated termwise; the k = m - 1
  // term integrates to log(theta).
  double total = 0.0;
  double binom = 1.0;
  auto m = static_cast<long>(num_types);
  for (long k = 0; k <= m; ++k) {
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    long e = k - m + 1;
    double term = (e == 0) ? std::log(theta)
                           : (std::pow(theta, static_cast<double>(e)) - 1.0) /
                                 static_cast<double>(e);
    total += sign * binom * term;
    binom = binom * static_cast<double>(m - k) / static_cast<double>(k + 1);
  }
  return total;
}

double agreement_integral_deriv(double theta, std::size_t num_types) {
  return std::pow((1.0 - theta) / theta, static_cast<double>(num_types));
}

AltAgreementObjective::AltAgreementObjective(const Policy& pi_ref, const FullDataset& data,
                                             LossConfig cfg)
    : data_(&data), ref_log_(pi_ref.log_prob_table()), cfg_(cfg) {
  cfg_.validate();
  if (data.size() == 0) throw std::invalid_argument("alt agreement loss: empty dataset");
  if (data.num_types == 0) throw std::invalid_argument("alt agreement loss: no user types");
}

LossValue AltAgreementObjective::evaluate(const Grid& logits,
                                          std::span<const std::size_t> batch) const {
  if (!logits.same_shape(ref_log_)) {
    throw std::invalid_argument("alt agreement loss: logits shape mismatch");
  }
  std::size_t m = data_->num_types;
  LossValue out;
  out.grad = Grid(logits.rows(), logits.cols());
  double loss_acc = 0.0;
  double weight_acc = 0.0;
  for (std::size_t idx : batch) {
    const FullAnnotationSample& rec = data_->records[idx];
    double w = data_->weight(idx);
    weight_acc += w;
    std::uint32_t lo, hi;
    if (rec.all_ones()) {
      lo = rec.y1;
      hi = rec.y2;
    } else if (rec.all_zeros()) {
      lo = rec.y2;
      hi = rec.y1;
    } else {
      continue;
    }
    double h = cfg_.beta * ((logits(rec.x, hi) - ref_log_(rec.x, hi)) -
                            (logits(rec.x, lo) - ref_log_(rec.x, lo)));
    double s = sigmoid(h);
    if (s <= 0.0 || s >= 1.0) {
      s = std::min(std::max(s, cfg_.eps_log), 1.0 - cfg_.eps_log);
      ++out.log_clamps;
    }
    loss_acc += w * -(s + agreement_integral(s, m));
    double dloss_dh = -(1.0 + agreement_integral_deriv(s, m)) * s * (1.0 - s);
    double g = w * cfg_.beta * dloss_dh;
    out.grad(rec.x, hi) += g;
    out.grad(rec.x, lo) -= g;
  }
  if (weight_acc > 0.0) {
    out.loss = loss_acc / weight_acc;
    for (double& g : out.grad.flat()) g /= weight_acc;
  }
  return out;
}

LossValue dpo_loss_grad(const Grid& logits, const Policy& pi_ref, const AnonymousDataset& data,
                        const LossConfig& cfg) {
  return DpoObjective(pi_ref, data, cfg).evaluate_all(logits);
}

LossValue corrected_dpo_loss_grad(const Grid& logits, const Policy& pi_ref,
                                  const AnonymousDataset& data, const JointLikelihoodTable& joint,
                                  const LossConfig& cfg) {
  return CorrectedDpoObjective(pi_ref, data, joint, cfg).evaluate_all(logits);
}

LossValue consistent_agreement_loss_grad(const Grid& logits, const Policy& pi_ref,
                                         const FullDataset& data, const LossConfig& cfg) {
  return AgreementObjective(pi_ref, data, cfg).evaluate_all(logits);
}

LossValue alt_consistent_loss_grad(const Grid& logits, const Policy& pi_ref,
                                   const FullDataset& data, const LossConfig& cfg) {
  return AltAgreementObjective(pi_ref, data, cfg).evaluate_all(logits);
}

}  // namespace hetpref
