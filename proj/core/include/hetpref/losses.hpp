#pragma once

#include "hetpref/datasets.hpp"
#include "hetpref/joint_table.hpp"
#include "hetpref/objective.hpp"
#include "hetpref/policy.hpp"

namespace hetpref {

struct LossConfig {
  double beta = 1.0;
  // Correction strength; 0 recovers the plain pairwise loss.
  double alpha = 1.0;
  // Floor inside logarithms.
  double eps_log = 1e-8;
  // When set, the 1/sigma'(h)^2 factor of the variance estimate is held
  // constant within a step instead of being differentiated through.
  bool detach_variance = false;

  void validate() const;
};

// Cap applied to the variance estimate when sigma'(h) underflows.
inline constexpr double kMaxVariance = 100.0;

// Across-type reward-difference variance implied by the second moments:
// (j1 - (j1 + j2)^2) / sigma'(h)^2, uncapped.
double variance_from_moments(double j1, double j2, double h);

// Pairwise logistic policy loss: mean of -log sigma(h(loser, winner)).
class DpoObjective : public Objective {
 public:
  DpoObjective(const Policy& pi_ref, const AnonymousDataset& data, LossConfig cfg);

  std::size_t num_records() const override { return data_->size(); }
  std::size_t param_rows() const override { return ref_log_.rows(); }
  std::size_t param_cols() const override { return ref_log_.cols(); }
  LossValue evaluate(const Grid& logits, std::span<const std::size_t> batch) const override;

 protected:
  const AnonymousDataset* data_;
  Grid ref_log_;
  LossConfig cfg_;
  const JointLikelihoodTable* joint_ = nullptr;  // null: no correction term
};

// Pairwise loss on the second-order-corrected likelihood
// sigma(h) + (alpha/2) * sigma''(h) * V, with V estimated per triple from the
// joint likelihood table. Triples absent from the table fall back to V = 0.
class CorrectedDpoObjective : public DpoObjective {
 public:
  CorrectedDpoObjective(const Policy& pi_ref, const AnonymousDataset& data,
                        const JointLikelihoodTable& joint, LossConfig cfg);
};

// Temperature-|U| pairwise loss restricted to unanimous records; disagreement
// records contribute nothing but still count in the normalization.
class AgreementObjective : public Objective {
 public:
  AgreementObjective(const Policy& pi_ref, const FullDataset& data, LossConfig cfg);

  std::size_t num_records() const override { return data_->size(); }
  std::size_t param_rows() const override { return ref_log_.rows(); }
  std::size_t param_cols() const override { return ref_log_.cols(); }
  LossValue evaluate(const Grid& logits, std::span<const std::size_t> batch) const override;

 private:
  const FullDataset* data_;
  Grid ref_log_;
  LossConfig cfg_;
};

// Alternative unanimous-records loss -(s + I(s)) with
// I(t) = integral_1^t (1/v - 1)^|U| dv evaluated in closed form.
class AltAgreementObjective : public Objective {
 public:
  AltAgreementObjective(const Policy& pi_ref, const FullDataset& data, LossConfig cfg);

  std::size_t num_records() const override { return data_->size(); }
  std::size_t param_rows() const override { return ref_log_.rows(); }
  std::size_t param_cols() const override { return ref_log_.cols(); }
  LossValue evaluate(const Grid& logits, std::span<const std::size_t> batch) const override;

 private:
  const FullDataset* data_;
  Grid ref_log_;
  LossConfig cfg_;
};

// Closed-form antiderivative value I(theta) for a given type count, and its
// derivative (1/theta - 1)^num_types.
double agreement_integral(double theta, std::size_t num_types);
double agreement_integral_deriv(double theta, std::size_t num_types);

// Full-dataset convenience wrappers.
LossValue dpo_loss_grad(const Grid& logits, const Policy& pi_ref, const AnonymousDataset& data,
                        const LossConfig& cfg);
LossValue corrected_dpo_loss_grad(const Grid& logits, const Policy& pi_ref,
                                  const AnonymousDataset& data, const JointLikelihoodTable& joint,
                                  const LossConfig& cfg);
LossValue consistent_agreement_loss_grad(const Grid& logits, const Policy& pi_ref,
                                         const FullDataset& data, const LossConfig& cfg);
LossValue alt_consistent_loss_grad(const Grid& logits, const Policy& pi_ref,
                                   const FullDataset& data, const LossConfig& cfg);

}  // namespace hetpref
