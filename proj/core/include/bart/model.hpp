#pragma once

#include <span>

#include "bart/types.hpp"

namespace bart {

/// log(1 + exp(x)) without overflow.
double softplus(double x);

/// Pump target: the opportunity index at which pump/cash odds are even.
/// omega = -gamma_plus / log(1 - p).  Linear in gamma_plus.
double omega(double gamma_plus, PopProbability p);

/// Probability of pumping at opportunity k (1-based):
/// theta = 1 / (1 + exp(beta * (k - omega))).
/// Saturates to exactly 0 or 1 for extreme arguments, never NaN.
double theta(double beta, double omega, double k);

/// log(theta) and log(1 - theta), finite for all finite arguments.
double log_theta(double beta, double omega, double k);
double log_one_minus_theta(double beta, double omega, double k);

/// Log-likelihood of one trial.  Cashed with n pumps: n pump decisions plus
/// one cash-out decision.  Popped with n pumps: only the n pump decisions;
/// the pop event itself does not depend on the parameters and is dropped.
double trial_loglik(const SubjectParams& params, PopProbability p, const TrialRecord& trial);

/// Complete pooling: one (gamma_plus, beta) shared by every condition.
double dataset_loglik_flat(const SubjectParams& params, const Dataset& data);

/// One SubjectParams per condition, matched by index.
double dataset_loglik_hier(std::span<const SubjectParams> by_condition, const Dataset& data);

/// Maps the real line onto (0, upper) by a scaled logistic, the transform
/// every bounded parameter rides through on its way to the sampler.
struct IntervalTransform {
  double upper = 1.0;

  double constrain(double y) const;
  double unconstrain(double x) const;
  /// log |d constrain / dy|
  double log_jacobian(double y) const;
};

}  // namespace bart
