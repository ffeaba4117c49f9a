#pragma once

#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bart/model.hpp"
#include "bart/rng.hpp"

namespace bart {

struct ParamInfo {
  std::string name;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
};

/// A target density on the unconstrained scale.  log_density returns
/// log prior + log likelihood + log Jacobian, so exp(log_density) integrates
/// to the model's marginal likelihood -- the quantity bridge sampling
/// estimates.  Implementations are immutable and callable from any thread.
class Model {
 public:
  virtual ~Model() = default;

  /// Unconstrained dimension; equals params().size().
  virtual std::size_t dim() const = 0;
  /// Names and bounds of the constrained coordinates.
  virtual const std::vector<ParamInfo>& params() const = 0;
  virtual double log_density(std::span<const double> unconstrained) const = 0;
  virtual std::vector<double> constrain(std::span<const double> unconstrained) const = 0;
  virtual std::vector<double> unconstrain(std::span<const double> constrained) const = 0;
  /// Constrained draw from the prior.
  virtual std::vector<double> sample_prior(Rng& rng) const = 0;

  /// Pointwise decomposition of the data log-likelihood for cross
  /// validation: one observation = one Bernoulli choice.
  virtual std::size_t n_obs() const = 0;
  virtual double obs_loglik(std::size_t i, std::span<const double> constrained) const = 0;
};

/// Non-hierarchical BART model: one gamma_plus and one beta pooled across
/// all conditions, each Uniform(0, U).
class FlatBartModel final : public Model {
 public:
  FlatBartModel(Dataset data, PriorSpec prior);

  std::size_t dim() const override { return 2; }
  const std::vector<ParamInfo>& params() const override { return params_; }
  double log_density(std::span<const double> y) const override;
  std::vector<double> constrain(std::span<const double> y) const override;
  std::vector<double> unconstrain(std::span<const double> x) const override;
  std::vector<double> sample_prior(Rng& rng) const override;
  std::size_t n_obs() const override { return choices_.size(); }
  double obs_loglik(std::size_t i, std::span<const double> x) const override;

  const Dataset& data() const { return data_; }
  const PriorSpec& prior() const { return prior_; }

 private:
  struct Choice {
    int condition;
    int k;        // 1-based pump opportunity
    bool pumped;  // d = 1 pump, d = 0 cash out
  };
  Dataset data_;
  PriorSpec prior_;
  IntervalTransform bound_;
  std::vector<ParamInfo> params_;
  std::vector<Choice> choices_;
};

/// Hierarchical BART model: condition-level gamma_plus_i and beta_i drawn
/// from group normals whose means and SDs carry Uniform(0, U) priors.
/// Sampled non-centered; the constrained scale reports the hyperparameters
/// followed by the per-condition effects (mu + sigma * z, untruncated).
class HierBartModel final : public Model {
 public:
  HierBartModel(Dataset data, PriorSpec prior);

  std::size_t dim() const override { return 4 + 2 * n_conditions_; }
  const std::vector<ParamInfo>& params() const override { return params_; }
  double log_density(std::span<const double> y) const override;
  std::vector<double> constrain(std::span<const double> y) const override;
  std::vector<double> unconstrain(std::span<const double> x) const override;
  std::vector<double> sample_prior(Rng& rng) const override;
  std::size_t n_obs() const override { return choices_.size(); }
  double obs_loglik(std::size_t i, std::span<const double> x) const override;

  const Dataset& data() const { return data_; }
  const PriorSpec& prior() const { return prior_; }
  /// Likelihood part only, at given condition-level effects; the sigma -> 0
  /// slice of this equals the flat-model likelihood at the group means.
  double loglik_at(std::span<const SubjectParams> by_condition) const;

 private:
  struct Choice {
    int condition;
    int k;
    bool pumped;
  };
  Dataset data_;
  PriorSpec prior_;
  IntervalTransform bound_;
  std::size_t n_conditions_;
  std::vector<ParamInfo> params_;
  std::vector<Choice> choices_;
};

/// Conjugate Bernoulli harness: n coin flips with a Uniform(0,1) prior on
/// the success probability, routed through the same interval transform the
/// BART models use.  The density includes the binomial coefficient, so the
/// marginal likelihood is exactly 1/(n+1) and the posterior is
/// Beta(1 + successes, 1 + failures).
class BetaBernoulliModel final : public Model {
 public:
  explicit BetaBernoulliModel(std::vector<int> observations);
  BetaBernoulliModel(int n, int successes);

  std::size_t dim() const override { return 1; }
  const std::vector<ParamInfo>& params() const override { return params_; }
  double log_density(std::span<const double> y) const override;
  std::vector<double> constrain(std::span<const double> y) const override;
  std::vector<double> unconstrain(std::span<const double> x) const override;
  std::vector<double> sample_prior(Rng& rng) const override;
  std::size_t n_obs() const override { return obs_.size(); }
  double obs_loglik(std::size_t i, std::span<const double> x) const override;

  int n() const { return static_cast<int>(obs_.size()); }
  int successes() const { return successes_; }
  /// Analytic posterior moments (Beta(1+s, 1+f)).
  double posterior_mean() const;
  double posterior_variance() const;
  /// Analytic log marginal likelihood, log(1/(n+1)).
  double log_marginal() const;

 private:
  std::vector<int> obs_;
  int successes_;
  double log_coeff_;
  IntervalTransform bound_;
  std::vector<ParamInfo> params_;
};

}  // namespace bart
