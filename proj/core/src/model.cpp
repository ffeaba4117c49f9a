#include "bart/model.hpp"

#include <cmath>

namespace bart {

std::string to_string(Outcome o) {
  return o == Outcome::Cashed ? "cashed" : "popped";
}

Outcome outcome_from_string(const std::string& s) {
  if (s == "cashed") return Outcome::Cashed;
  if (s == "popped") return Outcome::Popped;
  throw std::invalid_argument("unknown outcome '" + s + "' (expected 'cashed' or 'popped')");
}

void Dataset::validate() const {
  for (const auto& c : conditions) {
    if (!(c.p > 0.0 && c.p < 1.0)) {
      throw std::runtime_error("condition '" + c.label + "' has pop probability " +
                               std::to_string(c.p) + " outside (0,1)");
    }
  }
  std::vector<std::vector<int>> seen(conditions.size());
  for (const auto& t : trials) {
    if (t.condition < 0 || static_cast<std::size_t>(t.condition) >= conditions.size()) {
      throw std::runtime_error("trial references condition index " + std::to_string(t.condition) +
                               " but dataset has " + std::to_string(conditions.size()) +
                               " conditions");
    }
    if (!trial_valid(t)) {
      throw std::runtime_error("invalid trial record (condition " + std::to_string(t.condition) +
                               ", trial " + std::to_string(t.trial) + "): pumps " +
                               std::to_string(t.pumps) + ", outcome " + to_string(t.outcome));
    }
    auto& s = seen[t.condition];
    for (int idx : s) {
      if (idx == t.trial) {
        throw std::runtime_error("duplicate trial index " + std::to_string(t.trial) +
                                 " in condition " + std::to_string(t.condition));
      }
    }
    s.push_back(t.trial);
  }
}

double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

double omega(double gamma_plus, PopProbability p) {
  return -gamma_plus / std::log1p(-p.value());
}

double theta(double beta, double omega, double k) {
  const double t = beta * (k - omega);
  // Evaluate on the side that keeps exp() from overflowing.
  if (t >= 0.0) {
    const double e = std::exp(-t);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(t));
}

double log_theta(double beta, double omega, double k) {
  return -softplus(beta * (k - omega));
}

double log_one_minus_theta(double beta, double omega, double k) {
  return -softplus(-beta * (k - omega));
}

double trial_loglik(const SubjectParams& params, PopProbability p, const TrialRecord& trial) {
  const double om = omega(params.gamma_plus, p);
  double ll = 0.0;
  for (int k = 1; k <= trial.pumps; ++k) {
    ll += log_theta(params.beta, om, k);
  }
  if (trial.outcome == Outcome::Cashed) {
    ll += log_one_minus_theta(params.beta, om, trial.pumps + 1);
  }
  return ll;
}

double dataset_loglik_flat(const SubjectParams& params, const Dataset& data) {
  double ll = 0.0;
  for (const auto& t : data.trials) {
    ll += trial_loglik(params, PopProbability(data.conditions[t.condition].p), t);
  }
  return ll;
}

double dataset_loglik_hier(std::span<const SubjectParams> by_condition, const Dataset& data) {
  double ll = 0.0;
  for (const auto& t : data.trials) {
    ll += trial_loglik(by_condition[t.condition], PopProbability(data.conditions[t.condition].p), t);
  }
  return ll;
}

double IntervalTransform::constrain(double y) const {
  // upper * logistic(y), evaluated on the stable side
  if (y >= 0.0) return upper / (1.0 + std::exp(-y));
  const double e = std::exp(y);
  return upper * e / (1.0 + e);
}

double IntervalTransform::unconstrain(double x) const {
  const double r = x / upper;
  return std::log(r) - std::log1p(-r);
}

double IntervalTransform::log_jacobian(double y) const {
  return std::log(upper) - softplus(y) - softplus(-y);
}

}  // namespace bart
