#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bart {

/// Probability that the balloon pops on any single pump.  Strictly inside
/// (0,1): p = 0 sends the pump target to infinity, p = 1 has no defined
/// log-survival.
class PopProbability {
 public:
  explicit PopProbability(double p) : p_(p) {
    if (!(p > 0.0 && p < 1.0)) {
      throw std::domain_error("pop probability must lie strictly in (0,1), got " +
                              std::to_string(p));
    }
  }
  double value() const { return p_; }

 private:
  double p_;
};

enum class Outcome { Cashed, Popped };

std::string to_string(Outcome o);
/// Accepts "cashed" / "popped"; throws std::invalid_argument otherwise.
Outcome outcome_from_string(const std::string& s);

/// One balloon trial.  `pumps` counts affirmative pump decisions; a popped
/// balloon ends the trial before any cash-out choice is observed.
struct TrialRecord {
  int condition = 0;  // index into Dataset::conditions
  int trial = 0;      // index within the condition
  int pumps = 0;
  Outcome outcome = Outcome::Cashed;
};

inline bool trial_valid(const TrialRecord& t) {
  if (t.pumps < 0) return false;
  if (t.outcome == Outcome::Popped && t.pumps < 1) return false;
  return true;
}

/// Subject-level unknowns.  Generative runs require both nonnegative;
/// likelihood evaluation tolerates negative values (hierarchical normal
/// draws are not truncated on the inference side).
struct SubjectParams {
  double gamma_plus = 0.0;  // risk-taking propensity
  double beta = 0.0;        // choice consistency
};

/// Group-level unknowns of the hierarchical model.
struct HyperParams {
  double mu_gamma = 0.0;
  double sigma_gamma = 0.0;
  double mu_beta = 0.0;
  double sigma_beta = 0.0;
};

/// Upper bound U of every Uniform(0, U) prior in the model; the quantity all
/// prior-width sweeps vary.
struct PriorSpec {
  double upper = 10.0;

  PriorSpec() = default;
  explicit PriorSpec(double u) : upper(u) {
    if (!(u > 0.0)) {
      throw std::domain_error("prior upper bound must be positive, got " + std::to_string(u));
    }
  }
};

struct Condition {
  std::string label;
  double p = 0.1;  // pop probability shared by all trials of the condition
};

struct Dataset {
  std::vector<Condition> conditions;
  std::vector<TrialRecord> trials;

  std::size_t n_conditions() const { return conditions.size(); }
  /// Throws std::runtime_error on the first violated invariant: dangling
  /// condition references, duplicate trial indices, invalid pop
  /// probabilities or trial records.
  void validate() const;
};

}  // namespace bart
