#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace bart {

double mean(std::span<const double> v);
/// Sample variance (n-1 denominator); 0 for fewer than two values.
double variance(std::span<const double> v);

/// Type-7 quantile (linear interpolation) of an ascending-sorted span.
double quantile_sorted(std::span<const double> sorted, double q);
/// Sorts a copy, then evaluates each requested quantile.
std::vector<double> quantiles(std::vector<double> values, std::span<const double> qs);

double normal_logpdf(double x, double mu, double sigma);
double normal_cdf(double x);
/// Inverse standard normal CDF (Acklam's rational approximation plus one
/// Halley refinement; accurate to ~1e-15 over (0,1)).
double inv_normal_cdf(double p);

double log_choose(int n, int k);

/// Regularized lower incomplete gamma P(a, x); Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);
/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chi_square_sf(double x, double dof);

/// Pearson chi-square p-value for observed counts against equal expected
/// counts (dof = bins - 1).
double uniformity_chisq_pvalue(std::span<const int> bin_counts);

/// Runs fn(i) for i in [0, n) across at most n_threads workers.  Writes must
/// be index-addressed; the partition never affects results.
void parallel_for(std::size_t n, int n_threads, const std::function<void(std::size_t)>& fn);

}  // namespace bart
