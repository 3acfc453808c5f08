#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gmm/graph.hpp"

namespace gmm {

// Ordinary least squares of observed degree density on the theoretical
// binomial density, with intercept, over every degree bin 0..n-1.
struct FitReport {
  double coefficient = 0.0;  // slope on the theoretical density
  double intercept = 0.0;
  double std_error = 0.0;  // of the slope
  double r_squared = 0.0;
  double rmse = 0.0;  // sqrt(RSS / n)
  double aic = 0.0;   // n ln(RSS / n) + 2 * 3
  double rss = 0.0;
  double tss = 0.0;
  std::size_t n_points = 0;
};

struct SmallWorldStats {
  double clustering = 0.0;
  double path_length = 0.0;
  double clustering_normalized = 0.0;
  double path_length_normalized = 0.0;
};

struct PowerLawFit {
  double alpha_graphical = 0.0;
  double alpha_mle = 0.0;
  std::uint64_t x_min = 1;
  std::size_t n_tail = 0;
};

// Binomial(trials, p) probability of each outcome 0..trials.
std::vector<double> binomial_density(std::size_t trials, double p);

// Regression of `observed` on `theoretical` (same length). Throws
// std::domain_error when the predictor has zero variance or there are fewer
// than three points.
FitReport regress_on(std::span<const double> theoretical, std::span<const double> observed);

// Fit of g's degree density against Binomial(n - 1, p).
FitReport binomial_fit_report(const Graph& g, double p);

// Throws DisconnectedGraphError for disconnected g and
// std::invalid_argument unless c0 > 0 and l0 > 0.
SmallWorldStats small_world_stats(const Graph& g, double c0, double l0);

// Negated slope of the OLS line through (ln d, ln density[d]) over bins with
// d >= 1 and density > 0. Throws std::domain_error with fewer than two such
// bins.
double powerlaw_graphical(std::span<const double> density);
double powerlaw_graphical(const DegreeDistribution& dd);

// Continuous MLE with the half-integer shift for discrete data:
// 1 + n_tail / sum(ln(x / (x_min - 1/2))) over x >= x_min.
// Throws std::domain_error with fewer than two tail values or when every
// tail value equals x_min.
double powerlaw_mle(std::span<const std::uint64_t> values, std::uint64_t x_min = 1);

// Real-valued observations: 1 + n_tail / sum(ln(x / x_min)), no shift.
double powerlaw_mle_continuous(std::span<const double> values, double x_min);

std::vector<std::uint64_t> degree_sequence(const Graph& g);
PowerLawFit fit_powerlaw(const Graph& g, std::uint64_t x_min = 1);

// ---- summaries over samples -------------------------------------------

double mean(std::span<const double> xs);
// Linear interpolation between order statistics (q in [0, 1]).
double quantile(std::vector<double> xs, double q);
double median(std::vector<double> xs);
double interquartile_range(const std::vector<double>& xs);

struct Correlation {
  double rho = 0.0;
  double p_value = 1.0;  // two-sided, t approximation
};

// Spearman rank correlation with average ranks for ties.
Correlation spearman(std::span<const double> x, std::span<const double> y);

// Pearson chi-square goodness-of-fit p-value.
double chi_square_p_value(std::span<const double> observed, std::span<const double> expected);

// One-way ANOVA F-test p-value across groups.
double anova_p_value(const std::vector<std::vector<double>>& groups);

}  // namespace gmm
