#include "gmm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace gmm {

std::vector<double> binomial_density(std::size_t trials, double p) {
  const boost::math::binomial_distribution<double> dist(static_cast<double>(trials), p);
  std::vector<double> out(trials + 1);
  for (std::size_t d = 0; d <= trials; ++d) out[d] = boost::math::pdf(dist, static_cast<double>(d));
  return out;
}

FitReport regress_on(std::span<const double> theoretical, std::span<const double> observed) {
  if (theoretical.size() != observed.size()) {
    throw std::invalid_argument("regression inputs differ in length");
  }
  const std::size_t n = theoretical.size();
  if (n < 3) throw std::domain_error("regression needs at least three points");
  const double nd = static_cast<double>(n);
  const double mx = std::accumulate(theoretical.begin(), theoretical.end(), 0.0) / nd;
  const double my = std::accumulate(observed.begin(), observed.end(), 0.0) / nd;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = theoretical[i] - mx;
    const double dy = observed[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const auto [lo, hi] = std::minmax_element(theoretical.begin(), theoretical.end());
  if (*lo == *hi || sxx <= 0.0) throw std::domain_error("theoretical density has zero variance");

  FitReport r;
  r.n_points = n;
  r.coefficient = sxy / sxx;
  r.intercept = my - r.coefficient * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = observed[i] - (r.intercept + r.coefficient * theoretical[i]);
    rss += e * e;
  }
  r.rss = rss;
  r.tss = syy;
  r.r_squared = syy > 0.0 ? std::clamp(1.0 - rss / syy, 0.0, 1.0) : 1.0;
  r.rmse = std::sqrt(rss / nd);
  r.std_error = std::sqrt(rss / (nd - 2.0) / sxx);
  // Gaussian log-likelihood up to a constant; three parameters (intercept,
  // slope, error variance). A perfect fit gives -inf.
  r.aic = rss > 0.0 ? nd * std::log(rss / nd) + 2.0 * 3.0
                    : -std::numeric_limits<double>::infinity();
  return r;
}

FitReport binomial_fit_report(const Graph& g, double p) {
  if (g.empty()) throw std::invalid_argument("binomial fit of an empty graph");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("binomial fit needs p in (0, 1)");
  const DegreeDistribution dd = degree_distribution(g);
  const std::vector<double> t = binomial_density(dd.size - 1, p);
  return regress_on(t, dd.density);
}

SmallWorldStats small_world_stats(const Graph& g, double c0, double l0) {
  if (!(c0 > 0.0) || !(l0 > 0.0)) {
    throw std::invalid_argument("small-world normalizers must be positive");
  }
  SmallWorldStats s;
  s.path_length = characteristic_path_length(g);
  s.clustering = mean_clustering(g);
  s.clustering_normalized = s.clustering / c0;
  s.path_length_normalized = s.path_length / l0;
  return s;
}

double powerlaw_graphical(std::span<const double> density) {
  std::vector<double> xs, ys;
  for (std::size_t d = 1; d < density.size(); ++d) {
    if (density[d] > 0.0) {
      xs.push_back(std::log(static_cast<double>(d)));
      ys.push_back(std::log(density[d]));
    }
  }
  if (xs.size() < 2) {
    throw std::domain_error("graphical power-law fit needs at least two nonzero bins with d >= 1");
  }
  const double nd = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / nd;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / nd;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  return -sxy / sxx;
}

double powerlaw_graphical(const DegreeDistribution& dd) { return powerlaw_graphical(dd.density); }

double powerlaw_mle(std::span<const std::uint64_t> values, std::uint64_t x_min) {
  if (x_min < 1) throw std::invalid_argument("x_min must be at least 1");
  const double shift = static_cast<double>(x_min) - 0.5;
  std::size_t n_tail = 0;
  bool all_at_min = true;
  double log_sum = 0.0;
  for (std::uint64_t x : values) {
    if (x < x_min) continue;
    ++n_tail;
    if (x != x_min) all_at_min = false;
    log_sum += std::log(static_cast<double>(x) / shift);
  }
  if (n_tail < 2) throw std::domain_error("power-law MLE needs at least two values >= x_min");
  if (all_at_min) {
    throw std::domain_error("power-law MLE diverges: every tail value equals x_min");
  }
  return 1.0 + static_cast<double>(n_tail) / log_sum;
}

double powerlaw_mle_continuous(std::span<const double> values, double x_min) {
  if (!(x_min > 0.0)) throw std::invalid_argument("x_min must be positive");
  std::size_t n_tail = 0;
  double log_sum = 0.0;
  for (double x : values) {
    if (!(x >= x_min)) continue;
    ++n_tail;
    log_sum += std::log(x / x_min);
  }
  if (n_tail < 2) throw std::domain_error("power-law MLE needs at least two values >= x_min");
  if (!(log_sum > 0.0)) {
    throw std::domain_error("power-law MLE diverges: every tail value equals x_min");
  }
  return 1.0 + static_cast<double>(n_tail) / log_sum;
}

std::vector<std::uint64_t> degree_sequence(const Graph& g) {
  std::vector<std::uint64_t> out(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) out[i] = g.adjacency(i).size();
  return out;
}

PowerLawFit fit_powerlaw(const Graph& g, std::uint64_t x_min) {
  PowerLawFit fit;
  fit.x_min = x_min;
  const std::vector<std::uint64_t> degrees = degree_sequence(g);
  fit.n_tail = static_cast<std::size_t>(
      std::count_if(degrees.begin(), degrees.end(), [&](std::uint64_t d) { return d >= x_min; }));
  fit.alpha_graphical = powerlaw_graphical(degree_distribution(g));
  fit.alpha_mle = powerlaw_mle(degrees, x_min);
  return fit;
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of an empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double quantile(std::vector<double> xs, double q) {
  if (xs.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(xs.begin(), xs.end());
  const double pos = q * static_cast<double>(xs.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, xs.size() - 1);
  return xs[lo] + (pos - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
}

double median(std::vector<double> xs) { return quantile(std::move(xs), 0.5); }

double interquartile_range(const std::vector<double>& xs) {
  return quantile(xs, 0.75) - quantile(xs, 0.25);
}

namespace {

std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

Correlation spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3) {
    throw std::invalid_argument("spearman needs two samples of equal length >= 3");
  }
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  const double mx = mean(rx);
  const double my = mean(ry);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  Correlation c;
  if (sxx == 0.0 || syy == 0.0) return c;
  c.rho = sxy / std::sqrt(sxx * syy);
  const double df = static_cast<double>(x.size()) - 2.0;
  if (std::abs(c.rho) >= 1.0) {
    c.p_value = 0.0;
    return c;
  }
  const double t = c.rho * std::sqrt(df / (1.0 - c.rho * c.rho));
  const boost::math::students_t_distribution<double> dist(df);
  c.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
  return c;
}

double chi_square_p_value(std::span<const double> observed, std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.size() < 2) {
    throw std::invalid_argument("chi-square needs matching samples with at least two cells");
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(expected[i] > 0.0)) throw std::invalid_argument("chi-square expected counts must be positive");
    stat += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
  }
  const boost::math::chi_squared_distribution<double> dist(static_cast<double>(observed.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

double anova_p_value(const std::vector<std::vector<double>>& groups) {
  std::size_t total_n = 0;
  double grand = 0.0;
  for (const auto& g : groups) {
    if (g.size() < 2) throw std::invalid_argument("anova groups need at least two values");
    total_n += g.size();
    grand += std::accumulate(g.begin(), g.end(), 0.0);
  }
  if (groups.size() < 2) throw std::invalid_argument("anova needs at least two groups");
  grand /= static_cast<double>(total_n);
  double between = 0.0, within = 0.0;
  for (const auto& g : groups) {
    const double m = mean(g);
    between += static_cast<double>(g.size()) * (m - grand) * (m - grand);
    for (double v : g) within += (v - m) * (v - m);
  }
  const double df1 = static_cast<double>(groups.size() - 1);
  const double df2 = static_cast<double>(total_n - groups.size());
  if (within == 0.0) return between > 0.0 ? 0.0 : 1.0;
  const double f = (between / df1) / (within / df2);
  const boost::math::fisher_f_distribution<double> dist(df1, df2);
  return boost::math::cdf(boost::math::complement(dist, f));
}

}  // namespace gmm
