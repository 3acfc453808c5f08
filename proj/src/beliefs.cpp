#include "gmm/beliefs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gmm {

std::string_view to_string(PmfKind kind) {
  switch (kind) {
    case PmfKind::kExplicit:
      return "explicit";
    case PmfKind::kPoissonLiteral:
      return "poisson-literal";
    case PmfKind::kPoissonMeanIndex:
      return "poisson-mean-index";
  }
  return "unknown";
}

PmfKind parse_pmf_kind(std::string_view name) {
  if (name == "explicit") return PmfKind::kExplicit;
  if (name == "poisson-literal" || name == "poisson") return PmfKind::kPoissonLiteral;
  if (name == "poisson-mean-index") return PmfKind::kPoissonMeanIndex;
  throw std::invalid_argument("unknown pmf '" + std::string(name) + "'");
}

MotifDistribution explicit_pmf(std::span<const std::uint64_t> counts) {
  long double total = 0;
  for (std::uint64_t c : counts) total += static_cast<long double>(c);
  if (total == 0) {
    throw std::domain_error("explicit pmf: census is all zero (no observable structure)");
  }
  MotifDistribution d;
  d.kind = PmfKind::kExplicit;
  d.probs.reserve(counts.size());
  for (std::uint64_t c : counts) {
    d.probs.push_back(static_cast<double>(static_cast<long double>(c) / total));
  }
  return d;
}

MotifDistribution poisson_pmf_for_lambda(double lambda, std::size_t size) {
  if (size == 0) throw std::invalid_argument("poisson pmf over an empty motif set");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("poisson lambda must be finite and non-negative");
  }
  MotifDistribution d;
  d.kind = PmfKind::kPoissonLiteral;
  d.lambda = lambda;
  d.probs.assign(size, 0.0);
  if (lambda == 0.0) {
    d.probs[0] = 1.0;
    return d;
  }
  // Log-space: lambda can be far beyond the index range. The e^-lambda factor
  // cancels in the renormalization.
  std::vector<double> logw(size);
  for (std::size_t i = 0; i < size; ++i) {
    logw[i] = static_cast<double>(i) * std::log(lambda) - std::lgamma(static_cast<double>(i) + 1.0);
  }
  const double top = *std::max_element(logw.begin(), logw.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    d.probs[i] = std::exp(logw[i] - top);
    sum += d.probs[i];
  }
  for (double& p : d.probs) p /= sum;
  return d;
}

MotifDistribution poisson_pmf(std::span<const std::uint64_t> counts, PmfKind kind) {
  if (counts.empty()) throw std::invalid_argument("poisson pmf over an empty motif set");
  long double total = 0;
  long double weighted = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    total += static_cast<long double>(counts[i]);
    weighted += static_cast<long double>(i) * static_cast<long double>(counts[i]);
  }
  double lambda = 0.0;
  switch (kind) {
    case PmfKind::kPoissonLiteral:
      lambda = static_cast<double>(total / static_cast<long double>(counts.size()));
      break;
    case PmfKind::kPoissonMeanIndex:
      if (total == 0) throw std::domain_error("mean-index poisson pmf: census is all zero");
      lambda = static_cast<double>(weighted / total);
      break;
    case PmfKind::kExplicit:
      throw std::invalid_argument("poisson_pmf called with the explicit kind");
  }
  MotifDistribution d = poisson_pmf_for_lambda(lambda, counts.size());
  d.kind = kind;
  return d;
}

MotifDistribution make_distribution(PmfKind kind, std::span<const std::uint64_t> counts) {
  return kind == PmfKind::kExplicit ? explicit_pmf(counts) : poisson_pmf(counts, kind);
}

std::size_t sample_motif(const MotifDistribution& d, Rng& rng) {
  const double u = rng.uniform01();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < d.probs.size(); ++i) {
    if (d.probs[i] <= 0.0) continue;
    cumulative += d.probs[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  // Rounding left u above the final cumulative sum.
  return last_positive;
}

}  // namespace gmm
