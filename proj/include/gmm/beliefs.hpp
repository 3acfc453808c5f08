#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gmm/rng.hpp"
#include "gmm/subiso.hpp"

namespace gmm {

enum class PmfKind { kExplicit, kPoissonLiteral, kPoissonMeanIndex };

std::string_view to_string(PmfKind kind);
// Accepts "explicit", "poisson-literal", "poisson-mean-index".
PmfKind parse_pmf_kind(std::string_view name);

struct MotifDistribution {
  PmfKind kind = PmfKind::kExplicit;
  std::vector<double> probs;  // aligned with the MotifSet
  double lambda = 0.0;        // Poisson kinds only
};

// probs[i] = counts[i] / sum(counts). Throws std::domain_error when every
// count is zero.
MotifDistribution explicit_pmf(std::span<const std::uint64_t> counts);

// Poisson weights lambda^i e^-lambda / i! over catalog indices i = 0..size-1,
// renormalized over that support. lambda = 0 is a point mass at index 0.
MotifDistribution poisson_pmf_for_lambda(double lambda, std::size_t size);

// Poisson PMF with lambda taken from the census: the mean of the counts
// (literal) or the count-weighted mean catalog index (mean-index, which
// throws std::domain_error on an all-zero census).
MotifDistribution poisson_pmf(std::span<const std::uint64_t> counts, PmfKind kind);

MotifDistribution make_distribution(PmfKind kind, std::span<const std::uint64_t> counts);

// Inverse-CDF draw. Consumes exactly one uniform from rng.
std::size_t sample_motif(const MotifDistribution& d, Rng& rng);

}  // namespace gmm
