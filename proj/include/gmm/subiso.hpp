#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gmm/graph.hpp"
#include "gmm/motifs.hpp"

namespace gmm {

// Which count drives beliefs. Occurrences are distinct node subsets W with
// host[W] isomorphic to the motif; mappings are injective induced embeddings
// and equal occurrences * |Aut(motif)|.
enum class CountMode { kOccurrences, kMappings };

struct MotifCensus {
  std::size_t tau = 0;
  std::vector<std::uint64_t> counts;    // occurrences, aligned with the MotifSet
  std::vector<std::uint64_t> mappings;  // embeddings, aligned with the MotifSet
  std::size_t host_nodes = 0;
  std::size_t host_edges = 0;

  const std::vector<std::uint64_t>& values(CountMode mode) const {
    return mode == CountMode::kMappings ? mappings : counts;
  }
};

// Number of injective maps phi: V(motif) -> V(host) with (a, b) in E(motif)
// iff (phi(a), phi(b)) in E(host).
std::uint64_t count_induced_mappings(const Motif& motif, const Graph& host);

// Number of node subsets of host whose induced subgraph is isomorphic to the
// motif.
std::uint64_t count_induced_occurrences(const Motif& motif, const Graph& host);

// Census over every motif in s. jobs > 1 matches motifs on worker threads;
// the result does not depend on jobs.
MotifCensus census(const MotifSet& s, const Graph& host, std::size_t jobs = 1);

inline constexpr std::size_t kMaxBruteForceHost = 12;

// Exhaustive oracle: every node subset of every motif size, checked against
// every motif by trying all bijections. Throws std::invalid_argument when the
// host has more than kMaxBruteForceHost nodes.
MotifCensus brute_force_census(const MotifSet& s, const Graph& host);

}  // namespace gmm
