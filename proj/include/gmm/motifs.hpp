#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gmm/graph.hpp"

namespace gmm {

inline constexpr std::size_t kMaxCertificateNodes = 8;
inline constexpr std::size_t kMinTau = 2;
inline constexpr std::size_t kMaxTau = 6;

// Lexicographically smallest upper-triangular adjacency string ('0'/'1',
// row-major over pairs (i, j), i < j) across all node permutations.
// Throws std::invalid_argument above kMaxCertificateNodes nodes.
std::string canonical_certificate(const Graph& g);

// Number of permutations of g's nodes that map its edge set onto itself.
std::size_t automorphism_count(const Graph& g);

struct Motif {
  Graph graph;  // nodes 0..V-1
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::string certificate;
  std::size_t automorphisms = 1;
  std::size_t index = 0;
};

// The ordered tuple of connected motifs on 2..tau nodes, one per isomorphism
// class, sorted by (V, E, certificate).
class MotifSet {
 public:
  MotifSet(std::size_t tau, std::vector<Motif> motifs) : tau_(tau), motifs_(std::move(motifs)) {}

  std::size_t tau() const { return tau_; }
  std::size_t size() const { return motifs_.size(); }
  const Motif& operator[](std::size_t i) const { return motifs_.at(i); }
  const std::vector<Motif>& motifs() const { return motifs_; }
  auto begin() const { return motifs_.begin(); }
  auto end() const { return motifs_.end(); }

 private:
  std::size_t tau_;
  std::vector<Motif> motifs_;
};

// Throws std::invalid_argument for tau outside [kMinTau, kMaxTau].
MotifSet enumerate_motifs(std::size_t tau);

}  // namespace gmm
