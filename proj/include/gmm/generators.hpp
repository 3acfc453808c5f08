#pragma once

#include <cstddef>

#include "gmm/graph.hpp"
#include "gmm/rng.hpp"

namespace gmm {

// G(n, p): every pair is an edge independently with probability p.
Graph er_graph(std::size_t n, double p, Rng& rng);

// Ring lattice on nodes 0..n-1. Each node links to its k/2 nearest
// neighbours on either side. For odd k, every even node additionally links to
// the node (k/2)+1 steps ahead, giving mean degree k when n is even.
Graph ring_lattice(std::size_t n, std::size_t k);

// Watts-Strogatz: ring_lattice(n, k) with every lattice edge (u, v) rewired
// to (u, w) with probability p. w is uniform over nodes that are neither u
// nor already adjacent to u; when no such node exists the edge stays.
Graph ws_graph(std::size_t n, std::size_t k, double p, Rng& rng);

// Barabasi-Albert preferential attachment. Starts from a path on
// max(3, m + 1) nodes; each new node links to m distinct existing nodes
// chosen with probability proportional to degree.
Graph ba_graph(std::size_t n, std::size_t m, Rng& rng);

Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph petersen();

}  // namespace gmm
