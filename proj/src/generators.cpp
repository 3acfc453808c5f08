#include "gmm/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace gmm {

namespace {

NodeId as_id(std::size_t i) { return static_cast<NodeId>(i); }

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

}  // namespace

Graph er_graph(std::size_t n, double p, Rng& rng) {
  if (n < 1) throw std::invalid_argument("er_graph needs n >= 1");
  check_probability(p);
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(as_id(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) g.add_edge(as_id(i), as_id(j));
    }
  }
  return g;
}

namespace {

// Lattice edges in construction order; rewiring walks them in this order.
std::vector<Edge> lattice_edges(std::size_t n, std::size_t k) {
  std::vector<Edge> out;
  std::set<Edge> seen;
  auto push = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    const Edge e = make_edge(as_id(a), as_id(b));
    if (seen.insert(e).second) out.push_back(e);
  };
  const std::size_t half = k / 2;
  for (std::size_t j = 1; j <= half; ++j) {
    for (std::size_t u = 0; u < n; ++u) push(u, (u + j) % n);
  }
  if (k % 2 == 1) {
    for (std::size_t u = 0; u < n; u += 2) push(u, (u + half + 1) % n);
  }
  return out;
}

}  // namespace

Graph ring_lattice(std::size_t n, std::size_t k) {
  if (k < 1 || n <= k) throw std::invalid_argument("ring_lattice needs n > k >= 1");
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(as_id(i));
  for (const Edge& e : lattice_edges(n, k)) g.add_edge(e.u, e.v);
  return g;
}

Graph ws_graph(std::size_t n, std::size_t k, double p, Rng& rng) {
  if (k < 2 || n <= k) throw std::invalid_argument("ws_graph needs n > k >= 2");
  check_probability(p);
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(as_id(i));
  const std::vector<Edge> lattice = lattice_edges(n, k);
  for (const Edge& e : lattice) g.add_edge(e.u, e.v);
  for (const Edge& e : lattice) {
    if (!rng.bernoulli(p)) continue;
    const NodeId u = e.u;
    if (g.degree(u) >= n - 1) continue;
    NodeId w;
    do {
      w = as_id(rng.below(n));
    } while (w == u || g.has_edge(u, w));
    g.remove_edge(e.u, e.v);
    g.add_edge(u, w);
  }
  return g;
}

Graph ba_graph(std::size_t n, std::size_t m, Rng& rng) {
  if (m < 1 || n <= m) throw std::invalid_argument("ba_graph needs n > m >= 1");
  const std::size_t seed_size = std::max<std::size_t>(3, m + 1);
  if (n <= seed_size) return path_graph(n);
  Graph g = path_graph(seed_size);
  // Every edge endpoint appears once, so a uniform pick is degree-proportional.
  std::vector<NodeId> endpoints;
  for (const Edge& e : g.edges()) {
    endpoints.push_back(e.u);
    endpoints.push_back(e.v);
  }
  for (std::size_t v = seed_size; v < n; ++v) {
    if (m >= g.node_count()) {
      throw std::invalid_argument("ba_graph: m = " + std::to_string(m) +
                                  " is not below the current graph size " +
                                  std::to_string(g.node_count()));
    }
    std::vector<NodeId> targets;
    while (targets.size() < m) {
      const NodeId t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    const NodeId id = as_id(v);
    for (NodeId t : targets) {
      g.add_edge(id, t);
      endpoints.push_back(id);
      endpoints.push_back(t);
    }
  }
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(as_id(i));
  for (std::size_t i = 1; i < n; ++i) g.add_edge(as_id(i - 1), as_id(i));
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(as_id(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(as_id(i), as_id(j));
  }
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g;
  g.add_node(0);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, as_id(i));
  return g;
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
Graph petersen() {
  Graph g;
  for (NodeId i = 0; i < 10; ++i) g.add_node(i);
  for (NodeId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace gmm
