#include "gmm/motifs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gmm {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix adjacency_matrix(const Graph& g) {
  const std::vector<NodeId> ids = g.sorted_nodes();
  const std::size_t n = ids.size();
  Matrix adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.has_edge(ids[i], ids[j])) adj[i][j] = adj[j][i] = 1;
    }
  }
  return adj;
}

std::string certificate_of(const Matrix& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur(n * (n - 1) / 2, '0');
  do {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) cur[k++] = adj[perm[i]][perm[j]] ? '1' : '0';
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected_matrix(const Matrix& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (adj[u][v] && !seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

// Motif graphs are stored in their canonical labeling.
Graph graph_from_certificate(const std::string& cert, std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(static_cast<NodeId>(i));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cert[k++] == '1') g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  return g;
}

}  // namespace

std::string canonical_certificate(const Graph& g) {
  if (g.node_count() > kMaxCertificateNodes) {
    throw std::invalid_argument("canonical_certificate supports at most " +
                                std::to_string(kMaxCertificateNodes) + " nodes, got " +
                                std::to_string(g.node_count()));
  }
  return certificate_of(adjacency_matrix(g));
}

std::size_t automorphism_count(const Graph& g) {
  if (g.node_count() > kMaxCertificateNodes) {
    throw std::invalid_argument("automorphism_count: graph too large");
  }
  const Matrix adj = adjacency_matrix(g);
  const std::size_t n = adj.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (adj[i][j] != adj[perm[i]][perm[j]]) {
          same = false;
          break;
        }
      }
    }
    if (same) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

MotifSet enumerate_motifs(std::size_t tau) {
  if (tau < kMinTau) throw std::invalid_argument("tau must be at least 2");
  if (tau > kMaxTau) {
    throw std::invalid_argument(
        "tau must be at most 6: census cost grows with catalog size times the "
        "exponential per-motif matching cost");
  }
  std::vector<Motif> motifs;
  for (std::size_t k = 2; k <= tau; ++k) {
    const std::size_t pairs = k * (k - 1) / 2;
    std::vector<std::pair<std::size_t, std::size_t>> pair_list;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) pair_list.emplace_back(i, j);
    }
    std::vector<std::pair<std::size_t, std::string>> classes;
    std::vector<std::string> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      // Connected graphs on k nodes need at least k - 1 edges.
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) + 1 < k) continue;
      Matrix adj(k, std::vector<char>(k, 0));
      for (std::size_t b = 0; b < pairs; ++b) {
        if (mask >> b & 1) {
          adj[pair_list[b].first][pair_list[b].second] = 1;
          adj[pair_list[b].second][pair_list[b].first] = 1;
        }
      }
      if (!connected_matrix(adj)) continue;
      std::string cert = certificate_of(adj);
      auto it = std::lower_bound(seen.begin(), seen.end(), cert);
      if (it != seen.end() && *it == cert) continue;
      seen.insert(it, cert);
      classes.emplace_back(static_cast<std::size_t>(__builtin_popcountll(mask)), std::move(cert));
    }
    std::sort(classes.begin(), classes.end());
    for (auto& [edges, cert] : classes) {
      Motif m;
      m.graph = graph_from_certificate(cert, k);
      m.node_count = k;
      m.edge_count = edges;
      m.certificate = cert;
      m.automorphisms = automorphism_count(m.graph);
      m.index = motifs.size();
      motifs.push_back(std::move(m));
    }
  }
  return MotifSet(tau, std::move(motifs));
}

}  // namespace gmm
