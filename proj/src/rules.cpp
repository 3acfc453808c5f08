#include "gmm/rules.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <spdlog/spdlog.h>

namespace gmm {

std::string_view to_string(GrowthKind kind) {
  switch (kind) {
    case GrowthKind::kRandom:
      return "random";
    case GrowthKind::kEr:
      return "er";
    case GrowthKind::kWs:
      return "ws";
    case GrowthKind::kBa:
      return "ba";
  }
  return "unknown";
}

GrowthKind parse_growth_kind(std::string_view name) {
  if (name == "random") return GrowthKind::kRandom;
  if (name == "er") return GrowthKind::kEr;
  if (name == "ws") return GrowthKind::kWs;
  if (name == "ba") return GrowthKind::kBa;
  throw std::invalid_argument("unknown growth rule '" + std::string(name) + "'");
}

void GrowthRuleSpec::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("growth p must lie in [0, 1]");
  if (k < 1) throw std::invalid_argument("growth k must be >= 1");
  if (m < 1) throw std::invalid_argument("growth m must be >= 1");
}

bool node_ceiling(const Graph& g, std::size_t ceiling) { return g.node_count() >= ceiling; }

bool should_terminate(const TerminationRuleSpec& rule, const Graph& g) {
  switch (rule.kind) {
    case TerminationKind::kNodeCeiling:
      return node_ceiling(g, rule.ceiling);
  }
  return true;
}

// Nodes g had before composition occupy indices [0, old_size) because
// composition only appends.

void random_growth(Graph& g, const Graph& h, Rng& rng) {
  if (g.empty()) throw std::invalid_argument("random_growth needs a nonempty graph");
  const std::size_t old_size = g.node_count();
  const std::vector<NodeId> fresh = absorb(g, h);
  const NodeId r1 = g.id_at(rng.below(old_size));
  const NodeId r2 = fresh[rng.below(fresh.size())];
  g.add_edge(r1, r2);
}

void er_growth(Graph& g, const Graph& h, double p, Rng& rng) {
  const std::size_t old_size = g.node_count();
  const std::vector<NodeId> fresh = absorb(g, h);
  for (NodeId i : fresh) {
    for (std::size_t j = 0; j < old_size; ++j) {
      if (rng.bernoulli(p)) g.add_edge(i, g.id_at(j));
    }
  }
}

void ws_growth(Graph& g, const Graph& h, std::size_t k, double p, Rng& rng) {
  const std::size_t old_size = g.node_count();
  std::vector<NodeId> fresh = absorb(g, h);
  rng.shuffle(fresh.begin(), fresh.end());
  const std::size_t linked = std::min(k, fresh.size());
  for (std::size_t a = 0; a < linked; ++a) {
    for (std::size_t j = 0; j < old_size; ++j) {
      if (rng.bernoulli(p)) g.add_edge(fresh[a], g.id_at(j));
    }
  }
  ensure_connected(g, rng);
}

void ba_growth(Graph& g, const Graph& h, std::size_t m, Rng& rng) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("ba_growth needs a graph with at least one edge");
  }
  const std::size_t old_size = g.node_count();
  std::vector<double> degree(old_size);
  double max_degree = 0.0;
  std::size_t eligible = 0;
  for (std::size_t j = 0; j < old_size; ++j) {
    degree[j] = static_cast<double>(g.adjacency(j).size());
    max_degree = std::max(max_degree, degree[j]);
    if (degree[j] > 0) ++eligible;
  }
  const std::vector<NodeId> fresh = absorb(g, h);
  const std::size_t available = eligible * fresh.size();
  std::size_t made = 0;
  for (std::size_t e = 0; e < m; ++e) {
    if (made == available) {
      spdlog::warn("ba_growth: all {} eligible pairs already linked; made {} of {} edges",
                   available, made, m);
      return;
    }
    while (true) {
      const std::size_t j = rng.below(old_size);
      if (!(rng.uniform01() < degree[j] / max_degree)) continue;
      const NodeId i = fresh[rng.below(fresh.size())];
      if (g.add_edge(i, g.id_at(j))) {
        ++made;
        break;
      }
    }
  }
}

void apply_growth(const GrowthRuleSpec& rule, Graph& g, const Graph& h, Rng& rng) {
  switch (rule.kind) {
    case GrowthKind::kRandom:
      random_growth(g, h, rng);
      return;
    case GrowthKind::kEr:
      er_growth(g, h, rule.p, rng);
      return;
    case GrowthKind::kWs:
      ws_growth(g, h, rule.k, rule.p, rng);
      return;
    case GrowthKind::kBa:
      ba_growth(g, h, rule.m, rng);
      return;
  }
}

}  // namespace gmm
