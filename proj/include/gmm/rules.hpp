#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "gmm/graph.hpp"
#include "gmm/rng.hpp"

namespace gmm {

enum class GrowthKind { kRandom, kEr, kWs, kBa };

std::string_view to_string(GrowthKind kind);
GrowthKind parse_growth_kind(std::string_view name);

struct GrowthRuleSpec {
  GrowthKind kind = GrowthKind::kRandom;
  double p = 0.5;      // er, ws
  std::size_t k = 1;   // ws
  std::size_t m = 1;   // ba

  // Throws std::invalid_argument when a parameter is out of range.
  void validate() const;
};

enum class TerminationKind { kNodeCeiling };

struct TerminationRuleSpec {
  TerminationKind kind = TerminationKind::kNodeCeiling;
  std::size_t ceiling = 0;
};

bool node_ceiling(const Graph& g, std::size_t ceiling);
bool should_terminate(const TerminationRuleSpec& rule, const Graph& g);

// Each growth rule composes the motif instance h into g (fresh IDs above
// g's maximum), then adds cross edges between h's new nodes and the nodes g
// had before composition. They never remove edges.

// One edge between a uniform node of the old g and a uniform node of h.
void random_growth(Graph& g, const Graph& h, Rng& rng);

// Every (h node, old g node) pair becomes an edge with probability p.
void er_growth(Graph& g, const Graph& h, double p, Rng& rng);

// Shuffle h's nodes; the first min(k, |h|) link to each old g node with
// probability p; then bridge any remaining components.
void ws_growth(Graph& g, const Graph& h, std::size_t k, double p, Rng& rng);

// m cross edges whose old-g endpoint is chosen by rejection sampling with
// acceptance deg(j) / max_deg (degree-proportional selection) and whose h
// endpoint is uniform. A proposal that duplicates an existing edge is
// redrawn; the loop stops early if every eligible pair is already linked.
// Throws std::invalid_argument when g has no edges.
void ba_growth(Graph& g, const Graph& h, std::size_t m, Rng& rng);

void apply_growth(const GrowthRuleSpec& rule, Graph& g, const Graph& h, Rng& rng);

}  // namespace gmm
