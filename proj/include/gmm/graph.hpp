#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gmm/rng.hpp"

namespace gmm {

using NodeId = std::int64_t;

struct Edge {
  NodeId u;
  NodeId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonical form of an unordered pair: smaller endpoint first.
inline Edge make_edge(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedGraphError : public std::runtime_error {
 public:
  explicit DisconnectedGraphError(std::size_t components)
      : std::runtime_error("graph is disconnected (" + std::to_string(components) +
                           " components)"),
        components_(components) {}
  std::size_t component_count() const { return components_; }

 private:
  std::size_t components_;
};

// Undirected simple graph with non-negative integer node IDs.
//
// Nodes keep their insertion order and are also addressable by a dense index
// in [0, node_count()). Neighbour lists are stored by index and kept sorted.
// Attribute maps ride along with the structure but no metric reads them.
class Graph {
 public:
  using AttrMap = std::map<std::string, std::string>;

  Graph() = default;
  Graph(std::initializer_list<std::pair<NodeId, NodeId>> edges);

  // Returns false if the node already exists. Throws on negative IDs.
  bool add_node(NodeId id);
  // Adds missing endpoints. Throws on self-loops; returns false on duplicates.
  bool add_edge(NodeId u, NodeId v);
  bool remove_edge(NodeId u, NodeId v);

  bool has_node(NodeId id) const { return index_.contains(id); }
  bool has_edge(NodeId u, NodeId v) const;

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return ids_.empty(); }

  std::size_t degree(NodeId id) const { return adj_[index_of(id)].size(); }
  std::vector<NodeId> neighbors(NodeId id) const;

  // Nodes in insertion order.
  const std::vector<NodeId>& nodes() const { return ids_; }
  std::vector<NodeId> sorted_nodes() const;
  // All edges as (min, max) pairs in ascending order.
  std::vector<Edge> edges() const;

  // Smallest ID strictly greater than every existing ID (0 when empty).
  NodeId next_id() const { return max_id_ + 1; }

  std::size_t index_of(NodeId id) const;
  NodeId id_at(std::size_t index) const { return ids_[index]; }
  const std::vector<std::size_t>& adjacency(std::size_t index) const { return adj_[index]; }
  bool adjacent_indices(std::size_t a, std::size_t b) const;

  std::map<NodeId, AttrMap>& node_attrs() { return node_attrs_; }
  const std::map<NodeId, AttrMap>& node_attrs() const { return node_attrs_; }
  std::map<Edge, AttrMap>& edge_attrs() { return edge_attrs_; }
  const std::map<Edge, AttrMap>& edge_attrs() const { return edge_attrs_; }

  // Structural equality: same node set and same edge set.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<NodeId> ids_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
  NodeId max_id_ = -1;
  std::map<NodeId, AttrMap> node_attrs_;
  std::map<Edge, AttrMap> edge_attrs_;
};

struct DegreeDistribution {
  std::size_t size = 0;
  // counts[d] = number of nodes with degree d, for d in [0, size).
  std::vector<std::size_t> counts;
  // density[d] = counts[d] / size.
  std::vector<double> density;
};

struct Composition {
  Graph graph;
  // Original ID in h -> fresh ID in the composed graph.
  std::map<NodeId, NodeId> mapping;
};

// Disjoint union. h's nodes are relabeled (in ascending ID order) to fresh
// IDs starting at g.next_id(); g is untouched.
Composition compose(const Graph& g, const Graph& h);

// In-place variant of compose. Returns the fresh IDs assigned to h's nodes,
// in ascending order of h's original IDs.
std::vector<NodeId> absorb(Graph& g, const Graph& h);

DegreeDistribution degree_distribution(const Graph& g);

// Mean local clustering; nodes with degree < 2 contribute 0.
double mean_clustering(const Graph& g);
double local_clustering(const Graph& g, NodeId id);

// Mean shortest-path distance over all unordered pairs. Throws
// DisconnectedGraphError when g has more than one component.
double characteristic_path_length(const Graph& g);

// Components in order of their first node (by insertion order); each
// component's node list is sorted.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);
// Exactly one component; the empty graph is not connected.
bool is_connected(const Graph& g);

// Bridges every other component to the largest one with a single random
// edge. Adds exactly (component count - 1) edges.
void ensure_connected(Graph& g, Rng& rng);

Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace gmm
