#include "gmm/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

namespace gmm {

Graph::Graph(std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

bool Graph::add_node(NodeId id) {
  if (id < 0) throw std::invalid_argument("node IDs must be non-negative");
  if (index_.contains(id)) return false;
  index_.emplace(id, ids_.size());
  ids_.push_back(id);
  adj_.emplace_back();
  max_id_ = std::max(max_id_, id);
  return true;
}

bool Graph::add_edge(NodeId u, NodeId v) {
  if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
  add_node(u);
  add_node(v);
  const std::size_t a = index_.at(u);
  const std::size_t b = index_.at(v);
  auto& na = adj_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b) return false;
  na.insert(it, b);
  auto& nb = adj_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(NodeId u, NodeId v) {
  if (!has_edge(u, v)) return false;
  const std::size_t a = index_.at(u);
  const std::size_t b = index_.at(v);
  auto& na = adj_[a];
  na.erase(std::lower_bound(na.begin(), na.end(), b));
  auto& nb = adj_[b];
  nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
  --edge_count_;
  edge_attrs_.erase(make_edge(u, v));
  return true;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto iu = index_.find(u);
  auto iv = index_.find(v);
  if (iu == index_.end() || iv == index_.end()) return false;
  return adjacent_indices(iu->second, iv->second);
}

bool Graph::adjacent_indices(std::size_t a, std::size_t b) const {
  if (adj_[a].size() > adj_[b].size()) std::swap(a, b);
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::size_t Graph::index_of(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("no node " + std::to_string(id));
  return it->second;
}

std::vector<NodeId> Graph::neighbors(NodeId id) const {
  std::vector<NodeId> out;
  for (std::size_t j : adj_[index_of(id)]) out.push_back(ids_[j]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> Graph::sorted_nodes() const {
  std::vector<NodeId> out = ids_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t a = 0; a < adj_.size(); ++a) {
    for (std::size_t b : adj_[a]) {
      if (a < b) out.push_back(make_edge(ids_[a], ids_[b]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.node_count() == b.node_count() && a.edge_count() == b.edge_count() &&
         a.sorted_nodes() == b.sorted_nodes() && a.edges() == b.edges();
}

std::vector<NodeId> absorb(Graph& g, const Graph& h) {
  const std::vector<NodeId> order = h.sorted_nodes();
  std::map<NodeId, NodeId> mapping;
  NodeId next = g.next_id();
  std::vector<NodeId> fresh;
  fresh.reserve(order.size());
  for (NodeId id : order) {
    mapping.emplace(id, next);
    g.add_node(next);
    fresh.push_back(next);
    ++next;
  }
  for (const Edge& e : h.edges()) g.add_edge(mapping.at(e.u), mapping.at(e.v));
  for (const auto& [id, attrs] : h.node_attrs()) g.node_attrs()[mapping.at(id)] = attrs;
  for (const auto& [e, attrs] : h.edge_attrs()) {
    g.edge_attrs()[make_edge(mapping.at(e.u), mapping.at(e.v))] = attrs;
  }
  return fresh;
}

Composition compose(const Graph& g, const Graph& h) {
  Composition out{g, {}};
  const std::vector<NodeId> order = h.sorted_nodes();
  const std::vector<NodeId> fresh = absorb(out.graph, h);
  for (std::size_t i = 0; i < order.size(); ++i) out.mapping.emplace(order[i], fresh[i]);
  return out;
}

DegreeDistribution degree_distribution(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("degree distribution of an empty graph");
  DegreeDistribution dd;
  dd.size = g.node_count();
  dd.counts.assign(dd.size, 0);
  for (std::size_t i = 0; i < dd.size; ++i) ++dd.counts[g.adjacency(i).size()];
  dd.density.resize(dd.size);
  for (std::size_t d = 0; d < dd.size; ++d) {
    dd.density[d] = static_cast<double>(dd.counts[d]) / static_cast<double>(dd.size);
  }
  return dd;
}

namespace {

double clustering_at(const Graph& g, std::size_t i) {
  const auto& nbrs = g.adjacency(i);
  const std::size_t k = nbrs.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (g.adjacent_indices(nbrs[a], nbrs[b])) ++links;
    }
  }
  return 2.0 * static_cast<double>(links) / static_cast<double>(k * (k - 1));
}

}  // namespace

double local_clustering(const Graph& g, NodeId id) { return clustering_at(g, g.index_of(id)); }

double mean_clustering(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("clustering of an empty graph");
  double sum = 0.0;
  for (std::size_t i = 0; i < g.node_count(); ++i) sum += clustering_at(g, i);
  return sum / static_cast<double>(g.node_count());
}

double characteristic_path_length(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("path length of an empty graph");
  if (n == 1) return 0.0;
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<std::size_t> queue(n);
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const std::size_t u = queue[head++];
      for (std::size_t v : g.adjacency(u)) {
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    if (tail != n) throw DisconnectedGraphError(connected_components(g).size());
    for (std::size_t t = s + 1; t < n; ++t) total += dist[t];
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return static_cast<double>(total) / pairs;
}

namespace {

std::vector<std::vector<std::size_t>> component_indices(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    seen[s] = true;
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (std::size_t v : g.adjacency(u)) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::vector<std::vector<NodeId>> out;
  for (const auto& comp : component_indices(g)) {
    std::vector<NodeId> ids;
    ids.reserve(comp.size());
    for (std::size_t i : comp) ids.push_back(g.id_at(i));
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

bool is_connected(const Graph& g) { return component_indices(g).size() == 1; }

void ensure_connected(Graph& g, Rng& rng) {
  if (g.empty()) throw std::invalid_argument("ensure_connected on an empty graph");
  auto comps = connected_components(g);
  if (comps.size() <= 1) return;
  std::size_t largest = 0;
  for (std::size_t c = 1; c < comps.size(); ++c) {
    if (comps[c].size() > comps[largest].size()) largest = c;
  }
  std::vector<NodeId> main = comps[largest];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (c == largest) continue;
    const NodeId a = main[rng.below(main.size())];
    const NodeId b = comps[c][rng.below(comps[c].size())];
    g.add_edge(a, b);
    main.insert(main.end(), comps[c].begin(), comps[c].end());
  }
}

namespace {

NodeId parse_id(std::string_view tok, std::size_t line) {
  NodeId value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Graph g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    line = line.substr(0, line.find('#'));
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      g.add_node(parse_id(toks[0], line_no));
    } else if (toks.size() == 2) {
      const NodeId u = parse_id(toks[0], line_no);
      const NodeId v = parse_id(toks[1], line_no);
      if (u == v) throw ParseError(line_no, "self-loop on node " + std::to_string(u));
      if (!g.add_edge(u, v)) {
        throw ParseError(line_no,
                         "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
    } else {
      throw ParseError(line_no, "expected one or two integers");
    }
  }
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  for (NodeId id : g.sorted_nodes()) {
    if (g.degree(id) == 0) out << id << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_edge_list(g);
}

}  // namespace gmm
