#include "gmm/subiso.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace gmm {

namespace {

// Read-only dense snapshot of the host. Small hosts get a bit matrix for O(1)
// adjacency tests; larger ones fall back to binary search.
class HostView {
 public:
  static constexpr std::size_t kMatrixLimit = 8192;

  explicit HostView(const Graph& g) : g_(g), n_(g.node_count()) {
    if (n_ <= kMatrixLimit) {
      words_ = (n_ + 63) / 64;
      bits_.assign(n_ * words_, 0);
      for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b : g.adjacency(a)) bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
      }
    }
  }

  std::size_t size() const { return n_; }
  std::size_t degree(std::size_t a) const { return g_.adjacency(a).size(); }
  const std::vector<std::size_t>& neighbors(std::size_t a) const { return g_.adjacency(a); }

  bool adjacent(std::size_t a, std::size_t b) const {
    if (words_ != 0) return bits_[a * words_ + b / 64] >> (b % 64) & 1;
    return g_.adjacent_indices(a, b);
  }

 private:
  const Graph& g_;
  std::size_t n_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Matching plan for one motif: a connected visiting order where every node
// after the first has an already-placed neighbour (its anchor), plus the
// required adjacency to every earlier node.
struct Plan {
  std::size_t size = 0;
  std::vector<std::size_t> degree;           // by position
  std::vector<std::size_t> anchor;           // by position, unused at 0
  std::vector<std::vector<char>> linked;     // linked[p][q], q < p
};

Plan make_plan(const Motif& motif) {
  const Graph& m = motif.graph;
  const std::size_t k = m.node_count();
  Plan plan;
  plan.size = k;
  std::vector<std::size_t> order;
  std::vector<char> placed(k, 0);
  std::vector<std::size_t> placed_links(k, 0);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t best = k;
    for (std::size_t v = 0; v < k; ++v) {
      if (placed[v]) continue;
      if (step > 0 && placed_links[v] == 0) continue;
      if (best == k || placed_links[v] > placed_links[best] ||
          (placed_links[v] == placed_links[best] &&
           m.adjacency(v).size() > m.adjacency(best).size())) {
        best = v;
      }
    }
    if (best == k) throw std::invalid_argument("motif is not connected");
    placed[best] = 1;
    order.push_back(best);
    for (std::size_t w : m.adjacency(best)) ++placed_links[w];
  }
  plan.degree.resize(k);
  plan.anchor.assign(k, 0);
  plan.linked.assign(k, std::vector<char>(k, 0));
  for (std::size_t p = 0; p < k; ++p) {
    plan.degree[p] = m.adjacency(order[p]).size();
    bool anchored = false;
    for (std::size_t q = 0; q < p; ++q) {
      const bool edge = m.adjacent_indices(order[p], order[q]);
      plan.linked[p][q] = edge;
      // Anchor on the earliest placed neighbour.
      if (edge && !anchored) {
        plan.anchor[p] = q;
        anchored = true;
      }
    }
  }
  return plan;
}

class Matcher {
 public:
  Matcher(const Plan& plan, const HostView& host)
      : plan_(plan), host_(host), image_(plan.size), used_(host.size(), 0) {}

  std::uint64_t count() {
    if (plan_.size == 0 || plan_.size > host_.size()) return 0;
    std::uint64_t total = 0;
    for (std::size_t h = 0; h < host_.size(); ++h) {
      if (host_.degree(h) < plan_.degree[0]) continue;
      image_[0] = h;
      used_[h] = 1;
      total += extend(1);
      used_[h] = 0;
    }
    return total;
  }

 private:
  std::uint64_t extend(std::size_t p) {
    if (p == plan_.size) return 1;
    std::uint64_t total = 0;
    for (std::size_t h : host_.neighbors(image_[plan_.anchor[p]])) {
      if (used_[h] || host_.degree(h) < plan_.degree[p]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < p; ++q) {
        if (host_.adjacent(h, image_[q]) != static_cast<bool>(plan_.linked[p][q])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image_[p] = h;
      used_[h] = 1;
      total += extend(p + 1);
      used_[h] = 0;
    }
    return total;
  }

  const Plan& plan_;
  const HostView& host_;
  std::vector<std::size_t> image_;
  std::vector<char> used_;
};

std::uint64_t mappings_with(const Motif& motif, const HostView& view) {
  const Plan plan = make_plan(motif);
  return Matcher(plan, view).count();
}

}  // namespace

std::uint64_t count_induced_mappings(const Motif& motif, const Graph& host) {
  const HostView view(host);
  return mappings_with(motif, view);
}

std::uint64_t count_induced_occurrences(const Motif& motif, const Graph& host) {
  return count_induced_mappings(motif, host) / motif.automorphisms;
}

MotifCensus census(const MotifSet& s, const Graph& host, std::size_t jobs) {
  MotifCensus out;
  out.tau = s.tau();
  out.host_nodes = host.node_count();
  out.host_edges = host.edge_count();
  out.counts.assign(s.size(), 0);
  out.mappings.assign(s.size(), 0);
  const HostView view(host);
  auto work = [&](std::size_t i) {
    out.mappings[i] = mappings_with(s[i], view);
    out.counts[i] = out.mappings[i] / s[i].automorphisms;
  };
  jobs = std::clamp<std::size_t>(jobs, 1, s.size());
  if (jobs == 1) {
    for (std::size_t i = 0; i < s.size(); ++i) work(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (std::size_t t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < s.size(); i = next++) work(i);
    });
  }
  workers.clear();
  return out;
}

namespace {

// Number of bijections subset -> motif nodes that preserve adjacency and
// non-adjacency.
std::uint64_t matching_bijections(const Graph& host, const std::vector<std::size_t>& subset,
                                  const Graph& motif) {
  const std::size_t k = subset.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const bool in_host = host.adjacent_indices(subset[i], subset[j]);
        const bool in_motif = motif.has_edge(static_cast<NodeId>(perm[i]), static_cast<NodeId>(perm[j]));
        if (in_host != in_motif) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

MotifCensus brute_force_census(const MotifSet& s, const Graph& host) {
  const std::size_t n = host.node_count();
  if (n > kMaxBruteForceHost) {
    throw std::invalid_argument("brute_force_census supports hosts of at most " +
                                std::to_string(kMaxBruteForceHost) + " nodes");
  }
  MotifCensus out;
  out.tau = s.tau();
  out.host_nodes = n;
  out.host_edges = host.edge_count();
  out.counts.assign(s.size(), 0);
  out.mappings.assign(s.size(), 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k < 2 || k > s.tau()) continue;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) subset.push_back(i);
    }
    for (std::size_t m = 0; m < s.size(); ++m) {
      if (s[m].node_count != k) continue;
      const std::uint64_t b = matching_bijections(host, subset, s[m].graph);
      if (b > 0) {
        out.counts[m] += 1;
        out.mappings[m] += b;
      }
    }
  }
  return out;
}

}  // namespace gmm
