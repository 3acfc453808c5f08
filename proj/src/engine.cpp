#include "gmm/engine.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <set>

#include "gmm/generators.hpp"
#include "gmm/motifs.hpp"

namespace gmm {

namespace {

constexpr std::uint64_t kBaseStream = 0;
constexpr std::uint64_t kGrowthStream = 1;

}  // namespace

Graph materialize_base(const GmmConfig& config) {
  if (const Graph* g = std::get_if<Graph>(&config.base)) return *g;
  const GeneratorSpec& spec = std::get<GeneratorSpec>(config.base);
  Rng rng(derive_seed(config.seed, {kBaseStream}));
  if (spec.kind == "petersen") return petersen();
  if (spec.kind == "er") return er_graph(spec.n, spec.p, rng);
  if (spec.kind == "ws") return ws_graph(spec.n, spec.k, spec.p, rng);
  if (spec.kind == "ba") return ba_graph(spec.n, spec.m, rng);
  if (spec.kind == "ring_lattice") return ring_lattice(spec.n, spec.k);
  if (spec.kind == "path") return path_graph(spec.n);
  if (spec.kind == "complete") return complete_graph(spec.n);
  if (spec.kind == "star") return star_graph(spec.n);
  if (spec.kind == "file") return read_edge_list_file(spec.path);
  throw ConfigError("unknown base graph kind '" + spec.kind + "'");
}

void validate_config(const GmmConfig& config, const Graph& base) {
  if (config.tau < kMinTau || config.tau > kMaxTau) {
    throw ConfigError("tau must lie in [2, 6], got " + std::to_string(config.tau));
  }
  try {
    config.growth.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (base.empty()) throw ConfigError("base graph is empty");
  if (config.termination.ceiling <= base.node_count()) {
    throw ConfigError("node ceiling " + std::to_string(config.termination.ceiling) +
                      " must exceed the base graph size " + std::to_string(base.node_count()));
  }
}

SimulationResult run(const GmmConfig& config, std::size_t census_jobs) {
  const auto start = std::chrono::steady_clock::now();
  SimulationResult result;
  result.graph = materialize_base(config);
  Graph& g = result.graph;
  validate_config(config, g);

  const MotifSet motifs = enumerate_motifs(config.tau);
  SimulationTrace& trace = result.trace;
  trace.seed = config.seed;
  trace.tau = config.tau;
  trace.base_nodes = g.node_count();
  trace.base_edges = g.edge_count();

  auto beliefs = [&] {
    const MotifCensus c = census(motifs, g, census_jobs);
    ++trace.census_evaluations;
    return make_distribution(config.pmf, c.values(config.count_mode));
  };

  Rng rng(derive_seed(config.seed, {kGrowthStream}));
  // Computed up front in both modes so an unusable census fails before the
  // first iteration.
  MotifDistribution dist = beliefs();
  bool fresh = true;
  while (!should_terminate(config.termination, g)) {
    if (config.belief_mode == BeliefMode::kDynamic && !fresh) dist = beliefs();
    fresh = false;
    const std::size_t index = sample_motif(dist, rng);
    apply_growth(config.growth, g, motifs[index].graph, rng);
    trace.records.push_back(
        {trace.records.size() + 1, index, dist.probs, g.node_count(), g.edge_count()});
  }
  trace.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void validate_trace(const SimulationTrace& trace) {
  std::size_t previous = trace.base_nodes;
  for (std::size_t r = 0; r < trace.records.size(); ++r) {
    const TraceRecord& rec = trace.records[r];
    if (rec.iteration != r + 1) {
      throw TraceError("record " + std::to_string(r) + " has iteration " +
                       std::to_string(rec.iteration));
    }
    if (rec.nodes <= previous) {
      throw TraceError("node count does not increase at iteration " +
                       std::to_string(rec.iteration));
    }
    previous = rec.nodes;
    double sum = 0.0;
    for (double p : rec.pmf) {
      if (!(p >= 0.0 && p <= 1.0)) throw TraceError("pmf entry outside [0, 1]");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw TraceError("pmf at iteration " + std::to_string(rec.iteration) + " sums to " +
                       std::to_string(sum));
    }
    if (rec.motif >= rec.pmf.size() || rec.pmf[rec.motif] <= 0.0) {
      throw TraceError("motif at iteration " + std::to_string(rec.iteration) +
                       " lies outside the pmf support");
    }
  }
}

Graph replay(const SimulationTrace& trace, const GmmConfig& config) {
  validate_trace(trace);
  if (trace.seed != config.seed) throw TraceError("trace seed does not match the config seed");
  if (trace.tau != config.tau) throw TraceError("trace tau does not match the config tau");
  Graph g = materialize_base(config);
  if (trace.base_nodes != g.node_count() || trace.base_edges != g.edge_count()) {
    throw TraceError("trace base graph does not match the config base graph");
  }
  if (trace.records.empty()) {
    if (!should_terminate(config.termination, g)) {
      throw TraceError("empty trace but the base graph does not satisfy the termination rule");
    }
    return g;
  }
  const MotifSet motifs = enumerate_motifs(config.tau);
  Rng rng(derive_seed(config.seed, {kGrowthStream}));
  for (const TraceRecord& rec : trace.records) {
    if (should_terminate(config.termination, g)) {
      throw TraceError("trace continues past the termination rule at iteration " +
                       std::to_string(rec.iteration));
    }
    if (rec.pmf.size() != motifs.size()) throw TraceError("pmf length does not match tau");
    // sample_motif consumes exactly one uniform; keep the stream aligned.
    rng.uniform01();
    apply_growth(config.growth, g, motifs[rec.motif].graph, rng);
    if (g.node_count() != rec.nodes || g.edge_count() != rec.edges) {
      throw TraceError("replayed graph diverges from the trace at iteration " +
                       std::to_string(rec.iteration));
    }
  }
  if (!should_terminate(config.termination, g)) {
    throw TraceError("trace ends before the termination rule fires");
  }
  return g;
}

// ---- JSON ----------------------------------------------------------------

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

std::string_view to_string(BeliefMode mode) {
  return mode == BeliefMode::kStatic ? "static" : "dynamic";
}

std::string_view to_string(CountMode mode) {
  return mode == CountMode::kMappings ? "mappings" : "occurrences";
}

}  // namespace

json config_to_json(const GmmConfig& config) {
  json base;
  if (const Graph* g = std::get_if<Graph>(&config.base)) {
    base["kind"] = "edges";
    json nodes = json::array();
    for (NodeId id : g->sorted_nodes()) nodes.push_back(id);
    json edges = json::array();
    for (const Edge& e : g->edges()) edges.push_back({e.u, e.v});
    base["nodes"] = nodes;
    base["edges"] = edges;
  } else {
    const GeneratorSpec& s = std::get<GeneratorSpec>(config.base);
    base["kind"] = s.kind;
    if (s.kind == "er" || s.kind == "ws") base["p"] = s.p;
    if (s.kind == "ws" || s.kind == "ring_lattice") base["k"] = s.k;
    if (s.kind == "ba") base["m"] = s.m;
    if (s.kind == "file") {
      base["path"] = s.path;
    } else if (s.kind != "petersen") {
      base["n"] = s.n;
    }
  }
  json growth{{"kind", to_string(config.growth.kind)}};
  switch (config.growth.kind) {
    case GrowthKind::kEr:
      growth["p"] = config.growth.p;
      break;
    case GrowthKind::kWs:
      growth["p"] = config.growth.p;
      growth["k"] = config.growth.k;
      break;
    case GrowthKind::kBa:
      growth["m"] = config.growth.m;
      break;
    case GrowthKind::kRandom:
      break;
  }
  return json{{"base", base},
              {"tau", config.tau},
              {"pmf", to_string(config.pmf)},
              {"count_mode", to_string(config.count_mode)},
              {"growth", growth},
              {"termination", {{"kind", "node-ceiling"}, {"ceiling", config.termination.ceiling}}},
              {"belief_mode", to_string(config.belief_mode)},
              {"seed", config.seed}};
}

GmmConfig config_from_json(const json& j) {
  check_keys(j, {"base", "tau", "pmf", "count_mode", "growth", "termination", "belief_mode", "seed"},
             "config");
  GmmConfig c;
  if (j.contains("base")) {
    const json& b = j.at("base");
    check_keys(b, {"kind", "n", "k", "m", "p", "path", "nodes", "edges"}, "base");
    const std::string kind = get_or<std::string>(b, "kind", "petersen");
    if (kind == "edges") {
      Graph g;
      for (const json& id : get_or<json>(b, "nodes", json::array())) g.add_node(id.get<NodeId>());
      for (const json& e : get_or<json>(b, "edges", json::array())) {
        if (!e.is_array() || e.size() != 2) throw ConfigError("base edges must be [u, v] pairs");
        const NodeId u = e[0].get<NodeId>();
        const NodeId v = e[1].get<NodeId>();
        if (u == v) throw ConfigError("base edges contain a self-loop");
        if (!g.add_edge(u, v)) throw ConfigError("base edges contain a duplicate");
      }
      c.base = std::move(g);
    } else {
      GeneratorSpec s;
      s.kind = kind;
      s.n = get_or<std::size_t>(b, "n", 0);
      s.k = get_or<std::size_t>(b, "k", 0);
      s.m = get_or<std::size_t>(b, "m", 0);
      s.p = get_or<double>(b, "p", 0.0);
      s.path = get_or<std::string>(b, "path", "");
      static const std::set<std::string> kinds{"petersen", "er",   "ws",       "ba",  "ring_lattice",
                                               "path",     "complete", "star", "file"};
      if (!kinds.contains(kind)) throw ConfigError("unknown base graph kind '" + kind + "'");
      c.base = s;
    }
  }
  c.tau = get_or<std::size_t>(j, "tau", c.tau);
  try {
    c.pmf = parse_pmf_kind(get_or<std::string>(j, "pmf", "explicit"));
    if (j.contains("growth")) {
      const json& g = j.at("growth");
      check_keys(g, {"kind", "p", "k", "m"}, "growth");
      c.growth.kind = parse_growth_kind(get_or<std::string>(g, "kind", "random"));
      c.growth.p = get_or<double>(g, "p", c.growth.p);
      c.growth.k = get_or<std::size_t>(g, "k", c.growth.k);
      c.growth.m = get_or<std::size_t>(g, "m", c.growth.m);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const std::string count_mode = get_or<std::string>(j, "count_mode", "occurrences");
  if (count_mode == "occurrences") {
    c.count_mode = CountMode::kOccurrences;
  } else if (count_mode == "mappings") {
    c.count_mode = CountMode::kMappings;
  } else {
    throw ConfigError("count_mode must be 'occurrences' or 'mappings'");
  }
  if (j.contains("termination")) {
    const json& t = j.at("termination");
    check_keys(t, {"kind", "ceiling"}, "termination");
    if (get_or<std::string>(t, "kind", "node-ceiling") != "node-ceiling") {
      throw ConfigError("only the node-ceiling termination rule is supported");
    }
    c.termination.ceiling = get_or<std::size_t>(t, "ceiling", c.termination.ceiling);
  }
  const std::string mode = get_or<std::string>(j, "belief_mode", "dynamic");
  if (mode == "dynamic") {
    c.belief_mode = BeliefMode::kDynamic;
  } else if (mode == "static") {
    c.belief_mode = BeliefMode::kStatic;
  } else {
    throw ConfigError("belief_mode must be 'dynamic' or 'static'");
  }
  c.seed = get_or<std::uint64_t>(j, "seed", 0);
  return c;
}

GmmConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config " + path + " is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

json trace_to_json(const SimulationTrace& trace, bool include_wall_time) {
  json records = json::array();
  for (const TraceRecord& r : trace.records) {
    records.push_back({{"iteration", r.iteration},
                       {"motif", r.motif},
                       {"pmf", r.pmf},
                       {"nodes", r.nodes},
                       {"edges", r.edges}});
  }
  json j{{"seed", trace.seed},
         {"tau", trace.tau},
         {"base_nodes", trace.base_nodes},
         {"base_edges", trace.base_edges},
         {"census_evaluations", trace.census_evaluations},
         {"records", records}};
  if (include_wall_time) j["wall_time_seconds"] = trace.wall_time_seconds;
  return j;
}

SimulationTrace trace_from_json(const json& j) {
  try {
    SimulationTrace t;
    t.seed = j.at("seed").get<std::uint64_t>();
    t.tau = j.at("tau").get<std::size_t>();
    t.base_nodes = j.at("base_nodes").get<std::size_t>();
    t.base_edges = j.at("base_edges").get<std::size_t>();
    t.census_evaluations = j.at("census_evaluations").get<std::size_t>();
    t.wall_time_seconds = j.value("wall_time_seconds", 0.0);
    for (const json& r : j.at("records")) {
      t.records.push_back({r.at("iteration").get<std::size_t>(), r.at("motif").get<std::size_t>(),
                           r.at("pmf").get<std::vector<double>>(), r.at("nodes").get<std::size_t>(),
                           r.at("edges").get<std::size_t>()});
    }
    return t;
  } catch (const json::exception& e) {
    throw TraceError(std::string("malformed trace: ") + e.what());
  }
}

}  // namespace gmm
