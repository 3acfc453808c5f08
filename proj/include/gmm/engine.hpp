#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "gmm/beliefs.hpp"
#include "gmm/graph.hpp"
#include "gmm/rules.hpp"
#include "gmm/subiso.hpp"

namespace gmm {

// A base graph described by a generator instead of an explicit edge set.
// kind is one of: petersen, er, ws, ba, ring_lattice, path, complete, star,
// file.
struct GeneratorSpec {
  std::string kind = "petersen";
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::string path;  // kind == "file"
};

enum class BeliefMode { kDynamic, kStatic };

struct GmmConfig {
  std::variant<GeneratorSpec, Graph> base = GeneratorSpec{};
  std::size_t tau = 3;
  PmfKind pmf = PmfKind::kExplicit;
  CountMode count_mode = CountMode::kOccurrences;
  GrowthRuleSpec growth;
  TerminationRuleSpec termination{TerminationKind::kNodeCeiling, 250};
  BeliefMode belief_mode = BeliefMode::kDynamic;
  std::uint64_t seed = 0;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TraceRecord {
  std::size_t iteration = 0;  // 1-based
  std::size_t motif = 0;
  std::vector<double> pmf;
  std::size_t nodes = 0;  // after growth
  std::size_t edges = 0;
};

struct SimulationTrace {
  std::uint64_t seed = 0;
  std::size_t tau = 0;
  std::size_t base_nodes = 0;
  std::size_t base_edges = 0;
  std::vector<TraceRecord> records;
  std::size_t census_evaluations = 0;
  double wall_time_seconds = 0.0;
};

struct SimulationResult {
  Graph graph;
  SimulationTrace trace;
};

// Builds the base graph. Generator bases draw from a stream derived from the
// config seed, separate from the growth stream.
Graph materialize_base(const GmmConfig& config);

// Throws ConfigError when tau, rule parameters or the ceiling are invalid
// for the given base graph.
void validate_config(const GmmConfig& config, const Graph& base);

// The growth loop: (census, beliefs) -> sample -> grow, until the
// termination rule fires. Dynamic beliefs recompute the census every
// iteration; static beliefs compute it once from the base graph. census_jobs
// only parallelizes the census and never changes the result.
SimulationResult run(const GmmConfig& config, std::size_t census_jobs = 1);

// Rebuilds the final graph of run(config) from the trace's motif choices.
// Throws TraceError if the trace is malformed or does not belong to config.
Graph replay(const SimulationTrace& trace, const GmmConfig& config);

// Structural checks that need no config: strictly increasing node counts,
// pmf vectors that sum to 1, and motifs drawn from the pmf support.
void validate_trace(const SimulationTrace& trace);

nlohmann::json config_to_json(const GmmConfig& config);
GmmConfig config_from_json(const nlohmann::json& j);
GmmConfig load_config_file(const std::string& path);

// wall time is wall-clock dependent, so it is written only on request.
nlohmann::json trace_to_json(const SimulationTrace& trace, bool include_wall_time = false);
SimulationTrace trace_from_json(const nlohmann::json& j);

}  // namespace gmm
