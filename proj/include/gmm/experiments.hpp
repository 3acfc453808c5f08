#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gmm/beliefs.hpp"
#include "gmm/engine.hpp"
#include "gmm/stats.hpp"

namespace gmm {

// Defaults reproduce the published experiment grids. Every field can be
// overridden from JSON; unknown keys are rejected.
struct ExperimentSettings {
  std::uint64_t master_seed = 20110401;
  std::size_t tau = 3;
  PmfKind pmf = PmfKind::kExplicit;
  BeliefMode belief_mode = BeliefMode::kDynamic;
  std::size_t jobs = 1;

  // Erdos-Renyi recovery
  std::vector<std::size_t> er_sizes{50, 75, 100};
  double er_p = 0.5;
  std::size_t er_seeds = 50;
  std::size_t er_base_offset = 25;  // GMM base has n - offset nodes

  // Watts-Strogatz recovery
  std::size_t ws_n = 100;
  std::size_t ws_k = 3;
  std::vector<double> ws_p_grid;  // empty: 13 log-spaced points over (1e-4, 1]
  std::size_t ws_seeds = 20;
  std::size_t ws_base_n = 25;

  // Barabasi-Albert recovery
  std::size_t ba_n = 100;
  std::vector<std::size_t> ba_m_values{1, 3, 5, 7};
  std::size_t ba_classic_runs = 100;
  std::vector<std::size_t> ba_base_sizes{20, 40, 60, 80};
  std::size_t ba_runs_per_base = 25;
  std::uint64_t ba_x_min = 1;

  // Petersen demonstration
  std::size_t demo_ceiling = 250;
  std::uint64_t demo_seed = 1;

  std::vector<double> resolved_ws_p_grid() const;
};

ExperimentSettings settings_from_json(const nlohmann::json& j, ExperimentSettings base = {});
nlohmann::json settings_to_json(const ExperimentSettings& s);

// Independent per-run seed: depends only on the master seed and the run's
// coordinates, never on how many other runs exist.
std::uint64_t run_seed(std::uint64_t master, std::uint64_t experiment, std::uint64_t model,
                       std::uint64_t parameter, std::uint64_t index);

inline constexpr const char* kClassic = "classic";
inline constexpr const char* kGmm = "gmm";

struct ErRow {
  std::string model;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  FitReport fit;
};

struct WsRow {
  std::string model;
  double p = 0.0;
  std::uint64_t seed = 0;
  SmallWorldStats stats;
};

struct WsSummaryRow {
  std::string model;
  double p = 0.0;
  std::size_t runs = 0;
  double clustering_normalized = 0.0;
  double path_length_normalized = 0.0;
};

struct BaRow {
  std::string model;
  std::size_t m = 0;
  std::size_t n_base = 0;  // 0 for the classic model
  std::uint64_t seed = 0;
  PowerLawFit fit;
};

// Configs for single GMM runs, exposed so any CSV row can be replayed.
GmmConfig er_gmm_config(const ExperimentSettings& s, std::size_t n, std::uint64_t seed);
GmmConfig ws_gmm_config(const ExperimentSettings& s, double p, std::uint64_t seed);
GmmConfig ba_gmm_config(const ExperimentSettings& s, std::size_t m, std::size_t n_base,
                        std::uint64_t seed);
GmmConfig demo_config(const ExperimentSettings& s);

// Classic Watts-Strogatz graph, redrawn from the same stream until connected.
Graph connected_ws_graph(std::size_t n, std::size_t k, double p, std::uint64_t seed);

std::vector<ErRow> experiment_er(const ExperimentSettings& s);
std::vector<WsRow> experiment_ws(const ExperimentSettings& s);
std::vector<WsSummaryRow> summarize_ws(const std::vector<WsRow>& rows);
std::vector<BaRow> experiment_ba(const ExperimentSettings& s);
SimulationResult demo_simple(const ExperimentSettings& s);

std::string er_csv(const std::vector<ErRow>& rows);
std::string ws_csv(const std::vector<WsRow>& rows);
std::string ws_summary_csv(const std::vector<WsSummaryRow>& rows);
std::string ba_csv(const std::vector<BaRow>& rows);

// Runs the named experiment (er, ws, ba, demo), writing its outputs and a
// manifest.json with the resolved settings into out_dir. Returns the list of
// files written.
std::vector<std::string> run_experiment(const std::string& name, const ExperimentSettings& s,
                                        const std::string& out_dir);

}  // namespace gmm
