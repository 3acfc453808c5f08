#include "gmm/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "gmm/generators.hpp"

namespace gmm {

namespace {

using nlohmann::json;

enum Experiment : std::uint64_t { kErExperiment = 1, kWsExperiment = 2, kBaExperiment = 3 };
enum Model : std::uint64_t { kClassicModel = 0, kGmmModel = 1 };

// Runs fn(i) for i in [0, n) on up to `jobs` threads; results land at their
// own index, so ordering never depends on scheduling.
template <class Fn>
auto parallel_map(std::size_t n, std::size_t jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(n);
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            out[i] = fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::string num(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  if (std::isnan(x)) return "nan";
  return fmt::format("{}", x);
}

template <class T>
void override(const json& j, const char* key, T& field) {
  if (!j.contains(key)) return;
  try {
    field = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

std::vector<double> ExperimentSettings::resolved_ws_p_grid() const {
  if (!ws_p_grid.empty()) return ws_p_grid;
  std::vector<double> grid;
  for (int i = 1; i <= 13; ++i) grid.push_back(std::pow(10.0, -4.0 + 4.0 * i / 13.0));
  grid.back() = 1.0;
  return grid;
}

ExperimentSettings settings_from_json(const json& j, ExperimentSettings s) {
  static const std::set<std::string> keys{
      "master_seed", "tau",          "pmf",           "belief_mode",   "jobs",
      "er_sizes",    "er_p",         "er_seeds",      "er_base_offset", "ws_n",
      "ws_k",        "ws_p_grid",    "ws_seeds",      "ws_base_n",     "ba_n",
      "ba_m_values", "ba_classic_runs", "ba_base_sizes", "ba_runs_per_base", "ba_x_min",
      "demo_ceiling", "demo_seed"};
  if (!j.is_object()) throw ConfigError("experiment config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!keys.contains(key)) throw ConfigError("unknown experiment setting '" + key + "'");
  }
  override(j, "master_seed", s.master_seed);
  override(j, "tau", s.tau);
  if (j.contains("pmf")) {
    try {
      s.pmf = parse_pmf_kind(j.at("pmf").get<std::string>());
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  if (j.contains("belief_mode")) {
    const std::string mode = j.at("belief_mode").get<std::string>();
    if (mode != "dynamic" && mode != "static") throw ConfigError("belief_mode must be dynamic or static");
    s.belief_mode = mode == "static" ? BeliefMode::kStatic : BeliefMode::kDynamic;
  }
  override(j, "jobs", s.jobs);
  override(j, "er_sizes", s.er_sizes);
  override(j, "er_p", s.er_p);
  override(j, "er_seeds", s.er_seeds);
  override(j, "er_base_offset", s.er_base_offset);
  override(j, "ws_n", s.ws_n);
  override(j, "ws_k", s.ws_k);
  override(j, "ws_p_grid", s.ws_p_grid);
  override(j, "ws_seeds", s.ws_seeds);
  override(j, "ws_base_n", s.ws_base_n);
  override(j, "ba_n", s.ba_n);
  override(j, "ba_m_values", s.ba_m_values);
  override(j, "ba_classic_runs", s.ba_classic_runs);
  override(j, "ba_base_sizes", s.ba_base_sizes);
  override(j, "ba_runs_per_base", s.ba_runs_per_base);
  override(j, "ba_x_min", s.ba_x_min);
  override(j, "demo_ceiling", s.demo_ceiling);
  override(j, "demo_seed", s.demo_seed);
  if (s.tau < kMinTau || s.tau > kMaxTau) throw ConfigError("tau must lie in [2, 6]");
  for (std::size_t n : s.er_sizes) {
    if (n <= s.er_base_offset) throw ConfigError("every er_size must exceed er_base_offset");
  }
  return s;
}

json settings_to_json(const ExperimentSettings& s) {
  return json{{"master_seed", s.master_seed},
              {"tau", s.tau},
              {"pmf", to_string(s.pmf)},
              {"belief_mode", s.belief_mode == BeliefMode::kStatic ? "static" : "dynamic"},
              {"er_sizes", s.er_sizes},
              {"er_p", s.er_p},
              {"er_seeds", s.er_seeds},
              {"er_base_offset", s.er_base_offset},
              {"ws_n", s.ws_n},
              {"ws_k", s.ws_k},
              {"ws_p_grid", s.resolved_ws_p_grid()},
              {"ws_seeds", s.ws_seeds},
              {"ws_base_n", s.ws_base_n},
              {"ba_n", s.ba_n},
              {"ba_m_values", s.ba_m_values},
              {"ba_classic_runs", s.ba_classic_runs},
              {"ba_base_sizes", s.ba_base_sizes},
              {"ba_runs_per_base", s.ba_runs_per_base},
              {"ba_x_min", s.ba_x_min},
              {"demo_ceiling", s.demo_ceiling},
              {"demo_seed", s.demo_seed}};
}

std::uint64_t run_seed(std::uint64_t master, std::uint64_t experiment, std::uint64_t model,
                       std::uint64_t parameter, std::uint64_t index) {
  return derive_seed(master, {experiment, model, parameter, index});
}

namespace {

GmmConfig base_gmm_config(const ExperimentSettings& s, std::uint64_t seed) {
  GmmConfig c;
  c.tau = s.tau;
  c.pmf = s.pmf;
  c.belief_mode = s.belief_mode;
  c.seed = seed;
  return c;
}

}  // namespace

GmmConfig er_gmm_config(const ExperimentSettings& s, std::size_t n, std::uint64_t seed) {
  GmmConfig c = base_gmm_config(s, seed);
  c.base = GeneratorSpec{.kind = "er", .n = n - s.er_base_offset, .p = s.er_p, .path = {}};
  c.growth = {GrowthKind::kEr, s.er_p, 1, 1};
  c.termination.ceiling = n;
  return c;
}

GmmConfig ws_gmm_config(const ExperimentSettings& s, double p, std::uint64_t seed) {
  GmmConfig c = base_gmm_config(s, seed);
  c.base = GeneratorSpec{.kind = "ring_lattice", .n = s.ws_base_n, .k = s.ws_k, .path = {}};
  c.growth = {GrowthKind::kWs, p, s.ws_k, 1};
  c.termination.ceiling = s.ws_n;
  return c;
}

GmmConfig ba_gmm_config(const ExperimentSettings& s, std::size_t m, std::size_t n_base,
                        std::uint64_t seed) {
  GmmConfig c = base_gmm_config(s, seed);
  c.base = GeneratorSpec{.kind = "ba", .n = n_base, .m = m, .path = {}};
  c.growth = {GrowthKind::kBa, 0.5, 1, m};
  c.termination.ceiling = s.ba_n;
  return c;
}

GmmConfig demo_config(const ExperimentSettings& s) {
  GmmConfig c = base_gmm_config(s, s.demo_seed);
  c.base = GeneratorSpec{};
  c.growth = {GrowthKind::kRandom, 0.5, 1, 1};
  c.termination.ceiling = s.demo_ceiling;
  return c;
}

Graph connected_ws_graph(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph g = ws_graph(n, k, p, rng);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("no connected Watts-Strogatz graph after 10000 attempts");
}

std::vector<ErRow> experiment_er(const ExperimentSettings& s) {
  struct Task {
    Model model;
    std::size_t n;
    std::size_t index;
  };
  std::vector<Task> tasks;
  for (Model model : {kClassicModel, kGmmModel}) {
    for (std::size_t n : s.er_sizes) {
      for (std::size_t i = 0; i < s.er_seeds; ++i) tasks.push_back({model, n, i});
    }
  }
  return parallel_map(tasks.size(), s.jobs, [&](std::size_t t) {
    const Task& task = tasks[t];
    ErRow row;
    row.n = task.n;
    row.seed = run_seed(s.master_seed, kErExperiment, task.model, task.n, task.index);
    if (task.model == kClassicModel) {
      row.model = kClassic;
      Rng rng(row.seed);
      row.fit = binomial_fit_report(er_graph(task.n, s.er_p, rng), s.er_p);
    } else {
      row.model = kGmm;
      row.fit = binomial_fit_report(run(er_gmm_config(s, task.n, row.seed)).graph, s.er_p);
    }
    return row;
  });
}

std::vector<WsRow> experiment_ws(const ExperimentSettings& s) {
  const Graph lattice = ring_lattice(s.ws_n, s.ws_k);
  const double c0 = mean_clustering(lattice);
  const double l0 = characteristic_path_length(lattice);
  const std::vector<double> grid = s.resolved_ws_p_grid();
  struct Task {
    Model model;
    double p;
    std::size_t index;
  };
  std::vector<Task> tasks;
  for (Model model : {kClassicModel, kGmmModel}) {
    for (double p : grid) {
      for (std::size_t i = 0; i < s.ws_seeds; ++i) tasks.push_back({model, p, i});
    }
  }
  return parallel_map(tasks.size(), s.jobs, [&](std::size_t t) {
    const Task& task = tasks[t];
    WsRow row;
    row.p = task.p;
    row.seed = run_seed(s.master_seed, kWsExperiment, task.model, std::bit_cast<std::uint64_t>(task.p),
                        task.index);
    if (task.model == kClassicModel) {
      row.model = kClassic;
      row.stats = small_world_stats(connected_ws_graph(s.ws_n, s.ws_k, task.p, row.seed), c0, l0);
    } else {
      row.model = kGmm;
      row.stats = small_world_stats(run(ws_gmm_config(s, task.p, row.seed)).graph, c0, l0);
    }
    return row;
  });
}

std::vector<WsSummaryRow> summarize_ws(const std::vector<WsRow>& rows) {
  std::vector<WsSummaryRow> out;
  for (const WsRow& r : rows) {
    if (out.empty() || out.back().model != r.model || out.back().p != r.p) {
      out.push_back({r.model, r.p, 0, 0.0, 0.0});
    }
    WsSummaryRow& s = out.back();
    ++s.runs;
    s.clustering_normalized += r.stats.clustering_normalized;
    s.path_length_normalized += r.stats.path_length_normalized;
  }
  for (WsSummaryRow& s : out) {
    s.clustering_normalized /= static_cast<double>(s.runs);
    s.path_length_normalized /= static_cast<double>(s.runs);
  }
  return out;
}

std::vector<BaRow> experiment_ba(const ExperimentSettings& s) {
  struct Task {
    Model model;
    std::size_t m;
    std::size_t n_base;
    std::size_t index;
  };
  std::vector<Task> tasks;
  for (std::size_t m : s.ba_m_values) {
    for (std::size_t i = 0; i < s.ba_classic_runs; ++i) tasks.push_back({kClassicModel, m, 0, i});
    for (std::size_t nb : s.ba_base_sizes) {
      for (std::size_t i = 0; i < s.ba_runs_per_base; ++i) tasks.push_back({kGmmModel, m, nb, i});
    }
  }
  return parallel_map(tasks.size(), s.jobs, [&](std::size_t t) {
    const Task& task = tasks[t];
    BaRow row;
    row.m = task.m;
    row.n_base = task.n_base;
    row.seed = run_seed(s.master_seed, kBaExperiment, task.model, task.m * 1000003 + task.n_base,
                        task.index);
    if (task.model == kClassicModel) {
      row.model = kClassic;
      Rng rng(row.seed);
      row.fit = fit_powerlaw(ba_graph(s.ba_n, task.m, rng), s.ba_x_min);
    } else {
      row.model = kGmm;
      row.fit = fit_powerlaw(run(ba_gmm_config(s, task.m, task.n_base, row.seed)).graph, s.ba_x_min);
    }
    return row;
  });
}

SimulationResult demo_simple(const ExperimentSettings& s) { return run(demo_config(s)); }

std::string er_csv(const std::vector<ErRow>& rows) {
  std::ostringstream out;
  out << "model,n,seed,coefficient,std_error,r2,rmse,aic\n";
  for (const ErRow& r : rows) {
    out << r.model << ',' << r.n << ',' << r.seed << ',' << num(r.fit.coefficient) << ','
        << num(r.fit.std_error) << ',' << num(r.fit.r_squared) << ',' << num(r.fit.rmse) << ','
        << num(r.fit.aic) << '\n';
  }
  return out.str();
}

std::string ws_csv(const std::vector<WsRow>& rows) {
  std::ostringstream out;
  out << "model,p,seed,clustering,path_length,clustering_normalized,path_length_normalized\n";
  for (const WsRow& r : rows) {
    out << r.model << ',' << num(r.p) << ',' << r.seed << ',' << num(r.stats.clustering) << ','
        << num(r.stats.path_length) << ',' << num(r.stats.clustering_normalized) << ','
        << num(r.stats.path_length_normalized) << '\n';
  }
  return out.str();
}

std::string ws_summary_csv(const std::vector<WsSummaryRow>& rows) {
  std::ostringstream out;
  out << "model,p,runs,mean_clustering_normalized,mean_path_length_normalized\n";
  for (const WsSummaryRow& r : rows) {
    out << r.model << ',' << num(r.p) << ',' << r.runs << ',' << num(r.clustering_normalized) << ','
        << num(r.path_length_normalized) << '\n';
  }
  return out.str();
}

std::string ba_csv(const std::vector<BaRow>& rows) {
  std::ostringstream out;
  out << "model,m,n_base,seed,alpha_graphical,alpha_mle,x_min,n_tail\n";
  for (const BaRow& r : rows) {
    out << r.model << ',' << r.m << ',' << r.n_base << ',' << r.seed << ','
        << num(r.fit.alpha_graphical) << ',' << num(r.fit.alpha_mle) << ',' << r.fit.x_min << ','
        << r.fit.n_tail << '\n';
  }
  return out.str();
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

std::vector<std::string> run_experiment(const std::string& name, const ExperimentSettings& s,
                                        const std::string& out_dir) {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  std::vector<std::string> files;
  auto emit = [&](const std::string& file, const std::string& text) {
    write_text(dir / file, text);
    files.push_back(file);
  };
  json settings = settings_to_json(s);
  if (name == "er") {
    emit("er.csv", er_csv(experiment_er(s)));
  } else if (name == "ws") {
    const auto rows = experiment_ws(s);
    emit("ws.csv", ws_csv(rows));
    emit("ws_summary.csv", ws_summary_csv(summarize_ws(rows)));
  } else if (name == "ba") {
    emit("ba.csv", ba_csv(experiment_ba(s)));
  } else if (name == "demo") {
    const SimulationResult r = demo_simple(s);
    emit("demo.edges", serialize_edge_list(r.graph));
    emit("demo_trace.json", trace_to_json(r.trace).dump(2) + "\n");
    settings["demo_run"] = config_to_json(demo_config(s));
  } else {
    throw std::invalid_argument("unknown experiment '" + name + "' (expected er, ws, ba or demo)");
  }
  const json manifest{{"experiment", name}, {"settings", settings}, {"outputs", files}};
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
  files.push_back("manifest.json");
  spdlog::info("experiment {}: wrote {} files to {}", name, files.size(), out_dir);
  return files;
}

}  // namespace gmm
