// gmm: command-line front end for the graph motif model.
//
// Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "gmm/engine.hpp"
#include "gmm/experiments.hpp"
#include "gmm/generators.hpp"
#include "gmm/graph.hpp"
#include "gmm/motifs.hpp"
#include "gmm/stats.hpp"
#include "gmm/subiso.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string num(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  if (std::isnan(x)) return "nan";
  return fmt::format("{}", x);
}

json json_number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

struct GenerateArgs {
  std::string model;
  std::size_t n = 0;
  std::size_t k = 2;
  std::size_t m = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  gmm::Rng rng(a.seed);
  gmm::Graph g;
  if (a.model == "er") {
    g = gmm::er_graph(a.n, a.p, rng);
  } else if (a.model == "ws") {
    g = gmm::ws_graph(a.n, a.k, a.p, rng);
  } else if (a.model == "ba") {
    g = gmm::ba_graph(a.n, a.m, rng);
  } else if (a.model == "ring_lattice") {
    g = gmm::ring_lattice(a.n, a.k);
  } else if (a.model == "petersen") {
    g = gmm::petersen();
  } else if (a.model == "path") {
    g = gmm::path_graph(a.n);
  } else if (a.model == "complete") {
    g = gmm::complete_graph(a.n);
  } else if (a.model == "star") {
    g = gmm::star_graph(a.n);
  }
  write_output(a.out, gmm::serialize_edge_list(g));
  return 0;
}

int cmd_motifs(std::size_t tau) {
  const gmm::MotifSet set = gmm::enumerate_motifs(tau);
  std::ostringstream out;
  out << "index,V,E,certificate,edges\n";
  for (const gmm::Motif& m : set) {
    std::string edges;
    for (const gmm::Edge& e : m.graph.edges()) {
      if (!edges.empty()) edges += ' ';
      edges += fmt::format("{}-{}", e.u, e.v);
    }
    out << m.index << ',' << m.node_count << ',' << m.edge_count << ',' << m.certificate << ','
        << edges << '\n';
  }
  std::cout << out.str();
  return 0;
}

int cmd_census(const std::string& graph_path, std::size_t tau, bool with_mappings, std::size_t jobs) {
  const gmm::Graph g = gmm::read_edge_list_file(graph_path);
  const gmm::MotifSet set = gmm::enumerate_motifs(tau);
  const gmm::MotifCensus c = gmm::census(set, g, jobs);
  std::ostringstream out;
  out << "index,V,E,count" << (with_mappings ? ",mappings" : "") << '\n';
  for (std::size_t i = 0; i < set.size(); ++i) {
    out << i << ',' << set[i].node_count << ',' << set[i].edge_count << ',' << c.counts[i];
    if (with_mappings) out << ',' << c.mappings[i];
    out << '\n';
  }
  std::cout << out.str();
  return 0;
}

struct SimulateArgs {
  std::string config;
  std::string out;
  std::string trace;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool record_timing = false;
  std::size_t jobs = 1;
};

int cmd_simulate(const SimulateArgs& a) {
  gmm::GmmConfig config = gmm::load_config_file(a.config);
  if (a.seed_given) config.seed = a.seed;
  const gmm::SimulationResult r = gmm::run(config, a.jobs);
  write_output(a.out, gmm::serialize_edge_list(r.graph));
  if (!a.trace.empty()) write_output(a.trace, gmm::trace_to_json(r.trace, a.record_timing).dump(2) + "\n");
  spdlog::info("simulate: {} nodes, {} edges after {} iterations", r.graph.node_count(),
               r.graph.edge_count(), r.trace.records.size());
  return 0;
}

struct ReplayArgs {
  std::string config;
  std::string trace;
  std::string out;
};

int cmd_replay(const ReplayArgs& a) {
  const gmm::GmmConfig config = gmm::load_config_file(a.config);
  const gmm::SimulationTrace trace = gmm::trace_from_json(json::parse(read_file(a.trace)));
  write_output(a.out, gmm::serialize_edge_list(gmm::replay(trace, config)));
  return 0;
}

struct FitArgs {
  std::string graph;
  std::string degrees;
  std::string method = "binomial";
  double p = 0.5;
  std::uint64_t x_min = 1;
  std::string csv;
};

std::vector<std::uint64_t> read_degrees(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::uint64_t> out;
  std::string tok;
  while (in >> tok) {
    if (tok.front() == '#') {
      std::getline(in, tok);
      continue;
    }
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0) throw std::runtime_error("bad degree value '" + tok + "'");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

int cmd_fit(const FitArgs& a) {
  std::vector<std::uint64_t> degrees;
  gmm::Graph g;
  const bool from_graph = !a.graph.empty();
  if (from_graph) {
    g = gmm::read_edge_list_file(a.graph);
    degrees = gmm::degree_sequence(g);
  } else {
    degrees = read_degrees(a.degrees);
  }
  if (degrees.empty()) throw std::runtime_error("no degrees to fit");
  // Density over 0..max(n - 1, max degree).
  std::uint64_t top = degrees.size() - 1;
  for (std::uint64_t d : degrees) top = std::max(top, d);
  std::vector<double> density(top + 1, 0.0);
  for (std::uint64_t d : degrees) density[d] += 1.0 / static_cast<double>(degrees.size());

  json report{{"method", a.method}, {"n", degrees.size()}};
  std::string header, row;
  if (a.method == "binomial") {
    if (!from_graph && top + 1 > degrees.size()) {
      throw std::runtime_error("degree exceeds n - 1; not a simple graph's degree sequence");
    }
    density.resize(degrees.size());
    const gmm::FitReport f =
        gmm::regress_on(gmm::binomial_density(degrees.size() - 1, a.p), density);
    report.update({{"p", a.p},
                   {"coefficient", json_number(f.coefficient)},
                   {"intercept", json_number(f.intercept)},
                   {"std_error", json_number(f.std_error)},
                   {"r2", json_number(f.r_squared)},
                   {"rmse", json_number(f.rmse)},
                   {"aic", json_number(f.aic)},
                   {"n_points", f.n_points}});
    header = "method,n,p,coefficient,std_error,r2,rmse,aic";
    row = fmt::format("binomial,{},{},{},{},{},{},{}", degrees.size(), num(a.p), num(f.coefficient),
                      num(f.std_error), num(f.r_squared), num(f.rmse), num(f.aic));
  } else if (a.method == "powerlaw-graphical") {
    const double alpha = gmm::powerlaw_graphical(density);
    report["alpha"] = alpha;
    header = "method,n,alpha";
    row = fmt::format("powerlaw-graphical,{},{}", degrees.size(), num(alpha));
  } else if (a.method == "powerlaw-mle") {
    const double alpha = gmm::powerlaw_mle(degrees, a.x_min);
    const auto n_tail = std::count_if(degrees.begin(), degrees.end(),
                                      [&](std::uint64_t d) { return d >= a.x_min; });
    report.update({{"alpha", alpha}, {"x_min", a.x_min}, {"n_tail", n_tail}});
    header = "method,n,alpha,x_min,n_tail";
    row = fmt::format("powerlaw-mle,{},{},{},{}", degrees.size(), num(alpha), a.x_min, n_tail);
  }
  std::cout << report.dump(2) << '\n';
  if (!a.csv.empty()) write_output(a.csv, header + "\n" + row + "\n");
  return 0;
}

struct ExperimentArgs {
  std::string name;
  std::string config;
  std::string out_dir = "results";
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int cmd_experiment(const ExperimentArgs& a) {
  gmm::ExperimentSettings s;
  if (!a.config.empty()) s = gmm::settings_from_json(json::parse(read_file(a.config)));
  s.jobs = a.jobs;
  if (a.seed_given) {
    s.master_seed = a.seed;
    s.demo_seed = a.seed;
  }
  for (const std::string& f : gmm::run_experiment(a.name, s, a.out_dir)) {
    std::cout << a.out_dir << '/' << f << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph motif model: motif census, belief-driven network growth, and the "
               "classic random-graph recovery experiments"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string log_level = "warn";
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate->add_option("model", gen.model, "er|ws|ba|ring_lattice|petersen|path|complete|star")
      ->required()
      ->check(CLI::IsMember({"er", "ws", "ba", "ring_lattice", "petersen", "path", "complete", "star"}));
  generate->add_option("--n", gen.n, "Node count (leaf count for star)");
  generate->add_option("--p", gen.p, "Edge / rewiring probability")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--k", gen.k, "Lattice degree");
  generate->add_option("--m", gen.m, "Edges per new node");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--out", gen.out, "Output edge list (default stdout)");

  std::size_t motif_tau = 3;
  auto* motifs = app.add_subcommand("motifs", "Print the motif catalog for tau");
  motifs->add_option("--tau", motif_tau, "Largest motif size (2..6)")->check(CLI::Range(2, 6));

  std::string census_graph;
  std::size_t census_tau = 3;
  bool census_mappings = false;
  std::size_t census_jobs = 1;
  auto* census = app.add_subcommand("census", "Count induced motif occurrences in a graph");
  census->add_option("--graph", census_graph, "Host edge list")->required()->check(CLI::ExistingFile);
  census->add_option("--tau", census_tau, "Largest motif size (2..6)")->check(CLI::Range(2, 6));
  census->add_flag("--mappings", census_mappings, "Also print induced embedding counts");
  census->add_option("--jobs", census_jobs, "Worker threads")->check(CLI::PositiveNumber);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run one GMM simulation from a JSON config");
  simulate->add_option("--config", sim.config, "Simulation config (JSON)")->required()->check(CLI::ExistingFile);
  simulate->add_option("--out", sim.out, "Final graph edge list (default stdout)");
  simulate->add_option("--trace", sim.trace, "Trace output (JSON)");
  simulate->add_option("--seed", sim.seed, "Override the config seed")
      ->each([&](const std::string&) { sim.seed_given = true; });
  simulate->add_flag("--record-timing", sim.record_timing, "Include wall time in the trace");
  simulate->add_option("--jobs", sim.jobs, "Census worker threads")->check(CLI::PositiveNumber);

  ReplayArgs rep;
  auto* replay = app.add_subcommand("replay", "Rebuild a simulated graph from its trace");
  replay->add_option("--config", rep.config, "Simulation config (JSON)")->required()->check(CLI::ExistingFile);
  replay->add_option("--trace", rep.trace, "Trace (JSON)")->required()->check(CLI::ExistingFile);
  replay->add_option("--out", rep.out, "Edge list output (default stdout)");

  FitArgs fit;
  auto* fitcmd = app.add_subcommand("fit", "Fit a degree distribution");
  auto* fit_graph = fitcmd->add_option("--graph", fit.graph, "Edge list input")->check(CLI::ExistingFile);
  auto* fit_degrees =
      fitcmd->add_option("--degrees", fit.degrees, "Whitespace-separated degree file")->check(CLI::ExistingFile);
  fit_graph->excludes(fit_degrees);
  fitcmd->add_option("--method", fit.method, "binomial|powerlaw-graphical|powerlaw-mle")
      ->check(CLI::IsMember({"binomial", "powerlaw-graphical", "powerlaw-mle"}));
  fitcmd->add_option("--p", fit.p, "Binomial p")->check(CLI::Range(0.0, 1.0));
  fitcmd->add_option("--x-min", fit.x_min, "Power-law lower cutoff")->check(CLI::PositiveNumber);
  fitcmd->add_option("--csv", fit.csv, "Also write the report as a CSV row");

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Run a recovery experiment");
  experiment->add_option("name", exp.name, "er|ws|ba|demo")
      ->required()
      ->check(CLI::IsMember({"er", "ws", "ba", "demo"}));
  experiment->add_option("--config", exp.config, "Settings overrides (JSON)")->check(CLI::ExistingFile);
  experiment->add_option("--out-dir", exp.out_dir, "Output directory");
  experiment->add_option("--jobs", exp.jobs, "Worker threads")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", exp.seed, "Master seed")
      ->each([&](const std::string&) { exp.seed_given = true; });

  ExperimentArgs demo_args;
  demo_args.name = "demo";
  demo_args.out_dir = "results/demo";
  std::size_t demo_ceiling = 250;
  auto* demo = app.add_subcommand("demo", "Petersen-base demonstration with random growth");
  demo->add_option("--out-dir", demo_args.out_dir, "Output directory");
  demo->add_option("--seed", demo_args.seed, "Random seed")
      ->each([&](const std::string&) { demo_args.seed_given = true; });
  demo->add_option("--ceiling", demo_ceiling, "Node ceiling")->check(CLI::Range(11, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  auto logger = spdlog::stderr_logger_st("gmm");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    if (*generate) {
      if (gen.model != "petersen" && gen.n == 0) {
        std::cerr << "generate " << gen.model << ": --n is required\n";
        return 1;
      }
      return cmd_generate(gen);
    }
    if (*motifs) return cmd_motifs(motif_tau);
    if (*census) return cmd_census(census_graph, census_tau, census_mappings, census_jobs);
    if (*simulate) return cmd_simulate(sim);
    if (*replay) return cmd_replay(rep);
    if (*fitcmd) {
      if (fit.graph.empty() && fit.degrees.empty()) {
        std::cerr << "fit: one of --graph or --degrees is required\n";
        return 1;
      }
      return cmd_fit(fit);
    }
    if (*experiment) return cmd_experiment(exp);
    if (*demo) {
      gmm::ExperimentSettings s;
      s.demo_ceiling = demo_ceiling;
      if (demo_args.seed_given) s.demo_seed = demo_args.seed;
      for (const std::string& f : gmm::run_experiment("demo", s, demo_args.out_dir)) {
        std::cout << demo_args.out_dir << '/' << f << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
