// Copyright 2026 The trigauge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trigauge/cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trigauge/bench.h"
#include "trigauge/error.h"
#include "trigauge/genlab.h"
#include "trigauge/graph.h"
#include "trigauge/modelfit.h"

namespace trigauge {
namespace {

namespace fs = std::filesystem;

struct GenFlags {
  std::string model;
  std::uint64_t n = 0;
  double p = 0.0;
  std::string seed_graph;
  unsigned power = 1;
  unsigned scale = 0;
  std::uint64_t edge_factor = 16;
  std::vector<double> initiator{kGraph500Initiator.begin(),
                                kGraph500Initiator.end()};
  std::uint64_t rng_seed = 0;
};

struct CliConfig {
  std::string input;
  std::string output;
  std::vector<std::string> algorithms{"adj2"};
  std::uint64_t repetitions = 5;
  unsigned workers = 1;
  std::uint64_t oracle_limit = kDefaultOracleLimit;
  std::string records;
  std::string graph_id;
  GenFlags gen;
  std::optional<double> min_edges;
  std::optional<double> breakpoint;
  std::string group_by = "algorithm";
  std::string table;
  std::string table_csv;
  std::string plot;
};

void require_writable_parent(const std::string& path) {
  if (path.empty()) return;
  const fs::path parent = fs::absolute(fs::path(path)).parent_path();
  if (!fs::is_directory(parent)) {
    throw IoError("output directory does not exist: " + parent.string());
  }
}

CsrGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return canonicalize(parse_edge_list(in));
}

std::vector<Algorithm> resolve_algorithms(
    const std::vector<std::string>& tags) {
  std::vector<Algorithm> out;
  for (const auto& tag : tags) {
    if (tag == "all") {
      out.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
      return out;
    }
    out.push_back(parse_algorithm(tag));
  }
  return out;
}

bool is_all(const std::vector<std::string>& tags) {
  return std::find(tags.begin(), tags.end(), "all") != tags.end();
}

// With "all", the oracle is dropped for graphs above its limit rather than
// failing the whole run.
std::vector<Algorithm> usable_algorithms(const CliConfig& cfg,
                                         const CsrGraph& g,
                                         std::ostream& err) {
  auto algorithms = resolve_algorithms(cfg.algorithms);
  if (is_all(cfg.algorithms) && g.n_vertices() > cfg.oracle_limit) {
    std::erase(algorithms, Algorithm::kBrute);
    err << "note: skipping brute (" << g.n_vertices()
        << " vertices exceeds oracle limit " << cfg.oracle_limit << ")\n";
  }
  return algorithms;
}

CountOptions count_options(const CliConfig& cfg) {
  CountOptions o;
  o.workers = std::max(1u, cfg.workers);
  o.oracle_limit = cfg.oracle_limit;
  return o;
}

int cmd_count(const CliConfig& cfg, std::ostream& out, std::ostream& err,
              const CliHooks& hooks) {
  const CsrGraph g = load_graph(cfg.input);
  const auto algorithms = usable_algorithms(cfg, g, err);
  std::vector<TriangleCount> results;
  for (Algorithm a : algorithms) {
    TriangleCount r = count_triangles(g, a, count_options(cfg));
    if (hooks.tamper) hooks.tamper(r);
    out << "triangles=" << r.count << " algo=" << to_string(a)
        << " n_edges=" << g.n_edges() << '\n';
    results.push_back(r);
  }
  for (const auto& r : results) {
    if (r.count != results.front().count) {
      throw KernelMismatch("kernels disagree: " +
                           std::string(to_string(results.front().algorithm)) +
                           "=" + std::to_string(results.front().count) +
                           " vs " + std::string(to_string(r.algorithm)) +
                           "=" + std::to_string(r.count));
    }
  }
  return kExitOk;
}

GenSpec build_spec(const GenFlags& flags) {
  GenSpec spec;
  spec.model = parse_graph_model(flags.model);
  spec.n = flags.n;
  spec.p = flags.p;
  spec.power = flags.power;
  spec.scale = flags.scale;
  spec.edge_factor = flags.edge_factor;
  spec.rng_seed = flags.rng_seed;
  if (flags.initiator.size() != 4) {
    throw InvalidArgument("initiator needs exactly four probabilities");
  }
  std::copy(flags.initiator.begin(), flags.initiator.end(),
            spec.initiator.begin());
  if (spec.model == GraphModel::kKronPower) {
    if (flags.seed_graph.empty()) {
      throw InvalidArgument("--seed-graph is required for the kron model");
    }
    spec.seed_graph = load_graph(flags.seed_graph);
  }
  return spec;
}

nlohmann::json spec_metadata(const GenSpec& spec, const GenFlags& flags) {
  nlohmann::json params;
  switch (spec.model) {
    case GraphModel::kErdosRenyi:
      params["n"] = spec.n;
      params["p"] = spec.p;
      break;
    case GraphModel::kKronPower:
      params["seed_graph"] = fs::path(flags.seed_graph).filename().string();
      params["seed_n_vertices"] = spec.seed_graph->n_vertices();
      params["seed_n_edges"] = spec.seed_graph->n_edges();
      params["power"] = spec.power;
      break;
    case GraphModel::kStochasticKron:
      params["initiator"] = spec.initiator;
      params["scale"] = spec.scale;
      params["edge_factor"] = spec.edge_factor;
      break;
  }
  nlohmann::json meta;
  meta["model"] = std::string(to_string(spec.model));
  meta["parameters"] = params;
  meta["rng_seed"] = spec.rng_seed;
  return meta;
}

std::string default_graph_id(const GenSpec& spec) {
  std::ostringstream id;
  switch (spec.model) {
    case GraphModel::kErdosRenyi:
      id << "er-n" << spec.n << "-p" << spec.p << "-seed" << spec.rng_seed;
      break;
    case GraphModel::kKronPower:
      id << "kron-k" << spec.power;
      break;
    case GraphModel::kStochasticKron:
      id << "skron-s" << spec.scale << "-ef" << spec.edge_factor << "-seed"
         << spec.rng_seed;
      break;
  }
  return id.str();
}

int cmd_gen(const CliConfig& cfg, std::ostream& out) {
  require_writable_parent(cfg.output);
  const GenSpec spec = build_spec(cfg.gen);
  const CsrGraph g = generate(spec);

  std::ofstream tsv(cfg.output, std::ios::binary | std::ios::trunc);
  if (!tsv) throw IoError("cannot write " + cfg.output);
  export_edge_list(g, tsv);

  nlohmann::json meta = spec_metadata(spec, cfg.gen);
  meta["n_edges"] = g.n_edges();
  meta["n_vertices"] = g.n_vertices();
  const std::string meta_path = cfg.output + ".meta.json";
  std::ofstream sidecar(meta_path, std::ios::binary | std::ios::trunc);
  if (!sidecar) throw IoError("cannot write " + meta_path);
  sidecar << meta.dump(2) << '\n';
  if (!sidecar) throw IoError("failed writing " + meta_path);

  out << "n_edges=" << g.n_edges() << " n_vertices=" << g.n_vertices()
      << '\n';
  return kExitOk;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err,
              const CliHooks& hooks) {
  if (cfg.input.empty() == cfg.gen.model.empty()) {
    throw InvalidArgument("bench needs exactly one of --input or --model");
  }
  if (cfg.repetitions < 1) throw InvalidArgument("--reps must be >= 1");
  require_writable_parent(cfg.records);

  CsrGraph g;
  std::string graph_id = cfg.graph_id;
  if (!cfg.input.empty()) {
    g = load_graph(cfg.input);
    if (graph_id.empty()) graph_id = fs::path(cfg.input).stem().string();
  } else {
    const GenSpec spec = build_spec(cfg.gen);
    g = generate(spec);
    if (graph_id.empty()) graph_id = default_graph_id(spec);
  }

  BenchOptions options;
  options.repetitions = cfg.repetitions;
  options.count = count_options(cfg);
  options.graph_id = graph_id;

  std::vector<BenchRecord> records;
  for (Algorithm a : usable_algorithms(cfg, g, err)) {
    BenchRecord r = run_benchmark(g, a, options);
    if (hooks.tamper) {
      TriangleCount tc{r.triangle_count, a, r.triangle_count, 1};
      hooks.tamper(tc);
      r.triangle_count = tc.count;
    }
    char line[256];
    std::snprintf(line, sizeof line,
                  "graph=%s algo=%s n_edges=%llu triangles=%llu "
                  "t_tri=%.6e rate=%.6e workers=%u%s\n",
                  r.graph_id.c_str(), r.algorithm.c_str(),
                  static_cast<unsigned long long>(r.n_edges),
                  static_cast<unsigned long long>(r.triangle_count),
                  r.t_tri_seconds, r.rate_eps, r.workers,
                  r.coarse_timer ? " coarse-timer" : "");
    out << line;
    records.push_back(std::move(r));
  }
  check_agreement(records);
  if (!cfg.records.empty()) append_records(records, cfg.records);
  return kExitOk;
}

std::string group_key(const BenchRecord& r, const std::string& group_by) {
  if (group_by == "algorithm") return r.algorithm;
  if (group_by == "algorithm-workers") {
    return r.algorithm + "@w" + std::to_string(r.workers);
  }
  if (group_by == "graph") return r.graph_id;
  return "all";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing " + path);
}

int cmd_fit(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  for (const auto* path : {&cfg.table, &cfg.table_csv, &cfg.plot}) {
    require_writable_parent(*path);
  }
  std::ifstream in(cfg.records, std::ios::binary);
  if (!in) throw IoError("cannot open " + cfg.records);
  const auto records = parse_records(in);

  std::map<std::string, std::vector<PerfPoint>> groups;
  for (const auto& r : records) {
    groups[group_key(r, cfg.group_by)].push_back(
        {static_cast<double>(r.n_edges), r.t_tri_seconds});
  }
  if (groups.empty()) throw DegenerateFit("records file holds no records");

  std::map<std::string, ModelFit> fits;
  std::ostringstream plot;
  plot << kPlotCsvHeader << '\n';
  for (const auto& [name, points] : groups) {
    try {
      if (cfg.breakpoint) {
        const double floor = cfg.min_edges.value_or(0.0);
        const PiecewiseFit pw = fit_piecewise(points, floor, *cfg.breakpoint);
        fits[name + ":below"] = pw.below;
        fits[name + ":above"] = pw.above;
        write_plot_rows(plot, name + ":above", points, pw.above);
      } else {
        const ModelFit fit = fit_loglog(points, cfg.min_edges);
        fits[name] = fit;
        write_plot_rows(plot, name, points, fit);
      }
    } catch (const DegenerateFit& e) {
      err << "error: group '" << name << "': " << e.what() << '\n';
      return kExitDegenerateFit;
    }
  }

  const std::string table = emit_fit_table(fits);
  if (cfg.table.empty()) {
    out << table;
  } else {
    write_file(cfg.table, table);
  }
  if (!cfg.table_csv.empty()) write_file(cfg.table_csv, emit_fit_csv(fits));
  if (!cfg.plot.empty()) write_file(cfg.plot, plot.str());
  return kExitOk;
}

void add_gen_flags(CLI::App* cmd, GenFlags& g) {
  cmd->add_option("--model", g.model, "Generator: er, kron or skron")
      ->check(CLI::IsMember({"er", "erdos_renyi", "kron", "kron_power",
                             "skron", "stochastic_kron"}));
  cmd->add_option("--n", g.n, "ER vertex count");
  cmd->add_option("--p", g.p, "ER edge probability");
  cmd->add_option("--seed-graph", g.seed_graph, "Kronecker seed edge list")
      ->check(CLI::ExistingFile);
  cmd->add_option("--k", g.power, "Kronecker power");
  cmd->add_option("--scale", g.scale, "Stochastic Kronecker scale (2^s vertices)");
  cmd->add_option("--edge-factor", g.edge_factor,
                  "Stochastic Kronecker edge samples per vertex");
  cmd->add_option("--initiator", g.initiator,
                  "2x2 initiator probabilities a,b,c,d")
      ->delimiter(',')
      ->expected(4);
  cmd->add_option("--rng-seed", g.rng_seed, "Generator seed");
}

void add_workers(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--workers", cfg.workers, "Kernel worker threads")
      ->envname(kWorkersEnvVar)
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, const CliHooks& hooks) {
  CliConfig cfg;
  CLI::App app{"Triangle counting kernels, benchmark harness and model fit",
               "trigauge"};
  app.set_config("--config", "", "TOML/INI file with flag defaults");
  app.require_subcommand(1, 1);

  auto* count = app.add_subcommand("count", "Count triangles in an edge list");
  count->add_option("--input,-i", cfg.input, "TSV edge list")
      ->required()
      ->check(CLI::ExistingFile);
  count->add_option("--algo", cfg.algorithms,
                    "adj2, lu, incidence, brute or all")
      ->delimiter(',');
  count->add_option("--oracle-limit", cfg.oracle_limit,
                    "Largest vertex count the brute oracle accepts");
  add_workers(count, cfg);

  auto* gen = app.add_subcommand("gen", "Generate a synthetic graph");
  add_gen_flags(gen, cfg.gen);
  gen->get_option("--model")->required();
  gen->add_option("--output,-o", cfg.output, "Output TSV path")->required();

  auto* bench = app.add_subcommand("bench", "Time counting kernels");
  bench->add_option("--input,-i", cfg.input, "TSV edge list")
      ->check(CLI::ExistingFile);
  add_gen_flags(bench, cfg.gen);
  bench->add_option("--algo", cfg.algorithms,
                    "adj2, lu, incidence, brute or all")
      ->delimiter(',')
      ->default_str("all");
  bench->add_option("--reps", cfg.repetitions, "Timed repetitions");
  bench->add_option("--records", cfg.records, "CSV file to append to");
  bench->add_option("--graph-id", cfg.graph_id, "Name stored in records");
  bench->add_option("--oracle-limit", cfg.oracle_limit,
                    "Largest vertex count the brute oracle accepts");
  add_workers(bench, cfg);

  auto* fit = app.add_subcommand("fit", "Fit T = (N_e/N_1)^beta to records");
  fit->add_option("--records", cfg.records, "Benchmark CSV")
      ->required()
      ->check(CLI::ExistingFile);
  fit->add_option("--min-edges", cfg.min_edges,
                  "Smallest N_e kept (default max(1e6, max N_e / 10))");
  fit->add_option("--breakpoint", cfg.breakpoint,
                  "Split each group into two fits at this N_e");
  fit->add_option("--group-by", cfg.group_by, "Record grouping")
      ->check(CLI::IsMember({"algorithm", "algorithm-workers", "graph", "all"}));
  fit->add_option("--table", cfg.table, "Aligned text table (default stdout)");
  fit->add_option("--table-csv", cfg.table_csv, "Fit table as CSV");
  fit->add_option("--plot", cfg.plot, "Plot data CSV");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidInput;
  }

  if (bench->parsed() && bench->get_option("--algo")->count() == 0) {
    cfg.algorithms = {"all"};
  }

  try {
    if (count->parsed()) return cmd_count(cfg, out, err, hooks);
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (bench->parsed()) return cmd_bench(cfg, out, err, hooks);
    if (fit->parsed()) return cmd_fit(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const OracleLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitOracleLimit;
  } catch (const KernelMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitKernelMismatch;
  } catch (const DegenerateFit& e) {
    err << "error: " << e.what() << '\n';
    return kExitDegenerateFit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitInvalidInput;
}

}  // namespace trigauge
