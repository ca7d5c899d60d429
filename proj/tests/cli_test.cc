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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.h"
#include "trigauge/bench.h"

namespace trigauge {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("trigauge_cli_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const CliHooks& hooks = {}) {
  args.insert(args.begin(), "trigauge");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

void write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST_CASE("count on the two-triangle fixture") {
  TempDir dir;
  write(dir.file("g.tsv"), testing::kTwoTriangleTsv);
  const Run r = run({"count", "--input", dir.file("g.tsv"), "--algo", "adj2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "triangles=2 algo=adj2 n_edges=5\n");
}

TEST_CASE("count --algo all prints four agreeing lines") {
  TempDir dir;
  write(dir.file("g.tsv"), testing::kTwoTriangleTsv);
  const Run r = run({"count", "-i", dir.file("g.tsv"), "--algo", "all"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "triangles=2 algo=adj2 n_edges=5\n"
        "triangles=2 algo=lu n_edges=5\n"
        "triangles=2 algo=incidence n_edges=5\n"
        "triangles=2 algo=brute n_edges=5\n");
}

TEST_CASE("count on a graph with no edges left after canonicalization") {
  TempDir dir;
  write(dir.file("loops.tsv"), "1 1\n2 2\n");
  const Run r = run({"count", "-i", dir.file("loops.tsv")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "triangles=0 algo=adj2 n_edges=0\n");
}

TEST_CASE("count error exits") {
  TempDir dir;
  write(dir.file("bad.tsv"), "1 2\n2 x\n");
  Run r = run({"count", "-i", dir.file("bad.tsv")});
  CHECK(r.code == kExitInvalidInput);
  CHECK(r.err.find("line 2") != std::string::npos);

  write(dir.file("big.tsv"), "0 1\n1 2\n2 3\n3 4\n");
  r = run({"count", "-i", dir.file("big.tsv"), "--algo", "brute",
           "--oracle-limit", "3"});
  CHECK(r.code == kExitOracleLimit);
  // "all" drops the oracle instead of failing.
  r = run({"count", "-i", dir.file("big.tsv"), "--algo", "all",
           "--oracle-limit", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("skipping brute") != std::string::npos);

  r = run({"count", "-i", dir.file("missing.tsv")});
  CHECK(r.code == kExitInvalidInput);
  r = run({"count", "-i", dir.file("big.tsv"), "--algo", "nope"});
  CHECK(r.code == kExitInvalidInput);
  r = run({});
  CHECK(r.code == kExitInvalidInput);
}

TEST_CASE("count with a tampered kernel trips the mismatch exit") {
  TempDir dir;
  write(dir.file("g.tsv"), testing::kTwoTriangleTsv);
  CliHooks hooks;
  hooks.tamper = [](TriangleCount& c) {
    if (c.algorithm == Algorithm::kLu) ++c.count;
  };
  const Run r = run({"count", "-i", dir.file("g.tsv"), "--algo", "all"}, hooks);
  CHECK(r.code == kExitKernelMismatch);
}

TEST_CASE("gen writes TSV and metadata deterministically") {
  TempDir dir;
  Run r = run({"gen", "--model", "er", "--n", "64", "--p", "0", "--rng-seed",
               "3", "-o", dir.file("er0.tsv")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n_edges=0 n_vertices=64\n");
  const auto meta = nlohmann::json::parse(slurp(dir.file("er0.tsv.meta.json")));
  CHECK(meta["model"] == "erdos_renyi");
  CHECK(meta["n_vertices"] == 64);
  CHECK(meta["n_edges"] == 0);
  CHECK(meta["rng_seed"] == 3);
  CHECK(meta["parameters"]["n"] == 64);

  const std::vector<std::string> skron{
      "gen", "--model", "skron", "--scale", "8", "--edge-factor", "8",
      "--initiator", "0.45,0.15,0.15,0.25", "--rng-seed", "11", "-o"};
  auto a = skron;
  a.push_back(dir.file("a.tsv"));
  auto b = skron;
  b.push_back(dir.file("b.tsv"));
  CHECK(run(a).code == kExitOk);
  CHECK(run(b).code == kExitOk);
  CHECK(slurp(dir.file("a.tsv")) == slurp(dir.file("b.tsv")));
  CHECK(slurp(dir.file("a.tsv.meta.json")) == slurp(dir.file("b.tsv.meta.json")));
  CHECK_FALSE(slurp(dir.file("a.tsv")).empty());
}

TEST_CASE("gen kron from K3 squared then count six triangles") {
  TempDir dir;
  write(dir.file("k3.tsv"), "0 1\n1 2\n0 2\n");
  Run r = run({"gen", "--model", "kron", "--seed-graph", dir.file("k3.tsv"),
               "--k", "2", "-o", dir.file("k9.tsv")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n_edges=18 n_vertices=9\n");
  r = run({"count", "-i", dir.file("k9.tsv"), "--algo", "all"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("triangles=6 algo=brute") != std::string::npos);
}

TEST_CASE("gen rejects invalid specs") {
  TempDir dir;
  CHECK(run({"gen", "--model", "er", "--n", "10", "--p", "2", "-o",
             dir.file("x.tsv")})
            .code == kExitInvalidInput);
  CHECK(run({"gen", "--model", "kron", "--k", "2", "-o", dir.file("x.tsv")})
            .code == kExitInvalidInput);
  CHECK(run({"gen", "--model", "skron", "--scale", "3", "--initiator",
             "0.5,0.5,0.5,0.5", "-o", dir.file("x.tsv")})
            .code == kExitInvalidInput);
  CHECK(run({"gen", "--model", "bter", "-o", dir.file("x.tsv")}).code ==
        kExitInvalidInput);
  CHECK(run({"gen", "--model", "er", "--n", "4", "--p", "0.5", "-o",
             dir.file("no/such/dir/x.tsv")})
            .code == kExitIo);
}

TEST_CASE("bench appends agreeing records") {
  TempDir dir;
  write(dir.file("g.tsv"), testing::kTwoTriangleTsv);
  const std::string records = dir.file("records.csv");
  Run r = run({"bench", "-i", dir.file("g.tsv"), "--reps", "1", "--records",
               records});
  CHECK(r.code == kExitOk);
  r = run({"bench", "-i", dir.file("g.tsv"), "--reps", "5", "--records",
           records, "--workers", "2"});
  CHECK(r.code == kExitOk);
  std::ifstream in(records);
  const auto parsed = parse_records(in);
  REQUIRE(parsed.size() == 8);
  for (const auto& rec : parsed) {
    CHECK(rec.triangle_count == 2);
    CHECK(rec.graph_id == "g");
    CHECK(rec.timed_region == "kernel");
  }
  CHECK(parsed[0].repetitions == 1);
  CHECK(parsed[4].repetitions == 5);
  CHECK(parsed[4].workers == 2);
}

TEST_CASE("bench from a generator spec") {
  TempDir dir;
  const Run r = run({"bench", "--model", "skron", "--scale", "6",
                     "--edge-factor", "8", "--reps", "1", "--algo", "adj2,lu"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("graph=skron-s6-ef8-seed0 algo=adj2") != std::string::npos);
  CHECK(r.out.find("algo=lu") != std::string::npos);
  CHECK(run({"bench", "--reps", "1"}).code == kExitInvalidInput);
}

TEST_CASE("bench trips on a disagreeing kernel and writes nothing") {
  TempDir dir;
  write(dir.file("g.tsv"), testing::kTwoTriangleTsv);
  CliHooks hooks;
  hooks.tamper = [](TriangleCount& c) {
    if (c.algorithm == Algorithm::kIncidence) c.count += 3;
  };
  const Run r = run({"bench", "-i", dir.file("g.tsv"), "--reps", "1",
                     "--records", dir.file("r.csv")},
                    hooks);
  CHECK(r.code == kExitKernelMismatch);
  CHECK_FALSE(fs::exists(dir.file("r.csv")));
}

std::string synthetic_records(double n1, double beta) {
  std::ostringstream csv;
  csv << kBenchCsvHeader << '\n';
  for (std::uint64_t ne : {1000000ULL, 10000000ULL, 100000000ULL,
                           1000000000ULL}) {
    char t[64];
    std::snprintf(t, sizeof t, "%.17g",
                  std::pow(static_cast<double>(ne) / n1, beta));
    csv << "g" << ne << ',' << ne << ",adj2," << t << ",1,1,0,kernel,1,"
        << "2026-01-01T00:00:00Z\n";
  }
  return csv.str();
}

TEST_CASE("fit produces table, CSV and plot data") {
  TempDir dir;
  write(dir.file("lin.csv"), synthetic_records(1e9, 1.0));
  Run r = run({"fit", "--records", dir.file("lin.csv"), "--min-edges", "1e6",
               "--table-csv", dir.file("fit.csv"), "--plot",
               dir.file("plot.csv")});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "Submission  max N_e  N_1  beta\n"
        "adj2        1.0e9    1e9  1\n");
  CHECK(slurp(dir.file("fit.csv")).find("adj2,1000000000,") !=
        std::string::npos);
  const std::string plot = slurp(dir.file("plot.csv"));
  CHECK(plot.rfind("group,n_edges,observed_t,modeled_t,sota2017_t,sota2018_t\n",
                   0) == 0);
  CHECK(std::count(plot.begin(), plot.end(), '\n') == 5);

  write(dir.file("old.csv"), synthetic_records(1e8, 4.0 / 3.0));
  r = run({"fit", "--records", dir.file("old.csv"), "--min-edges", "1e6",
           "--table", dir.file("table.txt")});
  CHECK(r.code == kExitOk);
  CHECK(slurp(dir.file("table.txt")).find("1e8  4/3") != std::string::npos);
}

TEST_CASE("fit with default threshold and breakpoint") {
  TempDir dir;
  write(dir.file("lin.csv"), synthetic_records(1e9, 1.0));
  // Default threshold keeps only 1e8 and 1e9.
  Run r = run({"fit", "--records", dir.file("lin.csv"), "--table-csv",
               dir.file("fit.csv")});
  CHECK(r.code == kExitOk);
  CHECK(slurp(dir.file("fit.csv")).find(",2\n") != std::string::npos);
  r = run({"fit", "--records", dir.file("lin.csv"), "--min-edges", "0",
           "--breakpoint", "5e7"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("adj2:above") != std::string::npos);
  CHECK(r.out.find("adj2:below") != std::string::npos);
}

TEST_CASE("fit on a single-record group exits 5 naming the group") {
  TempDir dir;
  write(dir.file("one.csv"), std::string(kBenchCsvHeader) +
                                 "\ng,5000000,lu,0.5,1e7,1,0,kernel,1,t\n");
  const Run r = run({"fit", "--records", dir.file("one.csv")});
  CHECK(r.code == kExitDegenerateFit);
  CHECK(r.err.find("'lu'") != std::string::npos);
}

TEST_CASE("config file supplies defaults that flags override") {
  TempDir dir;
  write(dir.file("g.tsv"), testing::kTwoTriangleTsv);
  write(dir.file("cfg.toml"), "[count]\nalgo = \"lu\"\ninput = \"" +
                                  dir.file("g.tsv") + "\"\n");
  Run r = run({"--config", dir.file("cfg.toml"), "count"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "triangles=2 algo=lu n_edges=5\n");
  r = run({"--config", dir.file("cfg.toml"), "count", "--algo", "incidence"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "triangles=2 algo=incidence n_edges=5\n");
}

TEST_CASE("worker count falls back to the environment") {
  TempDir dir;
  write(dir.file("g.tsv"), testing::kTwoTriangleTsv);
  ::setenv(kWorkersEnvVar, "3", 1);
  const Run r = run({"bench", "-i", dir.file("g.tsv"), "--reps", "1",
                     "--algo", "adj2"});
  ::unsetenv(kWorkersEnvVar);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("workers=3") != std::string::npos);
}

}  // namespace
}  // namespace trigauge
