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

#ifndef TRIGAUGE_BENCH_H_
#define TRIGAUGE_BENCH_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "trigauge/graph.h"
#include "trigauge/tricount.h"

namespace trigauge {

// One timing measurement. rate_eps is always n_edges / t_tri_seconds.
struct BenchRecord {
  std::string graph_id;
  std::uint64_t n_edges = 0;
  std::string algorithm;
  double t_tri_seconds = 0.0;
  double rate_eps = 0.0;
  std::uint64_t repetitions = 1;
  std::uint64_t triangle_count = 0;
  // What the timer covered. Always "kernel" for records produced here.
  std::string timed_region = "kernel";
  unsigned workers = 1;
  std::string timestamp;
  // Set when the clock tick exceeds 1% of the measured time. Not persisted.
  bool coarse_timer = false;

  bool operator==(const BenchRecord& other) const;
};

inline constexpr char kBenchCsvHeader[] =
    "graph_id,n_edges,algorithm,t_tri_seconds,rate_eps,repetitions,"
    "triangle_count,timed_region,workers,timestamp";

struct BenchOptions {
  std::uint64_t repetitions = 5;
  CountOptions count;
  std::string graph_id = "graph";
  // Called inside the timed region before each repetition's kernel call.
  // Lets tests inject a slow repetition; leave empty otherwise.
  std::function<void(std::uint64_t repetition)> inside_timer;
};

double median(std::vector<double> samples);

// Times `algorithm` on g. Auxiliary structures are built before timing
// starts; t_tri_seconds is the median over the repetitions.
BenchRecord run_benchmark(const CsrGraph& g, Algorithm algorithm,
                          const BenchOptions& options);

// Throws KernelMismatch unless every record carries the same triangle count.
void check_agreement(std::span<const BenchRecord> records);

// Writes the header when `write_header` is set, then one line per record,
// and flushes. Throws IoError on a failed write; lines already written stay.
void emit_records(std::span<const BenchRecord> records, std::ostream& out,
                  bool write_header);

// Appends to `path`, writing the header only if the file is new or empty.
void append_records(std::span<const BenchRecord> records,
                    const std::filesystem::path& path);

// Parses a CSV written by emit_records. Throws ParseError.
std::vector<BenchRecord> parse_records(std::istream& in);

std::string utc_timestamp();

}  // namespace trigauge

#endif  // TRIGAUGE_BENCH_H_
