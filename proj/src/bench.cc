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

#include "trigauge/bench.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "trigauge/error.h"

namespace trigauge {

bool BenchRecord::operator==(const BenchRecord& o) const {
  return graph_id == o.graph_id && n_edges == o.n_edges &&
         algorithm == o.algorithm && t_tri_seconds == o.t_tri_seconds &&
         rate_eps == o.rate_eps && repetitions == o.repetitions &&
         triangle_count == o.triangle_count &&
         timed_region == o.timed_region && workers == o.workers &&
         timestamp == o.timestamp;
}

double median(std::vector<double> samples) {
  if (samples.empty()) throw InvalidArgument("median of no samples");
  const std::size_t mid = samples.size() / 2;
  std::nth_element(samples.begin(), samples.begin() + mid, samples.end());
  const double upper = samples[mid];
  if (samples.size() % 2 == 1) return upper;
  const double lower =
      *std::max_element(samples.begin(), samples.begin() + mid);
  return lower + (upper - lower) / 2;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

BenchRecord run_benchmark(const CsrGraph& g, Algorithm algorithm,
                          const BenchOptions& options) {
  if (options.repetitions < 1) {
    throw InvalidArgument("repetitions must be >= 1");
  }
  using Clock = std::chrono::steady_clock;
  static_assert(Clock::is_steady);

  const PreparedKernel kernel(g, algorithm, options.count);
  std::vector<double> timings;
  timings.reserve(options.repetitions);
  std::uint64_t triangles = 0;
  for (std::uint64_t rep = 0; rep < options.repetitions; ++rep) {
    const auto start = Clock::now();
    if (options.inside_timer) options.inside_timer(rep);
    const TriangleCount result = kernel.run();
    const auto stop = Clock::now();
    if (rep > 0 && result.count != triangles) {
      throw KernelMismatch("kernel returned different counts across runs");
    }
    triangles = result.count;
    timings.push_back(std::chrono::duration<double>(stop - start).count());
  }

  const double tick = std::chrono::duration<double>(Clock::duration(1)).count();
  BenchRecord record;
  record.graph_id = options.graph_id;
  record.n_edges = g.n_edges();
  record.algorithm = std::string(to_string(algorithm));
  record.t_tri_seconds = median(std::move(timings));
  if (record.t_tri_seconds <= 0.0) {
    // Below clock resolution; report one tick rather than zero.
    record.t_tri_seconds = tick;
  }
  record.coarse_timer = tick > 0.01 * record.t_tri_seconds;
  record.rate_eps =
      static_cast<double>(record.n_edges) / record.t_tri_seconds;
  record.repetitions = options.repetitions;
  record.triangle_count = triangles;
  record.timed_region = "kernel";
  record.workers = std::max(1u, options.count.workers);
  record.timestamp = utc_timestamp();
  return record;
}

void check_agreement(std::span<const BenchRecord> records) {
  for (const auto& r : records) {
    if (r.triangle_count != records.front().triangle_count) {
      throw KernelMismatch(
          "kernels disagree on " + r.graph_id + ": " +
          records.front().algorithm + "=" +
          std::to_string(records.front().triangle_count) + " vs " +
          r.algorithm + "=" + std::to_string(r.triangle_count));
    }
  }
}

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// RFC 4180 quoting, applied only when needed. Records are line oriented, so
// embedded line breaks are rejected rather than quoted.
std::string quote(const std::string& field) {
  if (field.find_first_of("\n\r") != std::string::npos) {
    throw InvalidArgument("record field contains a line break");
  }
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line,
                                        std::uint64_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  return fields;
}

template <typename T>
T parse_field(const std::string& s, std::uint64_t line_no, const char* name) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line_no, std::string("bad ") + name + " '" + s + "'");
  }
  return value;
}

}  // namespace

void emit_records(std::span<const BenchRecord> records, std::ostream& out,
                  bool write_header) {
  if (records.empty()) throw InvalidArgument("no records to emit");
  if (write_header) out << kBenchCsvHeader << '\n';
  for (const auto& r : records) {
    out << quote(r.graph_id) << ',' << r.n_edges << ',' << quote(r.algorithm)
        << ',' << format_double(r.t_tri_seconds) << ','
        << format_double(r.rate_eps) << ',' << r.repetitions << ','
        << r.triangle_count << ',' << quote(r.timed_region) << ','
        << r.workers << ',' << quote(r.timestamp) << '\n';
    if (!out) throw IoError("failed to write benchmark record");
  }
  out.flush();
  if (!out) throw IoError("failed to flush benchmark records");
}

void append_records(std::span<const BenchRecord> records,
                    const std::filesystem::path& path) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) ||
                     std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot open " + path.string() + " for append");
  emit_records(records, out, fresh);
}

std::vector<BenchRecord> parse_records(std::istream& in) {
  std::string line;
  std::uint64_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(0, "empty records file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kBenchCsvHeader) {
    throw ParseError(1, "unexpected records header");
  }
  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = split_csv_line(line, line_no);
    if (f.size() != 10) {
      throw ParseError(line_no, "expected 10 fields, found " +
                                    std::to_string(f.size()));
    }
    BenchRecord r;
    r.graph_id = f[0];
    r.n_edges = parse_field<std::uint64_t>(f[1], line_no, "n_edges");
    r.algorithm = f[2];
    r.t_tri_seconds = parse_field<double>(f[3], line_no, "t_tri_seconds");
    r.rate_eps = parse_field<double>(f[4], line_no, "rate_eps");
    r.repetitions = parse_field<std::uint64_t>(f[5], line_no, "repetitions");
    r.triangle_count =
        parse_field<std::uint64_t>(f[6], line_no, "triangle_count");
    r.timed_region = f[7];
    r.workers = parse_field<unsigned>(f[8], line_no, "workers");
    r.timestamp = f[9];
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace trigauge
