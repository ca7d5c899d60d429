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

#ifndef TRIGAUGE_MODELFIT_H_
#define TRIGAUGE_MODELFIT_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "trigauge/bench.h"

namespace trigauge {

// Power-law performance model T = (N_e / N_1)^beta, fitted in log10 space.

struct Fraction {
  int num = 1;
  int den = 1;

  double value() const { return static_cast<double>(num) / den; }
  // "1", "4/3", ...
  std::string str() const;
  bool operator==(const Fraction&) const = default;
};

// Exponents that appear among published fits; fitted slopes snap to these.
inline constexpr std::array<Fraction, 5> kBetaCandidates = {
    Fraction{1, 2}, Fraction{2, 3}, Fraction{1, 1}, Fraction{4, 3},
    Fraction{3, 2}};

// Nearest candidate; an exact tie (within 1e-12) goes to the smaller one.
Fraction snap_beta(double beta);

struct PerfPoint {
  double n_edges = 0.0;
  double t_seconds = 0.0;
};

struct ModelFit {
  // N_1 re-estimated with beta fixed at beta_snapped.
  double n1 = 0.0;
  Fraction beta_snapped;
  // Unconstrained least-squares slope and the N_1 it implies.
  double beta_raw = 0.0;
  double n1_raw = 0.0;
  double fit_min_edges = 0.0;
  double max_edges = 0.0;
  // RMS of log10 T residuals against the snapped model.
  double residual_rms = 0.0;
  std::uint64_t n_points = 0;
};

struct SotaLine {
  const char* label;
  double n1;
  Fraction beta;
};

inline constexpr SotaLine kSota2017{"sota2017", 1e8, Fraction{4, 3}};
inline constexpr SotaLine kSota2018{"sota2018", 1e9, Fraction{1, 1}};

// max(1e6, max N_e / 10): only the top decade of the measured range, and
// never below a million edges.
double default_min_edges(std::span<const PerfPoint> points);

// Throws DegenerateFit with fewer than two retained points or no spread in
// N_e, InvalidArgument for non-positive N_e or T. With no min_edges the
// default_min_edges() rule applies.
ModelFit fit_loglog(std::span<const PerfPoint> points,
                    std::optional<double> min_edges = std::nullopt);

// Two independent fits split at `breakpoint`: [min_edges, breakpoint) and
// [breakpoint, inf).
struct PiecewiseFit {
  ModelFit below;
  ModelFit above;
};
PiecewiseFit fit_piecewise(std::span<const PerfPoint> points,
                           double min_edges, double breakpoint);

double evaluate_model(const ModelFit& fit, double n_edges);
double evaluate_model(const SotaLine& line, double n_edges);

struct SotaComparison {
  std::string graph_id;
  std::string algorithm;
  std::uint64_t n_edges = 0;
  double t_tri_seconds = 0.0;
  // Predicted SOTA time over observed time; > 1 means faster than the line.
  double ratio_2017 = 0.0;
  double ratio_2018 = 0.0;
};

// Sorted by n_edges, ties kept in input order.
std::vector<SotaComparison> compare_sota(std::span<const BenchRecord> records);

std::vector<PerfPoint> to_points(std::span<const BenchRecord> records);

// "3e8": one significant digit.
std::string format_sci1(double x);
// "1.8e9": two significant digits.
std::string format_sci2(double x);

// Aligned text with columns submission, max N_e, N_1, beta.
std::string emit_fit_table(const std::map<std::string, ModelFit>& fits);
// Same rows as CSV at full precision, plus the raw slope and diagnostics.
std::string emit_fit_csv(const std::map<std::string, ModelFit>& fits);

inline constexpr char kPlotCsvHeader[] =
    "group,n_edges,observed_t,modeled_t,sota2017_t,sota2018_t";

// One row per point; writes no header.
void write_plot_rows(std::ostream& out, const std::string& group,
                     std::span<const PerfPoint> points, const ModelFit& fit);

}  // namespace trigauge

#endif  // TRIGAUGE_MODELFIT_H_
