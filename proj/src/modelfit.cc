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

#include "trigauge/modelfit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "trigauge/error.h"

namespace trigauge {

std::string Fraction::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Fraction snap_beta(double beta) {
  Fraction best = kBetaCandidates.front();
  double best_distance = std::abs(beta - best.value());
  for (const Fraction& c : kBetaCandidates) {
    const double d = std::abs(beta - c.value());
    if (d < best_distance - 1e-12) {
      best = c;
      best_distance = d;
    }
  }
  return best;
}

double default_min_edges(std::span<const PerfPoint> points) {
  double max_edges = 0.0;
  for (const auto& p : points) max_edges = std::max(max_edges, p.n_edges);
  return std::max(1e6, max_edges / 10.0);
}

ModelFit fit_loglog(std::span<const PerfPoint> points,
                    std::optional<double> min_edges) {
  for (const auto& p : points) {
    if (!(p.n_edges > 0.0)) throw InvalidArgument("N_e must be positive");
    if (!(p.t_seconds > 0.0)) throw InvalidArgument("T_tri must be positive");
  }
  const double threshold = min_edges.value_or(default_min_edges(points));

  std::vector<double> xs;
  std::vector<double> ys;
  double max_edges = 0.0;
  for (const auto& p : points) {
    if (p.n_edges < threshold) continue;
    xs.push_back(std::log10(p.n_edges));
    ys.push_back(std::log10(p.t_seconds));
    max_edges = std::max(max_edges, p.n_edges);
  }
  const auto n = xs.size();
  if (n < 2) {
    throw DegenerateFit("degenerate fit: " + std::to_string(n) +
                        " point(s) with N_e >= " + format_sci2(threshold));
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) throw DegenerateFit("degenerate fit: all N_e are equal");

  ModelFit fit;
  fit.beta_raw = sxy / sxx;
  // log10 T = beta * (log10 N_e - log10 N_1)
  fit.n1_raw = std::pow(10.0, mean_x - mean_y / fit.beta_raw);
  fit.beta_snapped = snap_beta(fit.beta_raw);
  const double beta = fit.beta_snapped.value();
  const double log_n1 = mean_x - mean_y / beta;
  fit.n1 = std::pow(10.0, log_n1);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - beta * (xs[i] - log_n1);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(n));
  fit.fit_min_edges = threshold;
  fit.max_edges = max_edges;
  fit.n_points = n;
  return fit;
}

PiecewiseFit fit_piecewise(std::span<const PerfPoint> points,
                           double min_edges, double breakpoint) {
  std::vector<PerfPoint> below;
  std::vector<PerfPoint> above;
  for (const auto& p : points) {
    (p.n_edges < breakpoint ? below : above).push_back(p);
  }
  return {fit_loglog(below, min_edges),
          fit_loglog(above, std::max(min_edges, breakpoint))};
}

double evaluate_model(const ModelFit& fit, double n_edges) {
  return std::pow(n_edges / fit.n1, fit.beta_snapped.value());
}

double evaluate_model(const SotaLine& line, double n_edges) {
  return std::pow(n_edges / line.n1, line.beta.value());
}

std::vector<SotaComparison> compare_sota(
    std::span<const BenchRecord> records) {
  if (records.empty()) throw InvalidArgument("no records to compare");
  std::vector<SotaComparison> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    const auto ne = static_cast<double>(r.n_edges);
    out.push_back({r.graph_id, r.algorithm, r.n_edges, r.t_tri_seconds,
                   evaluate_model(kSota2017, ne) / r.t_tri_seconds,
                   evaluate_model(kSota2018, ne) / r.t_tri_seconds});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.n_edges < b.n_edges;
  });
  return out;
}

std::vector<PerfPoint> to_points(std::span<const BenchRecord> records) {
  std::vector<PerfPoint> points;
  points.reserve(records.size());
  for (const auto& r : records) {
    points.push_back({static_cast<double>(r.n_edges), r.t_tri_seconds});
  }
  return points;
}

namespace {

std::string format_sci(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
  }
  // %e already rounds the mantissa and carries into the exponent.
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  std::string s(buf);
  const auto e = s.find('e');
  const std::string mantissa = s.substr(0, e);
  const int exponent = std::stoi(s.substr(e + 1));
  return mantissa + "e" + std::to_string(exponent);
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string format_sci1(double x) { return format_sci(x, 1); }
std::string format_sci2(double x) { return format_sci(x, 2); }

std::string emit_fit_table(const std::map<std::string, ModelFit>& fits) {
  if (fits.empty()) throw InvalidArgument("no fits to tabulate");
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"Submission", "max N_e", "N_1", "beta"});
  for (const auto& [name, fit] : fits) {
    rows.push_back({name, format_sci2(fit.max_edges), format_sci1(fit.n1),
                    fit.beta_snapped.str()});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) {
      line += c + 1 < 4 ? pad(row[c], width[c] + 2) : row[c];
    }
    out << line << '\n';
  }
  return out.str();
}

std::string emit_fit_csv(const std::map<std::string, ModelFit>& fits) {
  if (fits.empty()) throw InvalidArgument("no fits to tabulate");
  std::ostringstream out;
  out << "submission,max_n_edges,n1,beta,beta_raw,n1_raw,fit_min_edges,"
         "residual_rms,n_points\n";
  for (const auto& [name, fit] : fits) {
    out << name << ',' << format_full(fit.max_edges) << ','
        << format_full(fit.n1) << ',' << fit.beta_snapped.str() << ','
        << format_full(fit.beta_raw) << ',' << format_full(fit.n1_raw) << ','
        << format_full(fit.fit_min_edges) << ','
        << format_full(fit.residual_rms) << ',' << fit.n_points << '\n';
  }
  return out.str();
}

void write_plot_rows(std::ostream& out, const std::string& group,
                     std::span<const PerfPoint> points, const ModelFit& fit) {
  std::vector<PerfPoint> sorted(points.begin(), points.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) {
                     return a.n_edges < b.n_edges;
                   });
  for (const auto& p : sorted) {
    out << group << ',' << format_full(p.n_edges) << ','
        << format_full(p.t_seconds) << ','
        << format_full(evaluate_model(fit, p.n_edges)) << ','
        << format_full(evaluate_model(kSota2017, p.n_edges)) << ','
        << format_full(evaluate_model(kSota2018, p.n_edges)) << '\n';
  }
}

}  // namespace trigauge
