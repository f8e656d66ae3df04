// Copyright 2026 <project authors>
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

#include "uqm/figures.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "uqm/coherent.hpp"
#include "uqm/comparison.hpp"

namespace uqm {

namespace {

constexpr double kPi = 3.14159265358979323846;

double parse_number(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw Error(ErrorKind::argument, "not a number: '" + s + "'");
  return v;
}

Range range_or(const FigureOptions& opt, double lo, double hi, double step) {
  return opt.range ? *opt.range : Range{lo, hi, step};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<int> rounds_or(const FigureOptions& opt, std::vector<int> fallback) {
  const std::vector<int>& r = opt.rounds.empty() ? fallback : opt.rounds;
  for (int n : r)
    if (n < 1) throw Error(ErrorKind::argument, "round numbers must be positive");
  return r;
}

Table fig_comparison_overlap(const FigureOptions& opt) {
  const std::vector<int> ks{1, 2, 5};
  Table t;
  t.columns.push_back("x [squared overlap]");
  for (int k : ks) t.columns.push_back("P_pure_k" + std::to_string(k) + " [probability]");
  for (int k : ks) t.columns.push_back("P_coherent_k" + std::to_string(k) + " [probability]");
  for (double x : range_or(opt, 0.0, 1.0, 0.01).points()) {
    if (x < 0.0 || x > 1.0) throw Error(ErrorKind::argument, "squared overlap must lie in [0,1]");
    std::vector<double> row{x};
    for (int k : ks) row.push_back(compare_prob_pure(k, k, x));
    // |<a1|a2>|^2 = exp(-|a1-a2|^2)
    const double delta2 = x > 0.0 ? -std::log(x) : std::numeric_limits<double>::max();
    for (int k : ks) row.push_back(compare_coherent_closed(k, k, delta2));
    t.rows.push_back(row);
  }
  return t;
}

Table fig_comparison_dimension(const FigureOptions& opt) {
  const std::vector<int> ks{1, 2, 5};
  Table t;
  t.columns.push_back("d [dimension]");
  for (int k : ks) t.columns.push_back("P_mean_k" + std::to_string(k) + " [probability]");
  for (double dv : range_or(opt, 2.0, 20.0, 1.0).points()) {
    const int d = static_cast<int>(std::lround(dv));
    if (d < 1 || std::abs(dv - d) > 1e-9) throw Error(ErrorKind::argument, "dimension must be a positive integer");
    std::vector<double> row{static_cast<double>(d)};
    for (int k : ks) row.push_back(compare_avg_success({d, k, k, 1.0}));
    t.rows.push_back(row);
  }
  return t;
}

Table fig_ui_strategies(const FigureOptions& opt) {
  Table t;
  t.columns = {"delta [|alpha1-alpha2|]", "P_sb [probability]", "P_opt [probability]", "P_bs [probability]",
               "P_known [probability]"};
  for (double delta : range_or(opt, 0.0, 3.0, 0.05).points()) {
    const double d2 = delta * delta;
    t.rows.push_back({delta, p_swap_based_coherent(d2), p_optimal_universal_coherent(d2), p_beamsplitter_coherent(d2),
                      p_known_coherent(d2)});
  }
  return t;
}

Table fig_recovery_rounds(const FigureOptions& opt) {
  const std::vector<int> rounds = rounds_or(opt, {1, 20, 40, 60, 80});
  int last = 1;
  for (int r : rounds) last = std::max(last, r);
  Table t;
  t.columns.push_back("delta [|alpha1-alpha2|]");
  for (int r : rounds) t.columns.push_back("P_round_" + std::to_string(r) + " [probability]");
  for (double delta : range_or(opt, 0.0, 8.0, 0.05).points()) {
    const std::vector<double> p = multi_round_success(last, delta * delta);
    std::vector<double> row{delta};
    for (int r : rounds) row.push_back(p[static_cast<size_t>(r - 1)]);
    t.rows.push_back(row);
  }
  return t;
}

Table fig_recovery_vs_splitting(const FigureOptions& opt) {
  const std::vector<int> rounds = rounds_or(opt, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  int last = 1;
  for (int r : rounds) last = std::max(last, r);
  Table t;
  t.columns.push_back("delta [|alpha1-alpha2|]");
  for (int r : rounds) t.columns.push_back("dP_N" + std::to_string(r) + " [probability]");
  for (double delta : range_or(opt, 0.0, 6.0, 0.05).points()) {
    const double d2 = delta * delta;
    const std::vector<double> p = multi_round_success(last, d2);
    std::vector<double> row{delta};
    for (int r : rounds) row.push_back(p[static_cast<size_t>(r - 1)] - splitting_strategy(r, d2));
    t.rows.push_back(row);
  }
  return t;
}

Table fig_reliability(const FigureOptions& opt) {
  const std::vector<double> sigmas{0.1, 0.25, 0.5, 1.0};
  Table t;
  t.columns.push_back("xi [amplitude]");
  for (double s : sigmas) t.columns.push_back("R_sigma_" + fmt(s) + " [probability]");
  for (double xi : range_or(opt, 0.05, 3.0, 0.05).points()) {
    std::vector<double> row{xi};
    for (double s : sigmas) row.push_back(reliability(1, 1, s, xi));
    t.rows.push_back(row);
  }
  return t;
}

Table fig_noisy_averages(const FigureOptions& opt) {
  const double sigma = 0.25;
  Table t;
  t.columns = {"xi [amplitude]", "R [probability]", "P_success [probability]", "P_error [probability]",
               "P_failure [probability]"};
  for (double xi : range_or(opt, 0.05, 3.0, 0.05).points()) {
    const NoisyAverages a = noisy_averages(1, 1, sigma, xi);
    t.rows.push_back({xi, reliability(1, 1, sigma, xi), a.success, a.error, a.failure});
  }
  return t;
}

// Conclusive probability for equal priors with the T0 = 1/2 setup.
double conclusive(double gamma, double i1, double i2, double phase_rad) {
  const auto p = detector_curves(0.5, gamma, std::sqrt(i1), std::polar(std::sqrt(i2), phase_rad));
  return 0.5 * (p.first + p.second);
}

Table fig_phase_equal(const FigureOptions& opt) {
  const std::vector<double> intensities{0.5, 1.33, 3.0};
  Table t;
  t.columns.push_back("phase [deg]");
  for (double i : intensities) t.columns.push_back("P_I" + fmt(i) + " [probability]");
  for (double ph : range_or(opt, 0.0, 360.0, 5.0).points()) {
    std::vector<double> row{ph};
    for (double i : intensities) row.push_back(conclusive(opt.gamma, i, i, ph * kPi / 180.0));
    t.rows.push_back(row);
  }
  return t;
}

Table fig_phase_unequal(const FigureOptions& opt) {
  const double i1 = 1.33, i2 = 0.5;
  Table t;
  t.columns = {"phase [deg]", "p1 [probability]", "p2 [probability]", "P [probability]"};
  for (double ph : range_or(opt, 0.0, 360.0, 5.0).points()) {
    const auto p = detector_curves(0.5, opt.gamma, std::sqrt(i1), std::polar(std::sqrt(i2), ph * kPi / 180.0));
    t.rows.push_back({ph, p.first, p.second, 0.5 * (p.first + p.second)});
  }
  return t;
}

Table fig_intensity(const FigureOptions& opt) {
  Table t;
  t.columns = {"intensity [photons/pulse]", "P_detector [probability]", "P_ideal [probability]"};
  for (double i : range_or(opt, 0.0, 3.0, 0.05).points()) {
    if (i < 0.0) throw Error(ErrorKind::argument, "intensity must be non-negative");
    t.rows.push_back({i, conclusive(opt.gamma, i, i, kPi), conclusive(1.0, i, i, kPi)});
  }
  return t;
}

Table fig_intensity_ratio(const FigureOptions& opt) {
  const double i1 = 1.33;
  Table t;
  t.columns = {"ratio [|alpha2|^2/|alpha1|^2]", "P_phase180 [probability]", "P_phase0 [probability]"};
  for (double r : range_or(opt, 0.0, 4.0, 0.05).points()) {
    if (r < 0.0) throw Error(ErrorKind::argument, "intensity ratio must be non-negative");
    t.rows.push_back({r, conclusive(opt.gamma, i1, r * i1, kPi), conclusive(opt.gamma, i1, r * i1, 0.0)});
  }
  return t;
}

using Builder = Table (*)(const FigureOptions&);

const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> r{
      {"4.3", fig_comparison_overlap},     {"4.4", fig_comparison_dimension}, {"4.8", fig_ui_strategies},
      {"4.15", fig_recovery_rounds},       {"4.16", fig_recovery_vs_splitting}, {"4.17", fig_reliability},
      {"4.18", fig_noisy_averages},        {"C.2", fig_phase_equal},           {"C.3", fig_phase_unequal},
      {"C.4", fig_intensity},              {"C.5", fig_intensity_ratio},
  };
  return r;
}

}  // namespace

std::vector<double> Range::points() const {
  if (!(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
    throw Error(ErrorKind::argument, "range needs lo <= hi and step > 0");
  const double count = std::floor((hi - lo) / step + 1e-9);
  if (count > 1e6) throw Error(ErrorKind::size, "range has too many points");
  std::vector<double> out;
  for (long i = 0; i <= static_cast<long>(count); ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

Range parse_range(const std::string& text) {
  const size_t a = text.find(':');
  const size_t b = a == std::string::npos ? a : text.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos || text.find(':', b + 1) != std::string::npos)
    throw Error(ErrorKind::argument, "range must look like lo:hi:step");
  Range r{parse_number(text.substr(0, a)), parse_number(text.substr(a + 1, b - a - 1)), parse_number(text.substr(b + 1))};
  r.points();
  return r;
}

std::vector<std::string> figure_ids() {
  std::vector<std::string> ids;
  for (const auto& kv : registry()) ids.push_back(kv.first);
  return ids;
}

Table figure_table(const std::string& id, const FigureOptions& opt) {
  const auto& r = registry();
  const auto it = r.find(id);
  if (it == r.end()) throw Error(ErrorKind::argument, "unknown figure '" + id + "'");
  if (!(opt.gamma >= 0.0 && opt.gamma <= 1.0)) throw Error(ErrorKind::argument, "gamma must lie in [0,1]");
  Table t = it->second(opt);
  for (const auto& row : t.rows)
    for (double v : row)
      if (!std::isfinite(v)) throw Error(ErrorKind::numeric, "figure " + id + " produced a non-finite value");
  return t;
}

std::string to_csv(const Table& t) {
  std::string out;
  for (size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + fmt(row[i]);
    out += '\n';
  }
  return out;
}

}  // namespace uqm
