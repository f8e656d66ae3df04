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

// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "uqm/uqm.h"

namespace {

constexpr int kUsageError = 2;
constexpr int kNumericError = 3;

struct Globals {
  std::uint64_t seed = 42;
  std::string out;
  std::string format;  // empty = command default
};

// Owns a result handle.
struct Result {
  uqm_result* r = nullptr;
  ~Result() { uqm_result_destroy(r); }
};

int fail(uqm_status s) {
  std::cerr << "error (" << uqm_status_name(s) << "): " << uqm_last_error() << "\n";
  return s == UQM_ERR_ARGUMENT || s == UQM_ERR_NULL ? kUsageError : kNumericError;
}

nlohmann::ordered_json meta(const Globals& g) {
  return {{"seed", g.seed}, {"tolerance", uqm_get_tolerance()}, {"version", uqm_version()}};
}

int emit(const Globals& g, const std::string& body) {
  if (g.out.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << g.out << " for writing\n";
    return kNumericError;
  }
  f << body;
  return f ? 0 : kNumericError;
}

// Flat object of named numbers and strings plus "meta".
int emit_values(const Globals& g, const uqm_result* r) {
  const std::string fmt = g.format.empty() ? "json" : g.format;
  if (fmt == "csv") {
    std::ostringstream s;
    s << "name,value\n";
    s.precision(12);
    for (size_t i = 0; i < uqm_result_value_count(r); ++i)
      s << uqm_result_value_name(r, i) << "," << uqm_result_value_at(r, i) << "\n";
    for (size_t i = 0; i < uqm_result_string_count(r); ++i)
      s << uqm_result_string_name(r, i) << "," << uqm_result_string_at(r, i) << "\n";
    return emit(g, s.str());
  }
  nlohmann::ordered_json j;
  for (size_t i = 0; i < uqm_result_value_count(r); ++i) j[uqm_result_value_name(r, i)] = uqm_result_value_at(r, i);
  for (size_t i = 0; i < uqm_result_string_count(r); ++i) j[uqm_result_string_name(r, i)] = uqm_result_string_at(r, i);
  j["meta"] = meta(g);
  return emit(g, j.dump(2) + "\n");
}

int emit_table(const Globals& g, const uqm_result* r) {
  const std::string fmt = g.format.empty() ? "csv" : g.format;
  if (fmt == "csv") return emit(g, uqm_result_text(r));
  nlohmann::ordered_json j;
  for (size_t c = 0; c < uqm_result_columns(r); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (size_t row = 0; row < uqm_result_rows(r); ++row) col.push_back(uqm_result_cell(r, row, c));
    j[uqm_result_column_name(r, c)] = col;
  }
  j["meta"] = meta(g);
  return emit(g, j.dump(2) + "\n");
}

int run_values(const Globals& g, const std::function<uqm_status(uqm_result**)>& call) {
  Result res;
  if (uqm_status s = call(&res.r); s != UQM_OK) return fail(s);
  return emit_values(g, res.r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unambiguous quantum measurements: figures, solvers and acceptance checks"};
  app.set_version_flag("--version", std::string(uqm_version()));
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  std::function<int()> action;

  // figure <id>
  auto* fig = app.add_subcommand("figure", "Emit the data behind a figure");
  std::string fig_id, fig_range;
  std::vector<int> fig_rounds;
  double fig_gamma = 1.0;
  fig->add_option("id", fig_id, std::string("Figure identifier: ") + uqm_figure_ids())->required();
  fig->add_option("--range", fig_range, "Abscissa range lo:hi:step");
  fig->add_option("--rounds", fig_rounds, "Round numbers for the recovery figures")->delimiter(',');
  fig->add_option("--gamma", fig_gamma, "Detector efficiency")->capture_default_str();
  fig->callback([&] {
    action = [&] {
      Result res;
      const uqm_status s = uqm_figure(fig_id.c_str(), fig_range.empty() ? nullptr : fig_range.c_str(),
                                      fig_rounds.empty() ? nullptr : fig_rounds.data(), fig_rounds.size(), fig_gamma,
                                      &res.r);
      if (s != UQM_OK) return fail(s);
      return emit_table(g, res.r);
    };
  });

  // usd idp
  auto* usd = app.add_subcommand("usd", "Unambiguous state discrimination");
  usd->require_subcommand(1);
  auto* idp = usd->add_subcommand("idp", "Two pure states with overlap modulus lambda");
  double lambda = 0.5, eta1 = 0.5;
  idp->add_option("--lambda", lambda, "Overlap modulus")->required();
  idp->add_option("--eta1", eta1, "Prior of the first state")->capture_default_str();
  idp->callback([&] { action = [&] { return run_values(g, [&](uqm_result** r) { return uqm_usd_idp(lambda, eta1, r); }); }; });

  // channels fidelity | compare
  auto* ch = app.add_subcommand("channels", "Unitary channel discrimination and comparison");
  ch->require_subcommand(1);
  int ch_d = 2;
  long ch_samples = 100000;
  double ch_eta = 0.5;
  auto* chf = ch->add_subcommand("fidelity", "Process fidelity and USD for a Haar-random unitary pair");
  chf->add_option("--d", ch_d, "Dimension")->capture_default_str();
  chf->add_option("--eta", ch_eta, "Prior of the first unitary")->capture_default_str();
  chf->callback([&] {
    action = [&] { return run_values(g, [&](uqm_result** r) { return uqm_channels_fidelity(ch_d, ch_eta, g.seed, r); }); };
  });
  auto* chc = ch->add_subcommand("compare", "Universal comparator of two unitaries");
  chc->add_option("--d", ch_d, "Dimension")->capture_default_str();
  chc->add_option("--samples", ch_samples, "Monte Carlo samples")->capture_default_str();
  chc->callback([&] {
    action = [&] {
      return run_values(g, [&](uqm_result** r) { return uqm_channels_compare(ch_d, ch_samples, g.seed, r); });
    };
  });

  // meas compare-labeled | compare-unlabeled | audit-subspaces
  auto* meas = app.add_subcommand("meas", "Comparison of sharp observables");
  meas->require_subcommand(1);
  int m_d = 2;
  long m_samples = 100000;
  double m_theta = 0.7853981633974483;
  auto* ml = meas->add_subcommand("compare-labeled", "Single-shot labeled comparison");
  ml->add_option("--d", m_d, "Dimension")->capture_default_str();
  ml->add_option("--samples", m_samples, "Monte Carlo samples")->capture_default_str();
  ml->callback([&] {
    action = [&] {
      return run_values(g, [&](uqm_result** r) { return uqm_meas_compare_labeled(m_d, m_samples, g.seed, r); });
    };
  });
  auto* mu = meas->add_subcommand("compare-unlabeled", "Two-shot unlabeled qubit comparison");
  mu->add_option("--d", m_d, "Dimension (only 2 is supported)")->capture_default_str();
  mu->add_option("--theta", m_theta, "Angle between the two bases [rad]")->capture_default_str();
  mu->add_option("--samples", m_samples, "Monte Carlo samples")->capture_default_str();
  mu->callback([&] {
    action = [&] {
      return run_values(g,
                        [&](uqm_result** r) { return uqm_meas_compare_unlabeled(m_d, m_theta, m_samples, g.seed, r); });
    };
  });
  auto* ma = meas->add_subcommand("audit-subspaces", "Check the four-qubit subspace constructions");
  ma->callback([&] { action = [&] { return run_values(g, [](uqm_result** r) { return uqm_meas_audit_subspaces(r); }); }; });

  // acceptance <suite>
  auto* acc = app.add_subcommand("acceptance", "Run acceptance checks");
  std::string suite = "all";
  acc->add_option("suite", suite, "all, usd, comparison, coherent, ui, recovery, noise, channels, measurements, properties")
      ->capture_default_str();
  acc->callback([&] {
    action = [&] {
      Result res;
      if (uqm_status s = uqm_acceptance(suite.c_str(), g.seed, &res.r); s != UQM_OK) return fail(s);
      double failed = 0.0;
      uqm_result_value(res.r, "failed", &failed);
      int rc = 0;
      if (g.format == "json") {
        rc = emit_values(g, res.r);
      } else {
        rc = emit(g, uqm_result_text(res.r));
      }
      return rc != 0 ? rc : (failed > 0.0 ? 1 : 0);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  if (!action) return kUsageError;
  return action();
}
