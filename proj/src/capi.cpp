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

#include "uqm/uqm.h"

#include <cmath>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "uqm/acceptance.hpp"
#include "uqm/channels.hpp"
#include "uqm/figures.hpp"
#include "uqm/measurements.hpp"
#include "uqm/oracles.hpp"
#include "uqm/usd.hpp"

#ifndef UQM_VERSION
#define UQM_VERSION "0.0.0"
#endif

struct uqm_result {
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::pair<std::string, std::string>> strings;
  std::string text;
  uqm::Table table;
};

namespace {

thread_local std::string last_error;

uqm_status status_of(uqm::ErrorKind k) {
  switch (k) {
    case uqm::ErrorKind::argument: return UQM_ERR_ARGUMENT;
    case uqm::ErrorKind::positivity: return UQM_ERR_POSITIVITY;
    case uqm::ErrorKind::degenerate: return UQM_ERR_DEGENERATE;
    case uqm::ErrorKind::precondition: return UQM_ERR_PRECONDITION;
    case uqm::ErrorKind::unsupported: return UQM_ERR_UNSUPPORTED;
    case uqm::ErrorKind::size: return UQM_ERR_SIZE;
    case uqm::ErrorKind::numeric: return UQM_ERR_NUMERIC;
  }
  return UQM_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes.
template <class F>
uqm_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return UQM_OK;
  } catch (const uqm::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return UQM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return UQM_ERR_INTERNAL;
  }
}

uqm_status need(const void* p, const char* what) {
  if (p) return UQM_OK;
  last_error = std::string(what) + " is null";
  return UQM_ERR_NULL;
}

// Builds a result and hands ownership to the caller only on success.
template <class F>
uqm_status produce(uqm_result** out, F&& fill) {
  if (uqm_status s = need(out, "output handle"); s != UQM_OK) return s;
  *out = nullptr;
  auto* r = new (std::nothrow) uqm_result;
  if (!r) {
    last_error = "out of memory";
    return UQM_ERR_INTERNAL;
  }
  const uqm_status s = guard([&] { fill(*r); });
  if (s != UQM_OK) {
    delete r;
    return s;
  }
  *out = r;
  return UQM_OK;
}

void check_samples(long samples) {
  if (samples < 2) throw uqm::Error(uqm::ErrorKind::argument, "samples must be at least 2");
}

}  // namespace

extern "C" {

const char* uqm_version(void) { return UQM_VERSION; }

const char* uqm_last_error(void) { return last_error.c_str(); }

const char* uqm_status_name(uqm_status s) {
  switch (s) {
    case UQM_OK: return "ok";
    case UQM_ERR_ARGUMENT: return "argument";
    case UQM_ERR_POSITIVITY: return "positivity";
    case UQM_ERR_DEGENERATE: return "degenerate";
    case UQM_ERR_PRECONDITION: return "precondition";
    case UQM_ERR_UNSUPPORTED: return "unsupported";
    case UQM_ERR_SIZE: return "size";
    case UQM_ERR_NUMERIC: return "numeric";
    case UQM_ERR_NULL: return "null";
    case UQM_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

double uqm_get_tolerance(void) { return uqm::tolerance(); }

uqm_status uqm_set_tolerance(double tol) {
  return guard([&] { uqm::set_tolerance(tol); });
}

void uqm_result_destroy(uqm_result* r) { delete r; }

size_t uqm_result_value_count(const uqm_result* r) { return r ? r->values.size() : 0; }

const char* uqm_result_value_name(const uqm_result* r, size_t i) {
  return r && i < r->values.size() ? r->values[i].first.c_str() : nullptr;
}

double uqm_result_value_at(const uqm_result* r, size_t i) {
  return r && i < r->values.size() ? r->values[i].second : std::nan("");
}

uqm_status uqm_result_value(const uqm_result* r, const char* name, double* out) {
  if (uqm_status s = need(r, "result"); s != UQM_OK) return s;
  if (uqm_status s = need(name, "name"); s != UQM_OK) return s;
  if (uqm_status s = need(out, "output"); s != UQM_OK) return s;
  for (const auto& kv : r->values)
    if (kv.first == name) {
      *out = kv.second;
      return UQM_OK;
    }
  last_error = std::string("no value named '") + name + "'";
  return UQM_ERR_ARGUMENT;
}

size_t uqm_result_string_count(const uqm_result* r) { return r ? r->strings.size() : 0; }

const char* uqm_result_string_name(const uqm_result* r, size_t i) {
  return r && i < r->strings.size() ? r->strings[i].first.c_str() : nullptr;
}

const char* uqm_result_string_at(const uqm_result* r, size_t i) {
  return r && i < r->strings.size() ? r->strings[i].second.c_str() : nullptr;
}

const char* uqm_result_text(const uqm_result* r) { return r ? r->text.c_str() : nullptr; }

size_t uqm_result_rows(const uqm_result* r) { return r ? r->table.rows.size() : 0; }

size_t uqm_result_columns(const uqm_result* r) { return r ? r->table.columns.size() : 0; }

const char* uqm_result_column_name(const uqm_result* r, size_t col) {
  return r && col < r->table.columns.size() ? r->table.columns[col].c_str() : nullptr;
}

double uqm_result_cell(const uqm_result* r, size_t row, size_t col) {
  if (!r || row >= r->table.rows.size() || col >= r->table.rows[row].size()) return std::nan("");
  return r->table.rows[row][col];
}

uqm_status uqm_usd_idp(double lambda, double eta1, uqm_result** out) {
  return produce(out, [&](uqm_result& r) {
    if (!(lambda >= 0.0 && lambda < 1.0)) throw uqm::Error(uqm::ErrorKind::argument, "lambda must lie in [0,1)");
    uqm::Vec psi1(2), psi2(2);
    psi1 << 1.0, 0.0;
    psi2 << lambda, std::sqrt(1.0 - lambda * lambda);
    const uqm::UsdSolution s = uqm::idp_optimal(psi1, psi2, eta1);
    r.values = {{"P_D", s.p_discrimination}, {"c1", s.c1}, {"c2", s.c2}};
    r.strings = {{"regime", uqm::regime_name(s.regime)}};
  });
}

uqm_status uqm_channels_fidelity(int d, double eta_u, uint64_t seed, uqm_result** out) {
  return produce(out, [&](uqm_result& r) {
    if (d < 2 || d > 8) throw uqm::Error(uqm::ErrorKind::argument, "dimension must lie in [2, 8]");
    uqm::RandomStream rng(seed);
    const uqm::Mat u = uqm::haar_unitary(d, rng), v = uqm::haar_unitary(d, rng);
    const uqm::CbFidelity f = uqm::cb_fidelity_unitaries(u, v);
    const uqm::UnitaryUsd usd = uqm::unitary_usd(u, v, eta_u, 1.0 - eta_u);
    r.values = {{"F", f.fidelity},
                {"P_usd", usd.probability},
                {"P_usd_simulated", usd.simulated},
                {"F_diagonal_search", uqm::diagonal_xi_minimum(f.phases)},
                {"origin_in_hull", f.origin_in_hull ? 1.0 : 0.0}};
  });
}

uqm_status uqm_channels_compare(int d, long samples, uint64_t seed, uqm_result** out) {
  return produce(out, [&](uqm_result& r) {
    if (d < 2 || d > 8) throw uqm::Error(uqm::ErrorKind::argument, "dimension must lie in [2, 8]");
    check_samples(samples);
    uqm::RandomStream rng(seed);
    const uqm::Mat pa = uqm::antisymmetric_projector(d, 2).op;
    const uqm::Mat rho = pa / pa.trace().real();
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const uqm::Mat u = uqm::haar_unitary(d, rng);
      worst = std::max(worst, uqm::comparator_conditional(u, u, rho));
    }
    const uqm::McEstimate mc = uqm::comparator_average_mc(d, samples, rng);
    r.values = {{"P_closed", uqm::comparator_average_success(d)},
                {"P_mc", mc.mean},
                {"P_mc_stderr", mc.stderr_},
                {"no_error_max", worst}};
  });
}

uqm_status uqm_meas_compare_labeled(int d, long samples, uint64_t seed, uqm_result** out) {
  return produce(out, [&](uqm_result& r) {
    if (d < 2 || d > 8) throw uqm::Error(uqm::ErrorKind::argument, "dimension must lie in [2, 8]");
    check_samples(samples);
    uqm::RandomStream rng(seed);
    const uqm::Mat pa = uqm::antisymmetric_projector(d, 2).op;
    const uqm::LabeledComparison lc = uqm::labeled_compare(d, pa / pa.trace().real());
    const uqm::SharpObservable a = uqm::observable_from_unitary(uqm::haar_unitary(d, rng));
    const uqm::SharpObservable b = uqm::observable_from_unitary(uqm::haar_unitary(d, rng));
    const uqm::McEstimate mc = uqm::labeled_average_mc(d, samples, rng);
    r.values = {{"P_closed", lc.average_success()},
                {"P_mc", mc.mean},
                {"P_mc_stderr", mc.stderr_},
                {"q_same_example", lc.q_same(a, b)}};
  });
}

uqm_status uqm_meas_compare_unlabeled(int d, double theta, long samples, uint64_t seed, uqm_result** out) {
  return produce(out, [&](uqm_result& r) {
    if (d != 2)
      throw uqm::Error(uqm::ErrorKind::unsupported,
                       "unlabeled comparison is only available for qubits; two shots are not known to suffice for d > 2");
    check_samples(samples);
    uqm::RandomStream rng(seed);
    uqm::Vec psi(2), phi(2);
    psi << 1.0, 0.0;
    phi << std::cos(theta), std::sin(theta);
    const uqm::UnlabeledSuccess s = uqm::unlabeled_success(psi, phi);
    const uqm::McEstimate mc = uqm::unlabeled_average_mc(samples, rng);
    r.values = {{"theta", theta},
                {"P", s.probability},
                {"P_closed", s.closed_form},
                {"P_haar_mc", mc.mean},
                {"P_haar_mc_stderr", mc.stderr_},
                {"P_haar_closed", 4.0 / 9.0},
                {"P_diffdiff", uqm::diffdiff_strategy().probability}};
  });
}

uqm_status uqm_meas_audit_subspaces(uqm_result** out) {
  return produce(out, [&](uqm_result& r) {
    const uqm::SubspaceAudit a = uqm::subspace_audit();
    r.values = {{"passed", a.passed ? 1.0 : 0.0},
                {"eigenvalue_4_3_multiplicity", static_cast<double>(a.count_four_thirds)},
                {"eigenvalue_2_3_multiplicity", static_cast<double>(a.count_two_thirds)},
                {"dim_symmetric_4", static_cast<double>(a.dim_symmetric)},
                {"dim_kappa_span", static_cast<double>(a.dim_kappa)},
                {"dim_q12_plus", static_cast<double>(a.dim_q12_plus)},
                {"omega_cross_error", a.omega_cross_error},
                {"omega_norm_error", a.omega_norm_error},
                {"omega_support_error", a.omega_support_error},
                {"joint_support_error", a.joint_support_error}};
  });
}

uqm_status uqm_figure(const char* id, const char* range, const int* rounds, size_t n_rounds, double gamma,
                      uqm_result** out) {
  if (uqm_status s = need(id, "figure id"); s != UQM_OK) return s;
  if (n_rounds > 0)
    if (uqm_status s = need(rounds, "rounds"); s != UQM_OK) return s;
  return produce(out, [&](uqm_result& r) {
    uqm::FigureOptions opt;
    if (range) opt.range = uqm::parse_range(range);
    opt.rounds.assign(rounds, rounds + n_rounds);
    opt.gamma = gamma;
    r.table = uqm::figure_table(id, opt);
    r.text = uqm::to_csv(r.table);
  });
}

const char* uqm_figure_ids(void) {
  static const std::string ids = [] {
    std::string s;
    for (const auto& id : uqm::figure_ids()) s += (s.empty() ? "" : ",") + id;
    return s;
  }();
  return ids.c_str();
}

uqm_status uqm_acceptance(const char* suite, uint64_t seed, uqm_result** out) {
  if (uqm_status s = need(suite, "suite"); s != UQM_OK) return s;
  return produce(out, [&](uqm_result& r) {
    const uqm::AcceptanceReport rep = uqm::run_acceptance(suite, seed);
    double passed = 0.0, failed = 0.0;
    for (const auto& c : rep.results) (c.passed ? passed : failed) += 1.0;
    r.values = {{"passed", passed}, {"failed", failed}};
    for (const auto& c : rep.results) r.values.emplace_back("criterion_" + std::to_string(c.id), c.passed ? 1.0 : 0.0);
    r.text = uqm::format_report(rep);
  });
}

}  // extern "C"
