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

#include "uqm/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "uqm/channels.hpp"
#include "uqm/coherent.hpp"
#include "uqm/comparison.hpp"
#include "uqm/figures.hpp"
#include "uqm/measurements.hpp"
#include "uqm/oracles.hpp"
#include "uqm/ui_finite.hpp"
#include "uqm/usd.hpp"

namespace uqm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Collects named checks; the criterion passes when every check does.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 4) failures_.push_back(what);
    ok_ = ok_ && ok;
  }
  void close(double got, double want, double tol, const std::string& what) {
    const double err = std::abs(got - want);
    worst_ = std::max(worst_, err);
    if (!(err <= tol)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s: got %.12g want %.12g", what.c_str(), got, want);
      expect(false, buf);
    } else {
      expect(true, what);
    }
  }
  void within_se(const McEstimate& e, double want, double k, const std::string& what) {
    const double err = std::abs(e.mean - want);
    if (!(err <= k * e.stderr_)) {
      char buf[200];
      std::snprintf(buf, sizeof buf, "%s: mean %.8g want %.8g (%.2f se)", what.c_str(), e.mean, want,
                    e.stderr_ > 0 ? err / e.stderr_ : INFINITY);
      expect(false, buf);
    } else {
      expect(true, what);
    }
  }
  void within_rel(double got, double want, double rel, const std::string& what) {
    close(got, want, rel * std::abs(want), what);
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

  CriterionResult result(int id, const std::string& name) const {
    CriterionResult r{id, name, ok_, ""};
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d checks", count_);
    r.detail = buf;
    if (!notes_.empty()) r.detail += "; " + notes_;
    for (const auto& f : failures_) r.detail += "; FAILED " + f;
    return r;
  }

 private:
  bool ok_ = true;
  int count_ = 0;
  double worst_ = 0.0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

RandomStream stream_for(std::uint64_t seed, int id) {
  return RandomStream(seed * 1000003ULL + static_cast<std::uint64_t>(id));
}

Vec qubit(double c, cd s) {
  Vec v(2);
  v << c, s;
  return v;
}

cd random_amplitude(RandomStream& rng, double scale) { return rng.complex_normal(scale * scale / 2.0); }

CriterionResult criterion_idp(std::uint64_t seed) {
  Checks c;
  RandomStream rng = stream_for(seed, 1);
  double worst = 0.0;
  int middle = 0;
  for (int i = 0; i < 100; ++i) {
    const double lambda = 0.99 * rng.uniform();
    const double eta1 = 0.01 + 0.98 * rng.uniform();
    const double phase = 2.0 * kPi * rng.uniform();
    const Vec psi1 = qubit(1.0, 0.0);
    const Vec psi2 = std::polar(1.0, phase) * qubit(lambda, std::sqrt(1.0 - lambda * lambda));
    const UsdSolution sol = idp_optimal(psi1, psi2, eta1);
    const double brute = idp_brute_force(lambda, eta1);
    worst = std::max(worst, std::abs(sol.p_discrimination - brute));
    c.close(sol.p_discrimination, brute, 1e-6, "brute force");
    if (sol.regime == Regime::povm) {
      ++middle;
      c.close(sol.p_discrimination, 1.0 - 2.0 * std::sqrt(eta1 * (1.0 - eta1)) * lambda, 1e-12, "middle regime");
      c.close(idp_probability(lambda, eta1), 1.0 - 2.0 * std::sqrt(eta1 * (1.0 - eta1)) * lambda, 1e-12,
              "middle regime analytic");
    }
  }
  c.expect(middle > 0, "middle regime sampled");
  c.note("max |P - brute| = " + num(worst) + ", " + std::to_string(middle) + " middle-regime cases");
  return c.result(1, "IDP regimes vs brute-force POVM search");
}

CriterionResult criterion_comparison(std::uint64_t seed) {
  Checks c;
  RandomStream rng = stream_for(seed, 2);
  double worst = 0.0;
  for (int d : {2, 3}) {
    for (int n = 2; n <= 6; ++n) {
      const Mat sym = symmetric_projector(d, n);
      for (int k = 1; k < n; ++k) {
        const int l = n - k;
        for (int trial = 0; trial < 2; ++trial) {
          const Vec psi = haar_state(d, rng), phi = haar_state(d, rng);
          std::vector<Vec> f;
          for (int i = 0; i < k; ++i) f.push_back(psi);
          for (int i = 0; i < l; ++i) f.push_back(phi);
          const Vec v = kron_vec_all(f);
          const double explicit_p = 1.0 - v.dot(sym * v).real();
          const double closed = compare_prob_pure(k, l, std::min(1.0, std::norm(psi.dot(phi))));
          worst = std::max(worst, std::abs(explicit_p - closed));
          c.close(closed, explicit_p, 1e-10, "pure comparison d=" + std::to_string(d));
        }
      }
    }
  }
  c.note("max matrix deviation " + num(worst));
  for (int d : {2, 3}) {
    for (auto kl : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
      const ComparisonConfig cfg{d, kl.first, kl.second, 1.0};
      const McEstimate mc = comparison_average_mc(cfg, 100000, rng);
      c.within_se(mc, compare_avg_success(cfg), 3.0, "Haar average d=" + std::to_string(d));
    }
  }
  for (double eta : {0.3, 0.5, 1.0})
    c.close(compare_avg_success({2, 1, 1, eta}), eta / 4.0, 1e-15, "d=2 k=l=1 value");
  return c.result(2, "ensemble comparison");
}

CriterionResult criterion_coherent(std::uint64_t seed) {
  Checks c;
  RandomStream rng = stream_for(seed, 3);
  double wn = 0.0, wq = 0.0;
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) {
      const cd a1 = random_amplitude(rng, 1.0), a2 = random_amplitude(rng, 1.0);
      const double closed = compare_coherent_closed(k, l, std::norm(a1 - a2));
      const CoherentComparison sim = compare_coherent(k, l, a1, a2);
      const double quad = overlap_quadrature(k, l, a1, a2);
      wn = std::max(wn, std::abs(sim.probability - closed));
      wq = std::max(wq, std::abs(quad - closed));
      c.close(sim.probability, closed, 1e-12, "network k=" + std::to_string(k) + " l=" + std::to_string(l));
      c.close(quad, closed, 1e-8, "quadrature k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
  c.note("network " + num(wn) + ", quadrature " + num(wq));
  return c.result(3, "coherent comparison");
}

CriterionResult criterion_ui(std::uint64_t seed) {
  Checks c;
  RandomStream rng = stream_for(seed, 4);
  for (int i = 0; i < 20; ++i) {
    const cd a1 = random_amplitude(rng, 1.5), a2 = random_amplitude(rng, 1.5);
    const double d2 = std::norm(a1 - a2);
    const TwoRefUi r = ui_two_refs(1, 1, 1, 0.5, a1, a1, a2);
    c.close(r.probability, 1.0 - std::exp(-d2 / 3.0), 1e-12, "three-splitter single copies");
    const int na = 1 + i % 3, nb = 1 + (i / 3) % 3, nc = 1 + (i / 9) % 3;
    const TwoRefUi g = ui_two_refs(na, nb, nc, 0.5, a2, a1, a2);
    c.close(g.probability, ui_two_refs_closed(na, nb, nc, 0.5, d2), 1e-12, "three-splitter general");
    const int m = 2 + i % 3;
    std::vector<cd> refs;
    for (int j = 0; j < m; ++j) refs.push_back(random_amplitude(rng, 1.5));
    const MultiRefUi mr = ui_m_refs(m, na, nb, refs[static_cast<size_t>(i % m)], refs);
    c.close(mr.probability, ui_m_refs_closed(m, na, nb, refs), 1e-12, "M references");
    c.close(ui_m_refs_closed(2, na, 1000000, {a1, a2}), known_states_limit(na, a1, a2), 1e-5, "known limit");
  }
  bool ordered = true;
  for (int i = 0; i < 300; ++i) {
    const double delta = 3.0 * i / 299.0, d2 = delta * delta;
    ordered = ordered && p_swap_based_coherent(d2) <= p_optimal_universal_coherent(d2) &&
              p_optimal_universal_coherent(d2) <= p_beamsplitter_coherent(d2);
  }
  c.expect(ordered, "P_sb <= P_opt <= P_bs on 300 points");
  return c.result(4, "UI closed forms vs network simulation");
}

CriterionResult criterion_finite_ui(std::uint64_t seed) {
  Checks c;
  RandomStream rng = stream_for(seed, 5);
  c.close(ui_average_probability(bergou_hillery(0.1)), 0.9 / 4.0, 1e-12, "small eta1");
  c.close(ui_average_probability(bergou_hillery(0.5)), 1.0 / 6.0, 1e-12, "eta1 = 1/2");
  c.close(ui_average_probability(bergou_hillery(0.9)), 0.9 / 4.0, 1e-12, "large eta1");
  for (int d : {2, 3}) {
    const McEstimate mc = hayashi_average_mc(d, 100000, rng);
    c.within_rel(mc.mean, hayashi_average(d), 0.01, "Haar average d=" + std::to_string(d));
    c.note("d=" + std::to_string(d) + " MC " + num(mc.mean));
  }
  for (int d : {3, 4}) {
    const SwapBased at = swap_based(d, 0.5, 0.5);
    c.expect(at.accepted, "c1 + c2 = 1 accepted");
    const SwapBased over = swap_based(d, 0.5, 0.5 + 1e-3);
    c.expect(!over.accepted, "c1 + c2 > 1 rejected");
    const SwapBased inside = swap_based(d, 0.4, 0.3);
    c.expect(inside.accepted, "interior accepted");
    for (const SwapBased* s : {&at, &over, &inside}) {
      c.expect(s->closed_spectrum.size() == s->dense_spectrum.size(), "spectrum sizes");
      double worst = 0.0;
      for (size_t i = 0; i < std::min(s->closed_spectrum.size(), s->dense_spectrum.size()); ++i)
        worst = std::max(worst, std::abs(s->closed_spectrum[i] - s->dense_spectrum[i]));
      c.close(worst, 0.0, 1e-10, "block spectrum vs dense");
    }
  }
  return c.result(5, "finite-dimensional UI");
}

CriterionResult criterion_recovery(std::uint64_t seed) {
  Checks c;
  RandomStream rng = stream_for(seed, 6);
  const RecoveryRound r = recovery_round(1.0);
  c.close(r.lambda_next, (7.0 - std::sqrt(13.0)) / 6.0, 1e-12, "lambda_2");
  c.close(r.t1r, (7.0 - std::sqrt(13.0)) / 9.0, 1e-12, "T1R");
  double lambda = 1.0;
  bool decreasing = true;
  for (int k = 0; k < 100; ++k) {
    const double next = recovery_map(lambda);
    decreasing = decreasing && next > 0.0 && next < lambda;
    lambda = next;
  }
  c.expect(decreasing, "100 iterates decreasing and positive");
  for (int i = 0; i < 10; ++i) {
    const cd a1 = random_amplitude(rng, 2.0), a2 = random_amplitude(rng, 2.0);
    const double d2 = std::norm(a1 - a2);
    const std::vector<double> p = multi_round_success(30, a1, a2);
    double lam = 1.0, prod = 1.0;
    for (int k = 0; k < 30; ++k) {
      prod *= ui_two_refs_closed(1.0, lam, lam, 0.5, d2);
      c.close(p[static_cast<size_t>(k)], prod, 1e-12, "round product");
      for (bool first : {true, false}) {
        // The identified reference comes out at sqrt(lambda_next). The other one is
        // free of the unknown state's amplitude; its dilution matches only at lambda = 1.
        const auto rec = simulate_recovery(lam, a1, a2, first);
        const RecoveryRound rr = recovery_round(lam);
        const double s = 1.0 + 2.0 * lam;
        const double other = lam * std::sqrt(2.0 * rr.t2r / s);
        const double f1 = first ? std::sqrt(rr.lambda_next) : other;
        const double f2 = first ? other : std::sqrt(rr.lambda_next);
        c.close(std::abs(rec.first - f1 * a1), 0.0, 1e-12, "recovered reference 1");
        c.close(std::abs(rec.second - f2 * a2), 0.0, 1e-12, "recovered reference 2");
        if (k == 0) c.close(other, std::sqrt(rr.lambda_next), 1e-12, "equal dilution at lambda = 1");
      }
      lam = recovery_map(lam);
    }
  }
  bool dominates = true;
  for (int i = 0; i <= 120; ++i) {
    const double delta = 6.0 * i / 120.0, d2 = delta * delta;
    const std::vector<double> p = multi_round_success(10, d2);
    for (int n = 1; n <= 10; ++n)
      dominates = dominates && p[static_cast<size_t>(n - 1)] - splitting_strategy(n, d2) >= -1e-14;
  }
  c.expect(dominates, "recovery >= splitting for N <= 10");
  for (double delta : {0.3, 1.0, 2.5}) {
    const double d2 = delta * delta, r13 = std::sqrt(13.0);
    const double two = (1.0 - std::exp(-d2 / 3.0)) * (1.0 - std::exp(-(7.0 - r13) / (2.0 * (10.0 - r13)) * d2));
    c.close(multi_round_success(2, d2)[1], two, 1e-12, "two-round success");
  }
  return c.result(6, "reference recovery");
}

CriterionResult criterion_noise(std::uint64_t seed) {
  Checks c;
  RandomStream rng = stream_for(seed, 7);
  const double sigma = 0.25;
  const std::vector<std::array<int, 3>> copies{{1, 1, 1}, {2, 3, 1}, {3, 2, 2}};
  for (double xi : {0.5, 1.0, 2.0}) {
    const cd a1 = xi, a2 = -xi;
    for (const auto& n : copies) {
      const ClickMatrix m = noisy_click_matrix(n[0], n[1], n[2], sigma, a1, a2);
      const ClickMatrixMc mc = noisy_click_monte_carlo(n[0], n[1], n[2], sigma, a1, a2, 1000000, rng);
      const std::string tag = " xi=" + num(xi);
      c.within_se(mc.e1r1, m.e1r1, 3.0, "E1|R1" + tag);
      c.within_se(mc.e1r2, m.e1r2, 3.0, "E1|R2" + tag);
      c.within_se(mc.e2r1, m.e2r1, 3.0, "E2|R1" + tag);
      c.within_se(mc.e2r2, m.e2r2, 3.0, "E2|R2" + tag);
    }
    for (int na = 1; na <= 2; ++na) {
      const McEstimate r = reliability_monte_carlo(na, 1, sigma, xi, 1000000, rng);
      c.within_se(r, reliability(na, 1, sigma, xi), 3.0, "reliability xi=" + num(xi));
    }
    const NoisyAverages a = noisy_averages(1, 1, sigma, xi);
    c.close(a.success + a.error + a.failure, 1.0, 1e-12, "averages sum to one");
    const NoisyAverages z = noisy_averages(1, 1, 0.0, xi);
    c.close(reliability(1, 1, 0.0, xi), 1.0, 1e-15, "sigma -> 0 reliability");
    c.close(z.error, 0.0, 1e-15, "sigma -> 0 error");
  }
  return c.result(7, "noisy identification");
}

CriterionResult criterion_channels(std::uint64_t seed) {
  Checks c;
  RandomStream rng = stream_for(seed, 8);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Mat u = haar_unitary(2, rng), v = haar_unitary(2, rng);
    const double f = cb_fidelity_unitaries(u, v).fidelity;
    worst = std::max(worst, std::abs(f - 0.5 * std::abs((u.adjoint() * v).trace())));
  }
  c.close(worst, 0.0, 1e-12, "qubit F = |Tr(U^dag V)|/2");
  double worst3 = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Mat u = haar_unitary(3, rng), v = haar_unitary(3, rng);
    const CbFidelity f = cb_fidelity_unitaries(u, v);
    const double num_min = diagonal_xi_minimum(f.phases);
    worst3 = std::max(worst3, std::abs(f.fidelity - num_min));
    c.close(f.fidelity, num_min, 1e-6, "d=3 diagonal xi search");
  }
  c.note("d=3 max deviation " + num(worst3));
  for (int d : {2, 3}) {
    const Mat pa = antisymmetric_projector(d, 2).op;
    const Mat rho = pa / pa.trace().real();
    double worst_same = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Mat u = haar_unitary(d, rng);
      worst_same = std::max(worst_same, comparator_conditional(u, u, rho));
    }
    c.close(worst_same, 0.0, 1e-12, "no error on U (x) U, d=" + std::to_string(d));
    const McEstimate mc = comparator_average_mc(d, 100000, rng);
    c.within_rel(mc.mean, (d + 1.0) / (2.0 * d), 0.01, "comparator average d=" + std::to_string(d));
    c.close(comparator_average_success(d), (d + 1.0) / (2.0 * d), 1e-15, "closed average");
    Mat y(d * d, d * d);
    for (int a = 0; a < d * d; ++a)
      for (int b = 0; b < d * d; ++b) y(a, b) = rng.complex_normal(0.5);
    const Mat closed = twirl(y, d);
    const MatEstimate tw = twirl_mc(y, d, 20000, rng);
    const double dev = (tw.mean - closed).norm();
    const double se = tw.stderr_.norm();
    c.expect(dev <= 3.0 * se, "twirl vs Haar Monte Carlo d=" + std::to_string(d));
    c.close(spectral_norm(closed - haar_twirl_exact(y, d, 2)), 0.0, 1e-10, "twirl vs commutant projection");
  }
  return c.result(8, "channel tests");
}

CriterionResult criterion_measurements(std::uint64_t seed) {
  Checks c;
  RandomStream rng = stream_for(seed, 9);
  for (int d : {2, 3, 4}) {
    const McEstimate mc = labeled_average_mc(d, 100000, rng);
    c.within_rel(mc.mean, 1.0 / d, 0.01, "labeled average d=" + std::to_string(d));
  }
  double worst = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double theta = kPi / 2.0 * i / 60.0;
    const double chi = 2.0 * kPi * rng.uniform();
    const UnlabeledSuccess s =
        unlabeled_success(qubit(1.0, 0.0), qubit(std::cos(theta), std::polar(std::sin(theta), chi)));
    const double closed = 2.0 / 3.0 * std::pow(std::sin(2.0 * theta), 2);
    worst = std::max(worst, std::abs(s.probability - closed));
    c.close(s.probability, closed, 1e-10, "unlabeled theta grid");
  }
  c.note("theta grid max deviation " + num(worst));
  const McEstimate avg = unlabeled_average_mc(100000, rng);
  c.within_rel(avg.mean, 4.0 / 9.0, 0.01, "unlabeled Haar average");
  const DiffDiffStrategy dd = diffdiff_strategy();
  c.close(dd.probability, 1.0 / 9.0, 1e-12, "diff,diff value");
  c.close(dd.spread, 0.0, 1e-12, "diff,diff on whole span");
  const SubspaceAudit audit = subspace_audit();
  c.expect(audit.passed, "subspace audit");
  c.note("audit spectrum multiplicities " + std::to_string(audit.count_four_thirds) + "/" +
         std::to_string(audit.count_two_thirds));
  return c.result(9, "measurement comparison");
}

CriterionResult criterion_properties(std::uint64_t seed) {
  Checks c;
  RandomStream rng = stream_for(seed, 10);
  const double ne = 1e-9;
  double w_idp = 0.0, w_ui = 0.0, w_cmp = 0.0, w_uu = 0.0, w_lab = 0.0, w_pc = 0.0;
  bool povms = true;
  const UiMeasurement bh = bergou_hillery(0.4), hy2 = hayashi_optimal(2), hy3 = hayashi_optimal(3),
                      zy2 = zhang_ying(2), zy3 = zhang_ying(3);
  const UiMeasurement sb = swap_based(3, 0.5, 0.5).measurement;
  for (const UiMeasurement* m : {&bh, &hy2, &hy3, &zy2, &zy3, &sb}) povms = povms && validate_povm(m->povm).valid;
  povms = povms && validate_povm(equatorial_optimal(0.5).povm).valid;
  for (int d : {2, 3}) povms = povms && validate_povm(comparison_povm(d, 2, 1)).valid;
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 2;
    const Vec p1 = haar_state(d, rng), p2 = haar_state(d, rng);
    const double eta1 = 0.05 + 0.9 * rng.uniform();
    const UsdSolution s = idp_optimal(p1, p2, eta1);
    povms = povms && validate_povm(s.povm).valid;
    w_idp = std::max({w_idp, std::abs(p2.dot(s.povm.effects[0] * p2)), std::abs(p1.dot(s.povm.effects[1] * p1))});

    const std::vector<Vec> refs2{haar_state(2, rng), haar_state(2, rng)};
    const std::vector<Vec> refs3{haar_state(3, rng), haar_state(3, rng)};
    const std::vector<Vec> refs3z{haar_state(3, rng), haar_state(3, rng), haar_state(3, rng)};
    w_ui = std::max({w_ui, ui_no_error_residual(bh, refs2), ui_no_error_residual(hy2, refs2),
                     ui_no_error_residual(hy3, refs3), ui_no_error_residual(zy3, refs3z),
                     ui_no_error_residual(sb, refs3)});

    const Mat pa = antisymmetric_projector(d, 2).op;
    const Ppovm pp = comparator_ppovm(d, pa / pa.trace().real());
    povms = povms && validate_ppovm(pp).valid;
    const Mat u = haar_unitary(d, rng), v = haar_unitary(d, rng);
    w_cmp = std::max(w_cmp, comparator_conditional(u, u, pa / pa.trace().real()));

    const double eu = 0.1 + 0.8 * rng.uniform();
    const UnitaryUsd uu = unitary_usd(u, v, eu, 1.0 - eu);
    povms = povms && validate_povm(uu.povm).valid;
    w_uu = std::max({w_uu, std::abs(uu.out_v.dot(uu.povm.effects[0] * uu.out_v)),
                     std::abs(uu.out_u.dot(uu.povm.effects[1] * uu.out_u))});

    const LabeledComparison lc = labeled_compare(d, pa / pa.trace().real());
    const SharpObservable a = observable_from_unitary(u);
    w_lab = std::max(w_lab, lc.q_same(a, a));

    const Vec same = haar_state(d, rng);
    const Povm cp = comparison_povm(d, 1, 1);
    const Vec twice = kron_vec(same, same);
    w_pc = std::max(w_pc, std::abs(twice.dot(cp.effects[1] * twice)));
  }
  c.expect(povms, "all constructed POVMs and process POVMs validate");
  c.close(w_idp, 0.0, ne, "two-state USD no-error");
  c.close(w_ui, 0.0, ne, "identification no-error");
  c.close(w_cmp, 0.0, ne, "comparator no-error");
  c.close(w_uu, 0.0, ne, "unitary USD no-error");
  c.close(w_lab, 0.0, ne, "labeled comparison no-error");
  c.close(w_pc, 0.0, ne, "state comparison no-error");
  c.close(diffdiff_strategy().no_error_residual, 0.0, ne, "diff,diff no-error");

  const OutcomeClassOperators o = build_outcome_operators(2);
  Mat se = Mat::Zero(16, 16), sd = Mat::Zero(16, 16);
  bool positive = true;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      se += o.equal[x][y];
      sd += o.differ[x][y];
      positive = positive && min_eigenvalue(o.equal[x][y]) >= -1e-12 && min_eigenvalue(o.differ[x][y]) >= -1e-12;
    }
  c.expect(positive, "outcome class operators positive");
  c.close(spectral_norm(se - Mat::Identity(16, 16)) + spectral_norm(sd - Mat::Identity(16, 16)), 0.0, 1e-12,
          "outcome classes sum to identity");

  bool stable = true;
  for (const std::string& id : figure_ids()) stable = stable && to_csv(figure_table(id)) == to_csv(figure_table(id));
  c.expect(stable, "figure CSVs deterministic");
  const Table t = figure_table("4.8");
  double fig_dev = 0.0;
  for (const auto& row : t.rows) {
    const double d2 = row[0] * row[0];
    fig_dev = std::max({fig_dev, std::abs(row[1] - 0.25 * (1.0 - std::exp(-d2))),
                        std::abs(row[2] - (1.0 - std::exp(-d2)) / 3.0), std::abs(row[3] - (1.0 - std::exp(-d2 / 3.0))),
                        std::abs(row[4] - (1.0 - std::exp(-d2 / 2.0)))});
  }
  c.close(fig_dev, 0.0, 1e-10, "figure 4.8 regression");
  c.expect(t.rows.size() == 61, "figure 4.8 has 61 rows");
  return c.result(10, "property suites");
}

using Runner = CriterionResult (*)(std::uint64_t);
using Entry = std::pair<int, Runner>;

const std::map<std::string, std::vector<Entry>>& suites() {
  static const std::vector<Entry> all{{1, criterion_idp},         {2, criterion_comparison},
                                      {3, criterion_coherent},    {4, criterion_ui},
                                      {5, criterion_finite_ui},   {6, criterion_recovery},
                                      {7, criterion_noise},       {8, criterion_channels},
                                      {9, criterion_measurements}, {10, criterion_properties}};
  auto pick = [&](std::initializer_list<int> ids) {
    std::vector<Entry> out;
    for (int id : ids) out.push_back(all[static_cast<size_t>(id - 1)]);
    return out;
  };
  static const std::map<std::string, std::vector<Entry>> s{
      {"all", all},
      {"usd", pick({1})},
      {"comparison", pick({2})},
      {"coherent", pick({3})},
      {"ui", pick({4, 5})},
      {"recovery", pick({6})},
      {"noise", pick({7})},
      {"channels", pick({8})},
      {"measurements", pick({9})},
      {"properties", pick({10})},
  };
  return s;
}

}  // namespace

bool AcceptanceReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

std::vector<std::string> acceptance_suites() {
  std::vector<std::string> out;
  for (const auto& kv : suites()) out.push_back(kv.first);
  return out;
}

AcceptanceReport run_acceptance(const std::string& suite, std::uint64_t seed) {
  const auto& s = suites();
  const auto it = s.find(suite);
  if (it == s.end()) throw Error(ErrorKind::argument, "unknown acceptance suite '" + suite + "'");
  AcceptanceReport r;
  r.suite = suite;
  r.seed = seed;
  for (const Entry& e : it->second) {
    try {
      r.results.push_back(e.second(seed));
    } catch (const std::exception& ex) {
      CriterionResult bad;
      bad.id = e.first;
      bad.name = "criterion " + std::to_string(e.first);
      bad.detail = std::string("exception: ") + ex.what();
      r.results.push_back(bad);
    }
  }
  return r;
}

std::string format_report(const AcceptanceReport& r) {
  std::string out;
  for (const CriterionResult& c : r.results) {
    out += c.passed ? "[PASS] " : "[FAIL] ";
    out += std::to_string(c.id) + " " + c.name + ": " + c.detail + "\n";
  }
  return out;
}

}  // namespace uqm
