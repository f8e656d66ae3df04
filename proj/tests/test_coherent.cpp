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


#include <doctest.h>

#include <cmath>
#include <vector>

#include "uqm/coherent.hpp"
#include "uqm/operator_core.hpp"
#include "uqm/oracles.hpp"

using namespace uqm;

namespace {

cd amp(RandomStream& rng, double scale) { return scale * rng.complex_normal(); }

bool within(const McEstimate& mc, double expected, double sigmas = 4.0) {
  return std::abs(mc.mean - expected) <= sigmas * mc.stderr_ + 1e-12;
}

}  // namespace

TEST_CASE("beamsplitter sign convention") {
  const auto [c, d] = beamsplitter(0.25, 1.0, 0.0);
  CHECK(std::abs(c - 0.5) < 1e-15);
  CHECK(std::abs(d + std::sqrt(0.75)) < 1e-15);
  const Mat b = beamsplitter_matrix(0.3);
  CHECK(spectral_norm(b.adjoint() * b - Mat::Identity(2, 2)) < 1e-14);
}

TEST_CASE("networks stay unitary") {
  for (int k = 1; k <= 6; ++k) CHECK(concentrator(k).unitarity_error() < 1e-12);
  const LinearNetwork n = three_splitter_network(three_splitter(2, 3, 1, 0.4));
  CHECK(n.unitarity_error() < 1e-12);
}

TEST_CASE("concentrator collects all copies in one mode") {
  RandomStream rng(101);
  for (int k = 1; k <= 5; ++k) {
    const cd a = amp(rng, 1.0);
    const CoherentRegister out = concentrate(k, a);
    CHECK(std::abs(out(0) - std::sqrt(static_cast<double>(k)) * a) < 1e-12);
    CHECK(out.tail(k - 1).norm() < 1e-12);
  }
}

TEST_CASE("coherent comparison: simulation, closed form and quadrature agree") {
  RandomStream rng(103);
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) {
      const cd a1 = amp(rng, 1.0), a2 = amp(rng, 1.0);
      const CoherentComparison c = compare_coherent(k, l, a1, a2);
      CHECK(c.probability == doctest::Approx(c.closed_form).epsilon(1e-12));
      CHECK(c.closed_form == doctest::Approx(overlap_quadrature(k, l, a1, a2)).epsilon(1e-8));
    }
  CHECK(compare_coherent_closed(2, 3, 0.0) == 0.0);
}

TEST_CASE("three-splitter identification") {
  RandomStream rng(107);
  for (const std::vector<int>& n : {std::vector<int>{1, 1, 1}, {2, 1, 1}, {1, 3, 2}}) {
    const cd a1 = amp(rng, 1.0), a2 = amp(rng, 1.0);
    for (double t1 : {0.2, 0.5, 0.8}) {
      const TwoRefUi u = ui_two_refs(n[0], n[1], n[2], t1, a1, a1, a2);
      CHECK(u.probability == doctest::Approx(u.closed_form).epsilon(1e-12));
      CHECK(u.p1 == doctest::Approx(u.p1_closed).epsilon(1e-12));
      CHECK(u.p2 == doctest::Approx(u.p2_closed).epsilon(1e-12));
      // No click on the detector that flags the other hypothesis.
      CHECK(u.no_click_d2 == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK(ui_two_refs_closed(1, 1, 1, 0.5, 2.0) == doctest::Approx(ui_equal_refs(1, 1, 2.0)).epsilon(1e-12));
  CHECK(ui_equal_refs(1, 1, 3.0) == doctest::Approx(p_beamsplitter_coherent(3.0)));
}

TEST_CASE("transmittivity search") {
  const T1Search eq = optimal_t1(1, 1, 1, 2.0);
  CHECK(eq.t1 == doctest::Approx(0.5).epsilon(1e-5));
  CHECK_FALSE(eq.state_dependent);
  const T1Search uneq = optimal_t1(1, 3, 1, 2.0);
  CHECK(uneq.state_dependent);
  for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) CHECK(uneq.probability >= ui_two_refs_closed(1, 3, 1, t, 2.0) - 1e-12);
}

TEST_CASE("many references") {
  RandomStream rng(109);
  for (int m = 2; m <= 4; ++m) {
    std::vector<cd> refs;
    for (int i = 0; i < m; ++i) refs.push_back(amp(rng, 1.5));
    const MultiRefUi u = ui_m_refs(m, 1, 2, refs[1], refs);
    CHECK(u.probability == doctest::Approx(u.closed_form).epsilon(1e-10));
    CHECK(u.network.unitarity_error() < 1e-12);
  }
  CHECK_THROWS_AS(ui_m_refs_closed(1, 1, 1, {0.0}), Error);
}

TEST_CASE("resource split and limits") {
  CHECK(resource_tradeoff(4) == 2);
  CHECK(resource_tradeoff(7) == 3);
  CHECK(known_states_limit(1, 0.0, 2.0) == doctest::Approx(p_known_coherent(4.0)));
  for (double d2 : {0.1, 1.0, 5.0}) {
    CHECK(p_swap_based_coherent(d2) <= p_optimal_universal_coherent(d2));
    CHECK(p_optimal_universal_coherent(d2) <= p_beamsplitter_coherent(d2));
    CHECK(p_beamsplitter_coherent(d2) <= p_known_coherent(d2));
  }
  // Many weak rounds tend to the known-state limit from below.
  const WeakUi w = weak_ui(200, 0.0, 1.5);
  CHECK(w.overall <= p_known_coherent(2.25));
  CHECK(w.overall == doctest::Approx(1.0 - std::exp(-2.25 / 3.0)).epsilon(1e-12));
}

TEST_CASE("second round on the same unknown") {
  RandomStream rng(113);
  for (int trial = 0; trial < 5; ++trial) {
    const cd a1 = amp(rng, 1.0), a2 = amp(rng, 1.0);
    for (cd u : {a1, a2}) {
      const RepeatUi r = repeat_same_unknown(u, a1, a2);
      CHECK(std::abs(r.measured_a - r.closed_a) < 1e-12);
      CHECK(std::abs(r.measured_c - r.closed_c) < 1e-12);
    }
  }
}

TEST_CASE("recovery constants and iterates") {
  const RecoveryRound r = recovery_round(1.0);
  CHECK(r.t1r == doctest::Approx((7.0 - std::sqrt(13.0)) / 9.0).epsilon(1e-12));
  CHECK(r.lambda_next == doctest::Approx((7.0 - std::sqrt(13.0)) / 6.0).epsilon(1e-12));
  CHECK(r.t2r == doctest::Approx(9.0 * (1.0 - r.t1r) / (10.0 - 9.0 * r.t1r)).epsilon(1e-12));
  double lambda = 1.0;
  for (int k = 0; k < 100; ++k) {
    const double next = recovery_map(lambda);
    CHECK(next > 0.0);
    CHECK(next < lambda);
    lambda = next;
  }
  CHECK_THROWS_AS(recovery_round(0.0), Error);
  CHECK_THROWS_AS(recovery_round(1.5), Error);
}

TEST_CASE("recovery network output") {
  RandomStream rng(127);
  const cd a1 = amp(rng, 1.0), a2 = amp(rng, 1.0);
  const double l2 = recovery_map(1.0);
  for (bool first : {true, false}) {
    const auto rec = simulate_recovery(1.0, a1, a2, first);
    CHECK(std::abs(rec.first - std::sqrt(l2) * a1) < 1e-12);
    CHECK(std::abs(rec.second - std::sqrt(l2) * a2) < 1e-12);
  }
  // Below lambda = 1 the transmittivity formula keeps the identified
  // reference at sqrt(lambda_next) and cancels the unknown in the other mode,
  // whose dilution is lambda * sqrt(2 T2R / (1 + 2 lambda)).
  const double lam = 0.4;
  const RecoveryRound r = recovery_round(lam);
  const auto rec = simulate_recovery(lam, a1, a2, true);
  CHECK(std::abs(rec.first - std::sqrt(r.lambda_next) * a1) < 1e-12);
  CHECK(std::abs(rec.second - lam * std::sqrt(2.0 * r.t2r / (1.0 + 2.0 * lam)) * a2) < 1e-12);
}

TEST_CASE("multi-round success") {
  const std::vector<double> p = multi_round_success(3, 2.0);
  CHECK(p[0] == doctest::Approx(1.0 - std::exp(-2.0 / 3.0)));
  CHECK(p[0] == doctest::Approx(splitting_strategy(1, 2.0)));
  const double r13 = std::sqrt(13.0);
  CHECK(p[1] == doctest::Approx(p[0] * (1.0 - std::exp(-(7.0 - r13) / (2.0 * (10.0 - r13)) * 2.0))).epsilon(1e-12));
  CHECK(p[2] < p[1]);
  for (double d : {0.5, 2.0, 4.0}) {
    const std::vector<double> q = multi_round_success(10, d * d);
    for (int n = 1; n <= 10; ++n) CHECK(q[static_cast<size_t>(n - 1)] >= splitting_strategy(n, d * d) - 1e-14);
  }
}

TEST_CASE("gaussian integral against Monte Carlo") {
  RandomStream rng(131);
  for (int m : {1, 2}) {
    const cd x(0.7, -0.3);
    const McEstimate mc = gaussian_integral_mc(m, 0.5, 1.0, 0.4, x, 50000, rng);
    CHECK(within(mc, gaussian_integral(m, 0.5, 1.0, 0.4, x)));
  }
  CHECK(gaussian_integral(1, 0.5, 1.0, 0.0, 1.0) == doctest::Approx(std::exp(-0.5)));
}

TEST_CASE("noisy identification against Monte Carlo") {
  RandomStream rng(137);
  const cd a1 = 0.8, a2 = -0.8;
  const ClickMatrix m = noisy_click_matrix(1, 2, 1, 0.3, a1, a2);
  const ClickMatrixMc mc = noisy_click_monte_carlo(1, 2, 1, 0.3, a1, a2, 100000, rng);
  CHECK(within(mc.e1r1, m.e1r1));
  CHECK(within(mc.e1r2, m.e1r2));
  CHECK(within(mc.e2r1, m.e2r1));
  CHECK(within(mc.e2r2, m.e2r2));
  // Without noise there are no errors.
  const ClickMatrix clean = noisy_click_matrix(1, 1, 1, 0.0, a1, a2);
  CHECK(clean.e1r2 == doctest::Approx(0.0));
  CHECK(clean.e2r1 == doctest::Approx(0.0));
}

TEST_CASE("reliability and averages") {
  RandomStream rng(139);
  for (double xi : {0.5, 1.5}) {
    const McEstimate mc = reliability_monte_carlo(1, 1, 0.25, xi, 100000, rng);
    CHECK(within(mc, reliability(1, 1, 0.25, xi)));
    const NoisyAverages a = noisy_averages(1, 1, 0.25, xi);
    CHECK(a.success + a.error + a.failure == doctest::Approx(1.0).epsilon(1e-12));
    const NoisyAveragesMc amc = noisy_averages_monte_carlo(1, 1, 0.25, xi, 100000, rng);
    CHECK(within(amc.success, a.success));
    CHECK(within(amc.error, a.error));
  }
  CHECK(reliability(1, 1, 0.25, 100.0) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(reliability(1, 1, 0.25, 1e-4) == doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("detector efficiency") {
  const auto [p_ideal_at_half, p_other] = detector_curves(0.5, 1.0, 0.0, 1.0);
  CHECK(p_ideal_at_half == doctest::Approx(1.0 - std::exp(-1.0 / 3.0)));
  CHECK(p_other == doctest::Approx(1.0 - std::exp(-1.0 / 3.0)));
  CHECK(detector_curves(0.5, 0.0, 0.0, 1.0).first == 0.0);
  CHECK_THROWS_AS(detector_curves(0.5, 1.5, 0.0, 1.0), Error);
}

TEST_CASE("equal split is optimal among linear-optics schemes") {
  const LinearOpticsOptimum o = linear_optics_optimum_check(1.0, 1.0, 1.5);
  CHECK(o.lambda1_sq == doctest::Approx(o.lambda2_sq).epsilon(1e-4));
  CHECK(o.probability == doctest::Approx(ui_equal_refs(1, 1, 2.25)).epsilon(1e-6));
}
