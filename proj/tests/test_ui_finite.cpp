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

#include "uqm/operator_core.hpp"
#include "uqm/oracles.hpp"
#include "uqm/ui_finite.hpp"

using namespace uqm;

TEST_CASE("optimal two-reference measurement") {
  RandomStream rng(71);
  for (int d = 2; d <= 3; ++d) {
    const UiMeasurement m = hayashi_optimal(d);
    CHECK(validate_povm(m.povm).valid);
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<Vec> refs{haar_state(d, rng), haar_state(d, rng)};
      const double x = std::norm(refs[0].dot(refs[1]));
      CHECK(ui_probability(m, refs) == doctest::Approx(hayashi_probability(x)).epsilon(1e-10));
      CHECK(ui_no_error_residual(m, refs) < 1e-12);
    }
    CHECK(ui_average_probability(m) == doctest::Approx(hayashi_average(d)).epsilon(1e-10));
  }
  CHECK(hayashi_average(2) == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("haar average against Monte Carlo") {
  RandomStream rng(73);
  for (int d : {2, 3}) {
    const McEstimate mc = hayashi_average_mc(d, 20000, rng);
    CHECK(std::abs(mc.mean - hayashi_average(d)) <= 4.0 * mc.stderr_);
  }
}

TEST_CASE("swap-based measurement acceptance") {
  const SwapBased ok = swap_based(2, 2.0 / 3.0, 2.0 / 3.0);
  CHECK(ok.accepted);
  CHECK(ok.min_eigenvalue_closed == doctest::Approx(0.0).epsilon(1e-12));
  const SwapBased bad = swap_based(3, 2.0 / 3.0, 2.0 / 3.0);
  CHECK_FALSE(bad.accepted);
  CHECK(bad.offending_eigenvalue == doctest::Approx(-1.0 / 3.0));
  CHECK_FALSE(swap_based(2, 0.9, 0.9).accepted);
  for (const SwapBased& s : {ok, bad}) {
    REQUIRE(s.closed_spectrum.size() == s.dense_spectrum.size());
    for (size_t i = 0; i < s.closed_spectrum.size(); ++i)
      CHECK(s.closed_spectrum[i] == doctest::Approx(s.dense_spectrum[i]).epsilon(1e-10));
  }
}

TEST_CASE("swap-based success formula") {
  RandomStream rng(79);
  const double c1 = 0.5, c2 = 0.4, eta1 = 0.3;
  const SwapBased s = swap_based(3, c1, c2, eta1);
  REQUIRE(s.accepted);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<Vec> refs{haar_state(3, rng), haar_state(3, rng)};
    const double x = std::norm(refs[0].dot(refs[1]));
    CHECK(ui_probability(s.measurement, refs) == doctest::Approx(swap_based_probability(c1, c2, eta1, x)).epsilon(1e-10));
    CHECK(ui_no_error_residual(s.measurement, refs) < 1e-12);
  }
  CHECK(swap_based_average(2) == doctest::Approx(0.125));
}

TEST_CASE("prior-dependent qubit measurement") {
  for (double eta1 : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const UiMeasurement m = bergou_hillery(eta1);
    CHECK(validate_povm(m.povm).valid);
    CHECK(ui_average_probability(m) == doctest::Approx(bergou_hillery_mean(eta1)).epsilon(1e-10));
  }
  // Equal priors reproduce the prior-free optimum.
  CHECK(bergou_hillery_mean(0.5) == doctest::Approx(hayashi_average(2)));
  // Continuous at the regime edges.
  CHECK(bergou_hillery_mean(0.2 - 1e-9) == doctest::Approx(bergou_hillery_mean(0.2 + 1e-9)).epsilon(1e-6));
}

TEST_CASE("many-reference measurement is error free") {
  RandomStream rng(83);
  for (int d = 2; d <= 3; ++d) {
    const UiMeasurement m = zhang_ying(d);
    CHECK(validate_povm(m.povm).valid);
    std::vector<Vec> refs;
    for (int i = 0; i < d; ++i) refs.push_back(haar_state(d, rng));
    CHECK(ui_no_error_residual(m, refs) < 1e-12);
    CHECK(ui_probability(m, refs) > 0.0);
  }
  CHECK_THROWS_AS(zhang_ying(5), Error);
}

TEST_CASE("equatorial ansatz") {
  const EquatorialStates s = equatorial_average_states();
  CHECK(s.rho1.trace().real() == doctest::Approx(1.0));
  CHECK(s.rho2.trace().real() == doctest::Approx(1.0));
  for (int i = 0; i < 2; ++i) {
    CHECK((s.rho2 * s.kernel1[static_cast<size_t>(i)]).norm() < 1e-12);
    CHECK((s.rho1 * s.kernel2[static_cast<size_t>(i)]).norm() < 1e-12);
  }
  for (double eta1 : {0.3, 0.5, 0.8}) {
    const EquatorialOptimum o = equatorial_optimal(eta1);
    CHECK(validate_povm(o.povm).valid);
    const double p = eta1 * (o.povm.effects[0] * s.rho1).trace().real() +
                     (1.0 - eta1) * (o.povm.effects[1] * s.rho2).trace().real();
    CHECK(p == doctest::Approx(o.probability).epsilon(1e-9));
    CHECK(std::abs((o.povm.effects[0] * s.rho2).trace()) < 1e-12);
    CHECK(std::abs((o.povm.effects[1] * s.rho1).trace()) < 1e-12);
    // Any scaled identity pair that stays feasible does no better.
    Eigen::Matrix2cd half = 0.25 * Eigen::Matrix2cd::Identity();
    const Povm trial = equatorial_povm(half, half);
    if (validate_povm(trial).valid) {
      const double pt = eta1 * (trial.effects[0] * s.rho1).trace().real() +
                        (1.0 - eta1) * (trial.effects[1] * s.rho2).trace().real();
      CHECK(pt <= o.probability + 1e-12);
    }
  }
}

TEST_CASE("input state layout") {
  UiConfig cfg;
  cfg.d = 2;
  cfg.n_a = 1;
  const std::vector<Vec> refs{basis_ket(2, 0), basis_ket(2, 1)};
  CHECK((ui_input_state(cfg, refs, 0) - product_ket(2, {0, 0, 1})).norm() < 1e-14);
  CHECK((ui_input_state(cfg, refs, 1) - product_ket(2, {1, 0, 1})).norm() < 1e-14);
}
