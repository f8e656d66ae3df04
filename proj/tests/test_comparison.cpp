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

#include "uqm/comparison.hpp"
#include "uqm/operator_core.hpp"
#include "uqm/oracles.hpp"
#include "uqm/usd.hpp"

using namespace uqm;

namespace {

Vec copies(const Vec& a, int k, const Vec& b, int l) {
  std::vector<Vec> f(static_cast<size_t>(k), a);
  f.insert(f.end(), static_cast<size_t>(l), b);
  return kron_vec_all(f);
}

}  // namespace

TEST_CASE("pure-state success matches the symmetric projector expectation") {
  RandomStream rng(41);
  const int d = 2;
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) {
      const Vec a = haar_state(d, rng), b = haar_state(d, rng);
      const double x = std::norm(a.dot(b));
      const Vec v = copies(a, k, b, l);
      const double direct = 1.0 - v.dot(symmetric_projector(d, k + l) * v).real();
      CHECK(compare_prob_pure(k, l, x) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("pure-state success limits") {
  CHECK(compare_prob_pure(1, 1, 0.0) == doctest::Approx(0.5));
  CHECK(compare_prob_pure(2, 3, 1.0) == doctest::Approx(0.0));
  CHECK(compare_prob_pure(1, 1, 0.4) == doctest::Approx(0.3));
}

TEST_CASE("extra copies never hurt") {
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 4; ++l)
      for (double x : {0.0, 0.3, 0.7, 0.99}) {
        CHECK(compare_copy_gain(k, l, x) >= -1e-14);
        CHECK(compare_copy_gain(k, l, x) ==
              doctest::Approx(compare_prob_pure(k + 1, l, x) - compare_prob_pure(k, l, x)).epsilon(1e-12));
      }
}

TEST_CASE("average success against Monte Carlo") {
  RandomStream rng(43);
  for (const ComparisonConfig cfg : {ComparisonConfig{2, 1, 1, 1.0}, ComparisonConfig{3, 2, 1, 0.6},
                                     ComparisonConfig{2, 2, 2, 1.0}}) {
    const McEstimate mc = comparison_average_mc(cfg, 20000, rng);
    CHECK(std::abs(mc.mean - compare_avg_success(cfg)) <= 4.0 * mc.stderr_);
  }
  // d = 2, one copy each: (1 - 3/4)
  CHECK(compare_avg_success({2, 1, 1, 1.0}) == doctest::Approx(0.25));
}

TEST_CASE("comparison POVM is valid and never signals a difference for equal states") {
  RandomStream rng(47);
  for (int d = 2; d <= 3; ++d) {
    const Povm p = comparison_povm(d, 2, 1);
    CHECK(validate_povm(p).valid);
    const Vec a = haar_state(d, rng);
    const Vec v = copies(a, 2, a, 1);
    CHECK(std::abs(v.dot(p.effects[1] * v)) < 1e-12);
  }
}

TEST_CASE("Ryser permanent agrees with the permutation sum") {
  RandomStream rng(53);
  for (int n = 1; n <= 6; ++n) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.complex_normal();
    CHECK(std::abs(permanent(a) - permanent_naive(a)) < 1e-10 * std::max(1.0, std::abs(permanent_naive(a))));
  }
  CHECK(permanent(Mat::Identity(4, 4)).real() == doctest::Approx(1.0));
  CHECK(permanent(Mat::Ones(3, 3)).real() == doctest::Approx(6.0));
}

TEST_CASE("difference detection equals the non-symmetric weight of the product state") {
  RandomStream rng(59);
  for (int n = 2; n <= 4; ++n) {
    std::vector<Vec> states;
    for (int i = 0; i < n; ++i) states.push_back(haar_state(2, rng));
    const Vec v = kron_vec_all(states);
    const double direct = 1.0 - v.dot(symmetric_projector(2, n) * v).real();
    CHECK(difference_detect_prob(states) == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("all-different detection equals the antisymmetric weight") {
  RandomStream rng(61);
  std::vector<Vec> states;
  for (int i = 0; i < 3; ++i) states.push_back(haar_state(3, rng));
  const Vec v = kron_vec_all(states);
  const double direct = v.dot(antisymmetric_projector(3, 3).op * v).real();
  const AllDifferent r = all_different_prob(states);
  CHECK_FALSE(r.empty_subspace);
  CHECK(r.probability == doctest::Approx(direct).epsilon(1e-10));
  states.push_back(haar_state(3, rng));
  CHECK(all_different_prob(states).empty_subspace);
}

TEST_CASE("identity confirmation needs linear independence") {
  const Vec a = basis_ket(3, 0), b = basis_ket(3, 1);
  CHECK(identity_confirmation_possible({a, b}));
  CHECK_FALSE(identity_confirmation_possible({a, b, (a + b) / std::sqrt(2.0)}));
  CHECK_FALSE(identity_confirmation_possible({a, b, a, b}));
}

TEST_CASE("finite set comparison priors and states") {
  Vec p1(2), p2(2);
  p1 << 1.0, 0.0;
  p2 << std::cos(0.4), std::sin(0.4);
  const FiniteSetComparison f = finite_set_comparison_states(0.3, 0.7, p1, p2);
  CHECK(f.eta1 + f.eta2 == doctest::Approx(1.0));
  CHECK(f.rho1.trace().real() == doctest::Approx(1.0));
  CHECK(f.rho2.trace().real() == doctest::Approx(1.0));
  CHECK(min_eigenvalue(f.rho2) > -1e-12);
  CHECK_THROWS_AS(finite_set_comparison_states(0.3, 0.3, p1, p2), Error);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(compare_prob_pure(0, 1, 0.5), Error);
  CHECK_THROWS_AS(compare_prob_pure(1, 1, 1.5), Error);
  CHECK_THROWS_AS(difference_detect_prob({basis_ket(2, 0)}), Error);
}
