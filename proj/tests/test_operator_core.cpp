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

#include "uqm/operator_core.hpp"
#include "uqm/oracles.hpp"

using namespace uqm;

TEST_CASE("symmetric projector trace matches the binomial count") {
  for (int d = 2; d <= 4; ++d)
    for (int k = 1; k <= 4; ++k) {
      if (std::pow(d, k) > 256) continue;
      const Mat p = symmetric_projector(d, k);
      CHECK(p.trace().real() == doctest::Approx(symmetric_dimension(d, k)).epsilon(1e-12));
      CHECK(symmetric_dimension(d, k) == doctest::Approx(binomial(d + k - 1, k)));
      CHECK(spectral_norm(p * p - p) < 1e-12);
      CHECK(hermiticity_error(p) < 1e-12);
    }
}

TEST_CASE("three projector constructions agree") {
  for (int d = 2; d <= 3; ++d)
    for (int k = 2; k <= 4; ++k)
      for (bool anti : {false, true}) {
        const Mat a = permutation_sum_projector(d, k, anti);
        const Mat b = pairwise_symmetrized_projector(d, k, anti);
        const Mat c = anti ? antisymmetric_projector(d, k).op : symmetric_projector(d, k);
        CHECK(spectral_norm(a - b) < 1e-12);
        CHECK(spectral_norm(a - c) < 1e-12);
      }
}

TEST_CASE("antisymmetric subspace is empty when k > d") {
  const Projector p = antisymmetric_projector(2, 3);
  CHECK(p.empty);
  CHECK(spectral_norm(p.op) < 1e-12);
  CHECK_FALSE(antisymmetric_projector(3, 3).empty);
}

TEST_CASE("symmetric and antisymmetric parts of two qudits are complementary") {
  for (int d = 2; d <= 4; ++d) {
    const Mat s = symmetric_projector(d, 2);
    const Mat a = antisymmetric_projector(d, 2).op;
    CHECK(spectral_norm(s + a - Mat::Identity(d * d, d * d)) < 1e-12);
    CHECK(spectral_norm(s * a) < 1e-12);
  }
}

TEST_CASE("permutation operator moves tensor factors") {
  const Vec v = product_ket(3, {0, 1, 2});
  // Party i lands on perm[i].
  const Vec w = permutation_operator(3, {1, 2, 0}) * v;
  CHECK((w - product_ket(3, {2, 0, 1})).norm() < 1e-14);
  const Mat swap = permutation_operator(2, {1, 0});
  CHECK(spectral_norm(swap * swap - Mat::Identity(4, 4)) < 1e-14);
}

TEST_CASE("embed places the operator on the named parties") {
  RandomStream rng(7);
  const Mat u = haar_unitary(2, rng);
  const Mat e = embed(u, 2, {1}, 3);
  const Mat i2 = Mat::Identity(2, 2);
  CHECK(spectral_norm(e - kron_all({i2, u, i2})) < 1e-13);
}

TEST_CASE("partial trace agrees with the loop oracle") {
  RandomStream rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<int> dims{2, 3, 2};
    Mat a = Mat::Zero(12, 12);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j) a(i, j) = rng.complex_normal();
    for (const std::vector<int>& traced : {std::vector<int>{0}, {1}, {2}, {0, 2}, {1, 2}}) {
      CHECK(spectral_norm(partial_trace(a, traced, dims) - partial_trace_loops(a, traced, dims)) < 1e-12);
    }
  }
}

TEST_CASE("haar samples are unitary and normalized") {
  RandomStream rng(3);
  for (int d : {2, 3, 5}) {
    const Mat u = haar_unitary(d, rng);
    CHECK(spectral_norm(u.adjoint() * u - Mat::Identity(d, d)) < 1e-12);
    CHECK(haar_state(d, rng).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("haar state second moment equals the normalized symmetric projector") {
  RandomStream rng(5);
  const int d = 2;
  const MatEstimate est = sample_mean_matrix(
      [&](RandomStream& r) -> Mat {
        const Vec v = haar_state(d, r);
        return proj(kron_vec(v, v));
      },
      40000, rng);
  const Mat expected = symmetric_projector(d, 2) / symmetric_dimension(d, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(est.mean(i, j) - expected(i, j)) <= 4.0 * est.stderr_(i, j) + 1e-12);
}

TEST_CASE("random streams are reproducible") {
  RandomStream a(99), b(99);
  for (int i = 0; i < 10; ++i) CHECK(a.normal() == b.normal());
  RandomStream sa = a.split(), sb = b.split();
  CHECK(sa.uniform() == sb.uniform());
}

TEST_CASE("validate_povm flags negative effects and bad sums") {
  Povm good{{proj(basis_ket(2, 0)), proj(basis_ket(2, 1))}};
  CHECK(validate_povm(good).valid);
  Povm negative{{2.0 * proj(basis_ket(2, 0)), proj(basis_ket(2, 1)) - proj(basis_ket(2, 0))}};
  CHECK_FALSE(validate_povm(negative).valid);
  Povm short_sum{{proj(basis_ket(2, 0))}};
  CHECK_FALSE(validate_povm(short_sum).valid);
}

TEST_CASE("support and intersection of subspaces") {
  const Mat p = proj(basis_ket(3, 0)) + proj(basis_ket(3, 1));
  const Mat q = proj(basis_ket(3, 1)) + proj(basis_ket(3, 2));
  CHECK(spectral_norm(intersect_projectors(p, q) - proj(basis_ket(3, 1))) < 1e-10);
  CHECK(numeric_rank(support_projector(0.3 * p), 1e-9) == 2);
  Mat cols(3, 2);
  cols.col(0) = basis_ket(3, 0) + basis_ket(3, 1);
  cols.col(1) = basis_ket(3, 1);
  CHECK(spectral_norm(span_projector(cols) - p) < 1e-12);
}

TEST_CASE("matrix functions") {
  Mat a = Mat::Zero(2, 2);
  a(0, 0) = 4.0;
  a(1, 1) = 9.0;
  const Mat r = sqrtm_psd(a);
  CHECK(r(0, 0).real() == doctest::Approx(2.0));
  CHECK(r(1, 1).real() == doctest::Approx(3.0));
  Mat h = Mat::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = -2.0;
  CHECK(trace_norm(h) == doctest::Approx(3.0));
  CHECK(min_eigenvalue(h) == doctest::Approx(-2.0));
}

TEST_CASE("tolerance can be changed and rejects bad values") {
  const double old = tolerance();
  set_tolerance(1e-7);
  CHECK(tolerance() == 1e-7);
  CHECK_THROWS_AS(set_tolerance(-1.0), Error);
  set_tolerance(old);
}
