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

#include "uqm/channels.hpp"
#include "uqm/operator_core.hpp"
#include "uqm/oracles.hpp"

using namespace uqm;

namespace {

std::vector<cd> eigenvalues_of(const Mat& u, const Mat& v) {
  Eigen::ComplexEigenSolver<Mat> es(u.adjoint() * v);
  std::vector<cd> z(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return z;
}

Mat diag_unitary(const std::vector<double>& phases) {
  Mat u = Mat::Zero(static_cast<Eigen::Index>(phases.size()), static_cast<Eigen::Index>(phases.size()));
  for (size_t i = 0; i < phases.size(); ++i) u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = std::polar(1.0, phases[i]);
  return u;
}

Mat antisym_state(int d) {
  const Mat pa = antisymmetric_projector(d, 2).op;
  return pa / pa.trace().real();
}

}  // namespace

TEST_CASE("Choi operators agree with the loop oracle") {
  RandomStream rng(201);
  for (int d = 2; d <= 3; ++d) {
    const Mat u = haar_unitary(d, rng);
    CHECK(spectral_norm(choi_of_unitary(u).omega - choi_loops({u})) < 1e-12);
    CHECK(choi_of_unitary(u).omega.trace().real() == doctest::Approx(d));
  }
  const double g = 0.3;
  Mat k0 = Mat::Zero(2, 2), k1 = Mat::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - g);
  k1(0, 1) = std::sqrt(g);
  CHECK(spectral_norm(choi_of_kraus({k0, k1}).omega - choi_loops({k0, k1})) < 1e-12);
  CHECK_THROWS_AS(choi_of_kraus({k0}), Error);
}

TEST_CASE("Choi operator of the identity") {
  const ChoiOperator c = choi_of_unitary(Mat::Identity(2, 2));
  CHECK(spectral_norm(c.omega - unnormalized_max_entangled(2)) < 1e-14);
}

TEST_CASE("unitary channels can be told apart unless equal") {
  RandomStream rng(203);
  const Mat u = haar_unitary(2, rng), v = haar_unitary(2, rng);
  CHECK(usd_feasible(choi_of_unitary(u), choi_of_unitary(v)));
  CHECK_FALSE(usd_feasible(choi_of_unitary(u), choi_of_unitary(u)));
  // Global phase does not change the channel.
  CHECK_FALSE(usd_feasible(choi_of_unitary(u), choi_of_unitary(cd(0.0, 1.0) * u)));
}

TEST_CASE("process fidelity of unitaries equals the hull distance of the eigenvalues") {
  RandomStream rng(207);
  for (int d = 2; d <= 4; ++d)
    for (int trial = 0; trial < 20; ++trial) {
      const Mat u = haar_unitary(d, rng), v = haar_unitary(d, rng);
      const CbFidelity f = cb_fidelity_unitaries(u, v);
      CHECK(f.fidelity == doctest::Approx(hull_distance(eigenvalues_of(u, v))).epsilon(1e-10));
      CHECK(f.fidelity == doctest::Approx(diagonal_xi_minimum(f.phases)).epsilon(1e-6));
      CHECK(f.origin_in_hull == (f.fidelity < 1e-12));
      double w = 0.0;
      cd s = 0.0;
      for (size_t k = 0; k < f.weights.size(); ++k) {
        CHECK(f.weights[k] >= -1e-14);
        w += f.weights[k];
        s += f.weights[k] * std::polar(1.0, f.phases[k]);
      }
      CHECK(w == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(s) == doctest::Approx(f.fidelity).epsilon(1e-9));
    }
}

TEST_CASE("process fidelity closed cases") {
  // Two eigenphases a apart: F = |cos(a/2)|.
  const CbFidelity f = cb_fidelity_unitaries(Mat::Identity(2, 2), diag_unitary({0.0, 1.2}));
  CHECK(f.fidelity == doctest::Approx(std::cos(0.6)).epsilon(1e-12));
  CHECK_FALSE(f.origin_in_hull);
  // Cube roots of unity surround the origin.
  const double t = 2.0 * M_PI / 3.0;
  CHECK(cb_fidelity_unitaries(Mat::Identity(3, 3), diag_unitary({0.0, t, 2.0 * t})).origin_in_hull);
  CHECK(cb_fidelity_unitaries(Mat::Identity(2, 2), Mat::Identity(2, 2)).fidelity == doctest::Approx(1.0));
}

TEST_CASE("numeric minimization over input states matches unitary fidelity") {
  RandomStream rng(211);
  for (int d = 2; d <= 3; ++d)
    for (int trial = 0; trial < 3; ++trial) {
      const Mat u = haar_unitary(d, rng), v = haar_unitary(d, rng);
      const double f = cb_fidelity_unitaries(u, v).fidelity;
      const XiMinimum m = cb_process_fidelity(choi_of_unitary(u), choi_of_unitary(v), rng, 4);
      CHECK(m.value == doctest::Approx(f).epsilon(1e-5));
      CHECK(m.xi.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(min_eigenvalue(m.xi) > -1e-12);
    }
}

TEST_CASE("unitary discrimination") {
  RandomStream rng(213);
  for (double eta : {0.5, 0.3, 0.8})
    for (int trial = 0; trial < 5; ++trial) {
      const Mat u = haar_unitary(3, rng), v = haar_unitary(3, rng);
      const UnitaryUsd r = unitary_usd(u, v, eta, 1.0 - eta);
      CHECK(r.probability == doctest::Approx(unitary_usd_probability(r.fidelity, eta)).epsilon(1e-12));
      CHECK(r.simulated == doctest::Approx(r.probability).epsilon(1e-9));
      CHECK(validate_povm(r.povm).valid);
      CHECK(r.swapped == (eta < 0.5));
      // No error: F_U never fires on the V output and vice versa.
      CHECK(std::abs(r.out_v.dot(r.povm.effects[0] * r.out_v)) < 1e-10);
      CHECK(std::abs(r.out_u.dot(r.povm.effects[1] * r.out_u)) < 1e-10);
    }
  CHECK(unitary_usd_probability(0.0, 0.5) == doctest::Approx(1.0));
  CHECK(unitary_usd_probability(0.4, 0.5) == doctest::Approx(0.6));
  CHECK_THROWS_AS(unitary_usd(Mat::Identity(2, 2), Mat::Identity(2, 2), 0.5, 0.6), Error);
}

TEST_CASE("fidelity bound for channels") {
  RandomStream rng(217);
  const Mat u = haar_unitary(2, rng), v = haar_unitary(2, rng);
  const double bound = channel_fidelity_bound(choi_of_unitary(u), choi_of_unitary(v), 0.5, rng);
  CHECK(bound == doctest::Approx(1.0 - cb_fidelity_unitaries(u, v).fidelity).epsilon(1e-5));
}

TEST_CASE("twirls agree with the exact commutant projection and Monte Carlo") {
  RandomStream rng(219);
  for (int d = 2; d <= 3; ++d) {
    const int n = d * d;
    Mat y(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y(i, j) = rng.complex_normal();
    CHECK(spectral_norm(twirl(y, d) - haar_twirl_exact(y, d, 2)) < 1e-10);
    CHECK(std::abs(twirl(y, d).trace() - y.trace()) < 1e-10);
    const Mat x = y.topLeftCorner(d, d);
    CHECK(spectral_norm(average_channel(x, d) - haar_twirl_exact(x, d, 1)) < 1e-10);
  }
  const int d = 2;
  Mat y = Mat::Zero(4, 4);
  y(0, 3) = 1.0;
  y(1, 1) = 0.5;
  const MatEstimate mc = twirl_mc(y, d, 20000, rng);
  const Mat t = twirl(y, d);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(mc.mean(i, j) - t(i, j)) <= 4.0 * mc.stderr_(i, j) + 1e-12);
}

TEST_CASE("comparator of unitaries") {
  RandomStream rng(223);
  for (int d = 2; d <= 3; ++d) {
    const Mat rho = antisym_state(d);
    const Ppovm p = comparator_ppovm(d, rho);
    CHECK(validate_ppovm(p).valid);
    // Equal unitaries never look different.
    const Mat u = haar_unitary(d, rng);
    CHECK(comparator_conditional(u, u, rho) < 1e-12);
    const McEstimate mc = comparator_average_mc(d, 20000, rng);
    CHECK(std::abs(mc.mean - comparator_average_success(d)) <= 4.0 * mc.stderr_);
    const Mat pa = antisymmetric_projector(d, 2).op, ps = symmetric_projector(d, 2);
    const Mat m_diff = kron(rho.transpose(), ps);
    CHECK(validate_comparator(d, m_diff, Mat::Zero(d * d * d * d, d * d * d * d)).valid);
    CHECK_FALSE(validate_comparator(d, kron(rho.transpose(), pa), Mat::Zero(d * d * d * d, d * d * d * d)).valid);
  }
  CHECK(comparator_average_success(2) == doctest::Approx(0.75));
  CHECK_THROWS_AS(comparator_ppovm(2, symmetric_projector(2, 2) / 3.0), Error);
}

TEST_CASE("symmetric test state variant") {
  RandomStream rng(227);
  const int d = 2;
  const Mat rho = symmetric_projector(d, 2) / 3.0;
  const Mat u = haar_unitary(d, rng);
  CHECK(comparator_conditional_symmetric(u, u, rho) < 1e-12);
  CHECK(comparator_conditional_symmetric(u, haar_unitary(d, rng), rho) >= -1e-12);
  CHECK_THROWS_AS(comparator_conditional_symmetric(u, u, antisym_state(d)), Error);
}

TEST_CASE("PPOVM validation catches a bad normalization") {
  const int d = 2;
  const Mat rho = antisym_state(d);
  Ppovm p = comparator_ppovm(d, rho);
  p.elements[0] *= 1.1;
  CHECK_FALSE(validate_ppovm(p).valid);
}
