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

#include "uqm/measurements.hpp"
#include "uqm/operator_core.hpp"
#include "uqm/oracles.hpp"

using namespace uqm;

namespace {

Mat antisym_state(int d) {
  const Mat pa = antisymmetric_projector(d, 2).op;
  return pa / pa.trace().real();
}

Vec qubit(double angle) {
  Vec v(2);
  v << std::cos(angle), std::sin(angle);
  return v;
}

}  // namespace

TEST_CASE("sharp observables") {
  RandomStream rng(301);
  const SharpObservable a = observable_from_unitary(haar_unitary(3, rng));
  CHECK(a.d == 3);
  CHECK(is_sharp(a));
  SharpObservable b = a;
  b.projectors[0] *= 0.5;
  CHECK_FALSE(is_sharp(b));
}

TEST_CASE("labeled comparison never errs and averages 1/d") {
  RandomStream rng(303);
  for (int d = 2; d <= 3; ++d) {
    const LabeledComparison c(d, antisym_state(d));
    const SharpObservable a = observable_from_unitary(haar_unitary(d, rng));
    CHECK(c.q_same(a, a) < 1e-12);
    const SharpObservable b = observable_from_unitary(haar_unitary(d, rng));
    CHECK(c.q_same(a, b) >= -1e-12);
    const McEstimate mc = labeled_average_mc(d, 20000, rng);
    CHECK(std::abs(mc.mean - c.average_success()) <= 4.0 * mc.stderr_);
  }
  CHECK_THROWS_AS(LabeledComparison(2, symmetric_projector(2, 2) / 3.0), Error);
}

TEST_CASE("equality of observables cannot be confirmed") {
  for (int d = 2; d <= 4; ++d) {
    const IdentityReport r = identity_not_concludable(d);
    CHECK(r.full_rank);
    CHECK(r.q_jj > 0.0);
    CHECK(r.q_jk > 0.0);
    CHECK(r.spectrum.minCoeff() > 0.0);
  }
}

TEST_CASE("outcome class operators sum to the identity and are positive") {
  const OutcomeClassOperators ops = build_outcome_operators(2);
  Mat differ = Mat::Zero(16, 16), equal = Mat::Zero(16, 16);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(min_eigenvalue(ops.differ[i][j]) > -1e-12);
      CHECK(min_eigenvalue(ops.equal[i][j]) > -1e-12);
      differ += ops.differ[i][j];
      equal += ops.equal[i][j];
    }
  CHECK(spectral_norm(differ - Mat::Identity(16, 16)) < 1e-12);
  CHECK(spectral_norm(equal - Mat::Identity(16, 16)) < 1e-12);
  CHECK_THROWS_AS(build_outcome_operators(3), Error);
}

TEST_CASE("equal-observable same/same class against Monte Carlo") {
  RandomStream rng(307);
  const OutcomeClassOperators ops = build_outcome_operators(2);
  const MatEstimate mc = equal_same_same_mc(20000, rng);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) CHECK(std::abs(mc.mean(i, j) - ops.equal[0][0](i, j)) <= 4.0 * mc.stderr_(i, j) + 1e-12);
}

TEST_CASE("unlabeled test state") {
  const Vec q = unlabeled_test_state();
  CHECK(q.norm() == doctest::Approx(1.0).epsilon(1e-12));
  // Symmetric in each shot pair exchange (1 2)(3 4) and free of P^sym on parties 1-3.
  const Mat swap = permutation_operator(2, {1, 0, 3, 2});
  CHECK((swap * q - q).norm() < 1e-12);
  CHECK((symmetric_projector(2, {0, 1, 2}, 4) * q).norm() < 1e-12);
  CHECK((symmetric_projector(2, {0, 1, 3}, 4) * q).norm() < 1e-12);
}

TEST_CASE("unlabeled success") {
  RandomStream rng(311);
  for (int trial = 0; trial < 10; ++trial) {
    const Vec psi = haar_state(2, rng), phi = haar_state(2, rng);
    const UnlabeledSuccess s = unlabeled_success(psi, phi);
    CHECK(s.probability == doctest::Approx(s.closed_form).epsilon(1e-10));
    CHECK(s.closed_form == doctest::Approx(2.0 / 3.0 * std::pow(std::sin(2.0 * s.theta), 2)).epsilon(1e-12));
  }
  CHECK(unlabeled_success(qubit(0.0), qubit(M_PI / 4.0)).probability == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  // Same observable: never declared different.
  CHECK(unlabeled_success(qubit(0.3), qubit(0.3)).probability == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(unlabeled_success(qubit(0.3), qubit(0.3 + M_PI / 2.0)).probability == doctest::Approx(0.0).epsilon(1e-12));
  const McEstimate mc = unlabeled_average_mc(20000, rng);
  CHECK(std::abs(mc.mean - 4.0 / 9.0) <= 4.0 * mc.stderr_);
}

TEST_CASE("different/different strategy") {
  const DiffDiffStrategy s = diffdiff_strategy();
  CHECK(s.kappa.rows() == 16);
  CHECK(s.kappa.cols() == 3);
  CHECK(spectral_norm(s.kappa.adjoint() * s.kappa - Mat::Identity(3, 3)) < 1e-12);
  CHECK(s.probability == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(s.spread < 1e-12);
  CHECK(s.no_error_residual < 1e-12);
}

TEST_CASE("detection value") {
  CHECK(unlabeled_detection(0.5, M_PI / 2.0) == doctest::Approx(0.5));
  CHECK(unlabeled_detection(1.0, 0.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(unlabeled_detection(1.5, 0.3), Error);
  CHECK_THROWS_AS(unlabeled_detection(0.5, 4.0), Error);
}

TEST_CASE("subspace audit") {
  const SubspaceAudit a = subspace_audit();
  CHECK(a.passed);
  CHECK(a.count_four_thirds + a.count_two_thirds > 0);
  CHECK(a.dim_symmetric == 5);
  CHECK(a.omega_cross_error < 1e-12);
  CHECK(a.omega_norm_error < 1e-12);
  CHECK(a.omega_support_error < 1e-12);
  CHECK(a.joint_support_error < 1e-10);
}
