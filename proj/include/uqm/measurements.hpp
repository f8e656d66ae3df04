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

#ifndef UQM_MEASUREMENTS_HPP
#define UQM_MEASUREMENTS_HPP

#include <array>
#include <vector>

#include "uqm/operator_core.hpp"

namespace uqm {

// Projective measurement with rank-one effects.
struct SharpObservable {
  int d = 0;
  std::vector<Mat> projectors;
};

// Effects U|j><j|U^dagger.
SharpObservable observable_from_unitary(const Mat& u);
bool is_sharp(const SharpObservable& a, double tol = -1.0);

// Single use of each labeled apparatus on a bipartite test state. Equal
// outcomes prove the observables differ.
class LabeledComparison {
 public:
  LabeledComparison(int d, const Mat& rho_test);
  int d() const { return d_; }
  // Average over independent Haar observables.
  double average_success() const { return 1.0 / d_; }
  double q_same(const SharpObservable& a, const SharpObservable& b) const;

 private:
  int d_;
  Mat rho_;
};
LabeledComparison labeled_compare(int d, const Mat& rho_test);

struct IdentityReport {
  double q_jj = 0.0;  // Haar average of p(j, j) when the observables differ
  double q_jk = 0.0;
  Eigen::VectorXd spectrum;  // of (1/d) P^asym + (d-1)/(d(d+1)) P^sym
  bool full_rank = false;
};
// Shows that no outcome pair can confirm that two observables are equal.
IdentityReport identity_not_concludable(int d);

// Index 0 = same outcomes, 1 = different; first index for the two shots of
// A (parties 0, 1), second for B (parties 2, 3).
struct OutcomeClassOperators {
  int d = 0;
  std::array<std::array<Mat, 2>, 2> differ;  // A != B
  std::array<std::array<Mat, 2>, 2> equal;   // A = B
};
OutcomeClassOperators build_outcome_operators(int d);

Vec unlabeled_test_state();

struct UnlabeledSuccess {
  double probability = 0.0;
  double closed_form = 0.0;  // (2/3) sin^2(2 theta)
  double theta = 0.0;
};
// psi and phi are basis vectors of the two qubit observables; the second
// basis vector of each is the orthogonal complement.
UnlabeledSuccess unlabeled_success(const Vec& psi, const Vec& phi);

struct DiffDiffStrategy {
  Mat kappa;  // 16 x 3, orthonormal columns
  double probability = 0.0;
  double spread = 0.0;           // max deviation of the value across the basis
  double no_error_residual = 0.0;  // Tr(P_kappa (P13 P24 + P14 P23))
};
DiffDiffStrategy diffdiff_strategy();

double unlabeled_detection(double eta_a, double theta);

struct SubspaceAudit {
  std::vector<double> spectrum;  // of Q123 + Q124, ascending
  int count_four_thirds = 0;
  int count_two_thirds = 0;
  int dim_symmetric = 0;
  int dim_kappa = 0;
  int dim_q12_plus = 0;
  double omega_cross_error = 0.0;  // max |<w_j|w'_k> + 2 delta_jk|
  double omega_norm_error = 0.0;   // max |<w|w> - 6|
  double omega_support_error = 0.0;  // w in Q123, w' in Q124
  double joint_support_error = 0.0;  // P123 ^ P124 vs P1234
  bool passed = false;
};
SubspaceAudit subspace_audit();

}  // namespace uqm

#endif  // UQM_MEASUREMENTS_HPP
