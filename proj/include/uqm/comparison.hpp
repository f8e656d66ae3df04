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

#ifndef UQM_COMPARISON_HPP
#define UQM_COMPARISON_HPP

#include <vector>

#include "uqm/operator_core.hpp"

namespace uqm {

struct ComparisonConfig {
  int d = 2;
  int k = 1;
  int l = 1;
  double eta_diff = 1.0;
};

// Probability of detecting a difference between psi1^{k} and psi2^{l}
// with the symmetric-subspace measurement; x = |<psi1|psi2>|^2.
double compare_prob_pure(int k, int l, double x);
// P(k+1, l, x) - P(k, l, x).
double compare_copy_gain(int k, int l, double x);
// Haar-averaged success, eta_diff * (1 - d_{k+l} / (d_k d_l)).
double compare_avg_success(const ComparisonConfig& cfg);

// E1 = 0, E2 = I - P^sym, E0 = P^sym on k + l parties.
Povm comparison_povm(int d, int k, int l);

Mat gram_matrix(const std::vector<Vec>& states);
cd permanent(const Mat& a);           // Ryser expansion, n <= 10
cd permanent_naive(const Mat& a);     // explicit permutation sum, oracle
double difference_detect_prob(const std::vector<Vec>& states);

struct AllDifferent {
  double probability = 0.0;
  bool empty_subspace = false;  // more states than dimensions
};
AllDifferent all_different_prob(const std::vector<Vec>& states);

struct FiniteSetComparison {
  Mat rho1;  // both systems carry the same state
  Mat rho2;  // systems carry different states
  double eta1 = 0.0;
  double eta2 = 0.0;
};
FiniteSetComparison finite_set_comparison_states(double q1, double q2, const Vec& phi1, const Vec& phi2);

// Identity confirmation is possible exactly when the candidate states are
// linearly independent.
bool identity_confirmation_possible(const std::vector<Vec>& states, double tol = 1e-10);

}  // namespace uqm

#endif  // UQM_COMPARISON_HPP
