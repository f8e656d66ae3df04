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

#ifndef UQM_UI_FINITE_HPP
#define UQM_UI_FINITE_HPP

#include <vector>

#include "uqm/operator_core.hpp"

namespace uqm {

// Party layout: the n_a copies of the unknown system come first, followed
// by the copies of reference 1, reference 2, ...
struct UiConfig {
  int d = 2;
  int n_a = 1;
  std::vector<int> n_refs{1, 1};
  std::vector<double> priors{0.5, 0.5};
  int references() const { return static_cast<int>(n_refs.size()); }
  int total_parties() const;
};

struct UiMeasurement {
  UiConfig cfg;
  Povm povm;  // E1 .. EM, E0
};

// Average input states, one per hypothesis "unknown equals reference i",
// with references drawn uniformly from the first subspace_dim basis vectors.
std::vector<Mat> ui_average_states(const UiConfig& cfg, int subspace_dim);
std::vector<Mat> ui_average_states(const UiConfig& cfg);

// Global state of all parties when the unknown equals reference `which`.
Vec ui_input_state(const UiConfig& cfg, const std::vector<Vec>& refs, int which);
double ui_probability(const UiMeasurement& m, const std::vector<Vec>& refs);
double ui_no_error_residual(const UiMeasurement& m, const std::vector<Vec>& refs);
double ui_average_probability(const UiMeasurement& m);

UiMeasurement bergou_hillery(double eta1);
double bergou_hillery_mean(double eta1);

struct SwapBased {
  bool accepted = false;
  UiMeasurement measurement;
  double min_eigenvalue_closed = 0.0;
  double min_eigenvalue_dense = 0.0;
  double offending_eigenvalue = 0.0;  // 1 - c1 - c2 when rejected on the six-dimensional blocks
  std::vector<double> closed_spectrum;  // sorted, with multiplicities
  std::vector<double> dense_spectrum;
};

SwapBased swap_based(int d, double c1, double c2, double eta1 = 0.5);
// P(psi1, psi2) = (eta1 c1 + eta2 c2)(1 - x) / 2.
double swap_based_probability(double c1, double c2, double eta1, double x);

UiMeasurement hayashi_optimal(int d);
double hayashi_probability(double x);
double hayashi_average(int d);
double swap_based_average(int d);

UiMeasurement zhang_ying(int d);

struct EquatorialStates {
  Mat rho1;
  Mat rho2;
  std::vector<Vec> kernel1;  // a_1, a_2: annihilated by rho2
  std::vector<Vec> kernel2;  // b_1, b_2: annihilated by rho1
};
EquatorialStates equatorial_average_states();

struct EquatorialOptimum {
  Eigen::Matrix2cd alpha;
  Eigen::Matrix2cd beta;
  double probability = 0.0;
  Povm povm;
};
// Maximizes the identification probability over E1 = sum alpha_ij |a_i><a_j|,
// E2 = sum beta_ij |b_i><b_j| subject to E0 >= 0.
EquatorialOptimum equatorial_optimal(double eta1);
Povm equatorial_povm(const Eigen::Matrix2cd& alpha, const Eigen::Matrix2cd& beta);

}  // namespace uqm

#endif  // UQM_UI_FINITE_HPP
