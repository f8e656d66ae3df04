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

#ifndef UQM_CHANNELS_HPP
#define UQM_CHANNELS_HPP

#include <vector>

#include "uqm/operator_core.hpp"
#include "uqm/usd.hpp"

namespace uqm {

// omega = (I (x) E)[Psi+] with Psi+ = sum_jk |jj><kk| (unnormalized), the
// first factor being the reference copy of the input.
struct ChoiOperator {
  int d = 0;
  Mat omega;
};

// Process POVM; the elements sum to xi^T (x) I.
struct Ppovm {
  int d = 0;
  std::vector<Mat> elements;
  Mat xi;
};

struct PpovmReport {
  bool valid = false;
  std::vector<double> min_eigenvalues;
  Mat recovered_xi;
  double normalization_deviation = 0.0;  // || sum - xi^T (x) I ||
  bool xi_is_state = false;
};

Mat unnormalized_max_entangled(int d);  // Psi+
ChoiOperator choi_of_unitary(const Mat& u);
// Choi operator of a channel given by Kraus operators.
ChoiOperator choi_of_kraus(const std::vector<Mat>& kraus);
PpovmReport validate_ppovm(const Ppovm& p, double tol = -1.0);
bool usd_feasible(const ChoiOperator& a, const ChoiOperator& b, double tol = -1.0);

struct CbFidelity {
  double fidelity = 0.0;
  bool origin_in_hull = false;
  std::vector<double> phases;  // eigenphases of U^dagger V in [0, 2 pi)
  Mat eigenvectors;            // columns match `phases`
  std::vector<double> weights;  // diagonal of a minimizing xi in that basis
};
CbFidelity cb_fidelity_unitaries(const Mat& u, const Mat& v);

struct UnitaryUsd {
  double probability = 0.0;
  double fidelity = 0.0;
  Vec test_state;  // ancilla (x) system
  Vec out_u;       // (I (x) U) test_state
  Vec out_v;
  Povm povm;  // F_U, F_V, F_0 on ancilla (x) system
  double simulated = 0.0;
  bool swapped = false;  // eta_U < eta_V on input
};
UnitaryUsd unitary_usd(const Mat& u, const Mat& v, double eta_u, double eta_v);
double unitary_usd_probability(double fidelity, double eta_u);

// min over states xi of Tr| sqrt(omega1) (xi^T (x) I) sqrt(omega2) |.
struct XiMinimum {
  double value = 0.0;
  Mat xi;
};
XiMinimum cb_process_fidelity(const ChoiOperator& a, const ChoiOperator& b, RandomStream& rng, int restarts = 10);
double channel_fidelity_bound(const ChoiOperator& a, const ChoiOperator& b, double eta1, RandomStream& rng);

Mat average_channel(const Mat& x, int d);
// Haar twirl of an operator on two copies of C^d.
Mat twirl(const Mat& y, int d);
// (I (x) T)[Psi+_{d^2}] with parties ordered (in1, in2, out1, out2).
Mat twirl_choi(int d);

Ppovm comparator_ppovm(int d, const Mat& rho_test);  // {M_diff, M_0}
double comparator_average_success(int d, bool antisymmetric_test = true);
double comparator_conditional(const Mat& u, const Mat& v, const Mat& rho_test);
// Success with a symmetric test state and the swapped outcome assignment.
double comparator_conditional_symmetric(const Mat& u, const Mat& v, const Mat& rho_test);

struct ComparatorReport {
  bool valid = false;
  double same_trace = 0.0;      // Tr(M_same)
  double no_error_residual = 0.0;  // Tr(omega_T M_diff)
};
// Checks {M_diff, M_same, M_0} against the no-error conditions of a
// universal comparator.
ComparatorReport validate_comparator(int d, const Mat& m_diff, const Mat& m_same, double tol = -1.0);

}  // namespace uqm

#endif  // UQM_CHANNELS_HPP
