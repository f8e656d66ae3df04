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

#ifndef UQM_USD_HPP
#define UQM_USD_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uqm/operator_core.hpp"

namespace uqm {

// Unambiguous discrimination of two states rho1 (prior eta1) and rho2.
struct UsdProblem {
  Mat rho1;
  Mat rho2;
  double eta1 = 0.5;
  double eta2() const { return 1.0 - eta1; }
  Mat gamma1() const { return eta1 * rho1; }
  Mat gamma2() const { return eta2() * rho2; }
};

// left-projective: only rho2 is ever detected (small eta1).
// right-projective: only rho1 is ever detected (large eta1).
// povm: both are detected.
// composite: assembled from several sub-problems in different regimes.
enum class Regime { left_projective, povm, right_projective, composite };

std::string regime_name(Regime r);

struct UsdSolution {
  Povm povm;  // E1, E2, E0
  double p_discrimination = 0.0;
  Regime regime = Regime::povm;
  double c1 = 0.0;  // weight of E1 along the direction orthogonal to psi2
  double c2 = 0.0;
};

UsdSolution idp_optimal(const Vec& psi1, const Vec& psi2, double eta1);
// Closed-form success probability for overlap modulus lambda.
double idp_probability(double lambda, double eta1);
Regime idp_regime(double lambda, double eta1);

struct JordanPair {
  Mat basis_a;  // columns
  Mat basis_b;
  std::vector<double> cosines;  // descending, one per paired index
};

JordanPair jordan_basis(const Mat& basis_v1, const Mat& basis_v2);

struct Reduction {
  UsdProblem reduced;
  bool empty = false;  // nothing left to discriminate
  double n = 1.0;
  Mat pi_reduced;      // projector onto the space carrying the reduced problem
  Mat conclusive1;     // projector added to E1 on lifting (second reduction only)
  Mat conclusive2;
  // Lifts a POVM of the reduced problem back to the full space.
  std::function<Povm(const Povm&)> lift;
  // Lifts a failure probability of the reduced problem.
  std::function<double(double)> lift_failure;
};

Reduction reduce_common_subspace(const UsdProblem& p);
Reduction reduce_orthogonal_subspaces(const UsdProblem& p);

struct BlockProblem {
  UsdProblem problem;
  Mat block;
  double weight = 0.0;  // N_k
  bool empty = false;   // neither state populates the block
};

std::vector<BlockProblem> reduce_block_diagonal(const UsdProblem& p, const std::vector<Mat>& blocks);
double combine_block_failures(const std::vector<BlockProblem>& blocks, const std::vector<double>& q);
// True when [g1, g1 g2 g1], [g2, g2 g1^2 g2] and [g1, g1 g2^2 g1] all vanish.
bool has_two_dimensional_blocks(const UsdProblem& p, double tol = -1.0);

struct ProperReport {
  bool proper = false;
  double identity_deviation = 0.0;  // E0 on the complement of span(supports)
  double no_error_residual = 0.0;   // norm of gamma1 (I - E0) gamma2
};

ProperReport is_proper_usd(const Povm& povm, const UsdProblem& p, double tol = -1.0);

struct OptimalityReport {
  bool optimal = false;
  double positivity_residual = 0.0;   // most negative eigenvalue of the first condition
  double vanishing_residual = 0.0;    // norm of the second condition
  double block_residual_1 = 0.0;      // expanded conditions
  double block_residual_2 = 0.0;
  double cross_residual = 0.0;
  int rank_e0 = 0;
  int expected_rank_e0 = 0;
};

OptimalityReport check_optimality(const Mat& e0, const UsdProblem& p, double tol = -1.0);

double fidelity_bound(const UsdProblem& p);

struct FidelityForm {
  bool feasible = false;
  Mat e0;
  double p_discrimination = 0.0;
  std::string reason;
};

FidelityForm fidelity_form_e0(const UsdProblem& p, double tol = -1.0);

struct SubspaceSolution {
  Povm povm;
  double p_discrimination = 0.0;
  int n_common = 0;
  int n_orthogonal = 0;
  std::vector<double> pair_cosines;
  std::vector<Regime> pair_regimes;
  Regime regime = Regime::povm;
  bool explicit_form_valid = false;  // eta1 inside the interval where all pairs are povm
  double p_explicit = 0.0;
};

SubspaceSolution subspace_discrimination(const Mat& p1, const Mat& p2, double eta1);

// Success and no-error residual of a POVM (E1, E2, E0) on a problem.
double success_probability(const Povm& povm, const UsdProblem& p);
double no_error_residual(const Povm& povm, const UsdProblem& p);

}  // namespace uqm

#endif  // UQM_USD_HPP
