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

// Independent reference computations used by the tests and the acceptance
// runner. None of these call the closed forms they are compared against.

#ifndef UQM_ORACLES_HPP
#define UQM_ORACLES_HPP

#include <functional>
#include <vector>

#include "uqm/coherent.hpp"
#include "uqm/comparison.hpp"
#include "uqm/operator_core.hpp"

namespace uqm {

// Grid plus golden-section search over E1 = a|psi2_perp><psi2_perp|,
// E2 = b|psi1_perp><psi1_perp| for two real qubit states with overlap lambda.
double idp_brute_force(double lambda, double eta1);

// 1 - ((k+l)/pi) * integral of exp(-k|a1-b|^2 - l|a2-b|^2) over the plane.
double overlap_quadrature(int k, int l, cd a1, cd a2);

Mat partial_trace_loops(const Mat& a, const std::vector<int>& traced, const std::vector<int>& dims);
Mat choi_loops(const std::vector<Mat>& kraus);

// Distance from the origin to the convex hull of the points.
double hull_distance(const std::vector<cd>& points);
// min over probability vectors p of |sum_k p_k exp(i phase_k)| by search.
double diagonal_xi_minimum(const std::vector<double>& phases);

// Orthogonal (Hilbert-Schmidt) projection onto the span of `ops`.
Mat commutant_projection(const Mat& x, const std::vector<Mat>& ops);
// Exact U^{(x)k} twirl: projection onto the span of the k! permutations.
Mat haar_twirl_exact(const Mat& x, int d, int k);

McEstimate sample_mean(const std::function<double(RandomStream&)>& f, long samples, RandomStream& rng);
struct MatEstimate {
  Mat mean;
  Eigen::MatrixXd stderr_;  // entrywise, real and imaginary parts combined
  long samples = 0;
};
MatEstimate sample_mean_matrix(const std::function<Mat(RandomStream&)>& f, long samples, RandomStream& rng);

McEstimate gaussian_integral_mc(int m, double a, double b, double sigma, cd x, long samples, RandomStream& rng);
McEstimate comparison_average_mc(const ComparisonConfig& cfg, long samples, RandomStream& rng);
McEstimate hayashi_average_mc(int d, long samples, RandomStream& rng);
McEstimate comparator_average_mc(int d, long samples, RandomStream& rng);
MatEstimate twirl_mc(const Mat& y, int d, long samples, RandomStream& rng);
McEstimate labeled_average_mc(int d, long samples, RandomStream& rng);
McEstimate unlabeled_average_mc(long samples, RandomStream& rng);
// Average of A_same (x) A_same over Haar qubit observables A.
MatEstimate equal_same_same_mc(long samples, RandomStream& rng);

}  // namespace uqm

#endif  // UQM_ORACLES_HPP
