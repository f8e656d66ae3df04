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

#ifndef UQM_OPERATOR_CORE_HPP
#define UQM_OPERATOR_CORE_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace uqm {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

enum class ErrorKind {
  argument,
  positivity,
  degenerate,
  precondition,
  unsupported,
  size,
  numeric,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Global numeric threshold. Defaults to 1e-9; the UQM_TOL environment
// variable overrides it at first use, set_tolerance() afterwards.
double tolerance();
void set_tolerance(double tol);

// Seeded source for every randomized routine. Two streams built from the
// same seed produce the same draws in the same order.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  double uniform();
  double normal();
  // Complex Gaussian whose real and imaginary parts each have the given
  // variance.
  cd complex_normal(double variance_per_quadrature = 0.5);
  // Fresh independent stream, deterministic in (seed, counter).
  RandomStream split();

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

struct Povm {
  std::vector<Mat> effects;
  Eigen::Index dim() const { return effects.empty() ? 0 : effects.front().rows(); }
};

struct PovmReport {
  std::vector<double> min_eigenvalues;
  double sum_deviation = 0.0;  // spectral norm of (sum of effects - I)
  double hermiticity_deviation = 0.0;
  bool valid = false;
};

struct Projector {
  Mat op;
  bool empty = false;  // subspace has dimension zero
};

// Basic linear algebra helpers.
Mat kron(const Mat& a, const Mat& b);
Mat kron_all(const std::vector<Mat>& factors);
Vec kron_vec(const Vec& a, const Vec& b);
Vec kron_vec_all(const std::vector<Vec>& factors);
Vec basis_ket(Eigen::Index dim, Eigen::Index index);
Vec product_ket(int d, const std::vector<int>& digits);
Mat outer(const Vec& a, const Vec& b);
Mat proj(const Vec& v);
Mat dagger(const Mat& a);
double spectral_norm(const Mat& a);
double hermiticity_error(const Mat& a);
Eigen::VectorXd hermitian_eigenvalues(const Mat& a);
double min_eigenvalue(const Mat& a);
Mat sqrtm_psd(const Mat& a);
double trace_norm(const Mat& a);
Mat pseudo_inverse_hermitian(const Mat& a, double tol);
int numeric_rank(const Mat& a, double tol);
// Orthonormal columns spanning the range of a projector (eigenvalue > 1/2).
Mat range_basis(const Mat& projector);
// Projector onto the span of the given columns (need not be orthonormal).
Mat span_projector(const Mat& columns, double tol = 1e-10);
// Projector onto the intersection of two subspaces given by projectors.
Mat intersect_projectors(const Mat& p, const Mat& q, double threshold = 1e-8);

// Permutes tensor factors: party i of the input lands on party perm[i].
Mat permutation_operator(int d, const std::vector<int>& perm);
// Places an operator acting on the listed parties (in that order) inside
// total_parties qudits, identity elsewhere.
Mat embed(const Mat& op, int d, const std::vector<int>& parties, int total_parties);

Mat symmetric_projector(int d, const std::vector<int>& subsystems, int total_parties);
Projector antisymmetric_projector(int d, const std::vector<int>& subsystems,
                                  int total_parties);
// Convenience overloads acting on all k parties.
Mat symmetric_projector(int d, int k);
Projector antisymmetric_projector(int d, int k);

// Explicit (1/k!) sum over permutations, signed when antisymmetric is set.
Mat permutation_sum_projector(int d, int k, bool antisymmetric);
// Recursive construction P_k = (1/k)(I +- sum_j (j k)) (P_{k-1} x I).
Mat pairwise_symmetrized_projector(int d, int k, bool antisymmetric);

// Dimension of the k-fold symmetric subspace, C(d+k-1, k).
double symmetric_dimension(int d, int k);
double binomial(int n, int k);

Mat support_projector(const Mat& a, double tol = -1.0);
PovmReport validate_povm(const Povm& p, double tol = -1.0);
Mat haar_unitary(int d, RandomStream& rng);
Vec haar_state(int d, RandomStream& rng);
Mat partial_trace(const Mat& a, const std::vector<int>& traced, const std::vector<int>& dims);

}  // namespace uqm

#endif  // UQM_OPERATOR_CORE_HPP
