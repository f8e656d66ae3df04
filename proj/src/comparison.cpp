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

#include "uqm/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace uqm {

double compare_prob_pure(int k, int l, double x) {
  if (k < 1 || l < 1) throw Error(ErrorKind::argument, "copy counts must be at least 1");
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::argument, "squared overlap must lie in [0,1]");
  const double norm = binomial(k + l, k);
  double sum = 0.0;
  double xm = 1.0;
  for (int m = 0; m <= std::min(k, l); ++m) {
    sum += binomial(k, m) * binomial(l, m) / norm * xm;
    xm *= x;
  }
  return 1.0 - sum;
}

double compare_copy_gain(int k, int l, double x) {
  return compare_prob_pure(k + 1, l, x) - compare_prob_pure(k, l, x);
}

double compare_avg_success(const ComparisonConfig& cfg) {
  if (cfg.d < 1 || cfg.k < 1 || cfg.l < 1) throw Error(ErrorKind::argument, "invalid comparison configuration");
  if (!(cfg.eta_diff > 0.0 && cfg.eta_diff <= 1.0)) throw Error(ErrorKind::argument, "eta_diff must lie in (0,1]");
  const double ratio = symmetric_dimension(cfg.d, cfg.k + cfg.l) /
                       (symmetric_dimension(cfg.d, cfg.k) * symmetric_dimension(cfg.d, cfg.l));
  return cfg.eta_diff * (1.0 - ratio);
}

Povm comparison_povm(int d, int k, int l) {
  if (k < 1 || l < 1) throw Error(ErrorKind::argument, "copy counts must be at least 1");
  const Mat sym = symmetric_projector(d, k + l);
  const Eigen::Index dim = sym.rows();
  return Povm{{Mat::Zero(dim, dim), Mat::Identity(dim, dim) - sym, sym}};
}

Mat gram_matrix(const std::vector<Vec>& states) {
  const Eigen::Index n = static_cast<Eigen::Index>(states.size());
  Mat g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = states[static_cast<size_t>(i)].dot(states[static_cast<size_t>(j)]);
  return g;
}

cd permanent(const Mat& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::argument, "permanent needs a square matrix");
  if (n > 10) throw Error(ErrorKind::size, "exact permanent limited to n <= 10");
  if (n == 0) return 1.0;
  cd total = 0.0;
  const unsigned long subsets = 1UL << n;
  for (unsigned long s = 1; s < subsets; ++s) {
    cd prod = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      cd row = 0.0;
      for (Eigen::Index j = 0; j < n; ++j)
        if (s & (1UL << j)) row += a(i, j);
      prod *= row;
    }
    const int bits = __builtin_popcountl(s);
    total += ((n - bits) % 2 ? -1.0 : 1.0) * prod;
  }
  return total;
}

cd permanent_naive(const Mat& a) {
  const Eigen::Index n = a.rows();
  std::vector<Eigen::Index> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  cd total = 0.0;
  do {
    cd prod = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) prod *= a(i, perm[static_cast<size_t>(i)]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

double difference_detect_prob(const std::vector<Vec>& states) {
  if (states.size() < 2) throw Error(ErrorKind::argument, "at least two states are required");
  const double n_fact = std::tgamma(static_cast<double>(states.size()) + 1.0);
  return 1.0 - permanent(gram_matrix(states)).real() / n_fact;
}

AllDifferent all_different_prob(const std::vector<Vec>& states) {
  if (states.size() < 2) throw Error(ErrorKind::argument, "at least two states are required");
  AllDifferent out;
  if (static_cast<Eigen::Index>(states.size()) > states.front().size()) {
    out.empty_subspace = true;
    return out;
  }
  const double n_fact = std::tgamma(static_cast<double>(states.size()) + 1.0);
  out.probability = std::max(0.0, gram_matrix(states).determinant().real()) / n_fact;
  return out;
}

FiniteSetComparison finite_set_comparison_states(double q1, double q2, const Vec& phi1, const Vec& phi2) {
  if (std::abs(q1 + q2 - 1.0) > 1e-12 || q1 < 0.0 || q2 < 0.0)
    throw Error(ErrorKind::argument, "q1 and q2 must be probabilities summing to 1");
  if (std::abs(phi1.norm() - 1.0) > 1e-9 || std::abs(phi2.norm() - 1.0) > 1e-9)
    throw Error(ErrorKind::argument, "states must be normalized");
  FiniteSetComparison out;
  out.eta1 = q1 * q1 + q2 * q2;
  out.eta2 = 2.0 * q1 * q2;
  const Vec v11 = kron_vec(phi1, phi1), v22 = kron_vec(phi2, phi2);
  const Vec v12 = kron_vec(phi1, phi2), v21 = kron_vec(phi2, phi1);
  out.rho1 = (q1 * q1 * proj(v11) + q2 * q2 * proj(v22)) / out.eta1;
  out.rho2 = 0.5 * (proj(v12) + proj(v21));
  return out;
}

bool identity_confirmation_possible(const std::vector<Vec>& states, double tol) {
  if (states.empty()) return false;
  Mat cols(states.front().size(), static_cast<Eigen::Index>(states.size()));
  for (size_t i = 0; i < states.size(); ++i) cols.col(static_cast<Eigen::Index>(i)) = states[i];
  if (cols.cols() > cols.rows()) return false;
  Eigen::BDCSVD<Mat> svd(cols);
  const Eigen::VectorXd& s = svd.singularValues();
  return s(s.size() - 1) > tol * std::max(1.0, s(0));
}

}  // namespace uqm
