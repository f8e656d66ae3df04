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

#include "uqm/operator_core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>

namespace uqm {

namespace {

std::atomic<double> g_tolerance{-1.0};
std::once_flag g_tolerance_once;

void init_tolerance() {
  double tol = 1e-9;
  if (const char* env = std::getenv("UQM_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0 && std::isfinite(v)) tol = v;
  }
  double expected = -1.0;
  g_tolerance.compare_exchange_strong(expected, tol);
}

double resolve(double tol) { return tol < 0.0 ? tolerance() : tol; }

Eigen::Index int_pow(int base, int exp) {
  Eigen::Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_parties(int d, const std::vector<int>& parties, int total) {
  if (d < 1) throw Error(ErrorKind::argument, "dimension must be positive");
  if (parties.empty() || static_cast<int>(parties.size()) > total)
    throw Error(ErrorKind::argument, "subsystem list must be non-empty and fit total_parties");
  std::vector<int> seen(static_cast<size_t>(total), 0);
  for (int p : parties) {
    if (p < 0 || p >= total) throw Error(ErrorKind::argument, "subsystem index out of range");
    if (seen[static_cast<size_t>(p)]++) throw Error(ErrorKind::argument, "subsystem indices must be distinct");
  }
}

}  // namespace

double tolerance() {
  std::call_once(g_tolerance_once, init_tolerance);
  return g_tolerance.load();
}

void set_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorKind::argument, "tolerance must be positive");
  std::call_once(g_tolerance_once, init_tolerance);
  g_tolerance.store(tol);
}

double RandomStream::uniform() {
  ++counter_;
  return uniform_(engine_);
}

double RandomStream::normal() {
  ++counter_;
  return normal_(engine_);
}

cd RandomStream::complex_normal(double variance_per_quadrature) {
  double s = std::sqrt(variance_per_quadrature);
  double re = normal();
  double im = normal();
  return {s * re, s * im};
}

RandomStream RandomStream::split() {
  ++counter_;
  std::uint64_t z = engine_() + 0x9e3779b97f4a7c15ULL * counter_;
  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return RandomStream(z ^ (z >> 31));
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron_all(const std::vector<Mat>& factors) {
  Mat out = Mat::Identity(1, 1);
  for (const Mat& f : factors) out = kron(out, f);
  return out;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Vec kron_vec_all(const std::vector<Vec>& factors) {
  Vec out = Vec::Ones(1);
  for (const Vec& f : factors) out = kron_vec(out, f);
  return out;
}

Vec basis_ket(Eigen::Index dim, Eigen::Index index) {
  Vec v = Vec::Zero(dim);
  v(index) = 1.0;
  return v;
}

Vec product_ket(int d, const std::vector<int>& digits) {
  Eigen::Index idx = 0;
  for (int x : digits) idx = idx * d + x;
  return basis_ket(int_pow(d, static_cast<int>(digits.size())), idx);
}

Mat outer(const Vec& a, const Vec& b) { return a * b.adjoint(); }

Mat proj(const Vec& v) { return v * v.adjoint(); }

Mat dagger(const Mat& a) { return a.adjoint(); }

double spectral_norm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

double hermiticity_error(const Mat& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd hermitian_eigenvalues(const Mat& a) {
  Mat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_eigenvalue(const Mat& a) {
  if (a.size() == 0) return 0.0;
  return hermitian_eigenvalues(a).minCoeff();
}

Mat sqrtm_psd(const Mat& a) {
  Mat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

double trace_norm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<Mat> svd(a);
  return svd.singularValues().sum();
}

Mat pseudo_inverse_hermitian(const Mat& a, double tol) {
  Mat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXd& ev = es.eigenvalues();
  double scale = ev.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i)) > tol * scale) inv(i) = 1.0 / ev(i);
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
}

int numeric_rank(const Mat& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::BDCSVD<Mat> svd(a);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s(0) <= 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

Mat range_basis(const Mat& projector) {
  Mat h = 0.5 * (projector + projector.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; --i)
    if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
  Mat out(h.rows(), static_cast<Eigen::Index>(keep.size()));
  for (size_t c = 0; c < keep.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]);
  return out;
}

Mat span_projector(const Mat& columns, double tol) {
  Mat p = Mat::Zero(columns.rows(), columns.rows());
  if (columns.cols() == 0) return p;
  Eigen::BDCSVD<Mat> svd(columns, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s(0) <= 0.0) return p;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) p += proj(svd.matrixU().col(i));
  return p;
}

Mat intersect_projectors(const Mat& p, const Mat& q, double threshold) {
  Mat s = p + q;
  Mat h = 0.5 * (s + s.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Mat out = Mat::Zero(p.rows(), p.cols());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 2.0 - threshold) out += proj(es.eigenvectors().col(i));
  return out;
}

Mat permutation_operator(int d, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  const Eigen::Index dim = int_pow(d, n);
  std::vector<Eigen::Index> stride(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) stride[static_cast<size_t>(p)] = int_pow(d, n - 1 - p);
  Mat out = Mat::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    Eigen::Index y = 0;
    for (int p = 0; p < n; ++p) {
      Eigen::Index digit = (x / stride[static_cast<size_t>(p)]) % d;
      y += digit * stride[static_cast<size_t>(perm[static_cast<size_t>(p)])];
    }
    out(y, x) = 1.0;
  }
  return out;
}

Mat embed(const Mat& op, int d, const std::vector<int>& parties, int total_parties) {
  check_parties(d, parties, total_parties);
  const int m = static_cast<int>(parties.size());
  if (op.rows() != int_pow(d, m) || op.cols() != op.rows())
    throw Error(ErrorKind::argument, "operator size does not match the listed parties");
  std::vector<int> order(parties);
  for (int p = 0; p < total_parties; ++p)
    if (std::find(parties.begin(), parties.end(), p) == parties.end()) order.push_back(p);
  Mat full = kron(op, Mat::Identity(int_pow(d, total_parties - m), int_pow(d, total_parties - m)));
  bool natural = true;
  for (int i = 0; i < total_parties; ++i) natural = natural && order[static_cast<size_t>(i)] == i;
  if (natural) return full;
  Mat q = permutation_operator(d, order);
  return q * full * q.transpose();
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  if (n <= 60) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return static_cast<double>(r);
  }
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

double symmetric_dimension(int d, int k) { return binomial(d + k - 1, k); }

Mat permutation_sum_projector(int d, int k, bool antisymmetric) {
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  const Eigen::Index dim = int_pow(d, k);
  std::vector<Eigen::Index> stride(static_cast<size_t>(k));
  for (int p = 0; p < k; ++p) stride[static_cast<size_t>(p)] = int_pow(d, k - 1 - p);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim, dim);
  double count = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
    const double sign = (antisymmetric && (inversions % 2)) ? -1.0 : 1.0;
    for (Eigen::Index x = 0; x < dim; ++x) {
      Eigen::Index y = 0;
      for (int p = 0; p < k; ++p)
        y += ((x / stride[static_cast<size_t>(p)]) % d) * stride[static_cast<size_t>(perm[static_cast<size_t>(p)])];
      sum(y, x) += sign;
    }
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (sum / count).cast<cd>();
}

Mat pairwise_symmetrized_projector(int d, int k, bool antisymmetric) {
  Mat p = Mat::Identity(d, d);
  const double s = antisymmetric ? -1.0 : 1.0;
  for (int m = 2; m <= k; ++m) {
    const Eigen::Index dim = int_pow(d, m);
    Mat lifted = kron(p, Mat::Identity(d, d));
    Mat coset = Mat::Identity(dim, dim);
    for (int j = 0; j < m - 1; ++j) {
      std::vector<int> perm(static_cast<size_t>(m));
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[static_cast<size_t>(j)], perm[static_cast<size_t>(m - 1)]);
      coset += s * permutation_operator(d, perm);
    }
    p = coset * lifted / static_cast<double>(m);
  }
  return p;
}

namespace {

Mat k_party_projector(int d, int k, bool antisymmetric) {
  if (k <= 6) return permutation_sum_projector(d, k, antisymmetric);
  return pairwise_symmetrized_projector(d, k, antisymmetric);
}

}  // namespace

Mat symmetric_projector(int d, const std::vector<int>& subsystems, int total_parties) {
  check_parties(d, subsystems, total_parties);
  return embed(k_party_projector(d, static_cast<int>(subsystems.size()), false), d, subsystems,
               total_parties);
}

Projector antisymmetric_projector(int d, const std::vector<int>& subsystems, int total_parties) {
  check_parties(d, subsystems, total_parties);
  const int k = static_cast<int>(subsystems.size());
  const Eigen::Index dim = int_pow(d, total_parties);
  if (k > d) return {Mat::Zero(dim, dim), true};
  return {embed(k_party_projector(d, k, true), d, subsystems, total_parties), false};
}

Mat symmetric_projector(int d, int k) {
  std::vector<int> all(static_cast<size_t>(k));
  std::iota(all.begin(), all.end(), 0);
  return symmetric_projector(d, all, k);
}

Projector antisymmetric_projector(int d, int k) {
  std::vector<int> all(static_cast<size_t>(k));
  std::iota(all.begin(), all.end(), 0);
  return antisymmetric_projector(d, all, k);
}

Mat support_projector(const Mat& a, double tol) {
  tol = resolve(tol);
  Mat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXd& ev = es.eigenvalues();
  Mat out = Mat::Zero(a.rows(), a.cols());
  if (ev.size() == 0) return out;
  double largest = ev.maxCoeff();
  if (ev.minCoeff() < -tol * std::max(1.0, largest))
    throw Error(ErrorKind::positivity, "operator has a negative eigenvalue " + std::to_string(ev.minCoeff()));
  if (largest <= 0.0) return out;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > tol * largest) out += proj(es.eigenvectors().col(i));
  return out;
}

PovmReport validate_povm(const Povm& p, double tol) {
  tol = resolve(tol);
  PovmReport r;
  const Eigen::Index dim = p.dim();
  Mat sum = Mat::Zero(dim, dim);
  bool ok = !p.effects.empty();
  for (const Mat& e : p.effects) {
    if (e.rows() != dim || e.cols() != dim) {
      r.min_eigenvalues.push_back(-INFINITY);
      ok = false;
      continue;
    }
    r.hermiticity_deviation = std::max(r.hermiticity_deviation, hermiticity_error(e));
    double m = min_eigenvalue(e);
    r.min_eigenvalues.push_back(m);
    ok = ok && m >= -tol;
    sum += e;
  }
  r.sum_deviation = dim ? trace_norm(sum - Mat::Identity(dim, dim)) : 0.0;
  r.valid = ok && r.hermiticity_deviation <= tol && r.sum_deviation <= tol * static_cast<double>(std::max<Eigen::Index>(dim, 1));
  return r;
}

Mat haar_unitary(int d, RandomStream& rng) {
  if (d < 1) throw Error(ErrorKind::argument, "dimension must be positive");
  Mat z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z(i, j) = rng.complex_normal(0.5);
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    cd rii = r(i, i);
    double mag = std::abs(rii);
    cd phase = mag > 0.0 ? rii / mag : cd(1.0, 0.0);
    q.col(i) *= phase;
  }
  return q;
}

Vec haar_state(int d, RandomStream& rng) {
  Vec v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_normal(0.5);
  return v / v.norm();
}

Mat partial_trace(const Mat& a, const std::vector<int>& traced, const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  Eigen::Index total = 1;
  for (int dd : dims) {
    if (dd < 1) throw Error(ErrorKind::argument, "subsystem dimensions must be positive");
    total *= dd;
  }
  if (a.rows() != total || a.cols() != total)
    throw Error(ErrorKind::argument, "operator size does not match the subsystem dimensions");
  std::vector<bool> is_traced(static_cast<size_t>(n), false);
  for (int t : traced) {
    if (t < 0 || t >= n || is_traced[static_cast<size_t>(t)])
      throw Error(ErrorKind::argument, "invalid traced subsystem list");
    is_traced[static_cast<size_t>(t)] = true;
  }
  std::vector<Eigen::Index> stride(static_cast<size_t>(n));
  for (int p = n - 1, s = 1; p >= 0; --p) {
    stride[static_cast<size_t>(p)] = s;
    s *= dims[static_cast<size_t>(p)];
  }
  Eigen::Index dk = 1, dt = 1;
  for (int p = 0; p < n; ++p) (is_traced[static_cast<size_t>(p)] ? dt : dk) *= dims[static_cast<size_t>(p)];

  // full[k * dt + t] is the global index for kept multi-index k and traced multi-index t.
  std::vector<Eigen::Index> full(static_cast<size_t>(dk * dt));
  for (Eigen::Index k = 0; k < dk; ++k) {
    for (Eigen::Index t = 0; t < dt; ++t) {
      Eigen::Index kr = k, tr = t, idx = 0;
      for (int p = n - 1; p >= 0; --p) {
        const int dp = dims[static_cast<size_t>(p)];
        if (is_traced[static_cast<size_t>(p)]) {
          idx += (tr % dp) * stride[static_cast<size_t>(p)];
          tr /= dp;
        } else {
          idx += (kr % dp) * stride[static_cast<size_t>(p)];
          kr /= dp;
        }
      }
      full[static_cast<size_t>(k * dt + t)] = idx;
    }
  }
  Mat out = Mat::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r)
    for (Eigen::Index c = 0; c < dk; ++c) {
      cd acc = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t)
        acc += a(full[static_cast<size_t>(r * dt + t)], full[static_cast<size_t>(c * dt + t)]);
      out(r, c) = acc;
    }
  return out;
}

}  // namespace uqm
