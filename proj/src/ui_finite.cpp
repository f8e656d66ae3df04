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

#include "uqm/ui_finite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace uqm {

namespace {

std::vector<int> range(int begin, int count) {
  std::vector<int> v(static_cast<size_t>(count));
  std::iota(v.begin(), v.end(), begin);
  return v;
}

// First party index of each reference block.
std::vector<int> reference_offsets(const UiConfig& cfg) {
  std::vector<int> off;
  int at = cfg.n_a;
  for (int n : cfg.n_refs) {
    off.push_back(at);
    at += n;
  }
  return off;
}

void check_config(const UiConfig& cfg) {
  if (cfg.d < 2 || cfg.n_a < 1 || cfg.n_refs.size() < 2)
    throw Error(ErrorKind::argument, "need d >= 2, at least one unknown copy and two references");
  if (cfg.priors.size() != cfg.n_refs.size()) throw Error(ErrorKind::argument, "one prior per reference is required");
  double s = 0.0;
  for (double p : cfg.priors) {
    if (p < 0.0) throw Error(ErrorKind::argument, "priors must be non-negative");
    s += p;
  }
  if (std::abs(s - 1.0) > 1e-12) throw Error(ErrorKind::argument, "priors must sum to 1");
  for (int n : cfg.n_refs)
    if (n < 1) throw Error(ErrorKind::argument, "copy counts must be at least 1");
}

Mat three_party_swap_asym(int d, int a, int b) { return antisymmetric_projector(d, {a, b}, 3).op; }

UiMeasurement two_reference_measurement(int d, double eta1, const Mat& e1, const Mat& e2) {
  UiMeasurement m;
  m.cfg.d = d;
  m.cfg.priors = {eta1, 1.0 - eta1};
  const Eigen::Index dim = e1.rows();
  m.povm.effects = {e1, e2, Mat::Identity(dim, dim) - e1 - e2};
  return m;
}

}  // namespace

int UiConfig::total_parties() const {
  return n_a + std::accumulate(n_refs.begin(), n_refs.end(), 0);
}

std::vector<Mat> ui_average_states(const UiConfig& cfg, int subspace_dim) {
  check_config(cfg);
  if (subspace_dim < 1 || subspace_dim > cfg.d) throw Error(ErrorKind::argument, "subspace dimension must lie in [1, d]");
  const int total = cfg.total_parties();
  const std::vector<int> off = reference_offsets(cfg);
  Mat sub = Mat::Zero(cfg.d, cfg.d);
  for (int i = 0; i < subspace_dim; ++i) sub(i, i) = 1.0;
  Mat restrict_all = Mat::Identity(1, 1);
  for (int p = 0; p < total; ++p) restrict_all = kron(restrict_all, sub);

  std::vector<Mat> states;
  for (int i = 0; i < cfg.references(); ++i) {
    Mat rho = restrict_all;
    for (int j = 0; j < cfg.references(); ++j) {
      std::vector<int> block = range(off[static_cast<size_t>(j)], cfg.n_refs[static_cast<size_t>(j)]);
      if (j == i) {
        std::vector<int> a = range(0, cfg.n_a);
        block.insert(block.begin(), a.begin(), a.end());
      }
      const int k = static_cast<int>(block.size());
      rho = rho * symmetric_projector(cfg.d, block, total) / binomial(k + subspace_dim - 1, subspace_dim - 1);
    }
    states.push_back(rho);
  }
  return states;
}

std::vector<Mat> ui_average_states(const UiConfig& cfg) { return ui_average_states(cfg, cfg.d); }

Vec ui_input_state(const UiConfig& cfg, const std::vector<Vec>& refs, int which) {
  if (static_cast<int>(refs.size()) != cfg.references()) throw Error(ErrorKind::argument, "one state per reference is required");
  std::vector<Vec> factors;
  for (int c = 0; c < cfg.n_a; ++c) factors.push_back(refs[static_cast<size_t>(which)]);
  for (int j = 0; j < cfg.references(); ++j)
    for (int c = 0; c < cfg.n_refs[static_cast<size_t>(j)]; ++c) factors.push_back(refs[static_cast<size_t>(j)]);
  return kron_vec_all(factors);
}

double ui_probability(const UiMeasurement& m, const std::vector<Vec>& refs) {
  double p = 0.0;
  for (int i = 0; i < m.cfg.references(); ++i) {
    const Vec psi = ui_input_state(m.cfg, refs, i);
    p += m.cfg.priors[static_cast<size_t>(i)] * psi.dot(m.povm.effects[static_cast<size_t>(i)] * psi).real();
  }
  return p;
}

double ui_no_error_residual(const UiMeasurement& m, const std::vector<Vec>& refs) {
  double worst = 0.0;
  for (int j = 0; j < m.cfg.references(); ++j) {
    const Vec psi = ui_input_state(m.cfg, refs, j);
    for (int i = 0; i < m.cfg.references(); ++i)
      if (i != j) worst = std::max(worst, std::abs(psi.dot(m.povm.effects[static_cast<size_t>(i)] * psi)));
  }
  return worst;
}

double ui_average_probability(const UiMeasurement& m) {
  const std::vector<Mat> rho = ui_average_states(m.cfg);
  double p = 0.0;
  for (int i = 0; i < m.cfg.references(); ++i)
    p += m.cfg.priors[static_cast<size_t>(i)] * (m.povm.effects[static_cast<size_t>(i)] * rho[static_cast<size_t>(i)]).trace().real();
  return p;
}

UiMeasurement bergou_hillery(double eta1) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0)) throw Error(ErrorKind::argument, "eta1 must lie in [0,1]");
  const double eta2 = 1.0 - eta1;
  double c1, c2;
  if (eta1 < 0.2) {
    c1 = 0.0;
    c2 = 1.0;
  } else if (eta1 > 0.8) {
    c1 = 1.0;
    c2 = 0.0;
  } else {
    const double lambda = (2.0 / 3.0) * (2.0 - std::sqrt(eta2 / eta1));
    c1 = lambda;
    c2 = (4.0 - 4.0 * lambda) / (4.0 - 3.0 * lambda);
  }
  return two_reference_measurement(2, eta1, c1 * three_party_swap_asym(2, 0, 2), c2 * three_party_swap_asym(2, 0, 1));
}

double bergou_hillery_mean(double eta1) {
  if (eta1 < 0.2) return (1.0 - eta1) / 4.0;
  if (eta1 > 0.8) return eta1 / 4.0;
  const double eta2 = 1.0 - eta1;
  const double lambda = (2.0 / 3.0) * (2.0 - std::sqrt(eta2 / eta1));
  return eta1 * lambda / 4.0 + eta2 * (4.0 - 4.0 * lambda) / (4.0 - 3.0 * lambda) / 4.0;
}

SwapBased swap_based(int d, double c1, double c2, double eta1) {
  if (d < 2) throw Error(ErrorKind::argument, "dimension must be at least 2");
  if (c1 < 0.0 || c2 < 0.0) throw Error(ErrorKind::argument, "coefficients must be non-negative");
  SwapBased out;
  out.measurement =
      two_reference_measurement(d, eta1, c1 * three_party_swap_asym(d, 0, 2), c2 * three_party_swap_asym(d, 0, 1));

  // Spectrum of E0 from its block structure in the computational basis:
  // |iii> blocks, {i,i,j} blocks of size 3 and {i,j,k} blocks of size 6.
  const double root = std::sqrt(c1 * c1 - c1 * c2 + c2 * c2);
  const double hi = (2.0 - c1 - c2 + root) / 2.0;
  const double lo = (2.0 - c1 - c2 - root) / 2.0;
  const int pairs = d * (d - 1);
  const int triples = d * (d - 1) * (d - 2) / 6;
  std::vector<double>& s = out.closed_spectrum;
  s.insert(s.end(), static_cast<size_t>(d), 1.0);
  for (int i = 0; i < pairs; ++i) s.insert(s.end(), {1.0, hi, lo});
  for (int i = 0; i < triples; ++i) s.insert(s.end(), {1.0, 1.0 - c1 - c2, hi, hi, lo, lo});
  std::sort(s.begin(), s.end());
  out.min_eigenvalue_closed = s.front();

  const Eigen::VectorXd ev = hermitian_eigenvalues(out.measurement.povm.effects[2]);
  out.dense_spectrum.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.dense_spectrum.begin(), out.dense_spectrum.end());
  out.min_eigenvalue_dense = out.dense_spectrum.front();

  const double tol = tolerance();
  out.accepted = out.min_eigenvalue_closed >= -tol && out.min_eigenvalue_dense >= -tol;
  if (!out.accepted) out.offending_eigenvalue = triples > 0 ? 1.0 - c1 - c2 : lo;
  return out;
}

double swap_based_probability(double c1, double c2, double eta1, double x) {
  return (eta1 * c1 + (1.0 - eta1) * c2) * (1.0 - x) / 2.0;
}

UiMeasurement hayashi_optimal(int d) {
  if (d < 2) throw Error(ErrorKind::argument, "dimension must be at least 2");
  const Eigen::Index dim = static_cast<Eigen::Index>(std::pow(d, 3));
  const Mat sym = symmetric_projector(d, 3);
  const Mat asym = antisymmetric_projector(d, 3).op;
  const Mat mixed = Mat::Identity(dim, dim) - sym - asym;
  const Mat e = (2.0 / 3.0) * mixed + 0.5 * asym;
  return two_reference_measurement(d, 0.5, e * three_party_swap_asym(d, 0, 2), e * three_party_swap_asym(d, 0, 1));
}

double hayashi_probability(double x) { return (1.0 - x) / 3.0; }

double hayashi_average(int d) { return (1.0 / 3.0) * (d - 1.0) / d; }

double swap_based_average(int d) { return 0.25 * (d - 1.0) / d; }

UiMeasurement zhang_ying(int d) {
  if (d < 2) throw Error(ErrorKind::argument, "dimension must be at least 2");
  if (d > 4) throw Error(ErrorKind::size, "dense construction limited to d <= 4");
  const int m = d;  // references
  const int total = m + 1;
  UiMeasurement out;
  out.cfg.d = d;
  out.cfg.n_refs.assign(static_cast<size_t>(m), 1);
  out.cfg.priors.assign(static_cast<size_t>(m), 1.0 / m);
  const Eigen::Index dim = static_cast<Eigen::Index>(std::pow(d, total));
  Mat sum = Mat::Zero(dim, dim);
  for (int i = 0; i < m; ++i) {
    // Identity on reference i, totally antisymmetric projector on the
    // unknown together with every other reference.
    std::vector<int> parties{0};
    for (int j = 0; j < m; ++j)
      if (j != i) parties.push_back(1 + j);
    Mat e = antisymmetric_projector(d, parties, total).op / static_cast<double>(m);
    sum += e;
    out.povm.effects.push_back(e);
  }
  out.povm.effects.push_back(Mat::Identity(dim, dim) - sum);
  return out;
}

EquatorialStates equatorial_average_states() {
  const Vec k0 = basis_ket(2, 0), k1 = basis_ket(2, 1);
  Vec psi_plus = (kron_vec(k0, k1) + kron_vec(k1, k0)) / std::sqrt(2.0);
  Vec psi_minus = (kron_vec(k0, k1) - kron_vec(k1, k0)) / std::sqrt(2.0);
  Mat pair = proj(kron_vec(k0, k0)) + proj(kron_vec(k1, k1)) + 2.0 * proj(psi_plus);
  EquatorialStates s;
  s.rho1 = embed(pair, 2, {0, 1}, 3) / 8.0;  // identity on C
  s.rho2 = embed(pair, 2, {0, 2}, 3) / 8.0;  // identity on B
  for (const Vec& k : {k0, k1}) {
    // |k>_B |psi->_AC written in A,B,C order
    Vec a = Vec::Zero(8), b = Vec::Zero(8);
    for (int x = 0; x < 2; ++x)
      for (int z = 0; z < 2; ++z) {
        const cd amp = psi_minus(2 * x + z);
        for (int y = 0; y < 2; ++y) {
          a(4 * x + 2 * y + z) += amp * k(y);
          b(4 * x + 2 * z + y) += amp * k(y);
        }
      }
    s.kernel1.push_back(a);
    s.kernel2.push_back(b);
  }
  return s;
}

Povm equatorial_povm(const Eigen::Matrix2cd& alpha, const Eigen::Matrix2cd& beta) {
  const EquatorialStates s = equatorial_average_states();
  Mat e1 = Mat::Zero(8, 8), e2 = Mat::Zero(8, 8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      e1 += alpha(i, j) * outer(s.kernel1[static_cast<size_t>(i)], s.kernel1[static_cast<size_t>(j)]);
      e2 += beta(i, j) * outer(s.kernel2[static_cast<size_t>(i)], s.kernel2[static_cast<size_t>(j)]);
    }
  return Povm{{e1, e2, Mat::Identity(8, 8) - e1 - e2}};
}

EquatorialOptimum equatorial_optimal(double eta1) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0)) throw Error(ErrorKind::argument, "eta1 must lie in [0,1]");
  const double eta2 = 1.0 - eta1;
  const EquatorialStates s = equatorial_average_states();
  Mat p1 = Mat::Zero(8, 8), p2 = Mat::Zero(8, 8);
  for (int i = 0; i < 2; ++i) {
    p1 += proj(s.kernel1[static_cast<size_t>(i)]);
    p2 += proj(s.kernel2[static_cast<size_t>(i)]);
  }
  const Mat id = Mat::Identity(8, 8);
  // Phase rotations and the global bit flip leave both states invariant and
  // map the ansatz onto itself; averaging a feasible point over them keeps
  // its value and yields alpha = a I, beta = b I. The search runs on (a, b).
  auto feasible = [&](double a, double b) { return min_eigenvalue(id - a * p1 - b * p2) >= -1e-13; };
  auto b_max = [&](double a) {
    if (!feasible(a, 0.0)) return -1.0;
    double lo = 0.0, hi = 1.0;
    if (feasible(a, hi)) return hi;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (feasible(a, mid) ? lo : hi) = mid;
    }
    return lo;
  };
  // Tr(|a_i><a_i| rho1) = 1/4 for each kernel vector, so P = (eta1 a + eta2 b) / 2.
  auto value = [&](double a) {
    const double b = b_max(a);
    return b < 0.0 ? -1.0 : eta1 * a / 2.0 + eta2 * b / 2.0;
  };
  double best_a = 0.0, best_v = value(0.0);
  const int grid = 200;
  for (int i = 1; i <= grid; ++i) {
    const double a = static_cast<double>(i) / grid;
    const double v = value(a);
    if (v > best_v) {
      best_v = v;
      best_a = a;
    }
  }
  double lo = std::max(0.0, best_a - 1.0 / grid), hi = std::min(1.0, best_a + 1.0 / grid);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = value(x1), f2 = value(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = value(x1);
    }
  }
  double a = 0.5 * (lo + hi);
  double v = value(a);
  for (double edge : {0.0, 1.0}) {
    const double ve = value(edge);
    if (ve > v) {
      v = ve;
      a = edge;
    }
  }
  EquatorialOptimum out;
  const double b = b_max(a);
  out.alpha = a * Eigen::Matrix2cd::Identity();
  out.beta = b * Eigen::Matrix2cd::Identity();
  out.povm = equatorial_povm(out.alpha, out.beta);
  out.probability = eta1 * (out.povm.effects[0] * s.rho1).trace().real() +
                    eta2 * (out.povm.effects[1] * s.rho2).trace().real();
  return out;
}

}  // namespace uqm
