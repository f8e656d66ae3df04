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

#include "uqm/channels.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace uqm {

namespace {

constexpr double kPi = 3.14159265358979323846;

double resolve(double tol) { return tol < 0.0 ? tolerance() : tol; }

void check_unitary(const Mat& u, const char* what) {
  if (u.rows() != u.cols() || u.rows() < 1) throw Error(ErrorKind::argument, std::string(what) + " must be square");
  const double err = spectral_norm(u.adjoint() * u - Mat::Identity(u.rows(), u.cols()));
  if (err > std::max(1e-8, 10.0 * tolerance())) throw Error(ErrorKind::argument, std::string(what) + " is not unitary");
}

int dim_of_square(Eigen::Index n) {
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (static_cast<Eigen::Index>(d) * d != n) throw Error(ErrorKind::argument, "operator is not bipartite with equal factors");
  return d;
}

Mat transpose(const Mat& a) { return a.transpose(); }

void check_test_state(const Mat& rho, int d) {
  if (rho.rows() != static_cast<Eigen::Index>(d) * d || rho.cols() != rho.rows())
    throw Error(ErrorKind::argument, "test state must act on two copies of C^d");
  if (std::abs(rho.trace().real() - 1.0) > 1e-8) throw Error(ErrorKind::argument, "test state must have unit trace");
  if (hermiticity_error(rho) > 1e-8 || min_eigenvalue(rho) < -1e-8)
    throw Error(ErrorKind::argument, "test state must be a density operator");
}

// Pattern search over the entries of a lower-triangular L; xi = L L^dagger / Tr.
Mat xi_from_params(const Eigen::VectorXd& p, int d) {
  Mat l = Mat::Zero(d, d);
  Eigen::Index at = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      if (i == j) {
        l(i, j) = p(at++);
      } else {
        l(i, j) = cd(p(at), p(at + 1));
        at += 2;
      }
    }
  Mat xi = l * l.adjoint();
  const double tr = xi.trace().real();
  if (tr <= 1e-300) return Mat::Identity(d, d) / static_cast<double>(d);
  return xi / tr;
}

}  // namespace

Mat unnormalized_max_entangled(int d) {
  Vec omega = Vec::Zero(static_cast<Eigen::Index>(d) * d);
  for (int j = 0; j < d; ++j) omega(j * d + j) = 1.0;
  return proj(omega);
}

ChoiOperator choi_of_unitary(const Mat& u) {
  check_unitary(u, "U");
  const int d = static_cast<int>(u.rows());
  const Mat w = kron(Mat::Identity(d, d), u);
  return {d, w * unnormalized_max_entangled(d) * w.adjoint()};
}

ChoiOperator choi_of_kraus(const std::vector<Mat>& kraus) {
  if (kraus.empty()) throw Error(ErrorKind::argument, "at least one Kraus operator is required");
  const int d = static_cast<int>(kraus.front().rows());
  Mat sum = Mat::Zero(d, d);
  for (const Mat& k : kraus) {
    if (k.rows() != d || k.cols() != d) throw Error(ErrorKind::argument, "Kraus operators must be d x d");
    sum += k.adjoint() * k;
  }
  if (spectral_norm(sum - Mat::Identity(d, d)) > 1e-8) throw Error(ErrorKind::argument, "channel is not trace preserving");
  const Mat psi = unnormalized_max_entangled(d);
  Mat omega = Mat::Zero(d * d, d * d);
  for (const Mat& k : kraus) {
    const Mat w = kron(Mat::Identity(d, d), k);
    omega += w * psi * w.adjoint();
  }
  return {d, omega};
}

PpovmReport validate_ppovm(const Ppovm& p, double tol) {
  tol = resolve(tol);
  PpovmReport r;
  if (p.elements.empty()) return r;
  const Eigen::Index n = p.elements.front().rows();
  const int d = p.d > 0 ? p.d : dim_of_square(n);
  if (static_cast<Eigen::Index>(d) * d != n) throw Error(ErrorKind::argument, "elements must act on C^d (x) C^d");
  Mat sum = Mat::Zero(n, n);
  bool positive = true;
  for (const Mat& m : p.elements) {
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::argument, "element sizes differ");
    const double me = min_eigenvalue(m) - hermiticity_error(m);
    r.min_eigenvalues.push_back(me);
    positive = positive && me >= -tol;
    sum += m;
  }
  const Mat xi_t = partial_trace(sum, {1}, {d, d}) / static_cast<double>(d);
  r.recovered_xi = transpose(xi_t);
  r.normalization_deviation = spectral_norm(sum - kron(xi_t, Mat::Identity(d, d)));
  if (p.xi.size() > 0) {
    if (p.xi.rows() != d) throw Error(ErrorKind::argument, "xi must be d x d");
    r.normalization_deviation =
        std::max(r.normalization_deviation, spectral_norm(sum - kron(transpose(p.xi), Mat::Identity(d, d))));
  }
  r.xi_is_state = hermiticity_error(r.recovered_xi) <= tol && min_eigenvalue(r.recovered_xi) >= -tol &&
                  std::abs(r.recovered_xi.trace().real() - 1.0) <= tol * d;
  r.valid = positive && r.xi_is_state && r.normalization_deviation <= tol * static_cast<double>(n);
  return r;
}

bool usd_feasible(const ChoiOperator& a, const ChoiOperator& b, double tol) {
  if (a.omega.rows() != b.omega.rows()) throw Error(ErrorKind::argument, "Choi operators act on different spaces");
  const Mat pa = support_projector(a.omega, tol);
  const Mat pb = support_projector(b.omega, tol);
  return spectral_norm(pa - pb) > 1e-8;
}

CbFidelity cb_fidelity_unitaries(const Mat& u, const Mat& v) {
  check_unitary(u, "U");
  check_unitary(v, "V");
  if (u.rows() != v.rows()) throw Error(ErrorKind::argument, "U and V must have the same dimension");
  const Eigen::Index d = u.rows();
  Eigen::ComplexSchur<Mat> schur(u.adjoint() * v);
  const Mat& t = schur.matrixT();
  CbFidelity out;
  out.eigenvectors = schur.matrixU();
  std::vector<cd> z(static_cast<size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    double th = std::arg(t(k, k));
    if (th < 0.0) th += 2.0 * kPi;
    out.phases.push_back(th);
    z[static_cast<size_t>(k)] = std::polar(1.0, th);
  }
  out.weights.assign(static_cast<size_t>(d), 0.0);

  // The origin is outside the hull iff all points fit in an open semicircle,
  // i.e. some cyclic gap between sorted phases exceeds pi.
  std::vector<double> sorted = out.phases;
  std::sort(sorted.begin(), sorted.end());
  double max_gap = 2.0 * kPi - (sorted.back() - sorted.front());
  for (size_t i = 1; i < sorted.size(); ++i) max_gap = std::max(max_gap, sorted[i] - sorted[i - 1]);
  out.origin_in_hull = max_gap <= kPi + 1e-10;

  double best = 2.0;
  size_t bk = 0, bl = 0;
  for (size_t k = 0; k < z.size(); ++k)
    for (size_t l = k; l < z.size(); ++l) {
      const double v2 = std::abs(z[k] + z[l]);
      if (v2 < best) {
        best = v2;
        bk = k;
        bl = l;
      }
    }

  if (!out.origin_in_hull) {
    out.fidelity = 0.5 * best;
    out.weights[bk] += 0.5;
    out.weights[bl] += 0.5;
    return out;
  }
  out.fidelity = 0.0;
  if (best <= 1e-9) {
    out.weights[bk] += 0.5;
    out.weights[bl] += 0.5;
    return out;
  }
  // Barycentric weights of the origin in a triangle of eigenvalues.
  double best_res = std::numeric_limits<double>::infinity();
  std::vector<double> best_w;
  for (size_t a = 0; a < z.size(); ++a)
    for (size_t b = a + 1; b < z.size(); ++b)
      for (size_t c = b + 1; c < z.size(); ++c) {
        Eigen::Matrix3d m;
        m << z[a].real(), z[b].real(), z[c].real(), z[a].imag(), z[b].imag(), z[c].imag(), 1.0, 1.0, 1.0;
        const Eigen::Vector3d w = m.fullPivLu().solve(Eigen::Vector3d(0.0, 0.0, 1.0));
        if (w.minCoeff() < -1e-12 || !w.allFinite()) continue;
        const double res = std::abs(w(0) * z[a] + w(1) * z[b] + w(2) * z[c]);
        if (res < best_res) {
          best_res = res;
          best_w.assign(z.size(), 0.0);
          best_w[a] = std::max(0.0, w(0));
          best_w[b] = std::max(0.0, w(1));
          best_w[c] = std::max(0.0, w(2));
        }
      }
  if (!best_w.empty()) {
    const double s = std::accumulate(best_w.begin(), best_w.end(), 0.0);
    for (double& w : best_w) w /= s;
    out.weights = best_w;
  } else {
    out.weights[bk] += 0.5;
    out.weights[bl] += 0.5;
  }
  return out;
}

double unitary_usd_probability(double fidelity, double eta_u) {
  if (!(eta_u >= 0.0 && eta_u <= 1.0)) throw Error(ErrorKind::argument, "priors must lie in [0,1]");
  const double hi = std::max(eta_u, 1.0 - eta_u), lo = 1.0 - hi;
  if (fidelity <= std::sqrt(lo / hi)) return 1.0 - 2.0 * std::sqrt(hi * lo) * fidelity;
  return hi * (1.0 - fidelity * fidelity);
}

UnitaryUsd unitary_usd(const Mat& u_in, const Mat& v_in, double eta_u, double eta_v) {
  if (eta_u < 0.0 || eta_v < 0.0 || std::abs(eta_u + eta_v - 1.0) > 1e-12)
    throw Error(ErrorKind::argument, "priors must be non-negative and sum to 1");
  UnitaryUsd out;
  out.swapped = eta_u < eta_v;
  const Mat& u = out.swapped ? v_in : u_in;
  const Mat& v = out.swapped ? u_in : v_in;
  const double hi = std::max(eta_u, eta_v), lo = 1.0 - hi;
  const CbFidelity cb = cb_fidelity_unitaries(u, v);
  const int d = static_cast<int>(u.rows());
  out.fidelity = cb.fidelity;
  out.probability = unitary_usd_probability(cb.fidelity, hi);

  out.test_state = Vec::Zero(static_cast<Eigen::Index>(d) * d);
  for (int k = 0; k < d; ++k)
    out.test_state += std::sqrt(cb.weights[static_cast<size_t>(k)]) * kron_vec(basis_ket(d, k), cb.eigenvectors.col(k));
  const Mat iu = kron(Mat::Identity(d, d), u), iv = kron(Mat::Identity(d, d), v);
  Vec a = iu * out.test_state, b = iv * out.test_state;
  const Eigen::Index n = a.size();
  Povm povm;
  double sim = 0.0;
  if (std::abs(a.dot(b)) >= 1.0 - 1e-9) {
    povm.effects = {Mat::Zero(n, n), Mat::Zero(n, n), Mat::Identity(n, n)};
  } else {
    const UsdSolution sol = idp_optimal(a, b, hi);
    povm = sol.povm;
    sim = hi * a.dot(povm.effects[0] * a).real() + lo * b.dot(povm.effects[1] * b).real();
  }
  if (out.swapped) {
    std::swap(povm.effects[0], povm.effects[1]);
    std::swap(a, b);
  }
  out.povm = povm;
  out.out_u = a;
  out.out_v = b;
  out.simulated = sim;
  return out;
}

XiMinimum cb_process_fidelity(const ChoiOperator& a, const ChoiOperator& b, RandomStream& rng, int restarts) {
  if (a.d != b.d || a.omega.rows() != b.omega.rows()) throw Error(ErrorKind::argument, "Choi operators differ in size");
  const int d = a.d;
  const Mat s1 = sqrtm_psd(a.omega), s2 = sqrtm_psd(b.omega);
  const Mat id = Mat::Identity(d, d);
  auto value = [&](const Mat& xi) { return trace_norm(s1 * kron(transpose(xi), id) * s2); };
  const Eigen::Index np = static_cast<Eigen::Index>(d) * d;
  // Squared objective: smooth where the trace norm has a conical zero.
  auto objective = [&](const Eigen::VectorXd& p) {
    const double v = value(xi_from_params(p, d));
    return v * v;
  };

  XiMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, restarts); ++r) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(np);
    if (r == 0) {
      Eigen::Index at = 0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j <= i; ++j) {
          if (i == j) p(at) = 1.0;
          at += i == j ? 1 : 2;
        }
    } else {
      for (Eigen::Index i = 0; i < np; ++i) p(i) = rng.normal();
    }
    double f = objective(p);
    double h = 0.5;
    for (int it = 0; it < 20000 && h > 1e-11; ++it) {
      bool improved = false;
      for (Eigen::Index i = 0; i < np; ++i) {
        for (double sgn : {1.0, -1.0}) {
          Eigen::VectorXd q = p;
          q(i) += sgn * h;
          const double fq = objective(q);
          if (fq < f) {
            p = q;
            f = fq;
            improved = true;
            break;
          }
        }
      }
      // A random direction helps along curved valleys.
      Eigen::VectorXd dir(np);
      for (Eigen::Index i = 0; i < np; ++i) dir(i) = rng.normal();
      dir.normalize();
      for (double sgn : {1.0, -1.0}) {
        const Eigen::VectorXd q = p + sgn * h * dir;
        const double fq = objective(q);
        if (fq < f) {
          p = q;
          f = fq;
          improved = true;
          break;
        }
      }
      if (!improved) h *= 0.5;
    }
    const Mat xi = xi_from_params(p, d);
    const double v = value(xi);
    if (v < best.value) {
      best.value = v;
      best.xi = xi;
    }
  }
  return best;
}

double channel_fidelity_bound(const ChoiOperator& a, const ChoiOperator& b, double eta1, RandomStream& rng) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0)) throw Error(ErrorKind::argument, "eta1 must lie in [0,1]");
  const XiMinimum m = cb_process_fidelity(a, b, rng);
  return 1.0 - 2.0 * std::sqrt(eta1 * (1.0 - eta1)) * m.value;
}

Mat average_channel(const Mat& x, int d) {
  if (x.rows() != d || x.cols() != d) throw Error(ErrorKind::argument, "operator must be d x d");
  return x.trace() / static_cast<double>(d) * Mat::Identity(d, d);
}

Mat twirl(const Mat& y, int d) {
  if (y.rows() != static_cast<Eigen::Index>(d) * d || y.cols() != y.rows())
    throw Error(ErrorKind::argument, "operator must act on two copies of C^d");
  const Mat ps = symmetric_projector(d, 2);
  const Mat pa = antisymmetric_projector(d, 2).op;
  const double ds = symmetric_dimension(d, 2), da = d * (d - 1) / 2.0;
  Mat out = (y * ps).trace() / ds * ps;
  if (da > 0.0) out += (y * pa).trace() / da * pa;
  return out;
}

Mat twirl_choi(int d) {
  const int n = d * d;
  Mat omega = Mat::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Mat t = twirl(outer(basis_ket(n, j), basis_ket(n, k)), d);
      omega.block(static_cast<Eigen::Index>(j) * n, static_cast<Eigen::Index>(k) * n, n, n) = t;
    }
  return omega;
}

Ppovm comparator_ppovm(int d, const Mat& rho_test) {
  if (d < 2) throw Error(ErrorKind::argument, "dimension must be at least 2");
  check_test_state(rho_test, d);
  const Mat ps = symmetric_projector(d, 2);
  if ((ps * rho_test).trace().real() > std::max(tolerance(), 1e-12))
    throw Error(ErrorKind::argument, "test state has a symmetric component");
  const Mat pa = antisymmetric_projector(d, 2).op;
  Ppovm p;
  p.d = d * d;
  p.xi = rho_test;
  p.elements = {kron(transpose(rho_test), ps), kron(transpose(rho_test), pa)};
  return p;
}

double comparator_average_success(int d, bool antisymmetric_test) {
  if (d < 2) throw Error(ErrorKind::argument, "dimension must be at least 2");
  const double dd = static_cast<double>(d) * d;
  return antisymmetric_test ? d * (d + 1.0) / 2.0 / dd : d * (d - 1.0) / 2.0 / dd;
}

double comparator_conditional(const Mat& u, const Mat& v, const Mat& rho_test) {
  check_unitary(u, "U");
  check_unitary(v, "V");
  const int d = static_cast<int>(u.rows());
  check_test_state(rho_test, d);
  const Mat w = kron(u, v);
  return (symmetric_projector(d, 2) * w * rho_test * w.adjoint()).trace().real();
}

double comparator_conditional_symmetric(const Mat& u, const Mat& v, const Mat& rho_test) {
  check_unitary(u, "U");
  check_unitary(v, "V");
  const int d = static_cast<int>(u.rows());
  check_test_state(rho_test, d);
  const Mat pa = antisymmetric_projector(d, 2).op;
  if ((pa * rho_test).trace().real() > std::max(tolerance(), 1e-12))
    throw Error(ErrorKind::argument, "test state has an antisymmetric component");
  const Mat w = kron(u, v);
  return (pa * w * rho_test * w.adjoint()).trace().real();
}

ComparatorReport validate_comparator(int d, const Mat& m_diff, const Mat& m_same, double tol) {
  tol = resolve(tol);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d * d * d;
  if (m_diff.rows() != n || m_same.rows() != n) throw Error(ErrorKind::argument, "elements must act on four copies of C^d");
  ComparatorReport r;
  r.same_trace = std::abs(m_same.trace());
  r.no_error_residual = std::abs((twirl_choi(d) * m_diff).trace());
  r.valid = r.same_trace <= tol && r.no_error_residual <= tol;
  return r;
}

}  // namespace uqm
