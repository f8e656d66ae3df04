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

#include "uqm/measurements.hpp"

#include <algorithm>
#include <cmath>

namespace uqm {

namespace {

double resolve(double tol) { return tol < 0.0 ? tolerance() : tol; }

Mat sym(const std::vector<int>& parties) { return symmetric_projector(2, parties, 4); }

// a on parties (pa0, pa1), b on (pb0, pb1) of four qubits.
Vec place(const Vec& a, int pa0, int pa1, const Vec& b, int pb0, int pb1) {
  return permutation_operator(2, {pa0, pa1, pb0, pb1}) * kron_vec(a, b);
}

Vec ket2(int a, int b) { return kron_vec(basis_ket(2, a), basis_ket(2, b)); }
Vec psi_plus() { return (ket2(0, 1) + ket2(1, 0)) / std::sqrt(2.0); }
Vec psi_minus() { return (ket2(0, 1) - ket2(1, 0)) / std::sqrt(2.0); }

Vec qubit_complement(const Vec& v) {
  Vec w(2);
  w << -std::conj(v(1)), std::conj(v(0));
  return w;
}

void check_qubit_unit(const Vec& v, const char* what) {
  if (v.size() != 2 || std::abs(v.norm() - 1.0) > 1e-8)
    throw Error(ErrorKind::argument, std::string(what) + " must be a unit vector in C^2");
}

// Parties 0..2 symmetric, the singlet or |00>/|11> pairs as in the audit.
std::array<Vec, 3> omega_vectors(bool primed) {
  const Vec p00 = ket2(0, 0), p11 = ket2(1, 1), pp = psi_plus(), pm = psi_minus();
  std::array<Vec, 3> w;
  if (!primed) {
    w[0] = place(p00, 0, 1, pm, 2, 3) + place(p00, 0, 2, pm, 1, 3) + place(p00, 1, 2, pm, 0, 3);
    w[2] = place(p11, 0, 1, pm, 2, 3) + place(p11, 0, 2, pm, 1, 3) + place(p11, 1, 2, pm, 0, 3);
    w[1] = kron_vec(p00, p11) - kron_vec(p11, p00) + 2.0 * kron_vec(pp, pm);
  } else {
    w[0] = -place(p00, 0, 1, pm, 2, 3) + place(p00, 0, 3, pm, 1, 2) + place(p00, 1, 3, pm, 0, 2);
    w[2] = -place(p11, 0, 1, pm, 2, 3) + place(p11, 0, 3, pm, 1, 2) + place(p11, 1, 3, pm, 0, 2);
    w[1] = kron_vec(p00, p11) - kron_vec(p11, p00) - 2.0 * kron_vec(pp, pm);
  }
  return w;
}

}  // namespace

SharpObservable observable_from_unitary(const Mat& u) {
  if (u.rows() != u.cols() || u.rows() < 1) throw Error(ErrorKind::argument, "unitary must be square");
  if (spectral_norm(u.adjoint() * u - Mat::Identity(u.rows(), u.cols())) > 1e-8)
    throw Error(ErrorKind::argument, "matrix is not unitary");
  SharpObservable a;
  a.d = static_cast<int>(u.rows());
  for (int j = 0; j < a.d; ++j) a.projectors.push_back(proj(u.col(j)));
  return a;
}

bool is_sharp(const SharpObservable& a, double tol) {
  tol = resolve(tol);
  if (static_cast<int>(a.projectors.size()) != a.d) return false;
  Mat sum = Mat::Zero(a.d, a.d);
  for (size_t j = 0; j < a.projectors.size(); ++j) {
    const Mat& p = a.projectors[j];
    if (p.rows() != a.d || spectral_norm(p * p - p) > tol || std::abs(p.trace().real() - 1.0) > tol) return false;
    for (size_t k = j + 1; k < a.projectors.size(); ++k)
      if (spectral_norm(p * a.projectors[k]) > tol) return false;
    sum += p;
  }
  return spectral_norm(sum - Mat::Identity(a.d, a.d)) <= tol;
}

LabeledComparison::LabeledComparison(int d, const Mat& rho_test) : d_(d), rho_(rho_test) {
  if (d < 2) throw Error(ErrorKind::argument, "dimension must be at least 2");
  if (rho_.rows() != static_cast<Eigen::Index>(d) * d || rho_.cols() != rho_.rows())
    throw Error(ErrorKind::argument, "test state must act on two copies of C^d");
  if (std::abs(rho_.trace().real() - 1.0) > 1e-8 || hermiticity_error(rho_) > 1e-8 || min_eigenvalue(rho_) < -1e-8)
    throw Error(ErrorKind::argument, "test state must be a density operator");
  if ((symmetric_projector(d, 2) * rho_).trace().real() > tolerance())
    throw Error(ErrorKind::argument, "test state has a symmetric component");
}

double LabeledComparison::q_same(const SharpObservable& a, const SharpObservable& b) const {
  if (a.d != d_ || b.d != d_ || static_cast<int>(a.projectors.size()) != d_ ||
      static_cast<int>(b.projectors.size()) != d_)
    throw Error(ErrorKind::argument, "observables must have d outcomes on C^d");
  double q = 0.0;
  for (int j = 0; j < d_; ++j) q += (rho_ * kron(a.projectors[j], b.projectors[j])).trace().real();
  return q;
}

LabeledComparison labeled_compare(int d, const Mat& rho_test) { return LabeledComparison(d, rho_test); }

IdentityReport identity_not_concludable(int d) {
  if (d < 2) throw Error(ErrorKind::argument, "dimension must be at least 2");
  const Mat id = Mat::Identity(d, d);
  // Each Haar-averaged single effect is I/d; independent observables factorize.
  const Mat avg = kron(id / static_cast<double>(d), id / static_cast<double>(d));
  IdentityReport r;
  const Eigen::VectorXd ev = hermitian_eigenvalues(avg);
  r.q_jj = ev.minCoeff();
  r.q_jk = ev.maxCoeff();
  const Mat op = antisymmetric_projector(d, 2).op / static_cast<double>(d) +
                 (d - 1.0) / (d * (d + 1.0)) * symmetric_projector(d, 2);
  r.spectrum = hermitian_eigenvalues(op);
  r.full_rank = r.spectrum.minCoeff() > tolerance();
  return r;
}

OutcomeClassOperators build_outcome_operators(int d) {
  if (d != 2)
    throw Error(ErrorKind::unsupported, "unlabeled two-shot comparison is only constructed for qubits; "
                                       "two shots are not known to suffice for d > 2");
  OutcomeClassOperators o;
  o.d = d;
  const double dd = d;
  const double d2 = symmetric_dimension(d, 2), d3 = symmetric_dimension(d, 3), d4 = symmetric_dimension(d, 4);
  const Mat id2 = Mat::Identity(d * d, d * d);
  const Mat rs = symmetric_projector(d, 2) / d2;
  const Mat rd = (id2 / dd - rs) / (dd - 1.0);
  o.differ[0][0] = dd * dd * kron(rs, rs);
  o.differ[0][1] = dd * dd * (dd - 1.0) * kron(rs, rd);
  o.differ[1][0] = dd * dd * (dd - 1.0) * kron(rd, rs);
  o.differ[1][1] = dd * dd * (dd - 1.0) * (dd - 1.0) * kron(rd, rd);

  const Mat p1234 = sym({0, 1, 2, 3});
  auto r_pair = [&](int a, int b, int c, int e) -> Mat {
    return sym({a, b}) / d2 + p1234 / d4 - (sym({a, b, c}) + sym({a, b, e})) / d3;
  };
  o.equal[0][0] = dd * (p1234 / d4 + (2.0 / dd) * r_pair(0, 1, 2, 3) * sym({2, 3}));
  o.equal[0][1] = dd * ((sym({0, 1, 2}) + sym({0, 1, 3})) / d3 - 2.0 * p1234 / d4);
  o.equal[1][0] = dd * ((sym({2, 3, 0}) + sym({2, 3, 1})) / d3 - 2.0 * p1234 / d4);
  o.equal[1][1] = 2.0 * (r_pair(0, 2, 1, 3) * sym({1, 3}) + r_pair(0, 3, 1, 2) * sym({1, 2}));
  return o;
}

Vec unlabeled_test_state() {
  const Vec pm = psi_minus();
  return (place(pm, 0, 2, pm, 1, 3) + place(pm, 0, 3, pm, 1, 2)) / std::sqrt(3.0);
}

UnlabeledSuccess unlabeled_success(const Vec& psi, const Vec& phi) {
  check_qubit_unit(psi, "psi");
  check_qubit_unit(phi, "phi");
  const Vec psi_c = qubit_complement(psi), phi_c = qubit_complement(phi);
  auto same = [](const Vec& a, const Vec& b) { return Mat(proj(kron_vec(a, a)) + proj(kron_vec(b, b))); };
  auto diff = [](const Vec& a, const Vec& b) { return Mat(proj(kron_vec(a, b)) + proj(kron_vec(b, a))); };
  const Mat conclusive = kron(same(psi, psi_c), diff(phi, phi_c)) + kron(diff(psi, psi_c), same(phi, phi_c));
  const Vec q = unlabeled_test_state();
  UnlabeledSuccess r;
  r.probability = q.dot(conclusive * q).real();
  r.theta = std::acos(std::min(1.0, std::abs(psi.dot(phi))));
  const double s = std::sin(2.0 * r.theta);
  r.closed_form = 2.0 / 3.0 * s * s;
  return r;
}

DiffDiffStrategy diffdiff_strategy() {
  const Vec p00 = ket2(0, 0), p11 = ket2(1, 1), pp = psi_plus();
  const double s = std::sqrt(2.0);
  DiffDiffStrategy r;
  r.kappa.resize(16, 3);
  r.kappa.col(0) = (kron_vec(p00, pp) - kron_vec(pp, p00)) / s;
  r.kappa.col(1) = (kron_vec(p00, p11) - kron_vec(p11, p00)) / s;
  r.kappa.col(2) = (kron_vec(p11, pp) - kron_vec(pp, p11)) / s;
  const OutcomeClassOperators o = build_outcome_operators(2);
  const Mat restricted = r.kappa.adjoint() * o.differ[1][1] * r.kappa;
  r.probability = restricted(0, 0).real();
  r.spread = spectral_norm(restricted - Mat::Identity(3, 3) / 9.0);
  const Mat forbid = sym({0, 2}) * sym({1, 3}) + sym({0, 3}) * sym({1, 2});
  r.no_error_residual = std::abs((r.kappa.adjoint() * forbid * r.kappa).trace());
  return r;
}

double unlabeled_detection(double eta_a, double theta) {
  if (!(eta_a >= 0.0 && eta_a <= 1.0)) throw Error(ErrorKind::argument, "prior must lie in [0,1]");
  if (!(theta >= 0.0 && theta <= 3.14159265358979323846 + 1e-12))
    throw Error(ErrorKind::argument, "angle must lie in [0, pi]");
  const double s = std::sin(theta);
  return eta_a * s * s;
}

SubspaceAudit subspace_audit() {
  SubspaceAudit a;
  const Mat p123 = sym({0, 1, 2}), p124 = sym({0, 1, 3}), p1234 = sym({0, 1, 2, 3});
  const Mat q123 = p123 - p1234, q124 = p124 - p1234;
  const Eigen::VectorXd ev = hermitian_eigenvalues(q123 + q124);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    a.spectrum.push_back(ev(i));
    if (std::abs(ev(i) - 4.0 / 3.0) < 1e-9) ++a.count_four_thirds;
    if (std::abs(ev(i) - 2.0 / 3.0) < 1e-9) ++a.count_two_thirds;
  }
  std::sort(a.spectrum.begin(), a.spectrum.end());
  a.dim_symmetric = static_cast<int>(std::lround(p1234.trace().real()));
  a.dim_kappa = numeric_rank(diffdiff_strategy().kappa, 1e-10);
  const Mat q12_plus = sym({0, 1}) * sym({2, 3}) - p1234;
  a.dim_q12_plus = static_cast<int>(std::lround(q12_plus.trace().real()));

  const auto w = omega_vectors(false), wp = omega_vectors(true);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k)
      a.omega_cross_error = std::max(a.omega_cross_error, std::abs(w[j].dot(wp[k]) + (j == k ? 2.0 : 0.0)));
    a.omega_norm_error = std::max({a.omega_norm_error, std::abs(w[j].squaredNorm() - 6.0),
                                   std::abs(wp[j].squaredNorm() - 6.0)});
    a.omega_support_error =
        std::max({a.omega_support_error, (q123 * w[j] - w[j]).norm(), (q124 * wp[j] - wp[j]).norm()});
  }
  a.joint_support_error = spectral_norm(intersect_projectors(p123, p124) - p1234);

  const bool spectrum_ok = a.count_four_thirds == 3 && a.count_two_thirds == 3 &&
                           std::all_of(a.spectrum.begin(), a.spectrum.end(), [](double x) {
                             return std::abs(x) < 1e-9 || std::abs(x - 4.0 / 3.0) < 1e-9 ||
                                    std::abs(x - 2.0 / 3.0) < 1e-9;
                           });
  a.passed = spectrum_ok && a.dim_symmetric == 5 && a.dim_kappa == 3 && a.dim_q12_plus == 4 &&
             a.omega_cross_error < 1e-9 && a.omega_norm_error < 1e-9 && a.omega_support_error < 1e-9 &&
             a.joint_support_error < 1e-8;
  return a;
}

}  // namespace uqm
