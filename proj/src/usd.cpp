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

#include "uqm/usd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace uqm {

namespace {

constexpr double kCommonCosine = 1.0 - 1e-8;
constexpr double kOrthogonalCosine = 1e-8;

double resolve(double tol) { return tol < 0.0 ? tolerance() : tol; }

struct IdpCoefficients {
  double c1;
  double c2;
  Regime regime;
};

IdpCoefficients idp_coefficients(double lambda, double eta1) {
  const double eta2 = 1.0 - eta1;
  const double l2 = lambda * lambda;
  const double lower = l2 / (1.0 + l2);
  const double upper = 1.0 / (1.0 + l2);
  if (eta1 < lower) return {0.0, 1.0, Regime::left_projective};
  if (eta1 > upper) return {1.0, 0.0, Regime::right_projective};
  if (eta1 <= 0.0) return {0.0, 1.0, Regime::povm};
  if (eta2 <= 0.0) return {1.0, 0.0, Regime::povm};
  const double c1 = (1.0 - std::sqrt(eta2 / eta1) * lambda) / (1.0 - l2);
  const double c2 = (1.0 - std::sqrt(eta1 / eta2) * lambda) / (1.0 - l2);
  return {std::max(c1, 0.0), std::max(c2, 0.0), Regime::povm};
}

Vec orthogonal_in_plane(const Vec& keep_out, const Vec& other) {
  Vec v = other - keep_out.dot(other) * keep_out;
  return v / v.norm();
}

double real_trace(const Mat& a) { return a.trace().real(); }

}  // namespace

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::left_projective: return "left-projective";
    case Regime::povm: return "povm";
    case Regime::right_projective: return "right-projective";
    case Regime::composite: return "composite";
  }
  return "unknown";
}

Regime idp_regime(double lambda, double eta1) { return idp_coefficients(lambda, eta1).regime; }

double idp_probability(double lambda, double eta1) {
  const double eta2 = 1.0 - eta1;
  switch (idp_regime(lambda, eta1)) {
    case Regime::left_projective: return eta2 * (1.0 - lambda * lambda);
    case Regime::right_projective: return eta1 * (1.0 - lambda * lambda);
    default: return 1.0 - 2.0 * std::sqrt(eta1 * eta2) * lambda;
  }
}

UsdSolution idp_optimal(const Vec& psi1, const Vec& psi2, double eta1) {
  if (psi1.size() != psi2.size() || psi1.size() < 2)
    throw Error(ErrorKind::argument, "state vectors must share a dimension of at least 2");
  if (std::abs(psi1.norm() - 1.0) > 1e-9 || std::abs(psi2.norm() - 1.0) > 1e-9)
    throw Error(ErrorKind::argument, "state vectors must be normalized");
  if (!(eta1 > 0.0 && eta1 < 1.0)) throw Error(ErrorKind::argument, "eta1 must lie in (0,1)");
  const double lambda = std::min(1.0, std::abs(psi1.dot(psi2)));
  if (lambda >= 1.0 - 1e-12) throw Error(ErrorKind::degenerate, "states are identical up to phase");

  const Vec psi1_perp = orthogonal_in_plane(psi1, psi2);
  const Vec psi2_perp = orthogonal_in_plane(psi2, psi1);
  const IdpCoefficients c = idp_coefficients(lambda, eta1);

  UsdSolution s;
  const Eigen::Index d = psi1.size();
  Mat e1 = c.c1 * proj(psi2_perp);
  Mat e2 = c.c2 * proj(psi1_perp);
  Mat e0 = Mat::Identity(d, d) - e1 - e2;
  s.povm.effects = {e1, e2, e0};
  s.c1 = c.c1;
  s.c2 = c.c2;
  s.regime = c.regime;
  s.p_discrimination = idp_probability(lambda, eta1);
  return s;
}

JordanPair jordan_basis(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::argument, "bases live in different spaces");
  auto check = [](const Mat& m) {
    if (m.cols() == 0) return;
    double err = (m.adjoint() * m - Mat::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
    if (err > 1e-8) throw Error(ErrorKind::argument, "input basis is not orthonormal");
  };
  check(a);
  check(b);

  JordanPair jp;
  const Eigen::Index m = std::min(a.cols(), b.cols());
  if (a.cols() == 0 || b.cols() == 0) {
    jp.basis_a = a;
    jp.basis_b = b;
    return jp;
  }
  Mat h = a.adjoint() * b;
  Eigen::JacobiSVD<Mat> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat ra = a * svd.matrixU();
  Mat rb = b * svd.matrixV();
  Eigen::VectorXd s = svd.singularValues();

  auto phase_of = [](const Vec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (std::abs(v(i)) > 1e-8) return std::conj(v(i)) / std::abs(v(i));
    return cd(1.0, 0.0);
  };
  for (Eigen::Index i = 0; i < ra.cols(); ++i) {
    cd ph = phase_of(ra.col(i));
    ra.col(i) *= ph;
    if (i < m) rb.col(i) *= ph;
  }
  for (Eigen::Index i = m; i < rb.cols(); ++i) rb.col(i) *= phase_of(rb.col(i));

  auto lex_less = [&](Eigen::Index x, Eigen::Index y) {
    for (Eigen::Index r = 0; r < ra.rows(); ++r) {
      const cd u = ra(r, x), v = ra(r, y);
      if (std::abs(u.real() - v.real()) > 1e-10) return u.real() < v.real();
      if (std::abs(u.imag() - v.imag()) > 1e-10) return u.imag() < v.imag();
    }
    return false;
  };
  std::vector<Eigen::Index> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  for (Eigen::Index start = 0; start < m;) {
    Eigen::Index end = start + 1;
    while (end < m && s(start) - s(end) < 1e-10) ++end;
    std::stable_sort(order.begin() + start, order.begin() + end, lex_less);
    start = end;
  }
  jp.basis_a = ra;
  jp.basis_b = rb;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index src = order[static_cast<size_t>(i)];
    jp.basis_a.col(i) = ra.col(src);
    jp.basis_b.col(i) = rb.col(src);
    jp.cosines.push_back(std::clamp(s(src), 0.0, 1.0));
  }
  return jp;
}

namespace {

Povm lift_with(const Povm& reduced, const Mat& pi, const Mat& add1, const Mat& add2) {
  const Eigen::Index d = pi.rows();
  Mat e1 = pi * reduced.effects.at(0) * pi + add1;
  Mat e2 = pi * reduced.effects.at(1) * pi + add2;
  Mat e0 = Mat::Identity(d, d) - e1 - e2;
  return Povm{{e1, e2, e0}};
}

}  // namespace

Reduction reduce_common_subspace(const UsdProblem& p) {
  const double tol = tolerance();
  const Eigen::Index d = p.rho1.rows();
  const Mat s1 = support_projector(p.rho1);
  const Mat s2 = support_projector(p.rho2);
  const Mat common = intersect_projectors(s1, s2);
  const Mat pi = Mat::Identity(d, d) - common;
  Reduction r;
  r.pi_reduced = pi;
  r.conclusive1 = Mat::Zero(d, d);
  r.conclusive2 = Mat::Zero(d, d);
  const double n1 = real_trace(p.rho1 * pi);
  const double n2 = real_trace(p.rho2 * pi);
  r.n = n1 * p.eta1 + n2 * p.eta2();
  r.reduced.eta1 = r.n > tol ? n1 * p.eta1 / r.n : 0.5;
  r.reduced.rho1 = n1 > tol ? Mat(pi * p.rho1 * pi / n1) : Mat(Mat::Zero(d, d));
  r.reduced.rho2 = n2 > tol ? Mat(pi * p.rho2 * pi / n2) : Mat(Mat::Zero(d, d));
  r.empty = r.n <= tol;
  const double n = r.n;
  const bool empty = r.empty;
  const Mat zero = Mat::Zero(d, d);
  r.lift = [pi, zero](const Povm& q) { return lift_with(q, pi, zero, zero); };
  r.lift_failure = [n, empty](double q) { return empty ? 1.0 : 1.0 - n + n * q; };
  return r;
}

Reduction reduce_orthogonal_subspaces(const UsdProblem& p) {
  const double tol = tolerance();
  const Eigen::Index d = p.rho1.rows();
  const Mat id = Mat::Identity(d, d);
  const Mat s1 = support_projector(p.rho1);
  const Mat s2 = support_projector(p.rho2);
  if (range_basis(intersect_projectors(s1, s2)).cols() > 0)
    throw Error(ErrorKind::precondition, "supports share a common subspace; reduce it first");
  const Mat perp1 = intersect_projectors(id - s1, s2);  // ker rho1 within supp rho2
  const Mat perp2 = intersect_projectors(id - s2, s1);  // ker rho2 within supp rho1
  const Mat pi = id - perp1 - perp2;
  Reduction r;
  r.pi_reduced = pi;
  r.conclusive1 = perp2;
  r.conclusive2 = perp1;
  const double n1 = real_trace(p.rho1 * pi);
  const double n2 = real_trace(p.rho2 * pi);
  r.n = n1 * p.eta1 + n2 * p.eta2();
  r.reduced.eta1 = r.n > tol ? n1 * p.eta1 / r.n : 0.5;
  r.reduced.rho1 = n1 > tol ? Mat(pi * p.rho1 * pi / n1) : Mat(Mat::Zero(d, d));
  r.reduced.rho2 = n2 > tol ? Mat(pi * p.rho2 * pi / n2) : Mat(Mat::Zero(d, d));
  r.empty = r.n <= tol;
  const double n = r.n;
  const bool empty = r.empty;
  r.lift = [pi, perp1, perp2](const Povm& q) { return lift_with(q, pi, perp2, perp1); };
  r.lift_failure = [n, empty](double q) { return empty ? 0.0 : n * q; };
  return r;
}

std::vector<BlockProblem> reduce_block_diagonal(const UsdProblem& p, const std::vector<Mat>& blocks) {
  const double tol = tolerance();
  const Eigen::Index d = p.rho1.rows();
  if (blocks.empty()) throw Error(ErrorKind::argument, "no blocks given");
  Mat sum = Mat::Zero(d, d);
  Mat r1 = Mat::Zero(d, d), r2 = Mat::Zero(d, d);
  for (const Mat& b : blocks) {
    if (b.rows() != d || b.cols() != d) throw Error(ErrorKind::argument, "block has the wrong dimension");
    if ((b * b - b).cwiseAbs().maxCoeff() > 10 * tol) throw Error(ErrorKind::argument, "block is not a projector");
    sum += b;
    r1 += b * p.rho1 * b;
    r2 += b * p.rho2 * b;
  }
  if ((sum - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > 10 * tol)
    throw Error(ErrorKind::argument, "blocks do not sum to the identity");
  if ((r1 - p.rho1).cwiseAbs().maxCoeff() > 10 * tol || (r2 - p.rho2).cwiseAbs().maxCoeff() > 10 * tol)
    throw Error(ErrorKind::argument, "states are not block diagonal in the given blocks");

  std::vector<BlockProblem> out;
  for (const Mat& b : blocks) {
    BlockProblem bp;
    bp.block = b;
    const double n1 = real_trace(p.rho1 * b);
    const double n2 = real_trace(p.rho2 * b);
    bp.weight = n1 * p.eta1 + n2 * p.eta2();
    bp.empty = bp.weight <= tol;
    bp.problem.eta1 = bp.empty ? 0.5 : n1 * p.eta1 / bp.weight;
    bp.problem.rho1 = n1 > tol ? Mat(b * p.rho1 * b / n1) : Mat(Mat::Zero(d, d));
    bp.problem.rho2 = n2 > tol ? Mat(b * p.rho2 * b / n2) : Mat(Mat::Zero(d, d));
    out.push_back(bp);
  }
  return out;
}

double combine_block_failures(const std::vector<BlockProblem>& blocks, const std::vector<double>& q) {
  if (blocks.size() != q.size()) throw Error(ErrorKind::argument, "one failure value per block is required");
  double total = 0.0;
  for (size_t k = 0; k < blocks.size(); ++k) total += blocks[k].weight * q[k];
  return total;
}

bool has_two_dimensional_blocks(const UsdProblem& p, double tol) {
  tol = resolve(tol);
  const Mat g1 = p.gamma1(), g2 = p.gamma2();
  auto comm = [](const Mat& x, const Mat& y) { return Mat(x * y - y * x); };
  const double c1 = comm(g1, g1 * g2 * g1).cwiseAbs().maxCoeff();
  const double c2 = comm(g2, g2 * g1 * g1 * g2).cwiseAbs().maxCoeff();
  const double c3 = comm(g1, g1 * g2 * g2 * g1).cwiseAbs().maxCoeff();
  return std::max({c1, c2, c3}) <= 10 * tol;
}

ProperReport is_proper_usd(const Povm& povm, const UsdProblem& p, double tol) {
  tol = resolve(tol);
  ProperReport r;
  if (povm.effects.size() != 3) throw Error(ErrorKind::argument, "expected effects E1, E2, E0");
  const Eigen::Index d = p.rho1.rows();
  const Mat id = Mat::Identity(d, d);
  const Mat& e0 = povm.effects[2];
  const Mat s = support_projector(p.rho1 + p.rho2);
  r.identity_deviation = spectral_norm((e0 - id) * (id - s));
  r.no_error_residual = spectral_norm(p.gamma1() * (id - e0) * p.gamma2());
  const bool bounded = min_eigenvalue(e0) >= -tol && min_eigenvalue(id - e0) >= -tol;
  r.proper = bounded && r.identity_deviation <= 10 * tol && r.no_error_residual <= 10 * tol;
  return r;
}

OptimalityReport check_optimality(const Mat& e0, const UsdProblem& p, double tol) {
  tol = resolve(tol);
  OptimalityReport r;
  const Eigen::Index d = p.rho1.rows();
  const Mat id = Mat::Identity(d, d);
  const Mat g1 = p.gamma1(), g2 = p.gamma2();
  const Mat s = support_projector(g1 + g2);
  const Mat lam1 = intersect_projectors(id - support_projector(g2), s);
  const Mat lam2 = intersect_projectors(id - support_projector(g1), s);
  const Mat x = e0 * (g2 - g1) * e0;

  const Mat cond_a = (lam1 - lam2) * x * (lam1 + lam2);
  const Mat cond_b = (lam1 - lam2) * x * (id - e0);
  const double herm = hermiticity_error(cond_a);
  r.positivity_residual = std::min(0.0, min_eigenvalue(cond_a)) - herm;
  r.vanishing_residual = spectral_norm(cond_b);
  r.block_residual_1 = std::min(0.0, min_eigenvalue(lam1 * x * lam1));
  r.block_residual_2 = std::min(0.0, min_eigenvalue(-(lam2 * x * lam2)));
  r.cross_residual = spectral_norm(lam1 * x * lam2);
  r.rank_e0 = numeric_rank(e0, tol);
  Mat sum = g1 + g2;
  const int kernel_dim = static_cast<int>(d) - numeric_rank(sum, tol);
  r.expected_rank_e0 = numeric_rank(g1 * g2, tol) + kernel_dim;
  const double t = 10 * tol;
  r.optimal = r.positivity_residual >= -t && r.vanishing_residual <= t && r.block_residual_1 >= -t &&
              r.block_residual_2 >= -t && r.cross_residual <= t && r.rank_e0 == r.expected_rank_e0;
  return r;
}

double fidelity_bound(const UsdProblem& p) {
  const Mat r1 = sqrtm_psd(p.gamma1());
  const Mat f = sqrtm_psd(r1 * p.gamma2() * r1);
  return 1.0 - 2.0 * f.trace().real();
}

FidelityForm fidelity_form_e0(const UsdProblem& p, double tol) {
  tol = resolve(tol);
  FidelityForm out;
  const Eigen::Index d = p.rho1.rows();
  const Mat id = Mat::Identity(d, d);
  const Mat s1 = support_projector(p.rho1), s2 = support_projector(p.rho2);
  if (range_basis(intersect_projectors(s1, s2)).cols() > 0 ||
      range_basis(intersect_projectors(id - s1, s2)).cols() > 0 ||
      range_basis(intersect_projectors(id - s2, s1)).cols() > 0) {
    out.reason = "supports are not strictly skew";
    return out;
  }
  const Mat g1 = p.gamma1(), g2 = p.gamma2();
  const Mat r1 = sqrtm_psd(g1), r2 = sqrtm_psd(g2);
  const Mat f1 = sqrtm_psd(r1 * g2 * r1);
  const Mat f2 = sqrtm_psd(r2 * g1 * r2);
  if (min_eigenvalue(g1 - f1) < -tol || min_eigenvalue(g2 - f2) < -tol) {
    out.reason = "operator inequalities gamma_i >= F_i fail";
    return out;
  }
  const Mat inv = pseudo_inverse_hermitian(g1 + g2, tol);
  out.e0 = id - inv * (r1 * (g1 - f1) * r1 + r2 * (g2 - f2) * r2) * inv;
  out.feasible = true;
  out.p_discrimination = 1.0 - p.eta1 * real_trace(out.e0 * p.rho1) - p.eta2() * real_trace(out.e0 * p.rho2);
  return out;
}

SubspaceSolution subspace_discrimination(const Mat& p1, const Mat& p2, double eta1) {
  if (p1.rows() != p2.rows() || p1.rows() != p1.cols() || p2.rows() != p2.cols())
    throw Error(ErrorKind::argument, "projectors must be square and of equal size");
  if (!(eta1 > 0.0 && eta1 < 1.0)) throw Error(ErrorKind::argument, "eta1 must lie in (0,1)");
  const double tol = tolerance();
  if ((p1 * p1 - p1).cwiseAbs().maxCoeff() > 10 * tol || (p2 * p2 - p2).cwiseAbs().maxCoeff() > 10 * tol)
    throw Error(ErrorKind::argument, "inputs must be projectors");
  const Eigen::Index d = p1.rows();
  const double eta2 = 1.0 - eta1;
  const Mat v1 = range_basis(p1), v2 = range_basis(p2);
  const double n1 = static_cast<double>(v1.cols()), n2 = static_cast<double>(v2.cols());
  if (v1.cols() == 0 || v2.cols() == 0) throw Error(ErrorKind::argument, "subspaces must be non-empty");
  const JordanPair jp = jordan_basis(v1, v2);
  const Eigen::Index m = static_cast<Eigen::Index>(jp.cosines.size());

  SubspaceSolution sol;
  Mat perp_of_2 = Mat::Zero(d, d);  // part of V1 orthogonal to V2
  Mat perp_of_1 = Mat::Zero(d, d);  // part of V2 orthogonal to V1
  for (Eigen::Index i = m; i < jp.basis_a.cols(); ++i) perp_of_2 += proj(jp.basis_a.col(i));
  for (Eigen::Index i = m; i < jp.basis_b.cols(); ++i) perp_of_1 += proj(jp.basis_b.col(i));

  const double w1 = eta1 / n1, w2 = eta2 / n2;
  const double eta1_pair = w1 / (w1 + w2);
  Mat e1 = Mat::Zero(d, d), e2 = Mat::Zero(d, d);
  double failure_sum = 0.0;
  double cos_sum = 0.0;
  bool all_povm = true;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double c = jp.cosines[static_cast<size_t>(i)];
    const Vec a = jp.basis_a.col(i), b = jp.basis_b.col(i);
    if (c > kCommonCosine) {
      ++sol.n_common;
      continue;
    }
    if (c < kOrthogonalCosine) {
      ++sol.n_orthogonal;
      perp_of_2 += proj(a);
      perp_of_1 += proj(b);
      continue;
    }
    const IdpCoefficients k = idp_coefficients(c, eta1_pair);
    const Vec b_perp = (a - c * b) / std::sqrt(1.0 - c * c);
    const Vec a_perp = (b - c * a) / std::sqrt(1.0 - c * c);
    e1 += k.c1 * proj(b_perp);
    e2 += k.c2 * proj(a_perp);
    failure_sum += 1.0 - idp_probability(c, eta1_pair);
    cos_sum += c;
    all_povm = all_povm && k.regime == Regime::povm;
    sol.pair_cosines.push_back(c);
    sol.pair_regimes.push_back(k.regime);
  }
  e1 += perp_of_2;
  e2 += perp_of_1;
  sol.povm.effects = {e1, e2, Mat::Identity(d, d) - e1 - e2};
  sol.p_discrimination = 1.0 - (w1 + w2) * (sol.n_common + failure_sum);
  sol.explicit_form_valid = all_povm;
  sol.p_explicit = 1.0 - (w1 + w2) * sol.n_common - 2.0 * std::sqrt(eta1 * eta2 / (n1 * n2)) * cos_sum;
  if (sol.pair_regimes.empty()) {
    sol.regime = Regime::povm;
  } else {
    sol.regime = sol.pair_regimes.front();
    for (Regime r : sol.pair_regimes)
      if (r != sol.regime) sol.regime = Regime::composite;
  }
  return sol;
}

double success_probability(const Povm& povm, const UsdProblem& p) {
  return p.eta1 * real_trace(povm.effects.at(0) * p.rho1) + p.eta2() * real_trace(povm.effects.at(1) * p.rho2);
}

double no_error_residual(const Povm& povm, const UsdProblem& p) {
  return std::max(std::abs(real_trace(povm.effects.at(0) * p.rho2)),
                  std::abs(real_trace(povm.effects.at(1) * p.rho1)));
}

}  // namespace uqm
