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

#include "uqm/oracles.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numeric>

#include "uqm/ui_finite.hpp"

namespace uqm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Welford accumulator over reals.
struct Running {
  long n = 0;
  double mean = 0.0;
  double m2 = 0.0;
  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  McEstimate estimate() const {
    McEstimate e;
    e.mean = mean;
    e.samples = n;
    e.stderr_ = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
    return e;
  }
};

double min_eig2(double a11, double a12, double a22) {
  const double tr = a11 + a22, det = a11 * a22 - a12 * a12;
  return 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
}

template <class F>
double golden_max(F f, double lo, double hi) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < 200 && b - a > 1e-14; ++i) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    }
  }
  return std::max(f(0.5 * (a + b)), std::max(f(lo), f(hi)));
}

double point_segment(cd p, cd a, cd b) {
  const cd ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double cross(cd a, cd b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool in_triangle(cd p, cd a, cd b, cd c) {
  const double d1 = cross(b - a, p - a), d2 = cross(c - b, p - b), d3 = cross(a - c, p - c);
  const bool neg = d1 < -1e-15 || d2 < -1e-15 || d3 < -1e-15;
  const bool pos = d1 > 1e-15 || d2 > 1e-15 || d3 > 1e-15;
  return !(neg && pos);
}

}  // namespace

double idp_brute_force(double lambda, double eta1) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw Error(ErrorKind::argument, "lambda must lie in [0,1)");
  if (!(eta1 >= 0.0 && eta1 <= 1.0)) throw Error(ErrorKind::argument, "eta1 must lie in [0,1]");
  const double eta2 = 1.0 - eta1;
  const double s = std::sqrt(1.0 - lambda * lambda);
  // psi1 = (1, 0), psi2 = (lambda, s); perp2 = (s, -lambda), perp1 = (0, 1).
  auto e0_min = [&](double a, double b) {
    const double a11 = 1.0 - a * s * s;
    const double a12 = a * s * lambda;
    const double a22 = 1.0 - a * lambda * lambda - b;
    return min_eig2(a11, a12, a22);
  };
  auto b_max = [&](double a) {
    if (e0_min(a, 0.0) < 0.0) return -1.0;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
      const double mid = 0.5 * (lo + hi);
      (e0_min(a, mid) >= 0.0 ? lo : hi) = mid;
    }
    return lo;
  };
  auto value = [&](double a) {
    const double b = b_max(a);
    if (b < 0.0) return -1.0;
    return eta1 * a * s * s + eta2 * b * s * s;
  };
  const int grid = 200;
  double best = -1.0;
  int best_i = 0;
  for (int i = 0; i <= grid; ++i) {
    const double v = value(static_cast<double>(i) / grid);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const double lo = std::max(0.0, (best_i - 1.0) / grid), hi = std::min(1.0, (best_i + 1.0) / grid);
  return std::max(best, golden_max(value, lo, hi));
}

double overlap_quadrature(int k, int l, cd a1, cd a2) {
  if (k < 1 || l < 1) throw Error(ErrorKind::argument, "copy counts must be at least 1");
  using boost::math::quadrature::gauss_kronrod;
  const double kk = k, ll = l;
  const cd centre = (kk * a1 + ll * a2) / (kk + ll);
  const double half = 12.0 / std::sqrt(kk + ll);
  auto inner = [&](double x) {
    auto f = [&](double y) {
      const cd b(x, y);
      return std::exp(-kk * std::norm(a1 - b) - ll * std::norm(a2 - b));
    };
    return gauss_kronrod<double, 61>::integrate(f, centre.imag() - half, centre.imag() + half, 15, 1e-14);
  };
  const double integral =
      gauss_kronrod<double, 61>::integrate(inner, centre.real() - half, centre.real() + half, 15, 1e-14);
  return 1.0 - (kk + ll) / kPi * integral;
}

Mat partial_trace_loops(const Mat& a, const std::vector<int>& traced, const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  std::vector<bool> gone(static_cast<size_t>(n), false);
  for (int t : traced) gone[static_cast<size_t>(t)] = true;
  Eigen::Index total = 1, kept = 1;
  for (int i = 0; i < n; ++i) {
    total *= dims[static_cast<size_t>(i)];
    if (!gone[static_cast<size_t>(i)]) kept *= dims[static_cast<size_t>(i)];
  }
  if (a.rows() != total) throw Error(ErrorKind::argument, "dimension mismatch");
  Mat out = Mat::Zero(kept, kept);
  std::vector<int> di(static_cast<size_t>(n)), dj(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < total; ++i) {
    Eigen::Index r = i;
    for (int p = n - 1; p >= 0; --p) {
      di[static_cast<size_t>(p)] = static_cast<int>(r % dims[static_cast<size_t>(p)]);
      r /= dims[static_cast<size_t>(p)];
    }
    for (Eigen::Index j = 0; j < total; ++j) {
      Eigen::Index s = j;
      for (int p = n - 1; p >= 0; --p) {
        dj[static_cast<size_t>(p)] = static_cast<int>(s % dims[static_cast<size_t>(p)]);
        s /= dims[static_cast<size_t>(p)];
      }
      bool diag = true;
      Eigen::Index oi = 0, oj = 0;
      for (int p = 0; p < n; ++p) {
        const size_t q = static_cast<size_t>(p);
        if (gone[q]) {
          if (di[q] != dj[q]) {
            diag = false;
            break;
          }
        } else {
          oi = oi * dims[q] + di[q];
          oj = oj * dims[q] + dj[q];
        }
      }
      if (diag) out(oi, oj) += a(i, j);
    }
  }
  return out;
}

Mat choi_loops(const std::vector<Mat>& kraus) {
  if (kraus.empty()) throw Error(ErrorKind::argument, "at least one Kraus operator is required");
  const Eigen::Index d = kraus.front().rows();
  Mat out = Mat::Zero(d * d, d * d);
  for (const Mat& k : kraus)
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index j = 0; j < d; ++j)
          for (Eigen::Index b = 0; b < d; ++b) out(i * d + a, j * d + b) += k(a, i) * std::conj(k(b, j));
  return out;
}

double hull_distance(const std::vector<cd>& points) {
  if (points.empty()) throw Error(ErrorKind::argument, "no points");
  const size_t n = points.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        if (in_triangle(0.0, points[a], points[b], points[c])) return 0.0;
  double best = std::abs(points[0]);
  for (size_t a = 0; a < n; ++a) {
    best = std::min(best, std::abs(points[a]));
    for (size_t b = a + 1; b < n; ++b) best = std::min(best, point_segment(0.0, points[a], points[b]));
  }
  return best;
}

double diagonal_xi_minimum(const std::vector<double>& phases) {
  const size_t n = phases.size();
  if (n == 0) throw Error(ErrorKind::argument, "no phases");
  std::vector<cd> z;
  for (double t : phases) z.push_back(std::polar(1.0, t));
  auto f = [&](const std::vector<double>& p) {
    cd s = 0.0;
    for (size_t k = 0; k < n; ++k) s += p[k] * z[k];
    return std::norm(s);
  };
  // Best vertex or edge midpoint as a start, then pattern search along the
  // directions e_i - e_j, which keep the weights normalized.
  std::vector<double> p(n, 0.0);
  double fp = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      std::vector<double> q(n, 0.0);
      q[i] += 0.5;
      q[j] += 0.5;
      const double fq = f(q);
      if (fq < fp) {
        fp = fq;
        p = q;
      }
    }
  std::vector<double> centre(n, 1.0 / static_cast<double>(n));
  if (f(centre) < fp) {
    p = centre;
    fp = f(centre);
  }
  for (double h = 0.25; h > 1e-15;) {
    bool moved = false;
    for (size_t i = 0; i < n && !moved; ++i)
      for (size_t j = 0; j < n && !moved; ++j) {
        if (i == j || p[j] < h) continue;
        std::vector<double> q = p;
        q[i] += h;
        q[j] -= h;
        const double fq = f(q);
        if (fq < fp) {
          p = q;
          fp = fq;
          moved = true;
        }
      }
    if (!moved) h *= 0.5;
  }
  return std::sqrt(fp);
}

Mat commutant_projection(const Mat& x, const std::vector<Mat>& ops) {
  const Eigen::Index m = static_cast<Eigen::Index>(ops.size());
  Mat g(m, m);
  Vec r(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    r(i) = (ops[static_cast<size_t>(i)].adjoint() * x).trace();
    for (Eigen::Index j = 0; j < m; ++j)
      g(i, j) = (ops[static_cast<size_t>(i)].adjoint() * ops[static_cast<size_t>(j)]).trace();
  }
  // The permutation operators are linearly dependent when d < k.
  const Vec c = g.completeOrthogonalDecomposition().solve(r);
  Mat out = Mat::Zero(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < m; ++i) out += c(i) * ops[static_cast<size_t>(i)];
  return out;
}

Mat haar_twirl_exact(const Mat& x, int d, int k) {
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mat> ops;
  do {
    ops.push_back(permutation_operator(d, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return commutant_projection(x, ops);
}

McEstimate sample_mean(const std::function<double(RandomStream&)>& f, long samples, RandomStream& rng) {
  if (samples < 2) throw Error(ErrorKind::argument, "need at least two samples");
  Running acc;
  for (long i = 0; i < samples; ++i) acc.add(f(rng));
  return acc.estimate();
}

MatEstimate sample_mean_matrix(const std::function<Mat(RandomStream&)>& f, long samples, RandomStream& rng) {
  if (samples < 2) throw Error(ErrorKind::argument, "need at least two samples");
  Mat sum, sum2re, sum2im;
  for (long i = 0; i < samples; ++i) {
    const Mat x = f(rng);
    if (i == 0) {
      sum = Mat::Zero(x.rows(), x.cols());
      sum2re = Mat::Zero(x.rows(), x.cols());
      sum2im = Mat::Zero(x.rows(), x.cols());
    }
    sum += x;
    sum2re += x.real().array().square().matrix().cast<cd>();
    sum2im += x.imag().array().square().matrix().cast<cd>();
  }
  const double n = static_cast<double>(samples);
  MatEstimate e;
  e.samples = samples;
  e.mean = sum / n;
  const Eigen::MatrixXd var_re = (sum2re.real() / n - e.mean.real().array().square().matrix()) * (n / (n - 1.0));
  const Eigen::MatrixXd var_im = (sum2im.real() / n - e.mean.imag().array().square().matrix()) * (n / (n - 1.0));
  e.stderr_ = ((var_re + var_im).array().max(0.0) / n).sqrt().matrix();
  return e;
}

McEstimate gaussian_integral_mc(int m, double a, double b, double sigma, cd x, long samples, RandomStream& rng) {
  return sample_mean(
      [&](RandomStream& r) {
        cd z = x;
        for (int i = 0; i < m; ++i) z += r.complex_normal(sigma * sigma);
        return std::exp(-a / b * std::norm(z));
      },
      samples, rng);
}

McEstimate comparison_average_mc(const ComparisonConfig& cfg, long samples, RandomStream& rng) {
  return sample_mean(
      [&](RandomStream& r) {
        const Vec u = haar_state(cfg.d, r), v = haar_state(cfg.d, r);
        const double x = std::min(1.0, std::norm(u.dot(v)));
        return cfg.eta_diff * compare_prob_pure(cfg.k, cfg.l, x);
      },
      samples, rng);
}

McEstimate hayashi_average_mc(int d, long samples, RandomStream& rng) {
  const UiMeasurement m = hayashi_optimal(d);
  return sample_mean(
      [&](RandomStream& r) {
        const std::vector<Vec> refs{haar_state(d, r), haar_state(d, r)};
        return ui_probability(m, refs);
      },
      samples, rng);
}

McEstimate comparator_average_mc(int d, long samples, RandomStream& rng) {
  const Mat pa = antisymmetric_projector(d, 2).op;
  const Mat rho = pa / pa.trace().real();
  const Mat ps = symmetric_projector(d, 2);
  return sample_mean(
      [&](RandomStream& r) {
        const Mat w = kron(haar_unitary(d, r), haar_unitary(d, r));
        return (ps * w * rho * w.adjoint()).trace().real();
      },
      samples, rng);
}

MatEstimate twirl_mc(const Mat& y, int d, long samples, RandomStream& rng) {
  return sample_mean_matrix(
      [&](RandomStream& r) {
        const Mat u = haar_unitary(d, r);
        const Mat w = kron(u, u);
        return Mat(w * y * w.adjoint());
      },
      samples, rng);
}

McEstimate labeled_average_mc(int d, long samples, RandomStream& rng) {
  const Mat pa = antisymmetric_projector(d, 2).op;
  const Mat rho = pa / pa.trace().real();
  return sample_mean(
      [&](RandomStream& r) {
        const Mat u = haar_unitary(d, r), v = haar_unitary(d, r);
        double q = 0.0;
        for (int j = 0; j < d; ++j) q += (rho * kron(proj(u.col(j)), proj(v.col(j)))).trace().real();
        return q;
      },
      samples, rng);
}

McEstimate unlabeled_average_mc(long samples, RandomStream& rng) {
  // phi_Q from its definition, independent of the library constructor.
  Vec q = Vec::Zero(16);
  auto idx = [](int a, int b, int c, int e) { return 8 * a + 4 * b + 2 * c + e; };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e) {
          // singlet on (1,3) x (2,4) and on (1,4) x (2,3)
          const double s13 = a == c ? 0.0 : (a == 0 ? 1.0 : -1.0);
          const double s24 = b == e ? 0.0 : (b == 0 ? 1.0 : -1.0);
          const double s14 = a == e ? 0.0 : (a == 0 ? 1.0 : -1.0);
          const double s23 = b == c ? 0.0 : (b == 0 ? 1.0 : -1.0);
          q(idx(a, b, c, e)) = (s13 * s24 + s14 * s23) / 2.0;
        }
  q /= std::sqrt(3.0);
  return sample_mean(
      [&](RandomStream& r) {
        const Mat u = haar_unitary(2, r), v = haar_unitary(2, r);
        Mat sd = Mat::Zero(16, 16), ds = Mat::Zero(16, 16);
        for (int j = 0; j < 2; ++j)
          for (int a = 0; a < 2; ++a) {
            const Mat aa = kron(proj(u.col(j)), proj(u.col(j)));
            const Mat ab = kron(proj(u.col(j)), proj(u.col(1 - j)));
            const Mat bb = kron(proj(v.col(a)), proj(v.col(a)));
            const Mat bd = kron(proj(v.col(a)), proj(v.col(1 - a)));
            sd += kron(aa, bd);
            ds += kron(ab, bb);
          }
        return q.dot((sd + ds) * q).real();
      },
      samples, rng);
}

MatEstimate equal_same_same_mc(long samples, RandomStream& rng) {
  return sample_mean_matrix(
      [&](RandomStream& r) {
        const Mat u = haar_unitary(2, r);
        Mat same = Mat::Zero(4, 4);
        for (int j = 0; j < 2; ++j) same += kron(proj(u.col(j)), proj(u.col(j)));
        return Mat(kron(same, same));
      },
      samples, rng);
}

}  // namespace uqm
