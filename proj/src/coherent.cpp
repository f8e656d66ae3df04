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

#include "uqm/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace uqm {

namespace {

void check_transmittivity(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::argument, "transmittivity must lie in [0,1]");
}

void check_copies(int n, const char* what) {
  if (n < 1) throw Error(ErrorKind::argument, std::string(what) + " must be at least 1");
}

std::vector<int> range(int begin, int count) {
  std::vector<int> v(static_cast<size_t>(count));
  std::iota(v.begin(), v.end(), begin);
  return v;
}

// Golden-section maximization of a unimodal function on [lo, hi], seeded
// by a coarse scan so that a boundary maximum is also found.
std::pair<double, double> maximize_1d(const std::function<double(double)>& f, double lo, double hi, int scan = 400) {
  double best_x = lo, best_f = f(lo);
  for (int i = 1; i <= scan; ++i) {
    const double x = lo + (hi - lo) * i / scan;
    const double v = f(x);
    if (v > best_f) {
      best_f = v;
      best_x = x;
    }
  }
  const double step = (hi - lo) / scan;
  double a = std::max(lo, best_x - step), b = std::min(hi, best_x + step);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    }
  }
  const double x = 0.5 * (a + b);
  const double v = f(x);
  if (v >= best_f) return {x, v};
  return {best_x, best_f};
}

// Running mean and standard error.
class Accumulator {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }
  McEstimate estimate() const {
    McEstimate e;
    e.mean = mean_;
    e.samples = n_;
    e.stderr_ = n_ > 1 ? std::sqrt(m2_ / static_cast<double>(n_ - 1) / static_cast<double>(n_)) : 0.0;
    return e;
  }

 private:
  long n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Amplitudes of the two measured modes under technical noise: mu1 feeds
// detector 2 (mode A), mu2 feeds detector 1 (mode C). The unknown carries a
// shared term rho and per-copy terms nu; references carry beta and gamma.
struct NoisyModes {
  cd mu1;
  cd mu2;
};

NoisyModes sample_noisy_modes(int na, int nb, int nc, double sigma, cd unknown, cd alpha1, cd alpha2,
                              RandomStream& rng) {
  const double var = sigma * sigma;
  const cd rho = rng.complex_normal(var);
  cd nu = 0.0, beta = 0.0, gamma = 0.0;
  for (int k = 0; k < na; ++k) nu += rng.complex_normal(var);
  for (int k = 0; k < nb; ++k) beta += rng.complex_normal(var);
  for (int k = 0; k < nc; ++k) gamma += rng.complex_normal(var);
  const double sa = std::sqrt(static_cast<double>(na));
  const double cb = std::sqrt(na * static_cast<double>(nb) / (na + 2.0 * nb));
  const double cc = std::sqrt(na * static_cast<double>(nc) / (na + 2.0 * nc));
  NoisyModes m;
  m.mu1 = cb * (unknown - alpha1 - rho / sa + nu / static_cast<double>(na) - beta / static_cast<double>(nb));
  m.mu2 = cc * (alpha2 - unknown - rho / sa - nu / static_cast<double>(na) + gamma / static_cast<double>(nc));
  return m;
}

// Tr(E1 rho), Tr(E2 rho) for one noise realization.
std::pair<double, double> click_pair(const NoisyModes& m) {
  const double dark2 = std::exp(-std::norm(m.mu1));
  const double dark1 = std::exp(-std::norm(m.mu2));
  return {(1.0 - dark1) * dark2, dark1 * (1.0 - dark2)};
}

}  // namespace

LinearNetwork::LinearNetwork(int modes) : g_(Mat::Identity(modes, modes)) {
  if (modes < 0) throw Error(ErrorKind::argument, "mode count must be non-negative");
}

void LinearNetwork::add_beamsplitter(int a, int b, double t) {
  check_transmittivity(t);
  if (a == b || a < 0 || b < 0 || a >= modes() || b >= modes()) throw Error(ErrorKind::argument, "invalid mode pair");
  add_unitary(beamsplitter_matrix(t), {a, b});
}

void LinearNetwork::add_unitary(const Mat& u, const std::vector<int>& modes_list) {
  const Eigen::Index k = static_cast<Eigen::Index>(modes_list.size());
  if (u.rows() != k || u.cols() != k) throw Error(ErrorKind::argument, "unitary size does not match the mode list");
  Mat full = Mat::Identity(modes(), modes());
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) full(modes_list[static_cast<size_t>(i)], modes_list[static_cast<size_t>(j)]) = u(i, j);
  g_ = full * g_;
}

void LinearNetwork::bind_detector(int mode, int id) {
  if (mode < 0 || mode >= modes()) throw Error(ErrorKind::argument, "detector mode out of range");
  detectors_.push_back({mode, id});
}

void LinearNetwork::set_efficiency(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error(ErrorKind::argument, "detector efficiency must lie in [0,1]");
  gamma_ = gamma;
}

CoherentRegister LinearNetwork::propagate(const CoherentRegister& in) const {
  if (in.size() != modes()) throw Error(ErrorKind::argument, "register size does not match the network");
  for (Eigen::Index i = 0; i < in.size(); ++i)
    if (!std::isfinite(in(i).real()) || !std::isfinite(in(i).imag()))
      throw Error(ErrorKind::argument, "amplitudes must be finite");
  return g_ * in;
}

double LinearNetwork::unitarity_error() const {
  return spectral_norm(g_.adjoint() * g_ - Mat::Identity(modes(), modes()));
}

double LinearNetwork::no_click(const CoherentRegister& out, int id) const {
  for (const Detector& d : detectors_)
    if (d.id == id) return std::exp(-gamma_ * std::norm(out(d.mode)));
  throw Error(ErrorKind::argument, "no detector with this id");
}

std::pair<cd, cd> beamsplitter(double t, cd a, cd b) {
  check_transmittivity(t);
  const double st = std::sqrt(t), sr = std::sqrt(1.0 - t);
  return {st * a + sr * b, -sr * a + st * b};
}

Mat beamsplitter_matrix(double t) {
  check_transmittivity(t);
  const double st = std::sqrt(t), sr = std::sqrt(1.0 - t);
  Mat m(2, 2);
  m << st, sr, -sr, st;
  return m;
}

LinearNetwork concentrator(int k) {
  check_copies(k, "copy count");
  LinearNetwork net(k);
  for (int j = 1; j < k; ++j) net.add_beamsplitter(0, j, static_cast<double>(j) / (j + 1));
  return net;
}

CoherentRegister concentrate(int k, cd alpha) {
  return concentrator(k).propagate(CoherentRegister::Constant(k, alpha));
}

double vacuum_overlap(cd beta) { return std::exp(-std::norm(beta)); }

double compare_coherent_closed(int k, int l, double delta2) {
  check_copies(k, "k");
  check_copies(l, "l");
  return 1.0 - std::exp(-(k * static_cast<double>(l) / (k + l)) * delta2);
}

CoherentComparison compare_coherent(int k, int l, cd alpha1, cd alpha2) {
  check_copies(k, "k");
  check_copies(l, "l");
  CoherentComparison out;
  out.network = LinearNetwork(k + l);
  out.network.add_unitary(concentrator(k).matrix(), range(0, k));
  out.network.add_unitary(concentrator(l).matrix(), range(k, l));
  out.network.add_beamsplitter(0, k, static_cast<double>(k) / (k + l));
  out.network.bind_detector(k, 1);
  CoherentRegister in(k + l);
  in.head(k).setConstant(alpha1);
  in.tail(l).setConstant(alpha2);
  out.output = out.network.propagate(in);
  out.probability = 1.0 - out.network.no_click(out.output, 1);
  out.closed_form = compare_coherent_closed(k, l, std::norm(alpha1 - alpha2));
  return out;
}

ThreeSplitter three_splitter(double na, double nb, double nc, double t1) {
  check_transmittivity(t1);
  if (!(na > 0.0 && nb > 0.0 && nc > 0.0)) throw Error(ErrorKind::argument, "copy weights must be positive");
  ThreeSplitter s;
  s.t1 = t1;
  s.t2 = 1.0 / (1.0 + na / nb * t1);
  s.t3 = (1.0 - t1) / (nc / na + 1.0 - t1);
  return s;
}

LinearNetwork three_splitter_network(const ThreeSplitter& s) {
  LinearNetwork net(4);
  const int a = 0, b = 1, c = 2, d = 3;
  net.add_beamsplitter(d, a, s.t1);
  net.add_beamsplitter(b, a, s.t2);
  net.add_beamsplitter(d, c, s.t3);
  net.bind_detector(c, 1);
  net.bind_detector(a, 2);
  return net;
}

double ui_two_refs_closed(double na, double nb, double nc, double t1, double delta2, double eta1, double gamma) {
  check_transmittivity(t1);
  const double r1 = 1.0 - t1;
  const double e1 = nc * na * r1 / (nc + na * r1);
  const double e2 = nb * na * t1 / (nb + na * t1);
  return eta1 * (1.0 - std::exp(-gamma * e1 * delta2)) + (1.0 - eta1) * (1.0 - std::exp(-gamma * e2 * delta2));
}

double ui_equal_refs(double na, double nb, double delta2) {
  return 1.0 - std::exp(-(na * nb / (na + 2.0 * nb)) * delta2);
}

TwoRefUi ui_two_refs(int na, int nb, int nc, double t1, cd unknown, cd alpha1, cd alpha2, double eta1, double gamma) {
  check_copies(na, "n_A");
  check_copies(nb, "n_B");
  check_copies(nc, "n_C");
  if (!(eta1 >= 0.0 && eta1 <= 1.0)) throw Error(ErrorKind::argument, "eta1 must lie in [0,1]");
  TwoRefUi out;
  out.splitters = three_splitter(na, nb, nc, t1);
  out.mode_a = 0;
  out.mode_b = na;
  out.mode_c = na + nb;
  out.mode_d = na + nb + nc;
  const int total = out.mode_d + 1;
  out.network = LinearNetwork(total);
  out.network.set_efficiency(gamma);
  out.network.add_unitary(concentrator(na).matrix(), range(out.mode_a, na));
  out.network.add_unitary(concentrator(nb).matrix(), range(out.mode_b, nb));
  out.network.add_unitary(concentrator(nc).matrix(), range(out.mode_c, nc));
  out.network.add_unitary(three_splitter_network(out.splitters).matrix(),
                          {out.mode_a, out.mode_b, out.mode_c, out.mode_d});
  out.network.bind_detector(out.mode_c, 1);
  out.network.bind_detector(out.mode_a, 2);

  auto input = [&](cd u) {
    CoherentRegister in = CoherentRegister::Zero(total);
    in.segment(out.mode_a, na).setConstant(u);
    in.segment(out.mode_b, nb).setConstant(alpha1);
    in.segment(out.mode_c, nc).setConstant(alpha2);
    return in;
  };
  out.output = out.network.propagate(input(unknown));
  out.no_click_d1 = out.network.no_click(out.output, 1);
  out.no_click_d2 = out.network.no_click(out.output, 2);

  const CoherentRegister o1 = out.network.propagate(input(alpha1));
  const CoherentRegister o2 = out.network.propagate(input(alpha2));
  out.p1 = (1.0 - out.network.no_click(o1, 1)) * out.network.no_click(o1, 2);
  out.p2 = out.network.no_click(o2, 1) * (1.0 - out.network.no_click(o2, 2));
  out.probability = eta1 * out.p1 + (1.0 - eta1) * out.p2;

  const double delta2 = std::norm(alpha1 - alpha2);
  out.p1_closed = ui_two_refs_closed(na, nb, nc, t1, delta2, 1.0, gamma);
  out.p2_closed = ui_two_refs_closed(na, nb, nc, t1, delta2, 0.0, gamma);
  out.closed_form = eta1 * out.p1_closed + (1.0 - eta1) * out.p2_closed;
  return out;
}

T1Search optimal_t1(int na, int nb, int nc, double delta2, double eta1) {
  check_copies(na, "n_A");
  check_copies(nb, "n_B");
  check_copies(nc, "n_C");
  T1Search out;
  const auto best =
      maximize_1d([&](double t) { return ui_two_refs_closed(na, nb, nc, t, delta2, eta1); }, 0.0, 1.0);
  out.t1 = best.first;
  out.probability = best.second;
  out.state_dependent = nb != nc;
  return out;
}

double ui_m_refs_closed(int m, int na, int nb, const std::vector<cd>& refs) {
  if (m < 2 || static_cast<int>(refs.size()) != m) throw Error(ErrorKind::argument, "need M >= 2 references");
  check_copies(na, "n_A");
  check_copies(nb, "n_B");
  const double c = na * static_cast<double>(nb) / (na + static_cast<double>(m) * nb);
  double p = 0.0;
  for (int j = 0; j < m; ++j) {
    double prod = 1.0;
    for (int k = 0; k < m; ++k)
      if (k != j) prod *= 1.0 - std::exp(-c * std::norm(refs[static_cast<size_t>(j)] - refs[static_cast<size_t>(k)]));
    p += prod / m;
  }
  return p;
}

MultiRefUi ui_m_refs(int m, int na, int nb, cd unknown, const std::vector<cd>& refs) {
  if (m < 2 || static_cast<int>(refs.size()) != m) throw Error(ErrorKind::argument, "need M >= 2 references");
  check_copies(na, "n_A");
  check_copies(nb, "n_B");
  MultiRefUi out;
  const int split0 = na;  // first of the M - 1 extra vacuum modes
  const int ref0 = na + m - 1;
  const int total = ref0 + m * nb;
  out.t = na / (na + static_cast<double>(m) * nb);
  out.network = LinearNetwork(total);
  out.network.add_unitary(concentrator(na).matrix(), range(0, na));
  std::vector<int> split_modes{0};
  for (int i = 0; i < m - 1; ++i) split_modes.push_back(split0 + i);
  out.network.add_unitary(concentrator(m).matrix().adjoint(), split_modes);
  for (int k = 0; k < m; ++k) {
    const int head = ref0 + k * nb;
    out.network.add_unitary(concentrator(nb).matrix(), range(head, nb));
    out.network.add_beamsplitter(split_modes[static_cast<size_t>(k)], head, out.t);
    out.network.bind_detector(head, k + 1);
  }

  auto input = [&](cd u) {
    CoherentRegister in = CoherentRegister::Zero(total);
    in.head(na).setConstant(u);
    for (int k = 0; k < m; ++k) in.segment(ref0 + k * nb, nb).setConstant(refs[static_cast<size_t>(k)]);
    return in;
  };
  (void)out.network.propagate(input(unknown));
  double p = 0.0;
  for (int j = 0; j < m; ++j) {
    const CoherentRegister o = out.network.propagate(input(refs[static_cast<size_t>(j)]));
    double prod = out.network.no_click(o, j + 1);
    for (int k = 0; k < m; ++k)
      if (k != j) prod *= 1.0 - out.network.no_click(o, k + 1);
    p += prod / m;
  }
  out.probability = p;
  out.closed_form = ui_m_refs_closed(m, na, nb, refs);
  return out;
}

int resource_tradeoff(int n) {
  if (n < 3) throw Error(ErrorKind::argument, "need N >= 3");
  int best = 1;
  double best_v = -1.0;
  for (int na = 1; na < n; ++na) {
    const double v = na * static_cast<double>(n - na) / (2.0 * n);
    if (v > best_v + 1e-15) {
      best_v = v;
      best = na;
    }
  }
  return best;
}

double known_states_limit(int na, cd alpha1, cd alpha2) {
  check_copies(na, "n_A");
  return 1.0 - std::exp(-0.5 * na * std::norm(alpha1 - alpha2));
}

WeakUi weak_ui(int n, cd alpha1, cd alpha2) {
  check_copies(n, "N");
  const double delta2 = std::norm(alpha1 - alpha2);
  WeakUi out;
  out.per_round = 1.0 - std::exp(-delta2 / (3.0 * n));
  out.overall = 1.0 - std::pow(1.0 - out.per_round, n);
  return out;
}

RepeatUi repeat_same_unknown(cd unknown, cd alpha1, cd alpha2) {
  // Modes: A, B, C, D of the first setup, then a fresh copy A2 and vacuum D2.
  LinearNetwork net(6);
  net.add_unitary(three_splitter_network(three_splitter(1, 1, 1, 0.5)).matrix(), {0, 1, 2, 3});
  ThreeSplitter second;
  second.t1 = 0.5;
  second.t2 = 0.75;
  second.t3 = 0.25;
  // Unmeasured B and D take the reference roles.
  net.add_unitary(three_splitter_network(second).matrix(), {4, 1, 3, 5});
  net.bind_detector(4, 2);
  net.bind_detector(3, 1);

  auto run = [&](cd u) {
    CoherentRegister in = CoherentRegister::Zero(6);
    in(0) = u;
    in(1) = alpha1;
    in(2) = alpha2;
    in(4) = u;
    return net.propagate(in);
  };
  RepeatUi out;
  const CoherentRegister o = run(unknown);
  out.measured_a = o(4);
  out.measured_c = o(3);
  out.closed_a = (unknown - alpha1) / std::sqrt(6.0);
  out.closed_c = (alpha2 - unknown) / std::sqrt(6.0);
  const CoherentRegister o1 = run(alpha1), o2 = run(alpha2);
  const double p1 = (1.0 - net.no_click(o1, 1)) * net.no_click(o1, 2);
  const double p2 = net.no_click(o2, 1) * (1.0 - net.no_click(o2, 2));
  out.probability = 0.5 * (p1 + p2);
  return out;
}

double recovery_map(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::argument, "lambda must be positive");
  const double s = 1.0 + 2.0 * x;
  return (s * s - 2.0 * x * x - std::sqrt(4.0 * std::pow(x, 4) + s * s)) / (2.0 * s);
}

RecoveryRound recovery_round(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw Error(ErrorKind::argument, "lambda must lie in (0,1]");
  const double s = 1.0 + 2.0 * lambda;
  RecoveryRound r;
  r.t1r = 1.0 - (2.0 * lambda * lambda + std::sqrt(4.0 * std::pow(lambda, 4) + s * s)) / (s * s);
  const double k = (1.0 - r.t1r) * s * s;
  r.t2r = k / (1.0 + k);
  r.lambda_next = recovery_map(lambda);
  return r;
}

std::pair<cd, cd> simulate_recovery(double lambda, cd alpha1, cd alpha2, bool unknown_is_first) {
  const RecoveryRound r = recovery_round(lambda);
  // Modes: A, B, C, D of the identification setup and one vacuum E.
  LinearNetwork net(5);
  net.add_unitary(three_splitter_network(three_splitter(1.0, lambda, lambda, 0.5)).matrix(), {0, 1, 2, 3});
  const int keep = unknown_is_first ? 1 : 3;   // mode rich in the identified reference
  const int other = unknown_is_first ? 3 : 1;  // mode that needs the cancellation
  net.add_beamsplitter(keep, 4, r.t1r);
  net.add_beamsplitter(other, 4, r.t2r);
  CoherentRegister in = CoherentRegister::Zero(5);
  in(0) = unknown_is_first ? alpha1 : alpha2;
  in(1) = std::sqrt(lambda) * alpha1;
  in(2) = std::sqrt(lambda) * alpha2;
  const CoherentRegister o = net.propagate(in);
  return {o(1), o(3)};
}

std::vector<double> multi_round_success(int rounds, double delta2) {
  if (rounds < 1) throw Error(ErrorKind::argument, "need at least one round");
  std::vector<double> p;
  double lambda = 1.0;
  double prev = 1.0;
  for (int k = 0; k < rounds; ++k) {
    prev *= 1.0 - std::exp(-lambda / (1.0 + 2.0 * lambda) * delta2);
    p.push_back(prev);
    lambda = recovery_map(lambda);
  }
  return p;
}

std::vector<double> multi_round_success(int rounds, cd alpha1, cd alpha2) {
  return multi_round_success(rounds, std::norm(alpha1 - alpha2));
}

double splitting_strategy(int n, double delta2) {
  check_copies(n, "N");
  return std::pow(1.0 - std::exp(-delta2 / (n + 2.0)), n);
}

double gaussian_integral(int m, double a, double b, double sigma, cd x) {
  if (!(b > 0.0) || a < 0.0 || m < 0) throw Error(ErrorKind::argument, "need b > 0, a >= 0, m >= 0");
  const double den = b + 2.0 * m * a * sigma * sigma;
  return b / den * std::exp(-a * std::norm(x) / den);
}

ClickMatrix noisy_click_matrix(int na, int nb, int nc, double sigma, cd alpha1, cd alpha2) {
  check_copies(na, "n_A");
  check_copies(nb, "n_B");
  check_copies(nc, "n_C");
  if (sigma < 0.0) throw Error(ErrorKind::argument, "sigma must be non-negative");
  const double s = 1.0 + 2.0 * sigma * sigma;
  const double delta2 = std::norm(alpha1 - alpha2);
  const double xc = std::exp(-(na * static_cast<double>(nc) / (na + 2.0 * nc)) * delta2 / s);
  const double xb = std::exp(-(na * static_cast<double>(nb) / (na + 2.0 * nb)) * delta2 / s);
  ClickMatrix m;
  m.e1r1 = (s - xc) / (s * s);
  m.e1r2 = 2.0 * sigma * sigma / (s * s) * xb;
  m.e2r1 = 2.0 * sigma * sigma / (s * s) * xc;
  m.e2r2 = (s - xb) / (s * s);
  return m;
}

ClickMatrixMc noisy_click_monte_carlo(int na, int nb, int nc, double sigma, cd alpha1, cd alpha2, long samples,
                                      RandomStream& rng) {
  check_copies(na, "n_A");
  check_copies(nb, "n_B");
  check_copies(nc, "n_C");
  if (samples < 2) throw Error(ErrorKind::argument, "need at least two samples");
  Accumulator a11, a12, a21, a22;
  for (long i = 0; i < samples; ++i) {
    const auto c1 = click_pair(sample_noisy_modes(na, nb, nc, sigma, alpha1, alpha1, alpha2, rng));
    const auto c2 = click_pair(sample_noisy_modes(na, nb, nc, sigma, alpha2, alpha1, alpha2, rng));
    a11.add(c1.first);
    a21.add(c1.second);
    a12.add(c2.first);
    a22.add(c2.second);
  }
  return {a11.estimate(), a12.estimate(), a21.estimate(), a22.estimate()};
}

double reliability(int na, int nb, double sigma, double xi) {
  check_copies(na, "n_A");
  check_copies(nb, "n_B");
  if (!(xi > 0.0)) throw Error(ErrorKind::argument, "xi must be positive");
  const double theta = (na + 2.0 * nb) / (na * static_cast<double>(nb)) * std::pow(sigma / (2.0 * xi), 2);
  return (1.0 + theta) / (1.0 + 2.0 * theta);
}

McEstimate reliability_monte_carlo(int na, int nb, double sigma, double xi, long samples, RandomStream& rng) {
  if (!(xi > 0.0)) throw Error(ErrorKind::argument, "xi must be positive");
  if (samples < 2) throw Error(ErrorKind::argument, "need at least two samples");
  std::vector<double> a(static_cast<size_t>(samples)), b(static_cast<size_t>(samples));
  double sa = 0.0, sb = 0.0;
  for (long i = 0; i < samples; ++i) {
    const cd alpha1 = rng.complex_normal(xi * xi);
    const cd alpha2 = -alpha1;
    a[static_cast<size_t>(i)] = click_pair(sample_noisy_modes(na, nb, nb, sigma, alpha1, alpha1, alpha2, rng)).first;
    b[static_cast<size_t>(i)] = click_pair(sample_noisy_modes(na, nb, nb, sigma, alpha2, alpha1, alpha2, rng)).first;
    sa += a[static_cast<size_t>(i)];
    sb += b[static_cast<size_t>(i)];
  }
  const double ma = sa / samples, mb = sb / samples;
  const double r = ma / (ma + mb);
  // Delta method for the ratio of means.
  Accumulator lin;
  const double den = (ma + mb) * (ma + mb);
  for (long i = 0; i < samples; ++i) lin.add((mb * a[static_cast<size_t>(i)] - ma * b[static_cast<size_t>(i)]) / den);
  McEstimate e = lin.estimate();
  e.mean = r;
  return e;
}

NoisyAverages noisy_averages(int na, int nb, double sigma, double xi) {
  check_copies(na, "n_A");
  check_copies(nb, "n_B");
  if (sigma < 0.0 || xi < 0.0) throw Error(ErrorKind::argument, "sigma and xi must be non-negative");
  const double s = 1.0 + 2.0 * sigma * sigma;
  const double q = 1.0 / (s + 8.0 * na * nb / (na + 2.0 * nb) * xi * xi);
  NoisyAverages out;
  out.success = (1.0 - q) / s;
  out.error = 2.0 * sigma * sigma * q / s;
  out.failure = 2.0 * sigma * sigma / s + (1.0 - 2.0 * sigma * sigma) / s * q;
  return out;
}

NoisyAveragesMc noisy_averages_monte_carlo(int na, int nb, double sigma, double xi, long samples, RandomStream& rng) {
  if (samples < 2) throw Error(ErrorKind::argument, "need at least two samples");
  Accumulator succ, err;
  for (long i = 0; i < samples; ++i) {
    const cd alpha1 = rng.complex_normal(xi * xi);
    const cd alpha2 = -alpha1;
    const auto c1 = click_pair(sample_noisy_modes(na, nb, nb, sigma, alpha1, alpha1, alpha2, rng));
    const auto c2 = click_pair(sample_noisy_modes(na, nb, nb, sigma, alpha2, alpha1, alpha2, rng));
    succ.add(0.5 * (c1.first + c2.second));
    err.add(0.5 * (c1.second + c2.first));
  }
  return {succ.estimate(), err.estimate()};
}

std::pair<double, double> detector_curves(double t0, double gamma, cd alpha1, cd alpha2) {
  check_transmittivity(t0);
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error(ErrorKind::argument, "detector efficiency must lie in [0,1]");
  const double delta2 = std::norm(alpha1 - alpha2);
  return {1.0 - std::exp(-gamma * (1.0 - t0) / (2.0 - t0) * delta2), 1.0 - std::exp(-gamma * t0 / (1.0 + t0) * delta2)};
}

LinearOpticsOptimum linear_optics_optimum_check(double na, double nb, double delta) {
  if (!(na > 0.0 && nb > 0.0)) throw Error(ErrorKind::argument, "copy weights must be positive");
  if (!(delta > 0.0)) throw Error(ErrorKind::argument, "|alpha1 - alpha2| must be positive");
  const double d2 = delta * delta;
  const double xmax = na * nb / (na + nb);
  auto lambda2 = [&](double x) {
    return std::max(0.0, (na * nb - (na + nb) * x) / (na + nb - (2.0 + na / nb) * x));
  };
  auto objective = [&](double x) {
    return 0.5 * ((1.0 - std::exp(-x * d2)) + (1.0 - std::exp(-lambda2(x) * d2)));
  };
  const auto best = maximize_1d(objective, 0.0, xmax, 2000);
  LinearOpticsOptimum out;
  out.lambda1_sq = best.first;
  out.lambda2_sq = lambda2(best.first);
  out.probability = best.second;
  return out;
}

double p_swap_based_coherent(double delta2) { return 0.25 * (1.0 - std::exp(-delta2)); }
double p_optimal_universal_coherent(double delta2) { return (1.0 - std::exp(-delta2)) / 3.0; }
double p_beamsplitter_coherent(double delta2) { return 1.0 - std::exp(-delta2 / 3.0); }
double p_known_coherent(double delta2) { return 1.0 - std::exp(-delta2 / 2.0); }

}  // namespace uqm
