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

#ifndef UQM_COHERENT_HPP
#define UQM_COHERENT_HPP

#include <utility>
#include <vector>

#include "uqm/operator_core.hpp"

namespace uqm {

// Mode amplitudes of a product of coherent states.
using CoherentRegister = Vec;

struct Detector {
  int mode = 0;
  int id = 0;
};

// Passive linear optics acting on coherent amplitudes, out = G in.
class LinearNetwork {
 public:
  explicit LinearNetwork(int modes = 0);

  int modes() const { return static_cast<int>(g_.rows()); }
  const Mat& matrix() const { return g_; }
  double efficiency() const { return gamma_; }
  const std::vector<Detector>& detectors() const { return detectors_; }

  // Appends a beamsplitter acting on modes (a, b) after the current network.
  void add_beamsplitter(int a, int b, double t);
  // Appends an arbitrary unitary on the listed modes.
  void add_unitary(const Mat& u, const std::vector<int>& modes);
  void bind_detector(int mode, int id);
  void set_efficiency(double gamma);

  CoherentRegister propagate(const CoherentRegister& in) const;
  double unitarity_error() const;
  // Probability that detector `id` stays dark, exp(-gamma |beta|^2).
  double no_click(const CoherentRegister& out, int id) const;

 private:
  Mat g_;
  double gamma_ = 1.0;
  std::vector<Detector> detectors_;
};

std::pair<cd, cd> beamsplitter(double t, cd a, cd b);
Mat beamsplitter_matrix(double t);

// Cascade with T_j = j / (j + 1) that collects k equal amplitudes into mode 0.
LinearNetwork concentrator(int k);
CoherentRegister concentrate(int k, cd alpha);

double vacuum_overlap(cd beta);  // |<0|beta>|^2

struct CoherentComparison {
  LinearNetwork network;
  CoherentRegister output;
  double probability = 0.0;  // from the simulated detector
  double closed_form = 0.0;
};
CoherentComparison compare_coherent(int k, int l, cd alpha1, cd alpha2);
double compare_coherent_closed(int k, int l, double delta2);

// Transmittivities of the three-beamsplitter identification setup.
struct ThreeSplitter {
  double t1 = 0.5;
  double t2 = 0.0;
  double t3 = 0.0;
};
ThreeSplitter three_splitter(double na, double nb, double nc, double t1);
// Four concentrated modes (A, B, C, D) through the three beamsplitters.
LinearNetwork three_splitter_network(const ThreeSplitter& s);

struct TwoRefUi {
  LinearNetwork network;  // raw copies, detector 1 on C, detector 2 on A
  ThreeSplitter splitters;
  int mode_a = 0, mode_b = 0, mode_c = 0, mode_d = 0;
  CoherentRegister output;  // for the supplied unknown amplitude
  double no_click_d1 = 0.0;
  double no_click_d2 = 0.0;
  double p1 = 0.0;  // P(D1 only | unknown = alpha1), simulated
  double p2 = 0.0;  // P(D2 only | unknown = alpha2), simulated
  double probability = 0.0;
  double p1_closed = 0.0;
  double p2_closed = 0.0;
  double closed_form = 0.0;
};
TwoRefUi ui_two_refs(int na, int nb, int nc, double t1, cd unknown, cd alpha1, cd alpha2, double eta1 = 0.5,
                     double gamma = 1.0);
double ui_two_refs_closed(double na, double nb, double nc, double t1, double delta2, double eta1 = 0.5,
                          double gamma = 1.0);
// n_A n_B / (n_A + 2 n_B) exponent form for n_B = n_C and T1 = 1/2.
double ui_equal_refs(double na, double nb, double delta2);

struct T1Search {
  double t1 = 0.5;
  double probability = 0.0;
  bool state_dependent = false;  // n_B != n_C
};
T1Search optimal_t1(int na, int nb, int nc, double delta2, double eta1 = 0.5);

struct MultiRefUi {
  LinearNetwork network;
  double t = 0.0;
  double probability = 0.0;  // simulated
  double closed_form = 0.0;
};
MultiRefUi ui_m_refs(int m, int na, int nb, cd unknown, const std::vector<cd>& refs);
double ui_m_refs_closed(int m, int na, int nb, const std::vector<cd>& refs);

int resource_tradeoff(int n);
double known_states_limit(int na, cd alpha1, cd alpha2);

struct WeakUi {
  double per_round = 0.0;
  double overall = 0.0;
};
WeakUi weak_ui(int n, cd alpha1, cd alpha2);

struct RepeatUi {
  double probability = 0.0;
  cd measured_a = 0.0;  // (unknown - alpha1) / sqrt(6) in the closed form
  cd measured_c = 0.0;  // (alpha2 - unknown) / sqrt(6)
  cd closed_a = 0.0;
  cd closed_c = 0.0;
};
RepeatUi repeat_same_unknown(cd unknown, cd alpha1, cd alpha2);

struct RecoveryRound {
  double t1r = 0.0;
  double t2r = 0.0;
  double lambda_next = 0.0;
};
RecoveryRound recovery_round(double lambda);
double recovery_map(double lambda);

// Recovered reference amplitudes after a conclusive round with suppression
// lambda, obtained by amplitude propagation. Both equal sqrt(lambda_next)
// times the corresponding reference when the cancellation works.
std::pair<cd, cd> simulate_recovery(double lambda, cd alpha1, cd alpha2, bool unknown_is_first);

std::vector<double> multi_round_success(int rounds, cd alpha1, cd alpha2);
std::vector<double> multi_round_success(int rounds, double delta2);
double splitting_strategy(int n, double delta2);

double gaussian_integral(int m, double a, double b, double sigma, cd x);

struct ClickMatrix {
  double e1r1 = 0.0;
  double e1r2 = 0.0;
  double e2r1 = 0.0;
  double e2r2 = 0.0;
};
ClickMatrix noisy_click_matrix(int na, int nb, int nc, double sigma, cd alpha1, cd alpha2);

struct McEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  long samples = 0;
};
struct ClickMatrixMc {
  McEstimate e1r1, e1r2, e2r1, e2r2;
};
// Samples the technical noise on every copy, propagates the amplitudes of
// the two measured modes and averages the vacuum overlaps.
ClickMatrixMc noisy_click_monte_carlo(int na, int nb, int nc, double sigma, cd alpha1, cd alpha2, long samples,
                                      RandomStream& rng);

double reliability(int na, int nb, double sigma, double xi);
McEstimate reliability_monte_carlo(int na, int nb, double sigma, double xi, long samples, RandomStream& rng);

struct NoisyAverages {
  double success = 0.0;
  double error = 0.0;
  double failure = 0.0;
};
NoisyAverages noisy_averages(int na, int nb, double sigma, double xi);
struct NoisyAveragesMc {
  McEstimate success, error;
};
NoisyAveragesMc noisy_averages_monte_carlo(int na, int nb, double sigma, double xi, long samples,
                                           RandomStream& rng);

std::pair<double, double> detector_curves(double t0, double gamma, cd alpha1, cd alpha2);

struct LinearOpticsOptimum {
  double lambda1_sq = 0.0;
  double lambda2_sq = 0.0;
  double probability = 0.0;
};
LinearOpticsOptimum linear_optics_optimum_check(double na, double nb, double delta);

// Identification curves against |alpha1 - alpha2|^2.
double p_swap_based_coherent(double delta2);
double p_optimal_universal_coherent(double delta2);
double p_beamsplitter_coherent(double delta2);
double p_known_coherent(double delta2);

}  // namespace uqm

#endif  // UQM_COHERENT_HPP
