// SPDX-License-Identifier: Apache-2.0
#include "qdc/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qdc/circuits.hpp"
#include "qdc/errors.hpp"
#include "qdc/rng.hpp"

namespace qdc {

namespace {

double sq(double x) { return x * x; }

void check_branch(int branch) {
  if (branch != 0 && branch != 1) throw DomainError("branch must be 0 or 1");
}

void check_angles(double alpha, double phi) {
  if (!std::isfinite(alpha) || !std::isfinite(phi)) {
    throw DomainError("alpha and phi must be finite");
  }
}

}  // namespace

IntensityPair qm_single(double alpha, double phi) {
  check_angles(alpha, phi);
  const double particle = sq(std::cos(alpha)) / 2.0;
  const double wave_weight = sq(std::sin(alpha));
  const double e0 = particle + wave_weight * sq(std::cos(phi / 2.0));
  // Algebraically e1 = cos^2(a)/2 + sin^2(a) sin^2(phi/2); computing it as
  // the complement keeps e0 + e1 = 1 exact.
  return IntensityPair{e0, 1.0 - e0};
}

double qm_entangled_closed_form(double alpha, double phi, int branch) {
  check_angles(alpha, phi);
  check_branch(branch);
  const double fringe = sq(std::cos(phi / 2.0)) / 2.0;
  if (branch == 0) return sq(std::cos(alpha / 4.0)) + sq(std::sin(alpha)) * fringe;
  return sq(std::sin(alpha / 4.0)) + sq(std::cos(alpha)) * fringe;
}

BranchIntensities qm_entangled_simulated(double alpha, double phi, int branch) {
  check_branch(branch);
  const Circuit circuit = build_ea_qdce(phi, alpha);
  const StateVector output = simulate(circuit);
  const PostSelection selected = post_select(output, 2, branch);

  // Remaining register is (q0, q1); D0 projects the path qubit q0.
  const auto probs = measure_probabilities(selected.state);
  double e0 = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (qubit_bit(i, selected.state.num_qubits(), 0) == 0) e0 += probs[i];
  }
  e0 = std::clamp(e0, 0.0, 1.0);
  const double e1 = 1.0 - e0;
  const double p = selected.probability;
  return BranchIntensities{IntensityPair{e0, e1}, IntensityPair{e0 * p, e1 * p}, p};
}

double hv_intensity(double phi) {
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  return 0.25 + sq(std::cos(phi / 2.0)) / 2.0;
}

HvSample classify_hidden_variable(int lambda1) {
  if (lambda1 != 0 && lambda1 != 1) throw DomainError("lambda1 must be 0 or 1");
  return HvSample{lambda1, lambda1 == 0 ? HvBehavior::Particle : HvBehavior::Wave};
}

double hv_monte_carlo(double phi, std::uint64_t n_samples, std::uint64_t seed) {
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  if (n_samples < 1) throw DomainError("n_samples must be >= 1");

  const double wave_p0 = sq(std::cos(phi / 2.0));
  auto eng = make_engine(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    const HvSample sample = classify_hidden_variable(uniform01(eng) < 0.5 ? 0 : 1);
    const double p0 = sample.behavior == HvBehavior::Particle ? 0.5 : wave_p0;
    if (uniform01(eng) < p0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(n_samples);
}

double fringe_visibility(std::span<const std::pair<double, double>> curve) {
  if (curve.empty()) throw DomainError("visibility: curve must be non-empty");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& [phi, intensity] : curve) {
    if (!std::isfinite(intensity)) throw DomainError("visibility: non-finite intensity");
    lo = std::min(lo, intensity);
    hi = std::max(hi, intensity);
  }
  const double denom = hi + lo;
  if (denom == 0.0) return 0.0;
  return (hi - lo) / denom;
}

}  // namespace qdc
