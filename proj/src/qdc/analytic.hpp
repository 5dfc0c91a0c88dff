// SPDX-License-Identifier: Apache-2.0
//
// Closed-form detector intensities, the local hidden-variable model, and
// fringe visibility. These serve as oracles for the circuit simulation and
// as the comparison baseline the experiment module reports against.
#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "qdc/quantum.hpp"

namespace qdc {

/// Detector intensities (D0, D1). Conditional pairs sum to 1.
struct IntensityPair {
  double e0;
  double e1;
};

/// Single-ancilla scheme, closed form:
///   e0 = cos^2(alpha)/2 + sin^2(alpha) cos^2(phi/2)
///   e1 = cos^2(alpha)/2 + sin^2(alpha) sin^2(phi/2)
/// alpha = 0 is the open (particle) interferometer, alpha = pi/2 the closed
/// (wave) one.
IntensityPair qm_single(double alpha, double phi);

/// Closed-form candidate for the post-selected D0 intensity of the
/// entangled-ancilla scheme:
///   branch 0: cos^2(alpha/4) + sin^2(alpha) cos^2(phi/2) / 2
///   branch 1: sin^2(alpha/4) + cos^2(alpha) cos^2(phi/2) / 2
/// Kept verbatim for comparison reports only: it disagrees with the circuit
/// (at alpha=0, branch 0 it gives 1.0 where the simulation gives 0.5
/// conditional / 0.25 joint), under either normalization. The simulation
/// path below is the ground truth.
double qm_entangled_closed_form(double alpha, double phi, int branch);

/// Post-selected intensities of the entangled-ancilla circuit, from the
/// statevector simulation. `conditional` is normalized within the branch,
/// `joint` = conditional * branch_prob.
struct BranchIntensities {
  IntensityPair conditional;
  IntensityPair joint;
  double branch_prob;
};

/// Build the 3-qubit circuit, post-select the rotated ancilla on `branch`,
/// and read out both detector intensities of the path qubit.
BranchIntensities qm_entangled_simulated(double alpha, double phi, int branch);

/// Hidden-variable prediction for either post-selected detector intensity:
/// 1/4 + cos^2(phi/2)/2. Independent of alpha by construction.
double hv_intensity(double phi);

/// Hidden-variable behavior classes. Membership is a deterministic function
/// of lambda1 (wave-particle objectivity: the classes do not overlap).
enum class HvBehavior { Particle, Wave };

struct HvSample {
  int lambda1;          // hidden value standing in for the control outcome
  HvBehavior behavior;  // determined by lambda1
};

/// The deterministic lambda1 -> behavior assignment of the model.
HvSample classify_hidden_variable(int lambda1);

/// Monte-Carlo estimate of the D0 intensity under the hidden-variable model:
/// lambda1 is uniform over {0,1}; particle samples detect D0 with
/// probability 1/2, wave samples with probability cos^2(phi/2). Converges to
/// hv_intensity(phi). Deterministic per seed.
double hv_monte_carlo(double phi, std::uint64_t n_samples, std::uint64_t seed);

/// Fringe visibility (max - min) / (max + min) of an intensity-vs-phase
/// curve. Returns 0 for an all-zero curve; throws on an empty one.
double fringe_visibility(std::span<const std::pair<double, double>> curve);

}  // namespace qdc
