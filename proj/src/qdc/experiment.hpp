// SPDX-License-Identifier: Apache-2.0
//
// Sweep driver, shot sampling, noise injection, and the QM-vs-HV comparison
// table. One IntensityRecord per sweep point; every sampled quantity is
// deterministic given the config seed.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qdc/analytic.hpp"
#include "qdc/circuits.hpp"
#include "qdc/quantum.hpp"

namespace qdc {

/// Static per-device error rates. t1/t2 are carried as metadata only; the
/// simulated channels are the per-gate depolarizing noise and the classical
/// readout flip.
struct QubitNoise {
  double gate_error = 0.0;
  double readout_error = 0.0;
  double t1_us = 0.0;
  double t2_us = 0.0;

  bool operator==(const QubitNoise&) const = default;
};

struct NoiseModel {
  std::map<int, QubitNoise> per_qubit;
  std::map<std::pair<int, int>, double> cnot_error;  // keyed (control, target)

  /// All-zero rates for an n-qubit register.
  static NoiseModel zero(int n_qubits);

  bool is_zero() const;
  /// Probabilities in [0, 1]; throws DomainError naming the bad field.
  void validate() const;

  bool operator==(const NoiseModel&) const = default;
};

enum class Mode { Exact, Sampled };

const char* mode_name(Mode mode);
std::optional<Mode> mode_from_name(const std::string& name);

struct SweepConfig {
  Scheme scheme = Scheme::Qdce;
  std::vector<double> alpha_values;
  std::vector<double> phi_values;
  Mode mode = Mode::Exact;
  long long shots = 8192;
  long long repetitions = 3;
  std::uint64_t seed = 1;
  std::optional<NoiseModel> noise;

  void validate() const;

  bool operator==(const SweepConfig&) const = default;
};

/// One sweep point. EA-QDCE points carry the post-selection branch, its
/// probability and the joint intensity; sampled points carry shot counts and
/// standard errors sqrt(e(1-e) / (shots * repetitions)).
struct IntensityRecord {
  Scheme scheme = Scheme::Qdce;
  double alpha = 0.0;
  double phi = 0.0;
  std::optional<int> branch;
  Mode mode = Mode::Exact;
  double e0 = 0.0;
  double e1 = 0.0;
  std::optional<double> joint_e0;
  std::optional<double> branch_prob;
  std::optional<long long> shots_used;
  std::optional<double> stderr0;
  std::optional<double> stderr1;

  bool operator==(const IntensityRecord&) const = default;
};

/// One record per (alpha, phi) point for QDCE, one per (alpha, phi, branch)
/// for EA-QDCE. Exact mode evaluates the outcome distribution directly;
/// sampled mode draws shots * repetitions counts from it. Identical configs
/// (including seed) produce identical record lists.
std::vector<IntensityRecord> run_sweep(const SweepConfig& config);

/// Multinomial draw of `shots` outcomes from a distribution over bitstrings.
/// The distribution must sum to 1 within 1e-9. Reproducible per seed.
std::vector<long long> sample_shots(std::span<const double> dist, long long shots,
                                    std::uint64_t seed);

/// Evolve |0...0><0...0| through the circuit, following every gate with a
/// depolarizing channel on its qubits: strength gate_error for single-qubit
/// gates, cnot_error[(control,target)] for CNOT / controlled-H. Throws when
/// a used qubit or gate pair has no noise entry.
DensityMatrix apply_noise(const Circuit& circuit, const NoiseModel& noise);

/// Independent symmetric bit flip of each qubit's readout with its
/// readout_error probability, applied to a joint outcome distribution.
std::vector<double> apply_readout_error(std::span<const double> probabilities,
                                        const NoiseModel& noise, int n_qubits);

/// QM (branch-0 conditional, simulated) versus hidden-variable intensities
/// over a phase grid, per alpha. The HV column does not depend on alpha.
struct QmHvComparison {
  std::vector<double> phi_values;
  std::vector<double> hv;  // hv_intensity over phi_values

  struct AlphaRow {
    double alpha;
    std::vector<double> qm_conditional_e0;  // branch 0, one per phi
    double max_abs_diff;                    // max over phi of |QM - HV|
  };
  std::vector<AlphaRow> rows;
};

QmHvComparison compare_qm_hv(std::span<const double> alpha_values,
                             std::span<const double> phi_values);

}  // namespace qdc
