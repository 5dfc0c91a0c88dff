// SPDX-License-Identifier: Apache-2.0
#include "qdc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qdc/errors.hpp"
#include "qdc/rng.hpp"

namespace qdc {

namespace {

void check_probability(double p, const std::string& field) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(field + ": probability " + std::to_string(p) + " outside [0, 1]");
  }
}

const QubitNoise& noise_for(const NoiseModel& noise, int qubit) {
  const auto it = noise.per_qubit.find(qubit);
  if (it == noise.per_qubit.end()) {
    throw DomainError("noise model has no entry for qubit " + std::to_string(qubit));
  }
  return it->second;
}

double cnot_error_for(const NoiseModel& noise, int control, int target) {
  const auto it = noise.cnot_error.find({control, target});
  if (it == noise.cnot_error.end()) {
    throw DomainError("noise model has no cnot_error entry for (" + std::to_string(control) +
                      ", " + std::to_string(target) + ")");
  }
  return it->second;
}

}  // namespace

NoiseModel NoiseModel::zero(int n_qubits) {
  NoiseModel model;
  for (int q = 0; q < n_qubits; ++q) model.per_qubit[q] = QubitNoise{};
  for (int c = 0; c < n_qubits; ++c) {
    for (int t = 0; t < n_qubits; ++t) {
      if (c != t) model.cnot_error[{c, t}] = 0.0;
    }
  }
  return model;
}

bool NoiseModel::is_zero() const {
  for (const auto& [q, n] : per_qubit) {
    if (n.gate_error != 0.0 || n.readout_error != 0.0) return false;
  }
  for (const auto& [pair, p] : cnot_error) {
    if (p != 0.0) return false;
  }
  return true;
}

void NoiseModel::validate() const {
  for (const auto& [q, n] : per_qubit) {
    check_probability(n.gate_error, "gate_error[q" + std::to_string(q) + "]");
    check_probability(n.readout_error, "readout_error[q" + std::to_string(q) + "]");
  }
  for (const auto& [pair, p] : cnot_error) {
    check_probability(p, "cnot_error[(" + std::to_string(pair.first) + ", " +
                             std::to_string(pair.second) + ")]");
  }
}

const char* mode_name(Mode mode) { return mode == Mode::Exact ? "exact" : "sampled"; }

std::optional<Mode> mode_from_name(const std::string& name) {
  if (name == "exact") return Mode::Exact;
  if (name == "sampled") return Mode::Sampled;
  return std::nullopt;
}

void SweepConfig::validate() const {
  if (alpha_values.empty()) throw DomainError("alpha_values: must be non-empty");
  if (phi_values.empty()) throw DomainError("phi_values: must be non-empty");
  for (double a : alpha_values) {
    if (!std::isfinite(a)) throw DomainError("alpha_values: non-finite value");
  }
  for (double p : phi_values) {
    if (!std::isfinite(p)) throw DomainError("phi_values: non-finite value");
  }
  if (mode == Mode::Sampled && shots < 1) {
    throw DomainError("shots: must be >= 1 in sampled mode");
  }
  if (repetitions < 1) throw DomainError("repetitions: must be >= 1");
  if (noise) noise->validate();
}

std::vector<long long> sample_shots(std::span<const double> dist, long long shots,
                                    std::uint64_t seed) {
  if (shots < 1) throw DomainError("shots: must be >= 1");
  double total = 0.0;
  for (double p : dist) {
    if (!(p >= 0.0)) throw DomainError("distribution: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw DomainError("distribution: sums to " + std::to_string(total) + ", not 1");
  }

  std::vector<double> cdf(dist.size());
  std::partial_sum(dist.begin(), dist.end(), cdf.begin());
  cdf.back() = 1.0;

  auto eng = make_engine(seed);
  std::vector<long long> counts(dist.size(), 0);
  for (long long s = 0; s < shots; ++s) {
    const double u = uniform01(eng);
    std::size_t k = 0;
    while (k + 1 < cdf.size() && u >= cdf[k]) ++k;
    ++counts[k];
  }
  return counts;
}

DensityMatrix apply_noise(const Circuit& circuit, const NoiseModel& noise) {
  noise.validate();
  DensityMatrix rho = DensityMatrix::ground(circuit.num_qubits());
  for (const Gate& gate : circuit.ops()) {
    rho = apply_gate(rho, gate);
    if (gate.has_control()) {
      const double p = cnot_error_for(noise, gate.control, gate.target);
      const int qubits[2] = {gate.control, gate.target};
      rho = depolarize(rho, qubits, p);
    } else {
      const double p = noise_for(noise, gate.target).gate_error;
      const int qubits[1] = {gate.target};
      rho = depolarize(rho, qubits, p);
    }
  }
  return rho;
}

std::vector<double> apply_readout_error(std::span<const double> probabilities,
                                        const NoiseModel& noise, int n_qubits) {
  if (probabilities.size() != (std::size_t{1} << n_qubits)) {
    throw DomainError("readout: distribution size does not match qubit count");
  }
  std::vector<double> probs(probabilities.begin(), probabilities.end());
  for (int q = 0; q < n_qubits; ++q) {
    const double r = noise_for(noise, q).readout_error;
    if (r == 0.0) continue;
    const std::size_t stride = qubit_stride(n_qubits, q);
    std::vector<double> next(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
      next[i] = (1.0 - r) * probs[i] + r * probs[i ^ stride];
    }
    probs = std::move(next);
  }
  return probs;
}

namespace {

// Outcome distribution for one sweep point, noise and readout included.
std::vector<double> point_distribution(const Circuit& circuit,
                                       const std::optional<NoiseModel>& noise) {
  if (noise) {
    const DensityMatrix rho = apply_noise(circuit, *noise);
    return apply_readout_error(rho.diagonal_probabilities(), *noise, circuit.num_qubits());
  }
  return measure_probabilities(simulate(circuit));
}

double marginal_p0(std::span<const double> dist, int n_qubits, int qubit) {
  double p = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (qubit_bit(i, n_qubits, qubit) == 0) p += dist[i];
  }
  // Probability sums can overshoot 1 by an ulp.
  return std::clamp(p, 0.0, 1.0);
}

double sampled_stderr(double estimate, long long total_shots) {
  return std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(total_shots));
}

// Pool counts across repetitions, each repetition with its own derived
// stream so results do not depend on evaluation order.
std::vector<long long> pooled_counts(std::span<const double> dist, const SweepConfig& config,
                                     std::size_t point_index) {
  std::vector<long long> counts(dist.size(), 0);
  for (long long rep = 0; rep < config.repetitions; ++rep) {
    const auto rep_counts = sample_shots(
        dist, config.shots,
        derive_seed(config.seed, point_index, static_cast<std::uint64_t>(rep)));
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += rep_counts[i];
  }
  return counts;
}

void append_qdce_records(const SweepConfig& config, double alpha, double phi,
                         std::size_t point_index, std::vector<IntensityRecord>& out) {
  const Circuit circuit = build_qdce(phi, alpha);
  const auto dist = point_distribution(circuit, config.noise);

  IntensityRecord rec;
  rec.scheme = Scheme::Qdce;
  rec.alpha = alpha;
  rec.phi = phi;
  rec.mode = config.mode;
  if (config.mode == Mode::Exact) {
    rec.e0 = marginal_p0(dist, 2, 0);
    rec.e1 = 1.0 - rec.e0;
  } else {
    const auto counts = pooled_counts(dist, config, point_index);
    const long long total = config.shots * config.repetitions;
    long long zeros = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (qubit_bit(i, 2, 0) == 0) zeros += counts[i];
    }
    rec.e0 = static_cast<double>(zeros) / static_cast<double>(total);
    rec.e1 = 1.0 - rec.e0;
    rec.shots_used = total;
    rec.stderr0 = sampled_stderr(rec.e0, total);
    rec.stderr1 = sampled_stderr(rec.e1, total);
  }
  out.push_back(rec);
}

void append_ea_records(const SweepConfig& config, double alpha, double phi,
                       std::size_t point_index, std::vector<IntensityRecord>& out) {
  const Circuit circuit = build_ea_qdce(phi, alpha);
  const auto dist = point_distribution(circuit, config.noise);

  // Both branch records of a point come from the same distribution (exact)
  // or the same pooled counts (sampled): one run serves both post-selections.
  std::vector<long long> counts;
  long long total = 0;
  if (config.mode == Mode::Sampled) {
    counts = pooled_counts(dist, config, point_index);
    total = config.shots * config.repetitions;
  }

  for (int branch = 0; branch <= 1; ++branch) {
    IntensityRecord rec;
    rec.scheme = Scheme::EaQdce;
    rec.alpha = alpha;
    rec.phi = phi;
    rec.branch = branch;
    rec.mode = config.mode;
    if (config.mode == Mode::Exact) {
      double joint0 = 0.0;
      double branch_p = 0.0;
      for (std::size_t i = 0; i < dist.size(); ++i) {
        if (qubit_bit(i, 3, 2) != branch) continue;
        branch_p += dist[i];
        if (qubit_bit(i, 3, 0) == 0) joint0 += dist[i];
      }
      if (branch_p < kBranchFloor) {
        throw ImpossibleBranchError("sweep point has empty post-selection branch " +
                                    std::to_string(branch));
      }
      rec.e0 = std::clamp(joint0 / branch_p, 0.0, 1.0);
      rec.e1 = 1.0 - rec.e0;
      rec.joint_e0 = joint0;
      rec.branch_prob = branch_p;
    } else {
      long long branch_count = 0;
      long long joint0 = 0;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (qubit_bit(i, 3, 2) != branch) continue;
        branch_count += counts[i];
        if (qubit_bit(i, 3, 0) == 0) joint0 += counts[i];
      }
      if (branch_count == 0) {
        throw ImpossibleBranchError("no sampled shots landed in post-selection branch " +
                                    std::to_string(branch));
      }
      rec.e0 = static_cast<double>(joint0) / static_cast<double>(branch_count);
      rec.e1 = 1.0 - rec.e0;
      rec.joint_e0 = static_cast<double>(joint0) / static_cast<double>(total);
      rec.branch_prob = static_cast<double>(branch_count) / static_cast<double>(total);
      rec.shots_used = total;
      rec.stderr0 = sampled_stderr(rec.e0, total);
      rec.stderr1 = sampled_stderr(rec.e1, total);
    }
    out.push_back(rec);
  }
}

}  // namespace

std::vector<IntensityRecord> run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<IntensityRecord> records;
  const std::size_t n_phi = config.phi_values.size();
  records.reserve(config.alpha_values.size() * n_phi * (config.scheme == Scheme::EaQdce ? 2 : 1));
  for (std::size_t ai = 0; ai < config.alpha_values.size(); ++ai) {
    for (std::size_t pi = 0; pi < n_phi; ++pi) {
      const std::size_t point_index = ai * n_phi + pi;
      if (config.scheme == Scheme::Qdce) {
        append_qdce_records(config, config.alpha_values[ai], config.phi_values[pi],
                            point_index, records);
      } else {
        append_ea_records(config, config.alpha_values[ai], config.phi_values[pi],
                          point_index, records);
      }
    }
  }
  return records;
}

QmHvComparison compare_qm_hv(std::span<const double> alpha_values,
                             std::span<const double> phi_values) {
  if (alpha_values.empty()) throw DomainError("alpha_values: must be non-empty");
  if (phi_values.empty()) throw DomainError("phi_values: must be non-empty");

  QmHvComparison cmp;
  cmp.phi_values.assign(phi_values.begin(), phi_values.end());
  cmp.hv.reserve(phi_values.size());
  for (double phi : phi_values) cmp.hv.push_back(hv_intensity(phi));

  for (double alpha : alpha_values) {
    QmHvComparison::AlphaRow row;
    row.alpha = alpha;
    row.max_abs_diff = 0.0;
    row.qm_conditional_e0.reserve(phi_values.size());
    for (std::size_t i = 0; i < phi_values.size(); ++i) {
      const double qm = qm_entangled_simulated(alpha, phi_values[i], 0).conditional.e0;
      row.qm_conditional_e0.push_back(qm);
      row.max_abs_diff = std::max(row.max_abs_diff, std::abs(qm - cmp.hv[i]));
    }
    cmp.rows.push_back(std::move(row));
  }
  return cmp;
}

}  // namespace qdc
