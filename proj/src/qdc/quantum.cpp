// SPDX-License-Identifier: Apache-2.0
#include "qdc/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DomainError("n_qubits must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                      std::to_string(n_qubits));
  }
}

void check_qubit_index(int qubit, int n_qubits, const char* what) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw DomainError(std::string(what) + " index " + std::to_string(qubit) +
                      " out of range for " + std::to_string(n_qubits) + " qubits");
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// In-place 2x2 block update on `target`, restricted to indices where the
// control bit (if any) is set. Visits each amplitude pair exactly once.
void apply_block(std::vector<Complex>& amps, int n_qubits, int target, int control,
                 const std::array<Complex, 4>& u) {
  const std::size_t dim = amps.size();
  const std::size_t ts = qubit_stride(n_qubits, target);
  const std::size_t cs = control >= 0 ? qubit_stride(n_qubits, control) : 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & ts) continue;
    if (cs != 0 && (i & cs) == 0) continue;
    const std::size_t j = i | ts;
    const Complex a0 = amps[i];
    const Complex a1 = amps[j];
    amps[i] = u[0] * a0 + u[1] * a1;
    amps[j] = u[2] * a0 + u[3] * a1;
  }
}

// Map each assignment of bits over `qubits` (first listed = most significant)
// to its contribution to a full basis index.
std::vector<std::size_t> scatter_table(int n_qubits, const std::vector<int>& qubits) {
  const std::size_t count = std::size_t{1} << qubits.size();
  std::vector<std::size_t> table(count, 0);
  for (std::size_t bits = 0; bits < count; ++bits) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      if ((bits >> (qubits.size() - 1 - k)) & 1u) {
        index |= qubit_stride(n_qubits, qubits[k]);
      }
    }
    table[bits] = index;
  }
  return table;
}

// Sorted, validated, deduplicated qubit list.
std::vector<int> canonical_qubits(std::span<const int> qubits, int n_qubits, const char* what) {
  std::vector<int> sorted(qubits.begin(), qubits.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != qubits.size()) {
    throw DomainError(std::string(what) + ": duplicate qubit index");
  }
  for (int q : sorted) check_qubit_index(q, n_qubits, what);
  return sorted;
}

std::vector<int> complement_qubits(const std::vector<int>& sorted, int n_qubits) {
  std::vector<int> rest;
  for (int q = 0; q < n_qubits; ++q) {
    if (!std::binary_search(sorted.begin(), sorted.end(), q)) rest.push_back(q);
  }
  return rest;
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = Complex{1.0, 0.0};
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes, Unchecked)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Complex> amplitudes) {
  check_qubit_count(n_qubits);
  if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
    throw DomainError("amplitudes: expected " + std::to_string(std::size_t{1} << n_qubits) +
                      " entries, got " + std::to_string(amplitudes.size()));
  }
  double norm_sq = 0.0;
  for (Complex a : amplitudes) {
    if (!finite(a)) throw DomainError("amplitudes: non-finite entry");
    norm_sq += std::norm(a);
  }
  if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-9) {
    throw DomainError("amplitudes: L2 norm " + std::to_string(std::sqrt(norm_sq)) +
                      " is not 1");
  }
  return StateVector(n_qubits, std::move(amplitudes), Unchecked{});
}

double StateVector::norm() const {
  double norm_sq = 0.0;
  for (Complex a : amplitudes_) norm_sq += std::norm(a);
  return std::sqrt(norm_sq);
}

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Hadamard: return "h";
    case GateKind::Phase: return "phase";
    case GateKind::RotY: return "ry";
    case GateKind::Cnot: return "cnot";
    case GateKind::ControlledHadamard: return "ch";
  }
  return "?";
}

namespace {

Gate make_gate(GateKind kind, int target, int control, double param) {
  if (target < 0) throw DomainError("gate target index must be non-negative");
  if (control >= 0 && control == target) {
    throw DomainError("gate control and target must differ");
  }
  if (!std::isfinite(param)) throw DomainError("gate angle must be finite");
  return Gate{kind, target, control, param};
}

}  // namespace

Gate Gate::hadamard(int target) { return make_gate(GateKind::Hadamard, target, -1, 0.0); }

Gate Gate::phase(int target, double phi) { return make_gate(GateKind::Phase, target, -1, phi); }

Gate Gate::rot_y(int target, double alpha) { return make_gate(GateKind::RotY, target, -1, alpha); }

Gate Gate::cnot(int control, int target) {
  if (control < 0) throw DomainError("gate control index must be non-negative");
  return make_gate(GateKind::Cnot, target, control, 0.0);
}

Gate Gate::controlled_hadamard(int control, int target) {
  if (control < 0) throw DomainError("gate control index must be non-negative");
  return make_gate(GateKind::ControlledHadamard, target, control, 0.0);
}

std::array<Complex, 4> Gate::target_block() const {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  switch (kind) {
    case GateKind::Hadamard:
    case GateKind::ControlledHadamard:
      return {Complex{inv_sqrt2, 0}, Complex{inv_sqrt2, 0},
              Complex{inv_sqrt2, 0}, Complex{-inv_sqrt2, 0}};
    case GateKind::Phase:
      return {Complex{1, 0}, Complex{0, 0},
              Complex{0, 0}, std::polar(1.0, param)};
    case GateKind::RotY: {
      const double c = std::cos(param);
      const double s = std::sin(param);
      return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
    }
    case GateKind::Cnot:
      return {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
  }
  throw DomainError("unknown gate kind");
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
  const int n = state.num_qubits();
  check_qubit_index(gate.target, n, "gate target");
  if (gate.has_control()) check_qubit_index(gate.control, n, "gate control");
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  apply_block(amps, n, gate.target, gate.control, gate.target_block());
  return StateVector(n, std::move(amps), StateVector::Unchecked{});
}

DensityMatrix::DensityMatrix(int n_qubits)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits) {
  check_qubit_count(n_qubits);
  entries_.assign(dim_ * dim_, Complex{0.0, 0.0});
}

DensityMatrix DensityMatrix::ground(int n_qubits) {
  DensityMatrix rho(n_qubits);
  rho.at(0, 0) = Complex{1.0, 0.0};
  return rho;
}

DensityMatrix DensityMatrix::from_state(const StateVector& state) {
  DensityMatrix rho(state.num_qubits());
  const auto amps = state.amplitudes();
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      rho.at(r, c) = amps[r] * std::conj(amps[c]);
    }
  }
  return rho;
}

Complex DensityMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double DensityMatrix::purity() const {
  // Tr[rho^2] = sum_ij rho_ij rho_ji; real for Hermitian rho.
  Complex t{0.0, 0.0};
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      t += at(r, c) * at(c, r);
    }
  }
  return t.real();
}

std::vector<double> DensityMatrix::diagonal_probabilities() const {
  std::vector<double> probs(dim_);
  for (std::size_t i = 0; i < dim_; ++i) probs[i] = at(i, i).real();
  return probs;
}

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate) {
  const int n = rho.num_qubits();
  check_qubit_index(gate.target, n, "gate target");
  if (gate.has_control()) check_qubit_index(gate.control, n, "gate control");

  const std::array<Complex, 4> u = gate.target_block();
  const std::size_t dim = rho.dim();
  const std::size_t ts = qubit_stride(n, gate.target);
  const std::size_t cs = gate.has_control() ? qubit_stride(n, gate.control) : 0;

  DensityMatrix out = rho;
  // Left multiply by U: update row pairs within every column.
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & ts) continue;
    if (cs != 0 && (r & cs) == 0) continue;
    const std::size_t r1 = r | ts;
    for (std::size_t c = 0; c < dim; ++c) {
      const Complex a0 = out.at(r, c);
      const Complex a1 = out.at(r1, c);
      out.at(r, c) = u[0] * a0 + u[1] * a1;
      out.at(r1, c) = u[2] * a0 + u[3] * a1;
    }
  }
  // Right multiply by U^dagger: update column pairs within every row.
  for (std::size_t c = 0; c < dim; ++c) {
    if (c & ts) continue;
    if (cs != 0 && (c & cs) == 0) continue;
    const std::size_t c1 = c | ts;
    for (std::size_t r = 0; r < dim; ++r) {
      const Complex a0 = out.at(r, c);
      const Complex a1 = out.at(r, c1);
      out.at(r, c) = a0 * std::conj(u[0]) + a1 * std::conj(u[1]);
      out.at(r, c1) = a0 * std::conj(u[2]) + a1 * std::conj(u[3]);
    }
  }
  return out;
}

DensityMatrix to_density(const StateVector& state) { return DensityMatrix::from_state(state); }

namespace {

// Partial trace over the complement of `keep` (sorted). Unlike the public
// entry point this accepts an empty keep list and returns the 1x1 trace.
std::vector<Complex> partial_trace_entries(const DensityMatrix& rho,
                                           const std::vector<int>& keep,
                                           const std::vector<int>& traced) {
  const int n = rho.num_qubits();
  const auto keep_scatter = scatter_table(n, keep);
  const auto traced_scatter = scatter_table(n, traced);
  const std::size_t out_dim = std::size_t{1} << keep.size();
  std::vector<Complex> out(out_dim * out_dim, Complex{0.0, 0.0});
  for (std::size_t a = 0; a < out_dim; ++a) {
    for (std::size_t b = 0; b < out_dim; ++b) {
      Complex sum{0.0, 0.0};
      for (std::size_t t = 0; t < traced_scatter.size(); ++t) {
        sum += rho.at(keep_scatter[a] | traced_scatter[t], keep_scatter[b] | traced_scatter[t]);
      }
      out[a * out_dim + b] = sum;
    }
  }
  return out;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  if (keep.empty()) throw DomainError("partial_trace: keep set must be non-empty");
  const int n = rho.num_qubits();
  const auto kept = canonical_qubits(keep, n, "partial_trace keep");
  const auto traced = complement_qubits(kept, n);
  DensityMatrix out(static_cast<int>(kept.size()));
  auto entries = partial_trace_entries(rho, kept, traced);
  for (std::size_t r = 0; r < out.dim(); ++r) {
    for (std::size_t c = 0; c < out.dim(); ++c) {
      out.at(r, c) = entries[r * out.dim() + c];
    }
  }
  return out;
}

double expectation(const DensityMatrix& rho, const Projector& proj) {
  const int n = rho.num_qubits();
  check_qubit_index(proj.target, n, "projector target");
  if (proj.outcome != 0 && proj.outcome != 1) {
    throw DomainError("projector outcome must be 0 or 1");
  }
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    if (qubit_bit(i, n, proj.target) == proj.outcome) sum += rho.at(i, i);
  }
  if (std::abs(sum.imag()) > kImagGuard) {
    throw std::runtime_error("expectation: imaginary part " + std::to_string(sum.imag()) +
                             " exceeds guard; density matrix is corrupted");
  }
  return std::clamp(sum.real(), 0.0, 1.0);
}

PostSelection post_select(const StateVector& state, int qubit, int outcome) {
  const int n = state.num_qubits();
  check_qubit_index(qubit, n, "post-selection qubit");
  if (outcome != 0 && outcome != 1) throw DomainError("post-selection outcome must be 0 or 1");

  const std::size_t stride = qubit_stride(n, qubit);
  double prob = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (qubit_bit(i, n, qubit) == outcome) prob += std::norm(state.amplitude(i));
  }
  if (prob < kBranchFloor) {
    throw ImpossibleBranchError("post-selection branch q" + std::to_string(qubit) + "=" +
                                std::to_string(outcome) + " has probability " +
                                std::to_string(prob));
  }
  if (n == 1) {
    throw DomainError("post_select: cannot remove the only qubit");
  }

  const double scale = 1.0 / std::sqrt(prob);
  const std::size_t low_mask = stride - 1;
  std::vector<Complex> amps(state.dim() / 2, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (qubit_bit(i, n, qubit) != outcome) continue;
    // Delete the measured qubit's bit from the index.
    const std::size_t reduced = ((i >> 1) & ~low_mask) | (i & low_mask);
    amps[reduced] = state.amplitude(i) * scale;
  }
  return PostSelection{StateVector(n - 1, std::move(amps), StateVector::Unchecked{}), prob};
}

std::vector<double> measure_probabilities(const StateVector& state) {
  std::vector<double> probs(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) probs[i] = std::norm(state.amplitude(i));
  return probs;
}

DensityMatrix depolarize(const DensityMatrix& rho, std::span<const int> qubits, double p) {
  if (p < 0.0 || p > 1.0) throw DomainError("depolarize: strength must be in [0, 1]");
  if (qubits.empty()) throw DomainError("depolarize: qubit set must be non-empty");
  const int n = rho.num_qubits();
  const auto mixed = canonical_qubits(qubits, n, "depolarize qubits");
  const auto kept = complement_qubits(mixed, n);

  // sigma = Tr_mixed[rho], possibly a 1x1 scalar when every qubit is mixed.
  const auto sigma = partial_trace_entries(rho, kept, mixed);
  const std::size_t kept_dim = std::size_t{1} << kept.size();
  const auto kept_scatter = scatter_table(n, kept);
  const auto mixed_scatter = scatter_table(n, mixed);
  const double mixed_weight = p / static_cast<double>(std::size_t{1} << mixed.size());

  DensityMatrix out = rho;
  for (auto& e : out.entries_) e *= (1.0 - p);
  for (std::size_t a = 0; a < kept_dim; ++a) {
    for (std::size_t b = 0; b < kept_dim; ++b) {
      const Complex w = sigma[a * kept_dim + b] * mixed_weight;
      for (std::size_t s : mixed_scatter) {
        out.at(kept_scatter[a] | s, kept_scatter[b] | s) += w;
      }
    }
  }
  return out;
}

}  // namespace qdc
