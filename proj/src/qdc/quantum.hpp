// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra for small (<= 4 qubit) systems: state vectors,
// density matrices, gate application, measurement, partial trace and
// post-selection.
//
// Basis convention: qubit 0 is the most significant bit of the basis index,
// so for three qubits the index bitstring reads q0 q1 q2.
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qdc {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 4;

/// Algebraic-identity tolerance (norms, traces, Hermiticity).
inline constexpr double kAlgebraTol = 1e-12;
/// Tolerance for quantities composed from several operations.
inline constexpr double kComposedTol = 1e-10;
/// Expectation values must be real up to this imaginary-part guard.
inline constexpr double kImagGuard = 1e-9;
/// Post-selection branches below this probability are impossible.
inline constexpr double kBranchFloor = 1e-14;

/// Bit position weight of `qubit` in a basis index (qubit 0 = MSB).
inline std::size_t qubit_stride(int n_qubits, int qubit) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

/// Value of `qubit`'s bit in basis index `index`.
inline int qubit_bit(std::size_t index, int n_qubits, int qubit) {
  return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1u);
}

class StateVector;
struct Gate;
struct PostSelection;

/// Normalized pure state over 1..4 qubits.
class StateVector {
 public:
  /// The all-zeros computational basis state |0...0>.
  explicit StateVector(int n_qubits);

  /// Construct from raw amplitudes. Requires 2^n entries, all finite,
  /// L2 norm 1 within 1e-9.
  static StateVector from_amplitudes(int n_qubits, std::vector<Complex> amplitudes);

  int num_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  Complex amplitude(std::size_t index) const { return amplitudes_.at(index); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  double norm() const;

 private:
  struct Unchecked {};
  StateVector(int n_qubits, std::vector<Complex> amplitudes, Unchecked);

  int n_qubits_;
  std::vector<Complex> amplitudes_;

  friend StateVector apply_gate(const StateVector&, const Gate&);
  friend struct PostSelection;
  friend PostSelection post_select(const StateVector&, int qubit, int outcome);
};

enum class GateKind { Hadamard, Phase, RotY, Cnot, ControlledHadamard };

const char* gate_kind_name(GateKind kind);

/// One gate application: a kind, a target, an optional control, and an
/// optional angle (Phase carries phi, RotY carries alpha).
struct Gate {
  GateKind kind;
  int target;
  int control;  // -1 when the gate has no control
  double param; // radians; 0 for parameterless gates

  static Gate hadamard(int target);
  static Gate phase(int target, double phi);
  /// Rotation fixed by its action |0> -> cos(a)|0> + sin(a)|1>
  /// (matrix [[cos a, -sin a], [sin a, cos a]]).
  static Gate rot_y(int target, double alpha);
  static Gate cnot(int control, int target);
  static Gate controlled_hadamard(int control, int target);

  bool has_control() const { return control >= 0; }
  /// The 2x2 block acting on the target qubit, row-major.
  std::array<Complex, 4> target_block() const;
};

/// Rank-1 computational-basis projector |outcome><outcome| on one qubit.
struct Projector {
  int target;
  int outcome;  // 0 or 1
};

/// Hermitian unit-trace operator over 1..4 qubits, row-major storage.
class DensityMatrix {
 public:
  /// |0...0><0...0|
  static DensityMatrix ground(int n_qubits);
  static DensityMatrix from_state(const StateVector& state);

  int num_qubits() const { return n_qubits_; }
  std::size_t dim() const { return dim_; }
  Complex at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Complex& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  std::span<const Complex> entries() const { return entries_; }

  Complex trace() const;
  /// Tr[rho^2], real part.
  double purity() const;
  /// Real parts of the diagonal: the computational-basis outcome distribution.
  std::vector<double> diagonal_probabilities() const;

 private:
  explicit DensityMatrix(int n_qubits);

  int n_qubits_;
  std::size_t dim_;
  std::vector<Complex> entries_;

  friend DensityMatrix apply_gate(const DensityMatrix&, const Gate&);
  friend DensityMatrix partial_trace(const DensityMatrix&, std::span<const int>);
  friend DensityMatrix depolarize(const DensityMatrix&, std::span<const int>, double);
};

struct PostSelection {
  StateVector state;    // renormalized state over the remaining qubits
  double probability;   // probability of the selected branch
};

/// U|psi>. Norm is preserved.
StateVector apply_gate(const StateVector& state, const Gate& gate);

/// U rho U^dagger.
DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate);

/// |psi><psi|
DensityMatrix to_density(const StateVector& state);

/// Trace out all qubits not in `keep`; kept qubits retain their relative
/// order. `keep` must be non-empty and within range.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Tr[rho P], clamped to [0, 1]. Throws if the trace has an imaginary part
/// beyond the 1e-9 guard (which would indicate a corrupted rho).
double expectation(const DensityMatrix& rho, const Projector& proj);

/// Condition on measuring `qubit` = `outcome`; the measured qubit is removed
/// from the returned state. Throws ImpossibleBranchError when the branch
/// probability is below 1e-14.
PostSelection post_select(const StateVector& state, int qubit, int outcome);

/// Computational-basis outcome distribution |amplitude|^2.
std::vector<double> measure_probabilities(const StateVector& state);

/// Depolarizing channel of strength p on the given qubits:
/// rho -> (1-p) rho + p (I/2^k tensor Tr_qubits[rho]).
/// p = 1 replaces the marked qubits with the maximally mixed state.
DensityMatrix depolarize(const DensityMatrix& rho, std::span<const int> qubits, double p);

}  // namespace qdc
