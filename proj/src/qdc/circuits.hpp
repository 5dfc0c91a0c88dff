// SPDX-License-Identifier: Apache-2.0
//
// Circuit IR plus the two delayed-choice interferometer circuits as
// parameterized builders.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdc/quantum.hpp"

namespace qdc {

/// Which interferometer variant a circuit realizes.
enum class Scheme {
  Qdce,    // single ancilla controls the recombining beam splitter
  EaQdce,  // EPR-pair ancilla, post-selected
};

const char* scheme_name(Scheme scheme);
std::optional<Scheme> scheme_from_name(const std::string& name);

/// Ordered gate list over a fixed register, with optional sweep metadata.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  void append(const Gate& gate);

  int num_qubits() const { return n_qubits_; }
  const std::vector<Gate>& ops() const { return ops_; }

  std::optional<Scheme> scheme;
  double alpha = 0.0;
  double phi = 0.0;

 private:
  int n_qubits_;
  std::vector<Gate> ops_;
};

/// Single-ancilla delayed-choice circuit, 2 qubits:
/// H(q0); Phase(phi)(q0); RotY(alpha)(q1); CH(control=q1, target=q0).
/// q0 is the interferometer path qubit, q1 the ancilla controlling the
/// recombining beam splitter.
Circuit build_qdce(double phi, double alpha);

/// Entanglement-assisted variant, 3 qubits:
/// H(q1); CNOT(q1->q2); H(q0); Phase(phi)(q0); CH(control=q1, target=q0);
/// RotY(alpha)(q2).
/// q1/q2 start as an EPR pair; q2 is rotated after the q0-q1 interaction and
/// post-selected by the caller.
Circuit build_ea_qdce(double phi, double alpha);

/// Apply the ops left to right to |0...0>.
StateVector simulate(const Circuit& circuit);

/// JSON document describing the circuit (scheme, parameters, ordered op
/// list), for reproducibility logs.
std::string circuit_to_json(const Circuit& circuit);

}  // namespace qdc
