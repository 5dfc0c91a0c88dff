// SPDX-License-Identifier: Apache-2.0
#include "qdc/circuits.hpp"

#include <cmath>

#include <json.hpp>

#include "qdc/errors.hpp"

namespace qdc {

const char* scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::Qdce: return "QDCE";
    case Scheme::EaQdce: return "EA-QDCE";
  }
  return "?";
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
  if (name == "QDCE") return Scheme::Qdce;
  if (name == "EA-QDCE") return Scheme::EaQdce;
  return std::nullopt;
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DomainError("circuit n_qubits must be in [1, 4]");
  }
}

void Circuit::append(const Gate& gate) {
  if (gate.target >= n_qubits_ || (gate.has_control() && gate.control >= n_qubits_)) {
    throw DomainError("circuit op uses a qubit outside the register");
  }
  ops_.push_back(gate);
}

Circuit build_qdce(double phi, double alpha) {
  if (!std::isfinite(phi) || !std::isfinite(alpha)) {
    throw DomainError("build_qdce: phi and alpha must be finite");
  }
  Circuit c(2);
  c.append(Gate::hadamard(0));
  c.append(Gate::phase(0, phi));
  c.append(Gate::rot_y(1, alpha));
  c.append(Gate::controlled_hadamard(1, 0));
  c.scheme = Scheme::Qdce;
  c.alpha = alpha;
  c.phi = phi;
  return c;
}

Circuit build_ea_qdce(double phi, double alpha) {
  if (!std::isfinite(phi) || !std::isfinite(alpha)) {
    throw DomainError("build_ea_qdce: phi and alpha must be finite");
  }
  Circuit c(3);
  c.append(Gate::hadamard(1));
  c.append(Gate::cnot(1, 2));
  c.append(Gate::hadamard(0));
  c.append(Gate::phase(0, phi));
  c.append(Gate::controlled_hadamard(1, 0));
  // The ancilla rotation commutes with the q0-q1 interaction (disjoint
  // qubits); it is placed after it to match the delayed choice.
  c.append(Gate::rot_y(2, alpha));
  c.scheme = Scheme::EaQdce;
  c.alpha = alpha;
  c.phi = phi;
  return c;
}

StateVector simulate(const Circuit& circuit) {
  StateVector state(circuit.num_qubits());
  for (const Gate& gate : circuit.ops()) {
    state = apply_gate(state, gate);
  }
  return state;
}

std::string circuit_to_json(const Circuit& circuit) {
  nlohmann::json doc;
  doc["n_qubits"] = circuit.num_qubits();
  if (circuit.scheme) {
    doc["scheme"] = scheme_name(*circuit.scheme);
    doc["parameters"] = {{"alpha", circuit.alpha}, {"phi", circuit.phi}};
  }
  nlohmann::json ops = nlohmann::json::array();
  for (const Gate& gate : circuit.ops()) {
    nlohmann::json op;
    op["kind"] = gate_kind_name(gate.kind);
    op["targets"] = {gate.target};
    op["controls"] = gate.has_control() ? nlohmann::json::array({gate.control})
                                        : nlohmann::json::array();
    if (gate.kind == GateKind::Phase || gate.kind == GateKind::RotY) {
      op["param"] = gate.param;
    }
    ops.push_back(op);
  }
  doc["ops"] = std::move(ops);
  return doc.dump(2);
}

}  // namespace qdc
