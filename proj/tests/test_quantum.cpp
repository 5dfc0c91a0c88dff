// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "oracle.hpp"
#include "qdc/errors.hpp"
#include "qdc/quantum.hpp"

using qdc::Complex;
using qdc::DensityMatrix;
using qdc::Gate;
using qdc::Projector;
using qdc::StateVector;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;

double cdist(Complex a, Complex b) { return std::abs(a - b); }

// cos(a)|psi_p>|0> + sin(a)|psi_w>|1> over (q0, q1), built from raw
// amplitudes: psi_p = (|0> + e^{i phi}|1>)/sqrt2 and psi_w its Hadamard
// image ((1+e^{i phi})|0> + (1-e^{i phi})|1>)/2.
StateVector morphing_state(double alpha, double phi) {
  const Complex w = std::polar(1.0, phi);
  const Complex p0{kInvSqrt2, 0.0};
  const Complex p1 = w * kInvSqrt2;
  const Complex w0 = (1.0 + w) / 2.0;
  const Complex w1 = (1.0 - w) / 2.0;
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  // index bits read q0 q1
  return StateVector::from_amplitudes(2, {c * p0, s * w0, c * p1, s * w1});
}

}  // namespace

TEST_CASE("state vector construction and validation") {
  const StateVector ground(3);
  CHECK(ground.dim() == 8);
  CHECK(cdist(ground.amplitude(0), Complex{1, 0}) == 0.0);
  CHECK(ground.norm() == doctest::Approx(1.0));

  CHECK_THROWS_AS(StateVector(0), qdc::DomainError);
  CHECK_THROWS_AS(StateVector(5), qdc::DomainError);
  CHECK_THROWS_AS(StateVector::from_amplitudes(1, {Complex{1, 0}}), qdc::DomainError);
  CHECK_THROWS_AS(StateVector::from_amplitudes(1, {Complex{1, 0}, Complex{1, 0}}),
                  qdc::DomainError);
  const double nan = std::nan("");
  CHECK_THROWS_AS(StateVector::from_amplitudes(1, {Complex{nan, 0}, Complex{0, 0}}),
                  qdc::DomainError);
}

TEST_CASE("gate factories reject malformed gates") {
  CHECK_THROWS_AS(Gate::cnot(1, 1), qdc::DomainError);
  CHECK_THROWS_AS(Gate::rot_y(0, std::nan("")), qdc::DomainError);
  CHECK_THROWS_AS(Gate::phase(-1, 0.0), qdc::DomainError);
}

TEST_CASE("hadamard maps |0> to the equal superposition") {
  const StateVector out = apply_gate(StateVector(1), Gate::hadamard(0));
  CHECK(cdist(out.amplitude(0), Complex{kInvSqrt2, 0}) < 1e-15);
  CHECK(cdist(out.amplitude(1), Complex{kInvSqrt2, 0}) < 1e-15);
}

TEST_CASE("phase gate imprints e^{i phi} on the |1> component") {
  const double phi = kPi / 3;
  StateVector state = apply_gate(StateVector(1), Gate::hadamard(0));
  state = apply_gate(state, Gate::phase(0, phi));
  CHECK(cdist(state.amplitude(0), Complex{kInvSqrt2, 0}) < 1e-15);
  CHECK(cdist(state.amplitude(1), std::polar(kInvSqrt2, phi)) < 1e-15);
}

TEST_CASE("cnot entangles the equal superposition into a Bell pair") {
  StateVector state = apply_gate(StateVector(2), Gate::hadamard(0));
  state = apply_gate(state, Gate::cnot(0, 1));
  CHECK(cdist(state.amplitude(0b00), Complex{kInvSqrt2, 0}) < 1e-15);
  CHECK(cdist(state.amplitude(0b01), Complex{0, 0}) < 1e-15);
  CHECK(cdist(state.amplitude(0b10), Complex{0, 0}) < 1e-15);
  CHECK(cdist(state.amplitude(0b11), Complex{kInvSqrt2, 0}) < 1e-15);
}

TEST_CASE("rot_y action on |0> is cos(a)|0> + sin(a)|1>") {
  auto rotated = [](double alpha) { return apply_gate(StateVector(1), Gate::rot_y(0, alpha)); };

  const StateVector identity = rotated(0.0);
  CHECK(cdist(identity.amplitude(0), Complex{1, 0}) == 0.0);

  const StateVector flipped = rotated(kPi / 2);
  CHECK(std::abs(flipped.amplitude(0)) < 1e-12);
  CHECK(cdist(flipped.amplitude(1), Complex{1, 0}) < 1e-12);

  const StateVector half = rotated(kPi / 4);
  CHECK(cdist(half.amplitude(0), Complex{kInvSqrt2, 0}) < 1e-15);
  CHECK(cdist(half.amplitude(1), Complex{kInvSqrt2, 0}) < 1e-15);

  const StateVector generic = rotated(0.3);
  CHECK(generic.amplitude(0).real() == doctest::Approx(std::cos(0.3)).epsilon(1e-15));
  CHECK(generic.amplitude(1).real() == doctest::Approx(std::sin(0.3)).epsilon(1e-15));
}

TEST_CASE("every gate kind is unitary across a 16-point parameter grid") {
  std::vector<Gate> gates = {Gate::hadamard(0), Gate::cnot(0, 1),
                             Gate::controlled_hadamard(1, 0)};
  for (int k = 0; k < 16; ++k) {
    const double angle = -2.0 * kPi + 4.0 * kPi * k / 15.0;
    gates.push_back(Gate::phase(0, angle));
    gates.push_back(Gate::rot_y(1, angle));
  }
  for (const Gate& gate : gates) {
    const int n = (gate.has_control() || gate.target > 0) ? 2 : 1;
    const oracle::MatrixXcd u = oracle::gate_matrix(gate, n);
    const oracle::MatrixXcd residual =
        u.adjoint() * u - oracle::MatrixXcd::Identity(u.rows(), u.cols());
    CHECK(residual.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("apply_gate matches the dense matrix-product oracle on random circuits") {
  std::mt19937 eng(20240811);
  std::uniform_int_distribution<int> qubit_count(1, 4);
  std::uniform_int_distribution<int> gate_count(1, 10);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = qubit_count(eng);
    const int gates = gate_count(eng);
    StateVector state(n);
    oracle::VectorXcd reference = oracle::to_eigen(state);
    for (int g = 0; g < gates; ++g) {
      const Gate gate = oracle::random_gate(eng, n);
      state = apply_gate(state, gate);
      reference = oracle::gate_matrix(gate, n) * reference;
    }
    CHECK((oracle::to_eigen(state) - reference).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(state.norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("apply_gate rejects out-of-range qubit indices") {
  CHECK_THROWS_AS(apply_gate(StateVector(2), Gate::hadamard(2)), qdc::DomainError);
  CHECK_THROWS_AS(apply_gate(StateVector(2), Gate::cnot(2, 0)), qdc::DomainError);
}

TEST_CASE("to_density forms the outer product") {
  const DensityMatrix zero = to_density(StateVector(1));
  CHECK(cdist(zero.at(0, 0), Complex{1, 0}) == 0.0);
  CHECK(cdist(zero.at(1, 1), Complex{0, 0}) == 0.0);

  const DensityMatrix plus = to_density(apply_gate(StateVector(1), Gate::hadamard(0)));
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(plus.at(r, c).real() == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(plus.at(r, c).imag() == doctest::Approx(0.0));
    }
  }

  // Entangled two-qubit state against the Eigen outer product.
  const StateVector morph = morphing_state(kPi / 4, 0.0);
  const DensityMatrix rho = to_density(morph);
  const oracle::VectorXcd v = oracle::to_eigen(morph);
  const oracle::MatrixXcd expected = v * v.adjoint();
  CHECK((oracle::to_eigen(rho) - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
  StateVector bell = apply_gate(StateVector(2), Gate::hadamard(0));
  bell = apply_gate(bell, Gate::cnot(0, 1));
  const int keep[] = {0};
  const DensityMatrix marginal = partial_trace(to_density(bell), keep);
  CHECK(marginal.num_qubits() == 1);
  CHECK(cdist(marginal.at(0, 0), Complex{0.5, 0}) < 1e-12);
  CHECK(cdist(marginal.at(1, 1), Complex{0.5, 0}) < 1e-12);
  CHECK(cdist(marginal.at(0, 1), Complex{0, 0}) < 1e-12);
}

TEST_CASE("partial trace of a product state returns the kept factor") {
  // |0> tensor |1>
  const StateVector product =
      StateVector::from_amplitudes(2, {Complex{0, 0}, Complex{1, 0}, Complex{0, 0}, Complex{0, 0}});
  const int keep[] = {0};
  const DensityMatrix kept = partial_trace(to_density(product), keep);
  CHECK(cdist(kept.at(0, 0), Complex{1, 0}) < 1e-15);
  CHECK(cdist(kept.at(1, 1), Complex{0, 0}) < 1e-15);
}

TEST_CASE("tracing the ancilla yields the two-branch mixture") {
  const double alpha = kPi / 3;
  const double phi = 0.7;
  const StateVector morph = morphing_state(alpha, phi);
  const int keep[] = {0};
  const DensityMatrix reduced = partial_trace(to_density(morph), keep);

  const Complex w = std::polar(1.0, phi);
  oracle::VectorXcd psi_p(2), psi_w(2);
  psi_p << Complex{kInvSqrt2, 0}, w * kInvSqrt2;
  psi_w << (1.0 + w) / 2.0, (1.0 - w) / 2.0;
  const oracle::MatrixXcd expected = std::pow(std::cos(alpha), 2) * psi_p * psi_p.adjoint() +
                                     std::pow(std::sin(alpha), 2) * psi_w * psi_w.adjoint();
  CHECK((oracle::to_eigen(reduced) - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace validates its keep set") {
  const DensityMatrix rho = to_density(StateVector(2));
  CHECK_THROWS_AS(partial_trace(rho, std::span<const int>{}), qdc::DomainError);
  const int dup[] = {0, 0};
  CHECK_THROWS_AS(partial_trace(rho, dup), qdc::DomainError);
  const int bad[] = {2};
  CHECK_THROWS_AS(partial_trace(rho, bad), qdc::DomainError);
}

TEST_CASE("partial trace preserves trace, Hermiticity and positivity on random states") {
  std::mt19937 eng(7);
  std::uniform_int_distribution<int> qubit_count(2, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = qubit_count(eng);
    const StateVector state = oracle::random_state(eng, n, 8);
    std::uniform_int_distribution<int> keep_choice(0, n - 1);
    const int keep[] = {keep_choice(eng)};
    const DensityMatrix reduced = partial_trace(to_density(state), keep);

    CHECK(std::abs(reduced.trace() - Complex{1, 0}) < 1e-12);
    const oracle::MatrixXcd m = oracle::to_eigen(reduced);
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<oracle::MatrixXcd> solver(m);
    CHECK(solver.eigenvalues().minCoeff() >= -1e-10);
    // Independent reconstruction.
    const oracle::MatrixXcd reference =
        oracle::partial_trace(oracle::to_eigen(to_density(state)), n, {keep[0]});
    CHECK((m - reference).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("marginal of a pure product state stays pure") {
  std::mt19937 eng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector a = oracle::random_state(eng, 1, 5);
    const StateVector b = oracle::random_state(eng, 1, 5);
    std::vector<Complex> amps;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) amps.push_back(a.amplitude(i) * b.amplitude(j));
    }
    const StateVector product = StateVector::from_amplitudes(2, std::move(amps));
    const int keep[] = {0};
    const DensityMatrix marginal = partial_trace(to_density(product), keep);
    CHECK(marginal.purity() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("expectation values of projectors") {
  CHECK(expectation(to_density(StateVector(1)), Projector{0, 0}) == doctest::Approx(1.0));

  StateVector bell = apply_gate(StateVector(2), Gate::hadamard(0));
  bell = apply_gate(bell, Gate::cnot(0, 1));
  const int keep[] = {0};
  const DensityMatrix mixed = partial_trace(to_density(bell), keep);
  CHECK(expectation(mixed, Projector{0, 0}) == doctest::Approx(0.5).epsilon(1e-12));

  // Reduced state of the morphing superposition at alpha=pi/3, phi=pi/3.
  const DensityMatrix reduced =
      partial_trace(to_density(morphing_state(kPi / 3, kPi / 3)), keep);
  CHECK(expectation(reduced, Projector{0, 0}) == doctest::Approx(0.6875).epsilon(1e-12));
  CHECK(expectation(reduced, Projector{0, 1}) == doctest::Approx(0.3125).epsilon(1e-12));
}

TEST_CASE("projector completeness holds for random states") {
  std::mt19937 eng(13);
  std::uniform_int_distribution<int> qubit_count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = qubit_count(eng);
    const DensityMatrix rho = to_density(oracle::random_state(eng, n, 6));
    std::uniform_int_distribution<int> target(0, n - 1);
    const int q = target(eng);
    const double total = expectation(rho, Projector{q, 0}) + expectation(rho, Projector{q, 1});
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("expectation flags a corrupted density matrix") {
  DensityMatrix rho = DensityMatrix::ground(1);
  rho.at(0, 0) = Complex{0.5, 0.5};  // diagonal must be real
  CHECK_THROWS(expectation(rho, Projector{0, 0}));
}

TEST_CASE("projectors are idempotent") {
  for (int outcome = 0; outcome <= 1; ++outcome) {
    oracle::MatrixXcd p = oracle::MatrixXcd::Zero(2, 2);
    p(outcome, outcome) = 1.0;
    CHECK(((p * p) - p).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("post-selection on a Bell state collapses the partner qubit") {
  StateVector bell = apply_gate(StateVector(2), Gate::hadamard(0));
  bell = apply_gate(bell, Gate::cnot(0, 1));
  const qdc::PostSelection selected = post_select(bell, 1, 0);
  CHECK(selected.probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(selected.state.num_qubits() == 1);
  CHECK(cdist(selected.state.amplitude(0), Complex{1, 0}) < 1e-12);
}

TEST_CASE("post-selection on an impossible branch throws") {
  const StateVector one =
      StateVector::from_amplitudes(1, {Complex{0, 0}, Complex{1, 0}});
  CHECK_THROWS_AS(post_select(one, 0, 0), qdc::ImpossibleBranchError);
}

TEST_CASE("post-selection branch probabilities sum to one") {
  std::mt19937 eng(31);
  std::uniform_int_distribution<int> qubit_count(2, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = qubit_count(eng);
    const StateVector state = oracle::random_state(eng, n, 8);
    std::uniform_int_distribution<int> target(0, n - 1);
    const int q = target(eng);
    double total = 0.0;
    for (int outcome = 0; outcome <= 1; ++outcome) {
      try {
        total += post_select(state, q, outcome).probability;
      } catch (const qdc::ImpossibleBranchError&) {
        // contributes (numerically) zero
      }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("measurement probabilities are |amplitude|^2") {
  const StateVector plus = apply_gate(StateVector(1), Gate::hadamard(0));
  const auto probs = measure_probabilities(plus);
  CHECK(probs[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(probs[1] == doctest::Approx(0.5).epsilon(1e-12));

  // Wave state at phi = pi/2: fringe probabilities cos^2(pi/4) = 1/2.
  StateVector wave = apply_gate(StateVector(1), Gate::hadamard(0));
  wave = apply_gate(wave, Gate::phase(0, kPi / 2));
  wave = apply_gate(wave, Gate::hadamard(0));
  const auto fringe = measure_probabilities(wave);
  CHECK(fringe[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fringe[1] == doctest::Approx(0.5).epsilon(1e-12));

  std::mt19937 eng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector state = oracle::random_state(eng, 3, 8);
    const auto p = measure_probabilities(state);
    double total = 0.0;
    for (double x : p) total += x;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("depolarizing channel endpoints") {
  const DensityMatrix plus = to_density(apply_gate(StateVector(1), Gate::hadamard(0)));
  const int qubits[] = {0};

  const DensityMatrix untouched = depolarize(plus, qubits, 0.0);
  CHECK((oracle::to_eigen(untouched) - oracle::to_eigen(plus)).cwiseAbs().maxCoeff() == 0.0);

  const DensityMatrix mixed = depolarize(plus, qubits, 1.0);
  CHECK(cdist(mixed.at(0, 0), Complex{0.5, 0}) < 1e-15);
  CHECK(cdist(mixed.at(1, 1), Complex{0.5, 0}) < 1e-15);
  CHECK(cdist(mixed.at(0, 1), Complex{0, 0}) < 1e-15);

  CHECK_THROWS_AS(depolarize(plus, qubits, 1.5), qdc::DomainError);
  CHECK_THROWS_AS(depolarize(plus, std::span<const int>{}, 0.5), qdc::DomainError);
}
