// Copyright 2026 The measure Authors
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

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "measure/clifford_transform.hpp"
#include "measure/pauli.hpp"

namespace measure {

enum class GateKind { kH, kS, kSdg, kX, kY, kZ, kCNOT };

std::string gate_name(GateKind k);
GateKind parse_gate_name(std::string_view name);

struct Gate {
  GateKind kind = GateKind::kH;
  std::size_t target = 0;   // the qubit for singles, the target for CNOT
  std::size_t control = 0;  // CNOT only

  bool is_two_qubit() const { return kind == GateKind::kCNOT; }
  /// [control, target] for CNOT, [target] otherwise.
  std::vector<std::size_t> qubits() const;

  static Gate single(GateKind k, std::size_t q) { return {k, q, 0}; }
  static Gate cnot(std::size_t control, std::size_t target) {
    return {GateKind::kCNOT, target, control};
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// exp(i pi/4 pauli).
struct PauliExponent {
  PauliProduct pauli;
};

/**
 * Gates in time order plus a global phase of exp(i pi/4 * global_phase_exp).
 * The circuit unitary is phase * G_last ... G_first.
 *
 * `exponents` records the Pauli exponents the gates were lowered from, in
 * time order, when the circuit came from synthesize().
 */
struct CliffordCircuit {
  std::size_t n_qubits = 0;
  std::vector<Gate> gates;
  int global_phase_exp = 0;  // eighths of 2 pi, in [0, 8)
  std::vector<PauliExponent> exponents;

  /// Appends other after this circuit in time.
  void append(const CliffordCircuit& other);
  void add_phase(int eighths);
};

/// Gates reversed and daggered, phase negated.
CliffordCircuit inverse(const CliffordCircuit& c);

/// (tau + sigma)/sqrt(2) = (-i) exp(i pi/4 sigma) exp(i pi/4 tau) exp(i pi/4 sigma)
struct ExponentSequence {
  int global_phase_exp = 6;  // -i
  std::array<PauliExponent, 3> factors;
};

ExponentSequence exponent_sequence(const PauliProduct& tau,
                                   const PauliProduct& sigma);

/**
 * Exact lowering of exp(i pi/4 P): per-qubit basis change to Z (H for X,
 * S-dagger then H for Y), a CNOT ladder from every support qubit onto the
 * last one, S-dagger on the last qubit with one eighth of global phase, then
 * the mirror image. 2(w-1) CNOTs for weight w.
 */
CliffordCircuit decompose_exponent(const PauliExponent& e);

/// Concatenates the lowered V_i for i = 1..N.
CliffordCircuit synthesize(const TauSigmaBasis& basis);

struct GateCounts {
  std::size_t cnots = 0;
  std::size_t singles = 0;
  std::size_t tau_exponents = 0;    // multi-qubit Pauli exponents
  std::size_t sigma_exponents = 0;  // single-qubit exponents from sigmas
};

GateCounts gate_counts(const CliffordCircuit& c);

/// One gate per line: "H 2", "S 1", "CNOT 0 3".
std::string circuit_to_text(const CliffordCircuit& c);
CliffordCircuit circuit_from_text(std::string_view text, std::size_t n_qubits);

}  // namespace measure
