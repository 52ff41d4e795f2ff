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

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "measure/circuit.hpp"
#include "measure/clifford_transform.hpp"
#include "measure/hamiltonian.hpp"

namespace measure {

// Dense oracles for verification. Qubit 0 is the leftmost Kronecker factor,
// so it is the most significant bit of a basis-state index.

using DenseOperator = Eigen::MatrixXcd;
using DenseState = Eigen::VectorXcd;

inline constexpr std::size_t kDenseMaxQubits = 12;
inline constexpr std::size_t kSpectrumMaxQubits = 10;
inline constexpr std::size_t kExpectationMaxQubits = 8;
inline constexpr std::size_t kCountMaxQubits = 8;

DenseOperator dense_matrix(const PauliProduct& p);
DenseOperator dense_matrix(const Hamiltonian& h);
DenseOperator dense_matrix(const CliffordCircuit& c);
DenseOperator dense_matrix(const PauliSum& s);

/// Full 2^n x 2^n matrix of one gate, built by Kronecker products.
DenseOperator gate_unitary(const Gate& g, std::size_t n_qubits);

DenseState simulate_circuit(const CliffordCircuit& c, const DenseState& state);

/// Ascending eigenvalues.
std::vector<double> spectrum(const Hamiltonian& h);
bool spectra_equal(const Hamiltonian& h1, const Hamiltonian& h2,
                   double tol = 1e-9);

/// Normalized state with i.i.d. Gaussian amplitudes.
DenseState random_state(std::size_t n_qubits, std::uint64_t seed);

/// max over random states psi of |<psi|h|psi> - <u psi|a|u psi>|.
double expectation_invariance(const Hamiltonian& h, const Hamiltonian& a,
                              const DenseOperator& u, std::size_t trials,
                              std::uint64_t seed = 1);

/// max |a - e^{i phi} b| with phi aligned on the largest entry of b.
double max_deviation_up_to_phase(const DenseOperator& a,
                                 const DenseOperator& b);

struct CompatibilityCounts {
  std::size_t n_qwc = 0;
  std::size_t n_commuting = 0;
};

/// Counts, over all 4^n Pauli products, those QWC with / commuting with the
/// template.
CompatibilityCounts count_compatible(const PauliProduct& tmpl);

}  // namespace measure
