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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "measure/hamiltonian.hpp"
#include "measure/pauli.hpp"

namespace measure {

struct SigmaAssignment {
  std::size_t qubit = 0;
  PauliAxis axis = PauliAxis::X;

  friend bool operator==(const SigmaAssignment&,
                         const SigmaAssignment&) = default;
};

/**
 * N mutually commuting, independent Pauli products (taus) and one
 * single-qubit Pauli per tau (sigmas) such that tau_i anticommutes with
 * sigma_i and commutes with every other sigma.
 *
 * With V_i = (tau_i + sigma_i)/sqrt(2) and U = V_1 ... V_N, U^dag tau_i U =
 * sigma_i.
 */
struct TauSigmaBasis {
  std::size_t n_qubits = 0;
  std::vector<PauliProduct> taus;
  std::vector<SigmaAssignment> sigmas;

  PauliProduct sigma(std::size_t i) const;
};

/// Empty problems list means every invariant holds.
std::vector<std::string> check_basis(const TauSigmaBasis& basis);
/// check_basis plus: every group term commutes with every tau.
std::vector<std::string> check_basis(const TauSigmaBasis& basis,
                                     const Hamiltonian& group);

/// Throws InvalidGroup naming the first anticommuting pair, if any.
void require_fully_commuting(const Hamiltonian& group);

/**
 * Lagrangian basis containing the span of the group's non-identity terms.
 *
 * Row-reduces the term vectors; when the rank is below N the symplectic
 * complement is reduced to a Lagrangian subspace.
 */
std::vector<PauliProduct> find_tau(const Hamiltonian& group);

/**
 * Assigns one sigma per tau. For each tau in turn the lowest unassigned qubit
 * on which it acts is chosen, with axis X->Z, Y->X, Z->X. Every other tau is
 * then multiplied by the current tau where needed so it commutes with the new
 * sigma. The returned taus are the updated ones; their span is unchanged.
 */
TauSigmaBasis find_sigma(std::vector<PauliProduct> taus);

/// term = i^phase_exp * tau_{k1} tau_{k2} ... with k ascending.
struct TauExpansion {
  std::vector<std::size_t> subset;
  int phase_exp = 0;

  /// +1 or -1; throws for imaginary phases.
  int sign() const;
};

TauExpansion expand_in_tau(const PauliProduct& term,
                           const TauSigmaBasis& basis);

struct TransformedGroup {
  std::vector<std::size_t> source_indices;
  /// Term k of a_n is the image of term k of the source group.
  Hamiltonian a_n;
  std::vector<TauExpansion> expansions;
};

/// Maps C * P to C * p * prod_{k in K} sigma_k for every term of the group.
/// Identity terms pass through.
TransformedGroup transform_group(const Hamiltonian& group,
                                 const TauSigmaBasis& basis,
                                 std::vector<std::size_t> source_indices = {});

struct PauliSumTerm {
  std::complex<double> coeff;
  PauliProduct op;  // phase 0; the phase lives in coeff
};

/// A complex linear combination of Pauli products with distinct axes.
struct PauliSum {
  std::size_t n_qubits = 0;
  std::vector<PauliSumTerm> terms;
};

inline constexpr std::size_t kSymbolicUnitaryMaxQubits = 8;

/// Expands prod_i (tau_i + sigma_i)/sqrt(2), factors in ascending i.
PauliSum build_unitary_symbolic(const TauSigmaBasis& basis);

}  // namespace measure
