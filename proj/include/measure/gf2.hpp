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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "measure/pauli.hpp"

namespace measure {

/// Rows are 2N-bit symplectic vectors.
struct BinaryMatrix {
  std::size_t n_qubits = 0;
  std::vector<SymplecticVector> rows;

  std::size_t n_cols() const { return 2 * n_qubits; }
};

enum class SubspaceKind { kIsotropic, kCoisotropic, kLagrangian, kGeneral };

std::string to_string(SubspaceKind kind);

/// A linearly independent set of symplectic vectors and the kind of the
/// subspace they span.
struct SubspaceBasis {
  std::size_t n_qubits = 0;
  std::vector<SymplecticVector> vectors;
  SubspaceKind kind = SubspaceKind::kGeneral;

  std::size_t dim() const { return vectors.size(); }
};

struct RowReduction {
  SubspaceBasis basis;  // rows of the reduced row-echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot component of each basis row
};

/// Gauss-Jordan elimination. Pivots are taken in ascending column order, so
/// the result is the unique reduced row-echelon form of the row space.
RowReduction row_reduce(const BinaryMatrix& m);

/// Computes the kind tag of the span of `vectors` (assumed independent).
SubspaceKind classify(std::size_t n_qubits,
                      const std::vector<SymplecticVector>& vectors);

SubspaceBasis make_subspace(std::size_t n_qubits,
                            std::vector<SymplecticVector> vectors);

/// V-perp under the symplectic form. Ordinary null space with the x and z
/// halves swapped.
SubspaceBasis symplectic_complement(const SubspaceBasis& v);

/**
 * Reduces a coisotropic basis to a Lagrangian one contained in it.
 *
 * Repeatedly takes the lexicographically first anticommuting pair (i, j),
 * makes every other vector orthogonal to both via
 *   c_k += (c_k|c_j) c_i + (c_k|c_i) c_j
 * and drops c_j. Throws std::invalid_argument when fewer than N vectors
 * remain, which happens only for non-coisotropic input.
 */
SubspaceBasis lagrangian_extract(const SubspaceBasis& coiso);

/**
 * Finds x with sum_k x_k a.rows[k] = b over GF(2). The rows of `a` play the
 * role of the columns of the usual A in Ax = b. Free variables are set to 0.
 * Throws NotInSpan when b is outside the row span.
 */
std::vector<bool> solve(const BinaryMatrix& a, const SymplecticVector& b);

/// Membership test via solve.
bool in_span(const std::vector<SymplecticVector>& basis,
             const SymplecticVector& v);
/// Equality of spans by mutual membership.
bool same_span(std::size_t n_qubits, const std::vector<SymplecticVector>& a,
               const std::vector<SymplecticVector>& b);

bool is_isotropic(const std::vector<SymplecticVector>& vectors);

}  // namespace measure
