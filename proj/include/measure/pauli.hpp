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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "measure/errors.hpp"

namespace measure {

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(PauliAxis a);
PauliAxis axis_from_char(char c);

class SymplecticVector;

/**
 * An N-qubit tensor product of single-qubit Paulis carrying a global factor
 * i^phase_exp.
 *
 * The x and z bits of each qubit are stored packed in 64-bit words. Qubit
 * indices are 0-based.
 */
class PauliProduct {
 public:
  /// Identity on n_qubits qubits.
  explicit PauliProduct(std::size_t n_qubits);
  PauliProduct(std::span<const PauliAxis> axes, int phase_exp = 0);

  /// Parses "X0 Y3 Z4" or "I". Indices must be < n_qubits.
  static PauliProduct parse(std::string_view text, std::size_t n_qubits);
  static PauliProduct single(std::size_t n_qubits, std::size_t qubit,
                             PauliAxis axis);

  std::size_t n_qubits() const { return n_; }
  int phase_exp() const { return phase_; }
  PauliAxis axis(std::size_t qubit) const;
  std::vector<PauliAxis> axes() const;

  /// Number of non-identity factors.
  std::size_t weight() const;
  /// Qubits carrying a non-identity factor, ascending.
  std::vector<std::size_t> support() const;
  /// All factors are I (the phase is not inspected).
  bool is_identity_axes() const;

  PauliProduct with_phase(int phase_exp) const;

  /// Term-format rendering without the phase: "X0 Z3" or "I".
  std::string axes_string() const;
  /// Like axes_string(), prefixed with "-", "i" or "-i" when phase_exp != 0.
  std::string to_string() const;

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

  /// Equality of axes and phase.
  friend bool operator==(const PauliProduct& a, const PauliProduct& b);
  /// Equality of axes only.
  bool same_axes(const PauliProduct& other) const;

  friend PauliProduct multiply(const PauliProduct& p, const PauliProduct& q);
  friend SymplecticVector to_symplectic(const PauliProduct& p);
  friend PauliProduct from_symplectic(const SymplecticVector& v);

 private:
  PauliProduct(std::size_t n, std::vector<std::uint64_t> x,
               std::vector<std::uint64_t> z, int phase);
  void set_axis(std::size_t qubit, PauliAxis a);

  std::size_t n_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  int phase_ = 0;
};

/**
 * Length-2N bit vector over GF(2). Component k < N is x_k, component N + k is
 * z_k. Each qubit maps as I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
 */
class SymplecticVector {
 public:
  explicit SymplecticVector(std::size_t n_qubits);
  SymplecticVector(std::vector<std::uint64_t> x, std::vector<std::uint64_t> z,
                   std::size_t n_qubits);
  /// Parses the "1100;0110" notation (x block, then z block).
  static SymplecticVector parse(std::string_view bits);

  std::size_t n_qubits() const { return n_; }
  std::size_t size() const { return 2 * n_; }

  bool get(std::size_t component) const;
  void set(std::size_t component, bool value);
  void flip(std::size_t component);

  bool x(std::size_t qubit) const;
  bool z(std::size_t qubit) const;

  bool is_zero() const;
  std::size_t popcount() const;

  SymplecticVector& operator^=(const SymplecticVector& other);
  friend SymplecticVector operator^(SymplecticVector a,
                                    const SymplecticVector& b) {
    a ^= b;
    return a;
  }
  friend bool operator==(const SymplecticVector&,
                         const SymplecticVector&) = default;
  /// Lexicographic order on components 0..2N-1.
  friend bool operator<(const SymplecticVector& a, const SymplecticVector& b);

  /// Swaps the x and z blocks (multiplication by the metric J).
  SymplecticVector swapped() const;

  /// "xxxx;zzzz"
  std::string to_string() const;

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

PauliProduct multiply(const PauliProduct& p, const PauliProduct& q);
SymplecticVector to_symplectic(const PauliProduct& p);
PauliProduct from_symplectic(const SymplecticVector& v);

/// (u|v) = x_u . z_v + z_u . x_v mod 2.
bool symplectic_inner(const SymplecticVector& u, const SymplecticVector& v);

bool commutes(const PauliProduct& p, const PauliProduct& q);
/// Qubit-wise commutation: on every qubit the axes agree or one is I.
bool qwc(const PauliProduct& p, const PauliProduct& q);

}  // namespace measure
