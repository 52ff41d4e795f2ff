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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "measure/pauli.hpp"

namespace measure {

/// Coefficients with magnitude below this are dropped on ingest.
inline constexpr double kDefaultDropTolerance = 1e-10;

struct HamiltonianTerm {
  double coeff = 0.0;
  PauliProduct op;
};

/**
 * Real linear combination of Pauli products on a fixed number of qubits.
 *
 * Terms keep first-appearance order. Adding a term whose axes already exist
 * sums the coefficients; terms that fall below the drop tolerance are removed
 * by normalize().
 */
class Hamiltonian {
 public:
  /// Empty single-qubit Hamiltonian.
  Hamiltonian() : Hamiltonian(1) {}
  explicit Hamiltonian(std::size_t n_qubits,
                       double drop_tolerance = kDefaultDropTolerance);

  std::size_t n_qubits() const { return n_qubits_; }
  double drop_tolerance() const { return drop_tolerance_; }
  const std::vector<HamiltonianTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const HamiltonianTerm& operator[](std::size_t i) const { return terms_[i]; }

  /// Merges with an existing term of equal axes. op must carry phase 0.
  void add(double coeff, const PauliProduct& op);
  void add(double coeff, std::string_view term_text);
  /// Drops sub-tolerance terms.
  void normalize();

  /// Sub-Hamiltonian made of the given term indices, in that order.
  Hamiltonian subset(const std::vector<std::size_t>& indices) const;

 private:
  std::size_t n_qubits_;
  double drop_tolerance_;
  std::vector<HamiltonianTerm> terms_;
  std::unordered_map<std::string, std::size_t> index_;
};

Hamiltonian parse_hamiltonian(std::istream& in,
                              double drop_tolerance = kDefaultDropTolerance);
Hamiltonian parse_hamiltonian(std::string_view text,
                              double drop_tolerance = kDefaultDropTolerance);
Hamiltonian load_hamiltonian(const std::string& path,
                             double drop_tolerance = kDefaultDropTolerance);

/// Emits a "qubits: N" header followed by one term per line.
std::string serialize_hamiltonian(const Hamiltonian& h);

/// Shortest round-trip decimal rendering of a double.
std::string format_double(double v);

}  // namespace measure
