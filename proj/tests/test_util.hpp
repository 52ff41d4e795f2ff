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

#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "measure/hamiltonian.hpp"
#include "measure/pauli.hpp"

namespace measure::testing {

inline std::string fixture(const std::string& name) {
  return std::string(MEASURE_FIXTURES) + "/" + name;
}

inline PauliProduct random_pauli(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> axis(0, 3);
  std::vector<PauliAxis> axes(n);
  for (auto& a : axes) a = static_cast<PauliAxis>(axis(rng));
  return PauliProduct(axes);
}

/// Random Lagrangian basis: the Z generators pushed through random H, S and
/// CNOT updates of the symplectic tableau.
inline std::vector<SymplecticVector> random_lagrangian(std::size_t n, std::mt19937_64& rng) {
  std::vector<SymplecticVector> rows;
  for (std::size_t q = 0; q < n; ++q) {
    SymplecticVector v(n);
    v.set(n + q, true);
    rows.push_back(v);
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  for (std::size_t step = 0; step < 6 * n + 4; ++step) {
    const int k = kind(rng);
    const std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (k == 2 && n < 2) continue;
    while (k == 2 && b == a) b = pick(rng);
    for (auto& v : rows) {
      if (k == 0) {
        const bool x = v.x(a), z = v.z(a);
        v.set(a, z);
        v.set(n + a, x);
      } else if (k == 1) {
        if (v.x(a)) v.flip(n + a);
      } else {
        if (v.x(a)) v.flip(b);
        if (v.z(b)) v.flip(n + a);
      }
    }
  }
  return rows;
}

/// Random fully commuting group: products of random subsets of a random
/// Lagrangian basis, with random coefficients.
inline Hamiltonian random_fc_group(std::size_t n, std::size_t n_terms, std::mt19937_64& rng,
                                   bool with_identity = false) {
  const auto basis = random_lagrangian(n, rng);
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  Hamiltonian h(n);
  if (with_identity) h.add(coeff(rng), PauliProduct(n));
  for (std::size_t t = 0; t < 4 * n_terms && h.size() < n_terms; ++t) {
    SymplecticVector v(n);
    for (const auto& b : basis) {
      if (coin(rng)) v ^= b;
    }
    if (v.is_zero()) continue;
    double c = coeff(rng);
    if (std::abs(c) < 0.05) c += 0.1;
    h.add(c, from_symplectic(v).with_phase(0));
  }
  h.normalize();
  return h;
}

}  // namespace measure::testing
