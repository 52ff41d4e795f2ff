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

#include "measure/gf2.hpp"

#include <utility>

namespace measure {
namespace {

struct Echelon {
  std::vector<SymplecticVector> rows;
  std::vector<std::size_t> pivots;
};

Echelon reduce(std::size_t n_qubits, std::vector<SymplecticVector> rows) {
  Echelon e;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n_qubits && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    e.pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank, SymplecticVector(n_qubits));
  e.rows = std::move(rows);
  return e;
}

// Ordinary (Euclidean) null space of the row span.
std::vector<SymplecticVector> null_space(
    std::size_t n_qubits, const std::vector<SymplecticVector>& rows) {
  const Echelon e = reduce(n_qubits, rows);
  std::vector<bool> is_pivot(2 * n_qubits, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<SymplecticVector> out;
  for (std::size_t f = 0; f < 2 * n_qubits; ++f) {
    if (is_pivot[f]) continue;
    SymplecticVector u(n_qubits);
    u.set(f, true);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (e.rows[r].get(f)) u.set(e.pivots[r], true);
    }
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<SymplecticVector> complement_vectors(
    std::size_t n_qubits, const std::vector<SymplecticVector>& vectors) {
  std::vector<SymplecticVector> out = null_space(n_qubits, vectors);
  for (auto& u : out) u = u.swapped();
  return out;
}

void check_sizes(std::size_t n_qubits,
                 const std::vector<SymplecticVector>& vectors) {
  for (const auto& v : vectors) {
    if (v.n_qubits() != n_qubits) {
      throw DimensionMismatch("vector of " + std::to_string(v.n_qubits()) +
                              " qubits in a " + std::to_string(n_qubits) +
                              "-qubit subspace");
    }
  }
}

}  // namespace

std::string to_string(SubspaceKind kind) {
  switch (kind) {
    case SubspaceKind::kIsotropic: return "isotropic";
    case SubspaceKind::kCoisotropic: return "coisotropic";
    case SubspaceKind::kLagrangian: return "lagrangian";
    case SubspaceKind::kGeneral: return "general";
  }
  return "general";
}

RowReduction row_reduce(const BinaryMatrix& m) {
  check_sizes(m.n_qubits, m.rows);
  Echelon e = reduce(m.n_qubits, m.rows);
  RowReduction out;
  out.rank = e.rows.size();
  out.pivots = std::move(e.pivots);
  out.basis = make_subspace(m.n_qubits, std::move(e.rows));
  return out;
}

bool is_isotropic(const std::vector<SymplecticVector>& vectors) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (symplectic_inner(vectors[i], vectors[j])) return false;
    }
  }
  return true;
}

SubspaceKind classify(std::size_t n_qubits,
                      const std::vector<SymplecticVector>& vectors) {
  if (is_isotropic(vectors)) {
    return vectors.size() == n_qubits ? SubspaceKind::kLagrangian
                                      : SubspaceKind::kIsotropic;
  }
  for (const auto& u : complement_vectors(n_qubits, vectors)) {
    if (!in_span(vectors, u)) return SubspaceKind::kGeneral;
  }
  return SubspaceKind::kCoisotropic;
}

SubspaceBasis make_subspace(std::size_t n_qubits,
                            std::vector<SymplecticVector> vectors) {
  check_sizes(n_qubits, vectors);
  SubspaceBasis b;
  b.n_qubits = n_qubits;
  b.kind = classify(n_qubits, vectors);
  b.vectors = std::move(vectors);
  return b;
}

SubspaceBasis symplectic_complement(const SubspaceBasis& v) {
  check_sizes(v.n_qubits, v.vectors);
  return make_subspace(v.n_qubits, complement_vectors(v.n_qubits, v.vectors));
}

SubspaceBasis lagrangian_extract(const SubspaceBasis& coiso) {
  check_sizes(coiso.n_qubits, coiso.vectors);
  std::vector<SymplecticVector> c = coiso.vectors;
  while (true) {
    std::size_t first = c.size(), second = c.size();
    for (std::size_t i = 0; i < c.size() && first == c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (symplectic_inner(c[i], c[j])) {
          first = i;
          second = j;
          break;
        }
      }
    }
    if (first == c.size()) break;
    const SymplecticVector ci = c[first];
    const SymplecticVector cj = c[second];
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k == first || k == second) continue;
      const bool with_j = symplectic_inner(c[k], cj);
      const bool with_i = symplectic_inner(c[k], ci);
      if (with_j) c[k] ^= ci;
      if (with_i) c[k] ^= cj;
    }
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(second));
  }
  if (c.size() != coiso.n_qubits) {
    throw std::invalid_argument(
        "lagrangian_extract: input is not coisotropic (" +
        std::to_string(c.size()) + " commuting vectors left, need " +
        std::to_string(coiso.n_qubits) + ")");
  }
  SubspaceBasis out;
  out.n_qubits = coiso.n_qubits;
  out.vectors = std::move(c);
  out.kind = SubspaceKind::kLagrangian;
  return out;
}

std::vector<bool> solve(const BinaryMatrix& a, const SymplecticVector& b) {
  check_sizes(a.n_qubits, a.rows);
  if (b.n_qubits() != a.n_qubits) {
    throw DimensionMismatch("solve: right-hand side has wrong size");
  }
  const std::size_t m = a.rows.size();
  // Each working row carries the set of original rows it is a sum of.
  std::vector<SymplecticVector> rows = a.rows;
  std::vector<std::vector<bool>> combo(m, std::vector<bool>(m, false));
  for (std::size_t k = 0; k < m; ++k) combo[k][k] = true;
  auto add_combo = [](std::vector<bool>& dst, const std::vector<bool>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = dst[i] != src[i];
  };

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.n_cols() && rank < m; ++col) {
    std::size_t p = rank;
    while (p < m && !rows[p].get(col)) ++p;
    if (p == m) continue;
    std::swap(rows[rank], rows[p]);
    std::swap(combo[rank], combo[p]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r != rank && rows[r].get(col)) {
        rows[r] ^= rows[rank];
        add_combo(combo[r], combo[rank]);
      }
    }
    pivots.push_back(col);
    ++rank;
  }

  SymplecticVector residual = b;
  std::vector<bool> x(m, false);
  for (std::size_t r = 0; r < rank; ++r) {
    if (residual.get(pivots[r])) {
      residual ^= rows[r];
      add_combo(x, combo[r]);
    }
  }
  if (!residual.is_zero()) {
    throw NotInSpan("vector " + b.to_string() + " is not in the row span");
  }
  return x;
}

bool in_span(const std::vector<SymplecticVector>& basis,
             const SymplecticVector& v) {
  if (basis.empty()) return v.is_zero();
  try {
    solve(BinaryMatrix{v.n_qubits(), basis}, v);
    return true;
  } catch (const NotInSpan&) {
    return false;
  }
}

bool same_span(std::size_t n_qubits, const std::vector<SymplecticVector>& a,
               const std::vector<SymplecticVector>& b) {
  check_sizes(n_qubits, a);
  check_sizes(n_qubits, b);
  for (const auto& v : a) {
    if (!in_span(b, v)) return false;
  }
  for (const auto& v : b) {
    if (!in_span(a, v)) return false;
  }
  return true;
}

}  // namespace measure
