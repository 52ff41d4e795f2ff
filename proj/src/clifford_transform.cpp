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

#include "measure/clifford_transform.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>

#include "measure/gf2.hpp"

namespace measure {
namespace {

PauliAxis anticommuting_axis(PauliAxis a) {
  switch (a) {
    case PauliAxis::X: return PauliAxis::Z;
    case PauliAxis::Y: return PauliAxis::X;
    case PauliAxis::Z: return PauliAxis::X;
    case PauliAxis::I: break;
  }
  throw std::logic_error("identity has no anticommuting axis");
}

std::vector<SymplecticVector> vectors_of(const std::vector<PauliProduct>& ps) {
  std::vector<SymplecticVector> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(to_symplectic(p));
  return out;
}

std::vector<PauliProduct> products_of(const SubspaceBasis& b) {
  std::vector<PauliProduct> out;
  out.reserve(b.vectors.size());
  for (const auto& v : b.vectors) out.push_back(from_symplectic(v));
  return out;
}

void require_valid_taus(const std::vector<PauliProduct>& taus) {
  if (taus.empty()) throw InvalidGroup("empty tau set");
  const std::size_t n = taus.front().n_qubits();
  if (taus.size() != n) {
    throw InvalidGroup("need " + std::to_string(n) + " taus, got " +
                       std::to_string(taus.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (taus[i].n_qubits() != n) throw DimensionMismatch("tau qubit count");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!commutes(taus[i], taus[j])) {
        throw InvalidGroup("taus " + std::to_string(i) + " and " +
                           std::to_string(j) + " anticommute");
      }
    }
  }
  if (row_reduce(BinaryMatrix{n, vectors_of(taus)}).rank != n) {
    throw InvalidGroup("taus are linearly dependent");
  }
}

}  // namespace

PauliProduct TauSigmaBasis::sigma(std::size_t i) const {
  return PauliProduct::single(n_qubits, sigmas.at(i).qubit, sigmas.at(i).axis);
}

std::vector<std::string> check_basis(const TauSigmaBasis& basis) {
  std::vector<std::string> problems;
  const std::size_t n = basis.n_qubits;
  if (basis.taus.size() != n || basis.sigmas.size() != n) {
    problems.push_back("basis needs " + std::to_string(n) + " taus and sigmas");
    return problems;
  }
  try {
    require_valid_taus(basis.taus);
  } catch (const std::exception& e) {
    problems.emplace_back(e.what());
  }
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = basis.sigmas[i];
    if (s.qubit >= n || s.axis == PauliAxis::I) {
      problems.push_back("sigma " + std::to_string(i) + " is not a Pauli on a valid qubit");
      return problems;
    }
    if (used[s.qubit]) {
      problems.push_back("sigma " + std::to_string(i) + " reuses qubit " +
                         std::to_string(s.qubit));
    }
    used[s.qubit] = true;
    if (basis.taus[i].phase_exp() != 0) {
      problems.push_back("tau " + std::to_string(i) + " carries a phase");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool anti = !commutes(basis.taus[i], basis.sigma(j));
      if (anti != (i == j)) {
        problems.push_back("tau " + std::to_string(i) +
                           (i == j ? " commutes with its sigma"
                                   : " anticommutes with sigma " + std::to_string(j)));
      }
    }
  }
  return problems;
}

std::vector<std::string> check_basis(const TauSigmaBasis& basis,
                                     const Hamiltonian& group) {
  std::vector<std::string> problems = check_basis(basis);
  if (!problems.empty()) return problems;
  for (std::size_t t = 0; t < group.size(); ++t) {
    for (std::size_t i = 0; i < basis.taus.size(); ++i) {
      if (!commutes(group[t].op, basis.taus[i])) {
        problems.push_back("term " + std::to_string(t) +
                           " anticommutes with tau " + std::to_string(i));
      }
    }
  }
  return problems;
}

void require_fully_commuting(const Hamiltonian& group) {
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = i + 1; j < group.size(); ++j) {
      if (!commutes(group[i].op, group[j].op)) {
        throw InvalidGroup("terms " + std::to_string(i) + " (" +
                           group[i].op.axes_string() + ") and " +
                           std::to_string(j) + " (" +
                           group[j].op.axes_string() + ") anticommute");
      }
    }
  }
}

std::vector<PauliProduct> find_tau(const Hamiltonian& group) {
  require_fully_commuting(group);
  const std::size_t n = group.n_qubits();
  BinaryMatrix m{n, {}};
  for (const auto& t : group.terms()) {
    if (!t.op.is_identity_axes()) m.rows.push_back(to_symplectic(t.op));
  }
  RowReduction reduced = row_reduce(m);
  if (reduced.rank == n) return products_of(reduced.basis);

  const SubspaceBasis complement = symplectic_complement(reduced.basis);
  SubspaceBasis lagrangian;
  try {
    lagrangian = lagrangian_extract(complement);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("find_tau: ") + e.what());
  }
  return products_of(lagrangian);
}

TauSigmaBasis find_sigma(std::vector<PauliProduct> taus) {
  require_valid_taus(taus);
  const std::size_t n = taus.size();
  for (auto& t : taus) t = t.with_phase(0);
  TauSigmaBasis basis{n, {}, {}};
  std::vector<bool> assigned(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t qubit = n;
    for (std::size_t q = 0; q < n; ++q) {
      if (!assigned[q] && taus[i].axis(q) != PauliAxis::I) {
        qubit = q;
        break;
      }
    }
    if (qubit == n) {
      throw std::logic_error("find_sigma: tau " + std::to_string(i) +
                             " has no free qubit");
    }
    assigned[qubit] = true;
    const SigmaAssignment s{qubit, anticommuting_axis(taus[i].axis(qubit))};
    basis.sigmas.push_back(s);
    const PauliProduct sigma = PauliProduct::single(n, s.qubit, s.axis);
    // Both earlier and later taus must commute with this sigma. Earlier taus
    // keep their own pairing because tau_i already commutes with their sigmas.
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i && !commutes(taus[k], sigma)) {
        taus[k] = multiply(taus[k], taus[i]).with_phase(0);
      }
    }
  }
  basis.taus = std::move(taus);
  return basis;
}

int TauExpansion::sign() const {
  if (phase_exp == 0) return 1;
  if (phase_exp == 2) return -1;
  throw std::logic_error("expansion phase is imaginary (i^" +
                         std::to_string(phase_exp) + ")");
}

TauExpansion expand_in_tau(const PauliProduct& term,
                           const TauSigmaBasis& basis) {
  if (term.n_qubits() != basis.n_qubits) {
    throw DimensionMismatch("expand_in_tau: qubit count mismatch");
  }
  TauExpansion out;
  PauliProduct product(basis.n_qubits);
  if (!term.is_identity_axes()) {
    const std::vector<bool> x = solve(
        BinaryMatrix{basis.n_qubits, vectors_of(basis.taus)},
        to_symplectic(term));
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (!x[k]) continue;
      out.subset.push_back(k);
      product = multiply(product, basis.taus[k]);
    }
  }
  out.phase_exp = ((term.phase_exp() - product.phase_exp()) % 4 + 4) % 4;
  return out;
}

TransformedGroup transform_group(const Hamiltonian& group,
                                 const TauSigmaBasis& basis,
                                 std::vector<std::size_t> source_indices) {
  if (source_indices.empty()) {
    source_indices.resize(group.size());
    std::iota(source_indices.begin(), source_indices.end(), 0);
  }
  if (source_indices.size() != group.size()) {
    throw std::invalid_argument("transform_group: index list size mismatch");
  }
  TransformedGroup out{std::move(source_indices),
                       Hamiltonian(group.n_qubits(), group.drop_tolerance()),
                       {}};
  for (const auto& t : group.terms()) {
    TauExpansion e = expand_in_tau(t.op, basis);
    PauliProduct image(group.n_qubits());
    for (std::size_t k : e.subset) image = multiply(image, basis.sigma(k));
    if (image.phase_exp() != 0) {
      throw std::logic_error("sigma product picked up a phase");
    }
    out.a_n.add(t.coeff * e.sign(), image);
    out.expansions.push_back(std::move(e));
  }
  if (out.a_n.size() != group.size()) {
    throw std::logic_error("transform_group: two terms mapped to one image");
  }
  return out;
}

PauliSum build_unitary_symbolic(const TauSigmaBasis& basis) {
  const std::size_t n = basis.n_qubits;
  if (n > kSymbolicUnitaryMaxQubits) {
    throw CapExceeded("symbolic unitary limited to " +
                      std::to_string(kSymbolicUnitaryMaxQubits) + " qubits");
  }
  if (basis.taus.size() != n || basis.sigmas.size() != n) {
    throw InvalidGroup("incomplete basis");
  }
  static constexpr std::complex<double> kIPow[] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  // Coefficients stay Gaussian integers until the final 2^(-n/2) scaling.
  std::vector<PauliSumTerm> terms{{1.0, PauliProduct(n)}};
  for (std::size_t i = 0; i < n; ++i) {
    const PauliProduct factors[] = {basis.taus[i], basis.sigma(i)};
    std::vector<PauliSumTerm> next;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& t : terms) {
      for (const auto& f : factors) {
        const PauliProduct prod = multiply(t.op, f);
        const std::complex<double> c = t.coeff * kIPow[prod.phase_exp()];
        const PauliProduct op = prod.with_phase(0);
        auto [it, inserted] = index.try_emplace(op.axes_string(), next.size());
        if (inserted) {
          next.push_back({c, op});
        } else {
          next[it->second].coeff += c;
        }
      }
    }
    std::erase_if(next, [](const PauliSumTerm& t) { return t.coeff == 0.0; });
    terms = std::move(next);
  }
  const double scale = std::pow(2.0, -0.5 * static_cast<double>(n));
  for (auto& t : terms) t.coeff *= scale;
  return PauliSum{n, std::move(terms)};
}

}  // namespace measure
