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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "measure/gf2.hpp"
#include "measure/hamiltonian.hpp"
#include "test_util.hpp"

using namespace measure;

namespace {

SymplecticVector sv(const char* bits) { return SymplecticVector::parse(bits); }

BinaryMatrix of_terms(const Hamiltonian& h) {
  BinaryMatrix m{h.n_qubits(), {}};
  for (const auto& t : h.terms()) m.rows.push_back(to_symplectic(t.op));
  return m;
}

SymplecticVector random_vector(std::size_t n, std::mt19937_64& rng) {
  return to_symplectic(testing::random_pauli(n, rng));
}

/// Random isotropic subspace: a random subset of a random Lagrangian basis.
std::vector<SymplecticVector> random_isotropic(std::size_t n, std::mt19937_64& rng) {
  auto basis = testing::random_lagrangian(n, rng);
  std::uniform_int_distribution<std::size_t> keep(0, n);
  basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(keep(rng)), basis.end());
  return basis;
}

}  // namespace

TEST_CASE("row_reduce ranks") {
  const auto h = parse_hamiltonian("1 Z0 Z1\n1 Z0 Z1 Z2\n1 Z0 Z1 Z3\n");
  CHECK(row_reduce(of_terms(h)).rank == 3);
  CHECK(row_reduce(BinaryMatrix{2, {sv("10;01"), sv("10;01")}}).rank == 1);
  CHECK(row_reduce(BinaryMatrix{2, {sv("00;00")}}).rank == 0);
  CHECK(row_reduce(of_terms(load_hamiltonian(testing::fixture("h2_group1.ham")))).rank == 4);
}

TEST_CASE("row_reduce is idempotent and matches brute-force span size") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 4;
    BinaryMatrix m{n, {}};
    for (int k = 0; k < 1 + t % 6; ++k) m.rows.push_back(random_vector(n, rng));
    const auto r = row_reduce(m);
    const auto again = row_reduce(BinaryMatrix{n, r.basis.vectors});
    CHECK(again.basis.vectors == r.basis.vectors);
    CHECK(again.pivots == r.pivots);

    std::set<std::string> span;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m.rows.size()); ++mask) {
      SymplecticVector v(n);
      for (std::size_t k = 0; k < m.rows.size(); ++k) {
        if ((mask >> k) & 1U) v ^= m.rows[k];
      }
      span.insert(v.to_string());
    }
    CHECK(span.size() == (std::size_t{1} << r.rank));
  }
}

TEST_CASE("symplectic complement examples") {
  const auto iso = make_subspace(2, {sv("10;00")});
  CHECK(iso.kind == SubspaceKind::kIsotropic);
  const auto perp = symplectic_complement(iso);
  CHECK(perp.dim() == 3);
  CHECK(perp.kind == SubspaceKind::kCoisotropic);
  CHECK(same_span(2, perp.vectors, {sv("10;00"), sv("01;00"), sv("00;01")}));

  const auto lag = make_subspace(2, {sv("10;00"), sv("01;00")});
  CHECK(lag.kind == SubspaceKind::kLagrangian);
  CHECK(same_span(2, symplectic_complement(lag).vectors, lag.vectors));

  const auto full = make_subspace(1, {sv("1;0"), sv("0;1")});
  CHECK(symplectic_complement(full).dim() == 0);
}

TEST_CASE("lagrangian_extract examples") {
  const auto lag = make_subspace(2, {sv("10;00"), sv("01;00")});
  CHECK(lagrangian_extract(lag).vectors == lag.vectors);

  const auto coiso = make_subspace(2, {sv("10;00"), sv("01;00"), sv("00;01")});
  const auto out = lagrangian_extract(coiso);
  CHECK(out.vectors == std::vector<SymplecticVector>{sv("10;00"), sv("01;00")});
  CHECK(out.kind == SubspaceKind::kLagrangian);

  CHECK_THROWS_AS(lagrangian_extract(make_subspace(2, {sv("10;00"), sv("00;10")})),
                  std::invalid_argument);
}

TEST_CASE("isotropic V sits inside the extracted Lagrangian") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 10;
    const auto v = random_isotropic(n, rng);
    const auto lag = lagrangian_extract(symplectic_complement(make_subspace(n, v)));
    REQUIRE(lag.dim() == n);
    CHECK(is_isotropic(lag.vectors));
    CHECK(row_reduce(BinaryMatrix{n, lag.vectors}).rank == n);
    for (const auto& x : v) CHECK(in_span(lag.vectors, x));
  }
}

TEST_CASE("double complement returns the original span") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 6;
    BinaryMatrix m{n, {}};
    for (std::size_t k = 0; k < 1 + t % (2 * n); ++k) m.rows.push_back(random_vector(n, rng));
    const auto v = row_reduce(m).basis;
    const auto perp = symplectic_complement(v);
    CHECK(v.dim() + perp.dim() == 2 * n);
    CHECK(same_span(n, symplectic_complement(perp).vectors, v.vectors));
    for (const auto& a : v.vectors) {
      for (const auto& b : perp.vectors) CHECK_FALSE(symplectic_inner(a, b));
    }
  }
}

TEST_CASE("solve") {
  const BinaryMatrix id{2, {sv("10;00"), sv("01;00"), sv("00;10"), sv("00;01")}};
  CHECK(solve(id, sv("00;10")) == std::vector<bool>{false, false, true, false});
  CHECK(solve(id, sv("00;00")) == std::vector<bool>(4, false));

  const BinaryMatrix taus{4, {to_symplectic(PauliProduct::parse("Z3", 4)),
                              to_symplectic(PauliProduct::parse("Z1", 4)),
                              to_symplectic(PauliProduct::parse("Y2 Y0", 4)),
                              to_symplectic(PauliProduct::parse("X2 X0", 4))}};
  CHECK(solve(taus, to_symplectic(PauliProduct::parse("Z3 Z1", 4))) ==
        std::vector<bool>{true, true, false, false});
  CHECK_THROWS_AS(solve(taus, to_symplectic(PauliProduct::parse("X1", 4))), NotInSpan);
}

TEST_CASE("solve reproduces random combinations") {
  std::mt19937_64 rng(21);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 8;
    BinaryMatrix m{n, {}};
    for (std::size_t k = 0; k < n + 2; ++k) m.rows.push_back(random_vector(n, rng));
    SymplecticVector b(n);
    for (const auto& r : m.rows) {
      if (coin(rng)) b ^= r;
    }
    const auto x = solve(m, b);
    SymplecticVector back(n);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k]) back ^= m.rows[k];
    }
    CHECK(back == b);
  }
}
