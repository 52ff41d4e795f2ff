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

#include "measure/oracle.hpp"
#include "measure/pauli.hpp"
#include "test_util.hpp"

using namespace measure;

namespace {

std::vector<PauliProduct> all_paulis(std::size_t n) {
  std::vector<PauliProduct> out;
  std::size_t total = 1;
  for (std::size_t q = 0; q < n; ++q) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<PauliAxis> axes(n);
    std::size_t c = code;
    for (std::size_t q = 0; q < n; ++q, c /= 4) axes[q] = static_cast<PauliAxis>(c % 4);
    out.emplace_back(axes);
  }
  return out;
}

std::complex<double> phase_of(int k) {
  static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

DenseOperator with_phase(const PauliProduct& p) { return phase_of(p.phase_exp()) * dense_matrix(p.with_phase(0)); }

}  // namespace

TEST_CASE("single-qubit products") {
  const auto x = PauliProduct::single(1, 0, PauliAxis::X);
  const auto y = PauliProduct::single(1, 0, PauliAxis::Y);
  const auto xy = multiply(x, y);
  CHECK(xy.axis(0) == PauliAxis::Z);
  CHECK(xy.phase_exp() == 1);
  CHECK(multiply(y, x).phase_exp() == 3);
  CHECK(multiply(x, PauliProduct(1)) == x);
}

TEST_CASE("X0X1 times Z0Z1 matches the dense product") {
  const auto a = PauliProduct::parse("X0 X1", 2);
  const auto b = PauliProduct::parse("Z0 Z1", 2);
  const auto ab = multiply(a, b);
  CHECK(ab.axes_string() == "Y0 Y1");
  CHECK(ab.phase_exp() == 2);
  CHECK((with_phase(ab) - dense_matrix(a) * dense_matrix(b)).norm() < 1e-12);
}

TEST_CASE("parse and render") {
  const auto p = PauliProduct::parse("Z3 X0", 5);
  CHECK(p.axes_string() == "X0 Z3");
  CHECK(p.weight() == 2);
  CHECK(p.support() == std::vector<std::size_t>{0, 3});
  CHECK(PauliProduct::parse("I", 3).is_identity_axes());
  CHECK(PauliProduct::parse("I", 3).axes_string() == "I");
  CHECK(p.with_phase(2).to_string() == "-X0 Z3");
  CHECK_THROWS(PauliProduct::parse("X5", 5));
  CHECK_THROWS(PauliProduct::parse("X1 Z1", 5));
  CHECK_THROWS(PauliProduct::parse("Q1", 5));
  CHECK_THROWS(PauliProduct::parse("", 5));
}

TEST_CASE("words past 64 qubits") {
  const auto p = PauliProduct::parse("X1 Y64 Z99", 100);
  CHECK(p.axis(64) == PauliAxis::Y);
  CHECK(p.axes_string() == "X1 Y64 Z99");
  const auto q = PauliProduct::parse("Z64", 100);
  CHECK_FALSE(commutes(p, q));
  CHECK(multiply(p, q).axis(64) == PauliAxis::X);
  CHECK(from_symplectic(to_symplectic(p)) == p);
}

TEST_CASE("symplectic encoding") {
  const auto p = PauliProduct::parse("X0 Y1 Z2", 4);
  CHECK(to_symplectic(p).to_string() == "1100;0110");
  CHECK(to_symplectic(p) == SymplecticVector::parse("1100;0110"));
  CHECK(to_symplectic(PauliProduct(2)).is_zero());
  for (const auto& q : all_paulis(2)) CHECK(from_symplectic(to_symplectic(q)) == q);
}

TEST_CASE("symplectic inner product examples") {
  const auto v = [](const char* s) { return to_symplectic(PauliProduct::parse(s, 2)); };
  CHECK_FALSE(symplectic_inner(v("X0 X1"), v("Y0 Y1")));
  CHECK(symplectic_inner(v("X0"), v("Z0")));
  CHECK(commutes(PauliProduct::parse("X0 X1", 2), PauliProduct::parse("X0", 2)));
  CHECK(qwc(PauliProduct::parse("X0 X1", 2), PauliProduct::parse("X0", 2)));
  CHECK(commutes(PauliProduct::parse("X0 X1", 2), PauliProduct::parse("Y0 Y1", 2)));
  CHECK_FALSE(qwc(PauliProduct::parse("X0 X1", 2), PauliProduct::parse("Y0 Y1", 2)));
  CHECK_THROWS_AS(commutes(PauliProduct(2), PauliProduct(3)), DimensionMismatch);
}

TEST_CASE("all 256 two-qubit pairs agree with dense commutators") {
  const auto ps = all_paulis(2);
  int checked = 0;
  for (const auto& p : ps) {
    CHECK_FALSE(symplectic_inner(to_symplectic(p), to_symplectic(p)));
    for (const auto& q : ps) {
      const DenseOperator mp = dense_matrix(p), mq = dense_matrix(q);
      const bool dense_commute = (mp * mq - mq * mp).norm() < 1e-12;
      const bool dense_anti = (mp * mq + mq * mp).norm() < 1e-12;
      CHECK(commutes(p, q) == dense_commute);
      CHECK(symplectic_inner(to_symplectic(p), to_symplectic(q)) == dense_anti);
      if (qwc(p, q)) CHECK(commutes(p, q));
      CHECK(to_symplectic(multiply(p, q)) == (to_symplectic(p) ^ to_symplectic(q)));
      ++checked;
    }
  }
  CHECK(checked == 256);
}

TEST_CASE("random triples: associativity and phases") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ph(0, 3);
  for (int t = 0; t < 1000; ++t) {
    const auto a = testing::random_pauli(2, rng).with_phase(ph(rng));
    const auto b = testing::random_pauli(2, rng).with_phase(ph(rng));
    const auto c = testing::random_pauli(2, rng).with_phase(ph(rng));
    const auto left = multiply(multiply(a, b), c);
    const auto right = multiply(a, multiply(b, c));
    REQUIRE(left == right);
    REQUIRE((with_phase(left) - with_phase(a) * with_phase(b) * with_phase(c)).norm() < 1e-12);
  }
}

TEST_CASE("symplectic vector ordering and swap") {
  const auto a = SymplecticVector::parse("10;01");
  const auto b = SymplecticVector::parse("01;10");
  CHECK(b < a);
  CHECK(a.swapped() == SymplecticVector::parse("01;10"));
  CHECK(a.popcount() == 2);
  CHECK_THROWS(SymplecticVector::parse("10;0"));
}
