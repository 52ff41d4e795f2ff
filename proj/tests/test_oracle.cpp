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
#include "test_util.hpp"

using namespace measure;

namespace {
using cd = std::complex<double>;
}

TEST_CASE("Pauli matrices") {
  DenseOperator z(2, 2);
  z << 1, 0, 0, -1;
  CHECK(dense_matrix(PauliProduct::parse("Z0", 1)).isApprox(z));

  DenseOperator x(2, 2), y(2, 2);
  x << 0, 1, 1, 0;
  y << 0, cd(0, -1), cd(0, 1), 0;
  DenseOperator xy(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) xy.block(2 * i, 2 * j, 2, 2) = x(i, j) * y;
  }
  CHECK(dense_matrix(PauliProduct::parse("X0 Y1", 2)).isApprox(xy));
  CHECK(dense_matrix(PauliProduct::parse("Z0", 1).with_phase(1)).isApprox(cd(0, 1) * z));
}

TEST_CASE("model spectrum") {
  const auto s = spectrum(parse_hamiltonian("1 X0 X1\n1 Z0 Z1\n"));
  REQUIRE(s.size() == 4);
  CHECK(s[0] == doctest::Approx(-2.0));
  CHECK(s[1] == doctest::Approx(0.0));
  CHECK(s[2] == doctest::Approx(0.0));
  CHECK(s[3] == doctest::Approx(2.0));
}

TEST_CASE("spectra and expectations") {
  const auto h = parse_hamiltonian("0.7 X0 X1\n-0.3 Z0 Z1\n");
  CHECK(spectra_equal(h, h));
  CHECK(spectra_equal(h, parse_hamiltonian("0.7 Z0\n-0.3 X1\n")));
  CHECK_FALSE(spectra_equal(h, parse_hamiltonian("0.7 Z0\n-0.31 X1\n")));
  const DenseOperator id = DenseOperator::Identity(4, 4);
  CHECK(expectation_invariance(h, h, id, 20) < 1e-12);
  CHECK(expectation_invariance(h, parse_hamiltonian("0.7 Z0\n-0.3 X1\n"), id, 20) > 1e-3);
}

TEST_CASE("random states are normalized and seeded") {
  const auto a = random_state(4, 3);
  CHECK(std::abs(a.norm() - 1.0) < 1e-12);
  CHECK((a - random_state(4, 3)).norm() == 0.0);
  CHECK((a - random_state(4, 4)).norm() > 0.1);
}

TEST_CASE("phase-aligned deviation") {
  const DenseOperator a = dense_matrix(PauliProduct::parse("X0 Z1", 2));
  CHECK(max_deviation_up_to_phase(a, cd(0, 1) * a) < 1e-12);
  CHECK(max_deviation_up_to_phase(a, dense_matrix(PauliProduct::parse("X0", 2))) > 0.5);
}

TEST_CASE("compatibility counts") {
  const auto c4 = count_compatible(PauliProduct::parse("X1 X2 X3", 4));
  CHECK(c4.n_qwc == 32);
  CHECK(c4.n_commuting == 128);
  const auto id = count_compatible(PauliProduct(3));
  CHECK(id.n_qwc == 64);
  CHECK(id.n_commuting == 64);
  CHECK_THROWS_AS(count_compatible(PauliProduct(9)), CapExceeded);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(dense_matrix(PauliProduct(13)), CapExceeded);
  CHECK_THROWS_AS(spectrum(Hamiltonian(11)), CapExceeded);
}
