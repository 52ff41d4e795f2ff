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

#include <map>
#include <random>

#include "measure/clifford_transform.hpp"
#include "measure/gf2.hpp"
#include "measure/oracle.hpp"
#include "measure/plan.hpp"
#include "test_util.hpp"

using namespace measure;

namespace {

std::map<std::string, double> by_axes(const Hamiltonian& h) {
  std::map<std::string, double> out;
  for (const auto& t : h.terms()) out[t.op.axes_string()] = t.coeff;
  return out;
}

std::map<std::string, std::complex<double>> by_axes(const PauliSum& s) {
  std::map<std::string, std::complex<double>> out;
  for (const auto& t : s.terms) out[t.op.axes_string()] = t.coeff;
  return out;
}

std::vector<PauliProduct> paulis(std::initializer_list<const char*> texts, std::size_t n) {
  std::vector<PauliProduct> out;
  for (const char* t : texts) out.push_back(PauliProduct::parse(t, n));
  return out;
}

TauSigmaBasis h2_reference_basis() {
  return {4,
          paulis({"Z3", "Z1", "Y2 Y0", "X2 X0"}, 4),
          {{3, PauliAxis::X}, {1, PauliAxis::X}, {2, PauliAxis::X}, {0, PauliAxis::Y}}};
}

}  // namespace

TEST_CASE("find_tau") {
  const auto model = parse_hamiltonian("1 X0 X1\n1 Z0 Z1\n");
  CHECK(find_tau(model) == paulis({"X0 X1", "Z0 Z1"}, 2));
  CHECK(find_tau(parse_hamiltonian("1 Z0\n")) == paulis({"Z0"}, 1));

  const auto h2 = load_hamiltonian(testing::fixture("h2_group1.ham"));
  const auto taus = find_tau(h2);
  REQUIRE(taus.size() == 4);
  std::vector<SymplecticVector> vs;
  for (const auto& t : taus) vs.push_back(to_symplectic(t));
  CHECK(is_isotropic(vs));
  CHECK(row_reduce(BinaryMatrix{4, vs}).rank == 4);
  for (const auto& term : h2.terms()) CHECK(in_span(vs, to_symplectic(term.op)));

  CHECK_THROWS_AS(find_tau(parse_hamiltonian("1 X0\n1 Z0\n")), InvalidGroup);
}

TEST_CASE("find_tau pads a low-rank group to N") {
  const auto h = parse_hamiltonian("qubits: 3\n1 Z0 Z1\n0.5 I\n");
  const auto taus = find_tau(h);
  CHECK(taus.size() == 3);
  CHECK(check_basis(find_sigma(taus), h).empty());
}

TEST_CASE("find_sigma") {
  const auto model = find_sigma(paulis({"X0 X1", "Z0 Z1"}, 2));
  CHECK(model.sigmas == std::vector<SigmaAssignment>{{0, PauliAxis::Z}, {1, PauliAxis::X}});
  CHECK(model.taus == paulis({"X0 X1", "Z0 Z1"}, 2));

  const auto one = find_sigma(paulis({"Z0"}, 1));
  CHECK(one.sigmas == std::vector<SigmaAssignment>{{0, PauliAxis::X}});

  const auto h2 = find_sigma(h2_reference_basis().taus);
  CHECK(check_basis(h2).empty());
  CHECK(check_basis(h2_reference_basis()).empty());
}

TEST_CASE("find_sigma clears earlier taus too") {
  // sigma_2 = X1 anticommutes with tau_1 = X0 Z1 unless tau_1 is updated.
  const auto b = find_sigma(paulis({"X0 Z1", "Z1"}, 2));
  CHECK(check_basis(b).empty());
  CHECK(same_span(2, {to_symplectic(b.taus[0]), to_symplectic(b.taus[1])},
                  {to_symplectic(PauliProduct::parse("X0 Z1", 2)),
                   to_symplectic(PauliProduct::parse("Z1", 2))}));
}

TEST_CASE("check_basis flags broken bases") {
  auto b = h2_reference_basis();
  b.sigmas[3].axis = PauliAxis::X;  // X0 commutes with X2 X0
  CHECK_FALSE(check_basis(b).empty());
  auto c = h2_reference_basis();
  c.taus[3] = PauliProduct::parse("Z3", 4);
  CHECK_FALSE(check_basis(c).empty());
  const auto not_in = parse_hamiltonian("qubits: 4\n1 X1\n");
  CHECK_FALSE(check_basis(h2_reference_basis(), not_in).empty());
}

TEST_CASE("expand_in_tau") {
  const auto b = h2_reference_basis();
  const auto e = expand_in_tau(PauliProduct::parse("Z3 Z1", 4), b);
  CHECK(e.subset == std::vector<std::size_t>{0, 1});
  CHECK(e.sign() == 1);
  const auto zz = expand_in_tau(PauliProduct::parse("Z2 Z0", 4), b);
  CHECK(zz.subset == std::vector<std::size_t>{2, 3});
  CHECK(zz.sign() == -1);
  for (std::size_t j = 0; j < 4; ++j) {
    const auto t = expand_in_tau(b.taus[j], b);
    CHECK(t.subset == std::vector<std::size_t>{j});
    CHECK(t.sign() == 1);
  }
  const auto id = expand_in_tau(PauliProduct(4), b);
  CHECK(id.subset.empty());
  CHECK(id.sign() == 1);
  CHECK_THROWS_AS(expand_in_tau(PauliProduct::parse("X1", 4), b), NotInSpan);
}

TEST_CASE("model transform") {
  const auto h = parse_hamiltonian("0.7 X0 X1\n-0.3 Z0 Z1\n");
  const auto basis = find_sigma(find_tau(h));
  const auto t = transform_group(h, basis);
  CHECK(by_axes(t.a_n) == std::map<std::string, double>{{"Z0", 0.7}, {"X1", -0.3}});
  CHECK(spectra_equal(h, t.a_n));
}

TEST_CASE("H2 group with the reference basis") {
  const auto h = load_hamiltonian(testing::fixture("h2_group1.ham"));
  const auto t = transform_group(h, h2_reference_basis());
  const std::map<std::string, double> expected{
      {"I", -0.4738},         {"X1", 0.1412},          {"X1 Y0", 0.0558},
      {"X2 Y0", -0.0868},     {"X2 X1", 0.0558},       {"X2 X1 Y0", -0.1425},
      {"X3 X1", 0.1489},      {"X3 X1 Y0", 0.0558},    {"X3 X2 Y0", -0.0868},
      {"X3 X2 X1", 0.0558},   {"X3 X2 X1 Y0", -0.1425}};
  const auto got = by_axes(t.a_n);
  REQUIRE(got.size() == expected.size());
  for (const auto& [k, v] : expected) {
    REQUIRE(got.count(PauliProduct::parse(k, 4).axes_string()) == 1);
    CHECK(got.at(PauliProduct::parse(k, 4).axes_string()) == doctest::Approx(v).epsilon(1e-4));
  }
  CHECK(is_qwc_group(t.a_n));
}

TEST_CASE("symbolic unitaries") {
  const auto model = build_unitary_symbolic(find_sigma(paulis({"X0 X1", "Z0 Z1"}, 2)));
  const auto m = by_axes(model);
  REQUIRE(m.size() == 4);
  CHECK(std::abs(m.at("Y0 Y1") - std::complex<double>(-0.5, 0)) < 1e-14);
  CHECK(std::abs(m.at("X0") - 0.5) < 1e-14);
  CHECK(std::abs(m.at("Z1") - 0.5) < 1e-14);
  CHECK(std::abs(m.at("Z0 X1") - 0.5) < 1e-14);

  const auto h = build_unitary_symbolic({1, paulis({"Z0"}, 1), {{0, PauliAxis::X}}});
  const auto hm = by_axes(h);
  CHECK(std::abs(hm.at("Z0") - 1 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(hm.at("X0") - 1 / std::sqrt(2.0)) < 1e-14);

  const auto u1 = build_unitary_symbolic(h2_reference_basis());
  CHECK(u1.terms.size() == 16);
  CHECK(std::abs(by_axes(u1).at(PauliProduct::parse("X3 Z2 X1 Z0", 4).axes_string()) + 0.25) <
        1e-14);

  TauSigmaBasis big{9, {}, {}};
  CHECK_THROWS_AS(build_unitary_symbolic(big), CapExceeded);
}

TEST_CASE("conjugation both ways maps tau to sigma") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto group = testing::random_fc_group(n, 2 * n, rng);
    const auto basis = find_sigma(find_tau(group));
    REQUIRE(check_basis(basis, group).empty());
    const DenseOperator u = dense_matrix(build_unitary_symbolic(basis));
    const auto dim = u.rows();
    CHECK((u * u.adjoint() - DenseOperator::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-10);
    for (std::size_t i = 0; i < n; ++i) {
      const DenseOperator tau = dense_matrix(basis.taus[i]);
      const DenseOperator sigma = dense_matrix(basis.sigma(i));
      CHECK((u.adjoint() * tau * u - sigma).cwiseAbs().maxCoeff() < 1e-10);
      CHECK((u * tau * u.adjoint() - sigma).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("random groups: QWC output, preserved magnitudes, real phases") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 8;
    const auto group = testing::random_fc_group(n, 1 + t % (3 * n), rng, t % 2 == 0);
    const auto basis = find_sigma(find_tau(group));
    REQUIRE(check_basis(basis, group).empty());
    const auto tg = transform_group(group, basis);
    CHECK(is_qwc_group(tg.a_n));
    REQUIRE(tg.a_n.size() == group.size());
    for (std::size_t k = 0; k < group.size(); ++k) {
      CHECK(std::abs(tg.a_n[k].coeff) == std::abs(group[k].coeff));
      CHECK(tg.a_n[k].coeff == group[k].coeff * tg.expansions[k].sign());
    }
  }
}

TEST_CASE("constant-only group passes through") {
  const auto h = parse_hamiltonian("qubits: 2\n0.25 I\n");
  const auto basis = find_sigma(find_tau(h));
  const auto t = transform_group(h, basis);
  REQUIRE(t.a_n.size() == 1);
  CHECK(t.a_n[0].op.is_identity_axes());
  CHECK(t.a_n[0].coeff == 0.25);
}
