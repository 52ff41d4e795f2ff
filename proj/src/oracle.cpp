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

#include "measure/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace measure {
namespace {

using cd = std::complex<double>;

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(n) +
                      " qubits exceeds the cap of " + std::to_string(cap));
  }
}

Eigen::Matrix2cd single_qubit(PauliAxis a) {
  Eigen::Matrix2cd m;
  switch (a) {
    case PauliAxis::I: m << 1, 0, 0, 1; break;
    case PauliAxis::X: m << 0, 1, 1, 0; break;
    case PauliAxis::Y: m << 0, cd(0, -1), cd(0, 1), 0; break;
    case PauliAxis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::Matrix2cd gate_matrix(GateKind k) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  switch (k) {
    case GateKind::kH: m << r, r, r, -r; break;
    case GateKind::kS: m << 1, 0, 0, cd(0, 1); break;
    case GateKind::kSdg: m << 1, 0, 0, cd(0, -1); break;
    case GateKind::kX: return single_qubit(PauliAxis::X);
    case GateKind::kY: return single_qubit(PauliAxis::Y);
    case GateKind::kZ: return single_qubit(PauliAxis::Z);
    case GateKind::kCNOT: throw std::logic_error("CNOT is not single-qubit");
  }
  return m;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Kronecker product of per-qubit 2x2 factors, qubit 0 leftmost.
DenseOperator kron_chain(const std::vector<Eigen::Matrix2cd>& factors) {
  DenseOperator out = DenseOperator::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, DenseOperator(f));
  return out;
}

cd i_pow(int k) {
  static constexpr cd kTable[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kTable[((k % 4) + 4) % 4];
}

cd eighth_phase(int k) { return std::polar(1.0, M_PI / 4.0 * k); }

std::size_t bit_of(std::size_t n, std::size_t q) { return n - 1 - q; }

DenseOperator gate_operator(const Gate& g, std::size_t n) {
  if (g.kind != GateKind::kCNOT) {
    std::vector<Eigen::Matrix2cd> f(n, Eigen::Matrix2cd::Identity());
    f[g.target] = gate_matrix(g.kind);
    return kron_chain(f);
  }
  // CNOT = |0><0|_c (x) I + |1><1|_c (x) X_t
  std::vector<Eigen::Matrix2cd> p0(n, Eigen::Matrix2cd::Identity());
  std::vector<Eigen::Matrix2cd> p1(n, Eigen::Matrix2cd::Identity());
  Eigen::Matrix2cd zero_proj, one_proj;
  zero_proj << 1, 0, 0, 0;
  one_proj << 0, 0, 0, 1;
  p0[g.control] = zero_proj;
  p1[g.control] = one_proj;
  p1[g.target] = single_qubit(PauliAxis::X);
  return kron_chain(p0) + kron_chain(p1);
}

// Applies a gate in place to every column of m.
void apply_gate(const Gate& g, std::size_t n, DenseOperator& m) {
  const auto dim = static_cast<std::size_t>(m.rows());
  const std::size_t tmask = std::size_t{1} << bit_of(n, g.target);
  if (g.kind == GateKind::kCNOT) {
    const std::size_t cmask = std::size_t{1} << bit_of(n, g.control);
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & cmask) && !(i & tmask)) {
        m.row(static_cast<Eigen::Index>(i))
            .swap(m.row(static_cast<Eigen::Index>(i | tmask)));
      }
    }
    return;
  }
  const Eigen::Matrix2cd u = gate_matrix(g.kind);
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & tmask) continue;
    const auto r0 = static_cast<Eigen::Index>(i);
    const auto r1 = static_cast<Eigen::Index>(i | tmask);
    const Eigen::RowVectorXcd a0 = m.row(r0);
    const Eigen::RowVectorXcd a1 = m.row(r1);
    m.row(r0) = u(0, 0) * a0 + u(0, 1) * a1;
    m.row(r1) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

}  // namespace

DenseOperator dense_matrix(const PauliProduct& p) {
  const std::size_t n = p.n_qubits();
  require_cap(n, kDenseMaxQubits, "dense_matrix");
  std::vector<Eigen::Matrix2cd> f;
  f.reserve(n);
  for (std::size_t q = 0; q < n; ++q) f.push_back(single_qubit(p.axis(q)));
  return i_pow(p.phase_exp()) * kron_chain(f);
}

DenseOperator dense_matrix(const Hamiltonian& h) {
  require_cap(h.n_qubits(), kDenseMaxQubits, "dense_matrix");
  const auto dim = Eigen::Index{1} << h.n_qubits();
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (const auto& t : h.terms()) out += t.coeff * dense_matrix(t.op);
  return out;
}

DenseOperator dense_matrix(const PauliSum& s) {
  require_cap(s.n_qubits, kDenseMaxQubits, "dense_matrix");
  const auto dim = Eigen::Index{1} << s.n_qubits;
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (const auto& t : s.terms) out += t.coeff * dense_matrix(t.op);
  return out;
}

DenseOperator gate_unitary(const Gate& g, std::size_t n_qubits) {
  require_cap(n_qubits, kDenseMaxQubits, "gate_unitary");
  return gate_operator(g, n_qubits);
}

DenseOperator dense_matrix(const CliffordCircuit& c) {
  require_cap(c.n_qubits, kDenseMaxQubits, "dense_matrix");
  const auto dim = Eigen::Index{1} << c.n_qubits;
  DenseOperator out = DenseOperator::Identity(dim, dim);
  for (const auto& g : c.gates) apply_gate(g, c.n_qubits, out);
  return eighth_phase(c.global_phase_exp) * out;
}

DenseState simulate_circuit(const CliffordCircuit& c, const DenseState& state) {
  require_cap(c.n_qubits, kDenseMaxQubits, "simulate_circuit");
  if (state.size() != (Eigen::Index{1} << c.n_qubits)) {
    throw DimensionMismatch("simulate_circuit: state size mismatch");
  }
  DenseOperator psi = state;
  for (const auto& g : c.gates) apply_gate(g, c.n_qubits, psi);
  return eighth_phase(c.global_phase_exp) * psi.col(0);
}

std::vector<double> spectrum(const Hamiltonian& h) {
  require_cap(h.n_qubits(), kSpectrumMaxQubits, "spectrum");
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(dense_matrix(h),
                                                      Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

bool spectra_equal(const Hamiltonian& h1, const Hamiltonian& h2, double tol) {
  if (h1.n_qubits() != h2.n_qubits()) return false;
  const auto a = spectrum(h1);
  const auto b = spectrum(h2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

DenseState random_state(std::size_t n_qubits, std::uint64_t seed) {
  require_cap(n_qubits, kDenseMaxQubits, "random_state");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  DenseState psi(Eigen::Index{1} << n_qubits);
  for (Eigen::Index i = 0; i < psi.size(); ++i) psi[i] = cd(gauss(rng), gauss(rng));
  return psi / psi.norm();
}

double expectation_invariance(const Hamiltonian& h, const Hamiltonian& a,
                              const DenseOperator& u, std::size_t trials,
                              std::uint64_t seed) {
  require_cap(h.n_qubits(), kExpectationMaxQubits, "expectation_invariance");
  const DenseOperator hm = dense_matrix(h);
  const DenseOperator am = dense_matrix(a);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const DenseState psi = random_state(h.n_qubits(), seed + t);
    const DenseState phi = u * psi;
    const cd lhs = psi.dot(hm * psi);
    const cd rhs = phi.dot(am * phi);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double max_deviation_up_to_phase(const DenseOperator& a,
                                 const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("max_deviation_up_to_phase: shape mismatch");
  }
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return a.cwiseAbs().maxCoeff();
  cd phase = a(r, c) / b(r, c);
  if (std::abs(phase) > 0) phase /= std::abs(phase);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

CompatibilityCounts count_compatible(const PauliProduct& tmpl) {
  const std::size_t n = tmpl.n_qubits();
  require_cap(n, kCountMaxQubits, "count_compatible");
  CompatibilityCounts counts;
  const std::size_t total = std::size_t{1} << (2 * n);
  std::vector<PauliAxis> axes(n);
  for (std::size_t code = 0; code < total; ++code) {
    for (std::size_t q = 0; q < n; ++q) {
      axes[q] = static_cast<PauliAxis>((code >> (2 * q)) & 3U);
    }
    const PauliProduct p(axes);
    if (qwc(p, tmpl)) ++counts.n_qwc;
    if (commutes(p, tmpl)) ++counts.n_commuting;
  }
  return counts;
}

}  // namespace measure
