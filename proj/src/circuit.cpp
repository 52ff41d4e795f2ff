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

#include "measure/circuit.hpp"

#include <charconv>
#include <sstream>

namespace measure {
namespace {

int mod8(int v) { return ((v % 8) + 8) % 8; }

std::size_t parse_index(std::string_view tok, std::size_t n_qubits,
                        std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("circuit line " + std::to_string(line) +
                     ": bad qubit index '" + std::string(tok) + "'");
  }
  if (v >= n_qubits) {
    throw ParseError("circuit line " + std::to_string(line) + ": qubit " +
                     std::to_string(v) + " out of range");
  }
  return v;
}

}  // namespace

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::kH: return "H";
    case GateKind::kS: return "S";
    case GateKind::kSdg: return "SDG";
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
    case GateKind::kCNOT: return "CNOT";
  }
  return "?";
}

GateKind parse_gate_name(std::string_view name) {
  for (auto k : {GateKind::kH, GateKind::kS, GateKind::kSdg, GateKind::kX,
                 GateKind::kY, GateKind::kZ, GateKind::kCNOT}) {
    if (gate_name(k) == name) return k;
  }
  throw ParseError("unknown gate '" + std::string(name) + "'");
}

std::vector<std::size_t> Gate::qubits() const {
  if (is_two_qubit()) return {control, target};
  return {target};
}

void CliffordCircuit::append(const CliffordCircuit& other) {
  if (other.n_qubits != n_qubits) {
    throw DimensionMismatch("append: circuits act on different qubit counts");
  }
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  exponents.insert(exponents.end(), other.exponents.begin(),
                   other.exponents.end());
  add_phase(other.global_phase_exp);
}

void CliffordCircuit::add_phase(int eighths) {
  global_phase_exp = mod8(global_phase_exp + eighths);
}

CliffordCircuit inverse(const CliffordCircuit& c) {
  CliffordCircuit out{c.n_qubits, {}, mod8(-c.global_phase_exp), {}};
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::kS) {
      g.kind = GateKind::kSdg;
    } else if (g.kind == GateKind::kSdg) {
      g.kind = GateKind::kS;
    }
    out.gates.push_back(g);
  }
  return out;
}

ExponentSequence exponent_sequence(const PauliProduct& tau,
                                   const PauliProduct& sigma) {
  if (tau.n_qubits() != sigma.n_qubits()) {
    throw DimensionMismatch("exponent_sequence: qubit count mismatch");
  }
  if (sigma.weight() != 1) {
    throw std::invalid_argument("exponent_sequence: sigma must be single-qubit");
  }
  if (commutes(tau, sigma)) {
    throw std::invalid_argument("exponent_sequence: tau and sigma commute");
  }
  const PauliProduct s = sigma.with_phase(0);
  return ExponentSequence{6, {PauliExponent{s}, PauliExponent{tau.with_phase(0)},
                              PauliExponent{s}}};
}

CliffordCircuit decompose_exponent(const PauliExponent& e) {
  const std::size_t n = e.pauli.n_qubits();
  const std::vector<std::size_t> support = e.pauli.support();
  if (support.empty()) {
    throw std::invalid_argument("decompose_exponent: identity exponent");
  }
  CliffordCircuit c{n, {}, 0, {}};
  for (std::size_t q : support) {
    switch (e.pauli.axis(q)) {
      case PauliAxis::X:
        c.gates.push_back(Gate::single(GateKind::kH, q));
        break;
      case PauliAxis::Y:
        c.gates.push_back(Gate::single(GateKind::kSdg, q));
        c.gates.push_back(Gate::single(GateKind::kH, q));
        break;
      default:
        break;
    }
  }
  const std::size_t last = support.back();
  for (std::size_t k = 0; k + 1 < support.size(); ++k) {
    c.gates.push_back(Gate::cnot(support[k], last));
  }
  // exp(i pi/4 Z) = exp(i pi/4) S^dag
  c.gates.push_back(Gate::single(GateKind::kSdg, last));
  c.add_phase(1);
  for (std::size_t k = support.size() - 1; k-- > 0;) {
    c.gates.push_back(Gate::cnot(support[k], last));
  }
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    switch (e.pauli.axis(*it)) {
      case PauliAxis::X:
        c.gates.push_back(Gate::single(GateKind::kH, *it));
        break;
      case PauliAxis::Y:
        c.gates.push_back(Gate::single(GateKind::kH, *it));
        c.gates.push_back(Gate::single(GateKind::kS, *it));
        break;
      default:
        break;
    }
  }
  return c;
}

CliffordCircuit synthesize(const TauSigmaBasis& basis) {
  if (basis.taus.size() != basis.n_qubits ||
      basis.sigmas.size() != basis.n_qubits) {
    throw InvalidGroup("synthesize: incomplete basis");
  }
  CliffordCircuit out{basis.n_qubits, {}, 0, {}};
  for (std::size_t i = 0; i < basis.n_qubits; ++i) {
    const ExponentSequence seq = exponent_sequence(basis.taus[i], basis.sigma(i));
    out.add_phase(seq.global_phase_exp);
    // The operator product is E(s) E(t) E(s); the rightmost factor acts first.
    for (auto it = seq.factors.rbegin(); it != seq.factors.rend(); ++it) {
      CliffordCircuit part = decompose_exponent(*it);
      part.exponents.push_back(*it);
      out.append(part);
    }
  }
  return out;
}

GateCounts gate_counts(const CliffordCircuit& c) {
  GateCounts counts;
  for (const auto& g : c.gates) {
    if (g.is_two_qubit()) {
      ++counts.cnots;
    } else {
      ++counts.singles;
    }
  }
  // Exponents come in (sigma, tau, sigma) triples.
  for (std::size_t k = 0; k < c.exponents.size(); ++k) {
    if (k % 3 == 1) {
      ++counts.tau_exponents;
    } else {
      ++counts.sigma_exponents;
    }
  }
  return counts;
}

std::string circuit_to_text(const CliffordCircuit& c) {
  std::ostringstream out;
  out << "# qubits: " << c.n_qubits << "\n";
  out << "# global_phase_exp: " << c.global_phase_exp << "\n";
  for (const auto& g : c.gates) {
    out << gate_name(g.kind);
    for (std::size_t q : g.qubits()) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

CliffordCircuit circuit_from_text(std::string_view text, std::size_t n_qubits) {
  CliffordCircuit c{n_qubits, {}, 0, {}};
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (head == "#") {
      std::string key;
      int value = 0;
      if ((fields >> key >> value) && key == "global_phase_exp:") {
        c.global_phase_exp = mod8(value);
      }
      continue;
    }
    const GateKind kind = parse_gate_name(head);
    std::vector<std::size_t> qs;
    for (std::string tok; fields >> tok;) {
      qs.push_back(parse_index(tok, n_qubits, line_no));
    }
    const std::size_t want = kind == GateKind::kCNOT ? 2 : 1;
    if (qs.size() != want || (want == 2 && qs[0] == qs[1])) {
      throw ParseError("circuit line " + std::to_string(line_no) +
                       ": wrong operands for " + head);
    }
    c.gates.push_back(want == 2 ? Gate::cnot(qs[0], qs[1])
                                : Gate::single(kind, qs[0]));
  }
  return c;
}

}  // namespace measure
