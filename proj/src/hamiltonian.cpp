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

#include "measure/hamiltonian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

namespace measure {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

double parse_coefficient(std::string_view tok, std::size_t line) {
  double value = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc{} && ptr == last && std::isfinite(value)) return value;
  if (tok.find_first_of("ijIJ") != std::string_view::npos) {
    fail(line, "non-real coefficient '" + std::string(tok) + "'");
  }
  fail(line, "malformed coefficient '" + std::string(tok) + "'");
}

struct RawTerm {
  std::size_t line;
  double coeff;
  std::vector<std::pair<std::size_t, PauliAxis>> factors;
};

RawTerm parse_term_line(std::string_view body, std::size_t line) {
  RawTerm raw{line, 0.0, {}};
  std::size_t pos = 0;
  auto next_token = [&]() -> std::string_view {
    while (pos < body.size() &&
           std::isspace(static_cast<unsigned char>(body[pos]))) {
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < body.size() &&
           !std::isspace(static_cast<unsigned char>(body[pos]))) {
      ++pos;
    }
    return body.substr(start, pos - start);
  };
  raw.coeff = parse_coefficient(next_token(), line);
  bool identity = false;
  for (std::string_view tok = next_token(); !tok.empty(); tok = next_token()) {
    if (tok == "I") {
      identity = true;
      continue;
    }
    const char head = tok.front();
    if (head != 'X' && head != 'Y' && head != 'Z') {
      fail(line, "malformed token '" + std::string(tok) + "'");
    }
    std::size_t qubit = 0;
    auto [ptr, ec] =
        std::from_chars(tok.data() + 1, tok.data() + tok.size(), qubit);
    if (tok.size() < 2 || ec != std::errc{} ||
        ptr != tok.data() + tok.size()) {
      fail(line, "malformed token '" + std::string(tok) + "'");
    }
    for (const auto& [q, a] : raw.factors) {
      if (q == qubit) {
        fail(line, "qubit " + std::to_string(qubit) + " appears twice");
      }
    }
    raw.factors.emplace_back(qubit, axis_from_char(head));
  }
  if (identity && !raw.factors.empty()) {
    fail(line, "'I' cannot be combined with other factors");
  }
  if (!identity && raw.factors.empty()) fail(line, "missing term");
  return raw;
}

std::string axes_key(const PauliProduct& p) {
  std::string key;
  const auto append = [&key](const std::vector<std::uint64_t>& words) {
    key.append(reinterpret_cast<const char*>(words.data()),
               words.size() * sizeof(std::uint64_t));
  };
  append(p.x_words());
  append(p.z_words());
  return key;
}

}  // namespace

Hamiltonian::Hamiltonian(std::size_t n_qubits, double drop_tolerance)
    : n_qubits_(n_qubits), drop_tolerance_(drop_tolerance) {
  if (n_qubits == 0) {
    throw std::invalid_argument("Hamiltonian needs at least one qubit");
  }
}

void Hamiltonian::add(double coeff, const PauliProduct& op) {
  if (op.n_qubits() != n_qubits_) {
    throw DimensionMismatch("term has " + std::to_string(op.n_qubits()) +
                            " qubits, Hamiltonian has " +
                            std::to_string(n_qubits_));
  }
  if (op.phase_exp() != 0) {
    throw std::invalid_argument("Hamiltonian terms must carry phase 0");
  }
  auto [it, inserted] = index_.try_emplace(axes_key(op), terms_.size());
  if (!inserted) {
    terms_[it->second].coeff += coeff;
    return;
  }
  terms_.push_back({coeff, op});
}

void Hamiltonian::add(double coeff, std::string_view term_text) {
  add(coeff, PauliProduct::parse(term_text, n_qubits_));
}

void Hamiltonian::normalize() {
  std::erase_if(terms_, [tol = drop_tolerance_](const HamiltonianTerm& t) {
    return std::abs(t.coeff) < tol;
  });
  index_.clear();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    index_.emplace(axes_key(terms_[i].op), i);
  }
}

Hamiltonian Hamiltonian::subset(const std::vector<std::size_t>& indices) const {
  Hamiltonian out(n_qubits_, drop_tolerance_);
  for (std::size_t i : indices) {
    if (i >= terms_.size()) {
      throw std::out_of_range("term index " + std::to_string(i) +
                              " out of range");
    }
    out.add(terms_[i].coeff, terms_[i].op);
  }
  return out;
}

Hamiltonian parse_hamiltonian(std::istream& in, double drop_tolerance) {
  std::vector<RawTerm> raw_terms;
  std::optional<std::size_t> declared;
  std::string line_buf;
  std::size_t line_no = 0;
  while (std::getline(in, line_buf)) {
    ++line_no;
    std::string_view line = line_buf;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("qubits:")) {
      const std::string_view num = trim(line.substr(7));
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
      if (ec != std::errc{} || ptr != num.data() + num.size() || n == 0) {
        fail(line_no, "malformed qubit header");
      }
      declared = n;
      continue;
    }
    raw_terms.push_back(parse_term_line(line, line_no));
  }

  std::size_t n_qubits = 1;
  for (const auto& t : raw_terms) {
    for (const auto& [q, a] : t.factors) n_qubits = std::max(n_qubits, q + 1);
  }
  if (declared) {
    for (const auto& t : raw_terms) {
      for (const auto& [q, a] : t.factors) {
        if (q >= *declared) {
          fail(t.line, "qubit index " + std::to_string(q) +
                           " >= n_qubits " + std::to_string(*declared));
        }
      }
    }
    n_qubits = *declared;
  }

  Hamiltonian h(n_qubits, drop_tolerance);
  for (const auto& t : raw_terms) {
    std::vector<PauliAxis> axes(n_qubits, PauliAxis::I);
    for (const auto& [q, a] : t.factors) axes[q] = a;
    h.add(t.coeff, PauliProduct(axes));
  }
  h.normalize();
  return h;
}

Hamiltonian parse_hamiltonian(std::string_view text, double drop_tolerance) {
  std::istringstream in{std::string(text)};
  return parse_hamiltonian(in, drop_tolerance);
}

Hamiltonian load_hamiltonian(const std::string& path, double drop_tolerance) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_hamiltonian(in, drop_tolerance);
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string serialize_hamiltonian(const Hamiltonian& h) {
  std::string out = "qubits: " + std::to_string(h.n_qubits()) + "\n";
  for (const auto& t : h.terms()) {
    out += format_double(t.coeff);
    out += ' ';
    out += t.op.axes_string();
    out += '\n';
  }
  return out;
}

}  // namespace measure
