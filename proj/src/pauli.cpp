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

#include "measure/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace measure {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

bool test_bit(const std::vector<std::uint64_t>& w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void assign_bit(std::vector<std::uint64_t>& w, std::size_t i, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (v) {
    w[i / kWordBits] |= mask;
  } else {
    w[i / kWordBits] &= ~mask;
  }
}

int mod4(int v) { return ((v % 4) + 4) % 4; }

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": qubit count mismatch (" +
                            std::to_string(a) + " vs " + std::to_string(b) +
                            ")");
  }
}

}  // namespace

char axis_char(PauliAxis a) {
  switch (a) {
    case PauliAxis::I: return 'I';
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  return '?';
}

PauliAxis axis_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'I': return PauliAxis::I;
    case 'X': return PauliAxis::X;
    case 'Y': return PauliAxis::Y;
    case 'Z': return PauliAxis::Z;
    default:
      throw std::invalid_argument(std::string("not a Pauli axis: '") + c + "'");
  }
}

// ---------------------------------------------------------------------------
// PauliProduct

PauliProduct::PauliProduct(std::size_t n_qubits)
    : n_(n_qubits), x_(words_for(n_qubits)), z_(words_for(n_qubits)) {
  if (n_qubits == 0) {
    throw std::invalid_argument("PauliProduct needs at least one qubit");
  }
}

PauliProduct::PauliProduct(std::span<const PauliAxis> axes, int phase_exp)
    : PauliProduct(axes.size()) {
  for (std::size_t q = 0; q < axes.size(); ++q) set_axis(q, axes[q]);
  phase_ = mod4(phase_exp);
}

PauliProduct::PauliProduct(std::size_t n, std::vector<std::uint64_t> x,
                           std::vector<std::uint64_t> z, int phase)
    : n_(n), x_(std::move(x)), z_(std::move(z)), phase_(mod4(phase)) {}

PauliProduct PauliProduct::single(std::size_t n_qubits, std::size_t qubit,
                                  PauliAxis axis) {
  if (qubit >= n_qubits) {
    throw std::out_of_range("qubit " + std::to_string(qubit) +
                            " out of range for " + std::to_string(n_qubits) +
                            " qubits");
  }
  PauliProduct p(n_qubits);
  p.set_axis(qubit, axis);
  return p;
}

PauliProduct PauliProduct::parse(std::string_view text,
                                 std::size_t n_qubits) {
  PauliProduct p(n_qubits);
  std::size_t pos = 0;
  bool saw_identity = false;
  bool saw_factor = false;
  std::vector<bool> used(n_qubits, false);
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    const std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    if (tok == "I") {
      saw_identity = true;
      continue;
    }
    const char head = tok.front();
    if (head != 'X' && head != 'Y' && head != 'Z') {
      throw std::invalid_argument("malformed Pauli token '" +
                                  std::string(tok) + "'");
    }
    std::size_t qubit = 0;
    const char* first = tok.data() + 1;
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, qubit);
    if (first == last || ec != std::errc{} || ptr != last) {
      throw std::invalid_argument("malformed Pauli token '" +
                                  std::string(tok) + "'");
    }
    if (qubit >= n_qubits) {
      throw std::out_of_range("qubit index " + std::to_string(qubit) +
                              " >= n_qubits " + std::to_string(n_qubits));
    }
    if (used[qubit]) {
      throw std::invalid_argument("qubit " + std::to_string(qubit) +
                                  " appears twice in one term");
    }
    used[qubit] = true;
    saw_factor = true;
    p.set_axis(qubit, axis_from_char(head));
  }
  if (saw_identity && saw_factor) {
    throw std::invalid_argument("'I' cannot be combined with other factors");
  }
  if (!saw_identity && !saw_factor) {
    throw std::invalid_argument("empty Pauli term");
  }
  return p;
}

void PauliProduct::set_axis(std::size_t qubit, PauliAxis a) {
  assign_bit(x_, qubit, a == PauliAxis::X || a == PauliAxis::Y);
  assign_bit(z_, qubit, a == PauliAxis::Z || a == PauliAxis::Y);
}

PauliAxis PauliProduct::axis(std::size_t qubit) const {
  const bool x = test_bit(x_, qubit);
  const bool z = test_bit(z_, qubit);
  if (x && z) return PauliAxis::Y;
  if (x) return PauliAxis::X;
  if (z) return PauliAxis::Z;
  return PauliAxis::I;
}

std::vector<PauliAxis> PauliProduct::axes() const {
  std::vector<PauliAxis> out(n_);
  for (std::size_t q = 0; q < n_; ++q) out[q] = axis(q);
  return out;
}

std::size_t PauliProduct::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    w += static_cast<std::size_t>(std::popcount(x_[i] | z_[i]));
  }
  return w;
}

std::vector<std::size_t> PauliProduct::support() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n_; ++q) {
    if (axis(q) != PauliAxis::I) out.push_back(q);
  }
  return out;
}

bool PauliProduct::is_identity_axes() const {
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if ((x_[i] | z_[i]) != 0) return false;
  }
  return true;
}

PauliProduct PauliProduct::with_phase(int phase_exp) const {
  PauliProduct out = *this;
  out.phase_ = mod4(phase_exp);
  return out;
}

std::string PauliProduct::axes_string() const {
  std::string out;
  for (std::size_t q = 0; q < n_; ++q) {
    const PauliAxis a = axis(q);
    if (a == PauliAxis::I) continue;
    if (!out.empty()) out += ' ';
    out += axis_char(a);
    out += std::to_string(q);
  }
  return out.empty() ? "I" : out;
}

std::string PauliProduct::to_string() const {
  static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
  std::string prefix = kPrefix[phase_];
  return prefix + axes_string();
}

bool operator==(const PauliProduct& a, const PauliProduct& b) {
  return a.phase_ == b.phase_ && a.same_axes(b);
}

bool PauliProduct::same_axes(const PauliProduct& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

PauliProduct multiply(const PauliProduct& p, const PauliProduct& q) {
  require_same_size(p.n_, q.n_, "multiply");
  // Per-qubit phase table: XY = iZ, YZ = iX, ZX = iY and the reversed
  // orders give -i. Y is encoded as (x, z) = (1, 1).
  int phase = p.phase_ + q.phase_;
  std::vector<std::uint64_t> x(p.x_.size());
  std::vector<std::uint64_t> z(p.z_.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::uint64_t x1 = p.x_[i], z1 = p.z_[i];
    const std::uint64_t x2 = q.x_[i], z2 = q.z_[i];
    const std::uint64_t plus = (x1 & ~z1 & x2 & z2) |   // X.Y
                               (x1 & z1 & ~x2 & z2) |   // Y.Z
                               (~x1 & z1 & x2 & ~z2);   // Z.X
    const std::uint64_t minus = (x1 & z1 & x2 & ~z2) |  // Y.X
                                (~x1 & z1 & x2 & z2) |  // Z.Y
                                (x1 & ~z1 & ~x2 & z2);  // X.Z
    phase += std::popcount(plus) - std::popcount(minus);
    x[i] = x1 ^ x2;
    z[i] = z1 ^ z2;
  }
  return PauliProduct(p.n_, std::move(x), std::move(z), phase);
}

SymplecticVector to_symplectic(const PauliProduct& p) {
  return SymplecticVector(p.x_, p.z_, p.n_);
}

PauliProduct from_symplectic(const SymplecticVector& v) {
  return PauliProduct(v.n_qubits(), v.x_words(), v.z_words(), 0);
}

bool commutes(const PauliProduct& p, const PauliProduct& q) {
  require_same_size(p.n_qubits(), q.n_qubits(), "commutes");
  return !symplectic_inner(to_symplectic(p), to_symplectic(q));
}

bool qwc(const PauliProduct& p, const PauliProduct& q) {
  require_same_size(p.n_qubits(), q.n_qubits(), "qwc");
  const auto& px = p.x_words();
  const auto& pz = p.z_words();
  const auto& qx = q.x_words();
  const auto& qz = q.z_words();
  for (std::size_t i = 0; i < px.size(); ++i) {
    const std::uint64_t p_on = px[i] | pz[i];
    const std::uint64_t q_on = qx[i] | qz[i];
    const std::uint64_t differ = (px[i] ^ qx[i]) | (pz[i] ^ qz[i]);
    if ((p_on & q_on & differ) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// SymplecticVector

SymplecticVector::SymplecticVector(std::size_t n_qubits)
    : n_(n_qubits), x_(words_for(n_qubits)), z_(words_for(n_qubits)) {}

SymplecticVector::SymplecticVector(std::vector<std::uint64_t> x,
                                   std::vector<std::uint64_t> z,
                                   std::size_t n_qubits)
    : n_(n_qubits), x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != words_for(n_) || z_.size() != words_for(n_)) {
    throw std::invalid_argument("SymplecticVector: word count mismatch");
  }
}

SymplecticVector SymplecticVector::parse(std::string_view bits) {
  const auto sep = bits.find(';');
  if (sep == std::string_view::npos) {
    throw std::invalid_argument("symplectic vector needs 'x;z' form");
  }
  std::string xs, zs;
  for (char c : bits.substr(0, sep)) {
    if (c == '0' || c == '1') xs += c;
  }
  for (char c : bits.substr(sep + 1)) {
    if (c == '0' || c == '1') zs += c;
  }
  if (xs.size() != zs.size() || xs.empty()) {
    throw std::invalid_argument("symplectic vector blocks differ in length");
  }
  SymplecticVector v(xs.size());
  for (std::size_t q = 0; q < xs.size(); ++q) {
    v.set(q, xs[q] == '1');
    v.set(q + xs.size(), zs[q] == '1');
  }
  return v;
}

bool SymplecticVector::get(std::size_t k) const {
  return k < n_ ? test_bit(x_, k) : test_bit(z_, k - n_);
}

void SymplecticVector::set(std::size_t k, bool value) {
  if (k < n_) {
    assign_bit(x_, k, value);
  } else {
    assign_bit(z_, k - n_, value);
  }
}

void SymplecticVector::flip(std::size_t k) { set(k, !get(k)); }

bool SymplecticVector::x(std::size_t qubit) const { return test_bit(x_, qubit); }
bool SymplecticVector::z(std::size_t qubit) const { return test_bit(z_, qubit); }

bool SymplecticVector::is_zero() const {
  return std::all_of(x_.begin(), x_.end(), [](auto w) { return w == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](auto w) { return w == 0; });
}

std::size_t SymplecticVector::popcount() const {
  std::size_t c = 0;
  for (auto w : x_) c += static_cast<std::size_t>(std::popcount(w));
  for (auto w : z_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

SymplecticVector& SymplecticVector::operator^=(const SymplecticVector& other) {
  require_same_size(n_, other.n_, "symplectic xor");
  for (std::size_t i = 0; i < x_.size(); ++i) {
    x_[i] ^= other.x_[i];
    z_[i] ^= other.z_[i];
  }
  return *this;
}

bool operator<(const SymplecticVector& a, const SymplecticVector& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const bool ak = a.get(k), bk = b.get(k);
    if (ak != bk) return bk;
  }
  return false;
}

SymplecticVector SymplecticVector::swapped() const {
  return SymplecticVector(z_, x_, n_);
}

std::string SymplecticVector::to_string() const {
  std::string out;
  for (std::size_t q = 0; q < n_; ++q) out += x(q) ? '1' : '0';
  out += ';';
  for (std::size_t q = 0; q < n_; ++q) out += z(q) ? '1' : '0';
  return out;
}

bool symplectic_inner(const SymplecticVector& u, const SymplecticVector& v) {
  require_same_size(u.n_qubits(), v.n_qubits(), "symplectic_inner");
  unsigned parity = 0;
  const auto& ux = u.x_words();
  const auto& uz = u.z_words();
  const auto& vx = v.x_words();
  const auto& vz = v.z_words();
  for (std::size_t i = 0; i < ux.size(); ++i) {
    parity ^= static_cast<unsigned>(
        std::popcount((ux[i] & vz[i]) ^ (uz[i] & vx[i])) & 1);
  }
  return parity != 0;
}

}  // namespace measure
