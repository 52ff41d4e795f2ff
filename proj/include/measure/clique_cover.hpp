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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "measure/hamiltonian.hpp"

namespace measure {

/// FC: full commutation. QWC: qubit-wise commutation.
enum class Relation { kFC, kQWC };

enum class CoverMethod { kGC, kLF, kSL, kDSATUR, kRLF, kExact };

std::string to_string(Relation r);
std::string to_string(CoverMethod m);
Relation parse_relation(std::string_view s);
CoverMethod parse_method(std::string_view s);

/**
 * Compatibility graph over Hamiltonian terms; vertex i is term i.
 *
 * Adjacency is kept as packed bit rows. The complement (conflict graph) is
 * never stored: conflicts(i, j) is !adjacent(i, j) for i != j.
 */
class CompatGraph {
 public:
  CompatGraph(std::size_t n_vertices, Relation relation);

  std::size_t size() const { return n_; }
  Relation relation() const { return relation_; }

  bool adjacent(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  bool conflicts(std::size_t i, std::size_t j) const {
    return i != j && !adjacent(i, j);
  }
  void add_edge(std::size_t i, std::size_t j);

  std::size_t degree(std::size_t v) const;
  std::size_t conflict_degree(std::size_t v) const {
    return n_ - 1 - degree(v);
  }
  std::size_t edge_count() const;

 private:
  std::size_t n_;
  std::size_t words_;
  Relation relation_;
  std::vector<std::uint64_t> rows_;
};

/// Evaluates the pairwise predicate on all term pairs. With threads > 1 the
/// rows are split across worker threads; the result does not depend on it.
CompatGraph build_graph(const Hamiltonian& h, Relation relation,
                        unsigned threads = 1);

struct CoverStats {
  std::size_t group_count = 0;
  std::size_t max_size = 0;
  double size_stddev = 0.0;  // population standard deviation
};

struct CliqueCover {
  Relation relation = Relation::kFC;
  CoverMethod method = CoverMethod::kGC;
  std::vector<std::vector<std::size_t>> groups;
};

/// Sequential coloring of the conflict graph; every vertex joins the
/// lowest-index group it is compatible with. kGC, kLF, kSL and kDSATUR only.
CliqueCover cover_greedy(const CompatGraph& g, CoverMethod ordering);

/// Recursive largest first on the conflict graph.
CliqueCover cover_rlf(const CompatGraph& g);

inline constexpr std::size_t kDefaultExactCap = 64;

/// Minimum clique cover via branch-and-bound coloring of the conflict graph.
CliqueCover cover_exact(const CompatGraph& g,
                        std::size_t limit = kDefaultExactCap);

CliqueCover cover(const CompatGraph& g, CoverMethod method,
                  std::size_t exact_limit = kDefaultExactCap);

struct CoverReport {
  bool valid = true;
  std::vector<std::string> violations;
};

CoverReport validate_cover(const Hamiltonian& h, const CliqueCover& cover,
                           Relation relation);
CoverReport validate_cover(const CompatGraph& g, const CliqueCover& cover);

CoverStats stats(const CliqueCover& cover);

}  // namespace measure
