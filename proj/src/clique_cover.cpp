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

#include "measure/clique_cover.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

namespace measure {
namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

bool bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
void clear_bit(Bits& b, std::size_t i) {
  b[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

void sort_groups(CliqueCover& c) {
  for (auto& grp : c.groups) std::sort(grp.begin(), grp.end());
}

bool related(const PauliProduct& a, const PauliProduct& b, Relation r) {
  return r == Relation::kFC ? commutes(a, b) : qwc(a, b);
}

// Assigns vertices in the given order to the lowest-index compatible group.
CliqueCover color_in_order(const CompatGraph& g,
                           const std::vector<std::size_t>& order,
                           CoverMethod method) {
  CliqueCover out{g.relation(), method, {}};
  for (std::size_t v : order) {
    bool placed = false;
    for (auto& grp : out.groups) {
      const bool ok = std::none_of(grp.begin(), grp.end(), [&](std::size_t u) {
        return g.conflicts(u, v);
      });
      if (ok) {
        grp.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) out.groups.push_back({v});
  }
  sort_groups(out);
  return out;
}

std::vector<std::size_t> largest_first_order(const CompatGraph& g) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> deg(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) deg[v] = g.conflict_degree(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
  return order;
}

std::vector<std::size_t> smallest_last_order(const CompatGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.conflict_degree(v);
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> removal;
  removal.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
    }
    removed[best] = true;
    removal.push_back(best);
    for (std::size_t u = 0; u < n; ++u) {
      if (!removed[u] && g.conflicts(u, best)) --deg[u];
    }
  }
  return {removal.rbegin(), removal.rend()};
}

CliqueCover dsatur(const CompatGraph& g) {
  const std::size_t n = g.size();
  CliqueCover out{g.relation(), CoverMethod::kDSATUR, {}};
  std::vector<std::vector<bool>> forbidden(n);
  std::vector<std::size_t> saturation(n, 0);
  std::vector<std::size_t> open_degree(n);
  for (std::size_t v = 0; v < n; ++v) open_degree[v] = g.conflict_degree(v);
  std::vector<bool> colored(n, false);

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t v = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (colored[u]) continue;
      if (v == n || saturation[u] > saturation[v] ||
          (saturation[u] == saturation[v] &&
           open_degree[u] > open_degree[v])) {
        v = u;
      }
    }
    std::size_t color = 0;
    while (color < forbidden[v].size() && forbidden[v][color]) ++color;
    if (color == out.groups.size()) out.groups.emplace_back();
    out.groups[color].push_back(v);
    colored[v] = true;
    for (std::size_t u = 0; u < n; ++u) {
      if (colored[u] || !g.conflicts(u, v)) continue;
      --open_degree[u];
      if (forbidden[u].size() <= color) forbidden[u].resize(color + 1, false);
      if (!forbidden[u][color]) {
        forbidden[u][color] = true;
        ++saturation[u];
      }
    }
  }
  sort_groups(out);
  return out;
}

// Branch and bound over DSATUR-ordered assignments of the conflict graph.
class ExactColoring {
 public:
  explicit ExactColoring(const CompatGraph& g)
      : n_(g.size()), words_(word_count(n_)) {
    conflict_.assign(n_, Bits(words_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (g.conflicts(i, j)) set_bit(conflict_[i], j);
      }
    }
  }

  std::vector<int> run(const CliqueCover& seed) {
    best_ = seed.groups.size();
    best_colors_.assign(n_, 0);
    for (std::size_t c = 0; c < seed.groups.size(); ++c) {
      for (std::size_t v : seed.groups[c]) best_colors_[v] = static_cast<int>(c);
    }
    lower_ = clique_lower_bound();
    colors_.assign(n_, -1);
    classes_.clear();
    if (best_ > lower_) search(0);
    return best_colors_;
  }

 private:
  // Greedy clique in the conflict graph; every member needs its own group.
  std::size_t clique_lower_bound() const {
    std::size_t best = n_ == 0 ? 0 : 1;
    for (std::size_t start = 0; start < n_; ++start) {
      Bits cand = conflict_[start];
      std::size_t size = 1;
      while (true) {
        std::size_t pick = n_;
        std::size_t pick_deg = 0;
        for (std::size_t v = 0; v < n_; ++v) {
          if (!bit(cand, v)) continue;
          std::size_t d = 0;
          for (std::size_t w = 0; w < words_; ++w) {
            d += static_cast<std::size_t>(std::popcount(cand[w] & conflict_[v][w]));
          }
          if (pick == n_ || d > pick_deg) {
            pick = v;
            pick_deg = d;
          }
        }
        if (pick == n_) break;
        ++size;
        for (std::size_t w = 0; w < words_; ++w) cand[w] &= conflict_[pick][w];
      }
      best = std::max(best, size);
    }
    return best;
  }

  bool fits(std::size_t v, std::size_t c) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (classes_[c][w] & conflict_[v][w]) return false;
    }
    return true;
  }

  std::size_t saturation(std::size_t v) const {
    std::size_t s = 0;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (!fits(v, c)) ++s;
    }
    return s;
  }

  void search(std::size_t n_colored) {
    if (best_ <= lower_) return;
    if (n_colored == n_) {
      best_ = classes_.size();
      best_colors_ = colors_;
      return;
    }
    std::size_t v = n_, v_sat = 0, v_deg = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      if (colors_[u] >= 0) continue;
      const std::size_t s = saturation(u);
      std::size_t d = 0;
      for (std::size_t w = 0; w < n_; ++w) {
        if (colors_[w] < 0 && bit(conflict_[u], w)) ++d;
      }
      if (v == n_ || s > v_sat || (s == v_sat && d > v_deg)) {
        v = u;
        v_sat = s;
        v_deg = d;
      }
    }
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (!fits(v, c)) continue;
      set_bit(classes_[c], v);
      colors_[v] = static_cast<int>(c);
      search(n_colored + 1);
      colors_[v] = -1;
      clear_bit(classes_[c], v);
      if (best_ <= lower_) return;
    }
    if (classes_.size() + 1 < best_) {
      classes_.push_back(Bits(words_, 0));
      set_bit(classes_.back(), v);
      colors_[v] = static_cast<int>(classes_.size() - 1);
      search(n_colored + 1);
      colors_[v] = -1;
      classes_.pop_back();
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<Bits> conflict_;
  std::vector<Bits> classes_;
  std::vector<int> colors_;
  std::vector<int> best_colors_;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
};


// Among the colorings with at most k colors, finds the one whose labels, read
// in vertex order with classes numbered by first appearance, are
// lexicographically smallest. Gives up after node_limit search nodes.
class LexFirstColoring {
 public:
  LexFirstColoring(const CompatGraph& g, std::size_t k, std::size_t node_limit)
      : g_(g), k_(k), limit_(node_limit), colors_(g.size(), -1),
        forbidden_(g.size(), 0) {}

  std::optional<std::vector<int>> run() {
    if (k_ == 0 || k_ > 64) return std::nullopt;
    if (!extend(0, 0)) return std::nullopt;
    return colors_;
  }

 private:
  bool extend(std::size_t v, std::size_t used) {
    if (v == g_.size()) return true;
    if (++nodes_ > limit_) return false;
    const std::size_t top = std::min(used + 1, k_);
    for (std::size_t c = 0; c < top; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if (forbidden_[v] & bit) continue;
      std::vector<std::size_t> touched;
      bool dead = false;
      for (std::size_t u = v + 1; u < g_.size(); ++u) {
        if (!g_.conflicts(u, v) || (forbidden_[u] & bit)) continue;
        forbidden_[u] |= bit;
        touched.push_back(u);
        if (std::popcount(forbidden_[u]) == static_cast<int>(k_)) dead = true;
      }
      colors_[v] = static_cast<int>(c);
      if (!dead && extend(v + 1, std::max(used, c + 1))) return true;
      for (std::size_t u : touched) forbidden_[u] &= ~bit;
      if (nodes_ > limit_) return false;
    }
    colors_[v] = -1;
    return false;
  }

  const CompatGraph& g_;
  std::size_t k_;
  std::size_t limit_;
  std::size_t nodes_ = 0;
  std::vector<int> colors_;
  std::vector<std::uint64_t> forbidden_;
};

}  // namespace

std::string to_string(Relation r) { return r == Relation::kFC ? "fc" : "qwc"; }

std::string to_string(CoverMethod m) {
  switch (m) {
    case CoverMethod::kGC: return "gc";
    case CoverMethod::kLF: return "lf";
    case CoverMethod::kSL: return "sl";
    case CoverMethod::kDSATUR: return "dsatur";
    case CoverMethod::kRLF: return "rlf";
    case CoverMethod::kExact: return "exact";
  }
  return "?";
}

Relation parse_relation(std::string_view s) {
  if (s == "fc") return Relation::kFC;
  if (s == "qwc") return Relation::kQWC;
  throw std::invalid_argument("unknown relation '" + std::string(s) + "'");
}

CoverMethod parse_method(std::string_view s) {
  for (auto m : {CoverMethod::kGC, CoverMethod::kLF, CoverMethod::kSL,
                 CoverMethod::kDSATUR, CoverMethod::kRLF, CoverMethod::kExact}) {
    if (to_string(m) == s) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

CompatGraph::CompatGraph(std::size_t n_vertices, Relation relation)
    : n_(n_vertices),
      words_(word_count(n_vertices)),
      relation_(relation),
      rows_(n_vertices * word_count(n_vertices), 0) {}

void CompatGraph::add_edge(std::size_t i, std::size_t j) {
  if (i == j) return;
  rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  rows_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t CompatGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    d += static_cast<std::size_t>(std::popcount(rows_[v * words_ + w]));
  }
  return d;
}

std::size_t CompatGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

CompatGraph build_graph(const Hamiltonian& h, Relation relation,
                        unsigned threads) {
  const std::size_t n = h.size();
  CompatGraph g(n, relation);
  const auto& terms = h.terms();
  if (threads <= 1 || n < 256) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (related(terms[i].op, terms[j].op, relation)) g.add_edge(i, j);
      }
    }
    return g;
  }
  // Each worker evaluates the upper triangle for a strided set of rows and
  // keeps its own edge list; lists are merged in worker order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (related(terms[i].op, terms[j].op, relation)) {
            edges[t].emplace_back(i, j);
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& list : edges) {
    for (const auto& [i, j] : list) g.add_edge(i, j);
  }
  return g;
}

CliqueCover cover_greedy(const CompatGraph& g, CoverMethod ordering) {
  switch (ordering) {
    case CoverMethod::kGC: {
      std::vector<std::size_t> order(g.size());
      std::iota(order.begin(), order.end(), 0);
      return color_in_order(g, order, ordering);
    }
    case CoverMethod::kLF:
      return color_in_order(g, largest_first_order(g), ordering);
    case CoverMethod::kSL:
      return color_in_order(g, smallest_last_order(g), ordering);
    case CoverMethod::kDSATUR:
      return dsatur(g);
    default:
      throw std::invalid_argument("cover_greedy: not a sequential ordering: " +
                                  to_string(ordering));
  }
}

CliqueCover cover_rlf(const CompatGraph& g) {
  const std::size_t n = g.size();
  CliqueCover out{g.relation(), CoverMethod::kRLF, {}};
  std::vector<bool> uncovered(n, true);
  std::size_t remaining = n;
  // Conflicts of each vertex among uncovered vertices.
  std::vector<std::size_t> open_degree(n);
  for (std::size_t v = 0; v < n; ++v) open_degree[v] = g.conflict_degree(v);
  while (remaining > 0) {
    std::size_t seed = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (uncovered[v] && (seed == n || open_degree[v] > open_degree[seed])) {
        seed = v;
      }
    }
    std::vector<std::size_t> group{seed};
    // candidates: still compatible with the whole group; excluded: not.
    std::vector<bool> candidate(n, false), excluded(n, false);
    for (std::size_t u = 0; u < n; ++u) {
      if (!uncovered[u] || u == seed) continue;
      if (g.conflicts(u, seed)) {
        excluded[u] = true;
      } else {
        candidate[u] = true;
      }
    }
    // into_excluded[u]: conflicts of candidate u with the excluded set.
    std::vector<std::size_t> into_excluded(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
      if (!candidate[u]) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (excluded[w] && g.conflicts(u, w)) ++into_excluded[u];
      }
    }
    while (true) {
      std::size_t pick = n;
      for (std::size_t u = 0; u < n; ++u) {
        if (candidate[u] &&
            (pick == n || into_excluded[u] > into_excluded[pick])) {
          pick = u;
        }
      }
      if (pick == n) break;
      candidate[pick] = false;
      group.push_back(pick);
      for (std::size_t u = 0; u < n; ++u) {
        if (!candidate[u] || !g.conflicts(u, pick)) continue;
        candidate[u] = false;
        excluded[u] = true;
        for (std::size_t w = 0; w < n; ++w) {
          if (candidate[w] && g.conflicts(w, u)) ++into_excluded[w];
        }
      }
    }
    for (std::size_t v : group) uncovered[v] = false;
    for (std::size_t v : group) {
      for (std::size_t u = 0; u < n; ++u) {
        if (uncovered[u] && g.conflicts(u, v)) --open_degree[u];
      }
    }
    remaining -= group.size();
    out.groups.push_back(std::move(group));
  }
  sort_groups(out);
  return out;
}

CliqueCover cover_exact(const CompatGraph& g, std::size_t limit) {
  if (g.size() > limit) {
    throw CapExceeded("exact cover limited to " + std::to_string(limit) +
                      " vertices, graph has " + std::to_string(g.size()));
  }
  CliqueCover seed = dsatur(g);
  CliqueCover rlf = cover_rlf(g);
  if (rlf.groups.size() < seed.groups.size()) seed = rlf;

  ExactColoring solver(g);
  std::vector<int> colors = solver.run(seed);
  const auto k = colors.empty() ? std::size_t{0}
                                : static_cast<std::size_t>(
                                      *std::max_element(colors.begin(), colors.end()) + 1);
  if (auto canonical = LexFirstColoring(g, k, 200000).run()) colors = std::move(*canonical);
  CliqueCover out{g.relation(), CoverMethod::kExact, {}};
  // Renumber groups by their smallest member so the output is canonical.
  std::vector<int> remap;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto c = static_cast<std::size_t>(colors[v]);
    if (c >= remap.size()) remap.resize(c + 1, -1);
    if (remap[c] < 0) {
      remap[c] = static_cast<int>(out.groups.size());
      out.groups.emplace_back();
    }
    out.groups[static_cast<std::size_t>(remap[c])].push_back(v);
  }
  return out;
}

CliqueCover cover(const CompatGraph& g, CoverMethod method,
                  std::size_t exact_limit) {
  switch (method) {
    case CoverMethod::kRLF: return cover_rlf(g);
    case CoverMethod::kExact: return cover_exact(g, exact_limit);
    default: return cover_greedy(g, method);
  }
}

namespace {

CoverReport validate_with(
    std::size_t n, const CliqueCover& c,
    const std::function<bool(std::size_t, std::size_t)>& compatible) {
  CoverReport report;
  auto violation = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  std::vector<int> owner(n, -1);
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
    if (c.groups[gi].empty()) violation("group " + std::to_string(gi) + " is empty");
    for (std::size_t v : c.groups[gi]) {
      if (v >= n) {
        violation("group " + std::to_string(gi) + ": index " +
                  std::to_string(v) + " out of range");
        continue;
      }
      if (owner[v] >= 0) {
        violation("term " + std::to_string(v) + " in groups " +
                  std::to_string(owner[v]) + " and " + std::to_string(gi));
        continue;
      }
      owner[v] = static_cast<int>(gi);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (owner[v] < 0) violation("term " + std::to_string(v) + " not covered");
  }
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
    const auto& grp = c.groups[gi];
    for (std::size_t a = 0; a < grp.size(); ++a) {
      for (std::size_t b = a + 1; b < grp.size(); ++b) {
        if (grp[a] >= n || grp[b] >= n || grp[a] == grp[b]) continue;
        if (!compatible(grp[a], grp[b])) {
          violation("group " + std::to_string(gi) + ": terms " +
                    std::to_string(grp[a]) + " and " + std::to_string(grp[b]) +
                    " are not " + (c.relation == Relation::kFC
                                       ? "commuting"
                                       : "qubit-wise commuting"));
        }
      }
    }
  }
  return report;
}

}  // namespace

CoverReport validate_cover(const Hamiltonian& h, const CliqueCover& c,
                           Relation relation) {
  CliqueCover tagged = c;
  tagged.relation = relation;
  return validate_with(h.size(), tagged, [&](std::size_t a, std::size_t b) {
    return related(h[a].op, h[b].op, relation);
  });
}

CoverReport validate_cover(const CompatGraph& g, const CliqueCover& c) {
  return validate_with(g.size(), c, [&](std::size_t a, std::size_t b) {
    return g.adjacent(a, b);
  });
}

CoverStats stats(const CliqueCover& c) {
  CoverStats s;
  s.group_count = c.groups.size();
  if (s.group_count == 0) return s;
  double mean = 0.0;
  for (const auto& grp : c.groups) {
    s.max_size = std::max(s.max_size, grp.size());
    mean += static_cast<double>(grp.size());
  }
  mean /= static_cast<double>(s.group_count);
  double var = 0.0;
  for (const auto& grp : c.groups) {
    const double d = static_cast<double>(grp.size()) - mean;
    var += d * d;
  }
  s.size_stddev = std::sqrt(var / static_cast<double>(s.group_count));
  return s;
}

}  // namespace measure
