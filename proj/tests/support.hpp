#pragma once

// Test fixtures and brute-force oracles. The oracles only read the raw edge
// list; they share no code with the library's tracing, folding or product
// routines.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cyclecount/automaton.hpp"
#include "cyclecount/words.hpp"

namespace testing {

using cyclecount::Edge;
using cyclecount::Label;
using cyclecount::LabeledDigraph;
using cyclecount::Letter;
using cyclecount::VertexId;
using cyclecount::Word;

inline Word W(const char* text) { return Word::parse(text); }

inline LabeledDigraph make_graph(std::uint32_t alphabet, std::size_t vertices,
                                 const std::vector<std::tuple<VertexId, VertexId, Label>>& edges,
                                 std::optional<VertexId> base = std::nullopt) {
  LabeledDigraph g(alphabet);
  for (std::size_t v = 0; v < vertices; ++v) g.add_vertex();
  for (const auto& [s, d, l] : edges) g.add_edge(s, d, l);
  g.set_basepoint(base);
  return g;
}

/// 4-cycle with every edge labeled a.
inline LabeledDigraph a_square(std::uint32_t alphabet = 1) {
  return make_graph(alphabet, 4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}, 0);
}

/// Core graph of <a^2, b>: a: v0->v1, a: v1->v0, b-loop at v0.
inline LabeledDigraph a2_b_graph() { return make_graph(2, 2, {{0, 1, 1}, {1, 0, 1}, {0, 0, 2}}, 0); }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

/// Betti numbers of the connected components, in no particular order.
inline std::vector<long> brute_component_betti(std::size_t vertices, const std::vector<Edge>& edges) {
  UnionFind uf(vertices);
  for (const Edge& e : edges) uf.unite(e.src, e.dst);
  std::map<std::size_t, std::pair<long, long>> ve;
  for (std::size_t v = 0; v < vertices; ++v) ve[uf.find(v)].first += 1;
  for (const Edge& e : edges) ve[uf.find(e.src)].second += 1;
  std::vector<long> out;
  for (const auto& [root, c] : ve) out.push_back(c.second - c.first + 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline long brute_betti(const LabeledDigraph& g) {
  const auto parts = brute_component_betti(g.vertex_count(), g.edges());
  return std::accumulate(parts.begin(), parts.end(), 0L);
}

/// Single letter step by scanning the edge list. Returns nothing when no
/// edge matches or, for nondeterministic input, when several do.
inline std::optional<VertexId> brute_step(const LabeledDigraph& g, VertexId v, Letter l) {
  std::optional<VertexId> to;
  int hits = 0;
  for (const Edge& e : g.edges()) {
    if (e.label != l.generator) continue;
    if (l.sign > 0 && e.src == v) { to = e.dst; ++hits; }
    if (l.sign < 0 && e.dst == v) { to = e.src; ++hits; }
  }
  return hits == 1 ? to : std::nullopt;
}

inline std::optional<VertexId> brute_trace(const LabeledDigraph& g, VertexId v, const Word& w) {
  std::optional<VertexId> at = v;
  for (const Letter& l : w) {
    at = brute_step(g, *at, l);
    if (!at) return std::nullopt;
  }
  return at;
}

struct BruteCounts {
  std::size_t with_multiplicity = 0;
  std::size_t classes = 0;
};

/// A vertex lies on a w-cycle when some w^n with n <= |V| returns to it;
/// two such vertices are equivalent when a power of w leads from one to the
/// other.
inline BruteCounts brute_counts(const LabeledDigraph& g, const Word& w) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_cycle(n, false);
  UnionFind uf(n);
  for (VertexId v = 0; v < n; ++v) {
    std::optional<VertexId> at = v;
    for (std::size_t k = 1; k <= n && at; ++k) {
      at = brute_trace(g, *at, w);
      if (at && *at == v) {
        on_cycle[v] = true;
        break;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!on_cycle[v]) continue;
    const auto next = brute_trace(g, v, w);
    uf.unite(v, *next);
  }
  BruteCounts c;
  std::set<std::size_t> roots;
  for (VertexId v = 0; v < n; ++v) {
    if (!on_cycle[v]) continue;
    ++c.with_multiplicity;
    roots.insert(uf.find(v));
  }
  c.classes = roots.size();
  return c;
}

/// Component Betti numbers of the fiber product, from pairs of same-label
/// edges.
inline std::vector<long> brute_product_betti(const LabeledDigraph& a, const LabeledDigraph& b) {
  std::vector<Edge> edges;
  for (const Edge& x : a.edges()) {
    for (const Edge& y : b.edges()) {
      if (x.label != y.label) continue;
      edges.push_back(Edge{x.src * b.vertex_count() + y.src, x.dst * b.vertex_count() + y.dst, x.label});
    }
  }
  return brute_component_betti(a.vertex_count() * b.vertex_count(), edges);
}

/// Smallest p with w = (prefix of length |w|/p)^p by direct comparison.
inline std::size_t brute_exponent(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return n / d;
  }
  return 1;
}

/// All reduced words of length <= max_length over the alphabet.
inline std::vector<Word> all_reduced_words(std::uint32_t alphabet, std::size_t max_length) {
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Label l = 1; l <= alphabet; ++l) {
        for (int s : {1, -1}) {
          const Letter x{l, s};
          if (!w.empty() && w[w.size() - 1].is_inverse_of(x)) continue;
          std::vector<Letter> ls = w.letters();
          ls.push_back(x);
          next.emplace_back(std::move(ls));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Stack-free reduction by repeated scanning, for comparison with the
/// library's reduction.
inline Word slow_reduce(Word w) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Letter> ls = w.letters();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      if (ls[i].is_inverse_of(ls[i + 1])) {
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i), ls.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
    }
    w = Word(std::move(ls));
  }
  return w;
}

}  // namespace testing
