#include "cyclecount/subgroups.hpp"

#include <algorithm>
#include <deque>

#include "cyclecount/error.hpp"

namespace cyclecount {

LabeledDigraph wedge_of_loops(const std::vector<Word>& words, std::uint32_t alphabet) {
  LabeledDigraph wedge(alphabet);
  const VertexId base = wedge.add_vertex("base");
  wedge.set_basepoint(base);
  for (const Word& w : words) {
    if (w.max_generator() > alphabet) {
      throw InvalidInput("word \"" + w.to_string() + "\" uses letters outside the alphabet");
    }
    VertexId at = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const VertexId next = i + 1 == w.size() ? base : wedge.add_vertex();
      if (w[i].sign > 0) {
        wedge.add_edge(at, next, w[i].generator);
      } else {
        wedge.add_edge(next, at, w[i].generator);
      }
      at = next;
    }
  }
  return wedge;
}

SubgroupGraph stallings_graph(const std::vector<Word>& generators, std::uint32_t alphabet) {
  if (alphabet == 0) throw InvalidInput("stallings_graph: empty alphabet");
  SubgroupGraph h;
  for (const Word& raw : generators) {
    const Word w = free_reduce(raw);
    if (w != raw) {
      h.warnings.push_back("generator \"" + raw.to_string() + "\" reduced to \"" + w.to_string() + "\"");
    }
    h.generators.push_back(w);
  }
  h.graph = core(fold(wedge_of_loops(h.generators, alphabet)));
  return h;
}

long rank(const SubgroupGraph& h) { return betti(h.graph).total; }

bool contains(const SubgroupGraph& h, const Word& w) {
  const auto t = trace(h.graph, *h.graph.basepoint(), free_reduce(w));
  return t && t->end == *h.graph.basepoint();
}

std::vector<Word> free_basis(const LabeledDigraph& g) {
  if (!g.basepoint()) throw PreconditionViolation("free_basis: graph has no basepoint");
  const VertexId base = *g.basepoint();
  const TransitionTable table(g);
  // Tree path label from the base to each reached vertex.
  std::vector<std::optional<Word>> label(g.vertex_count());
  std::vector<bool> tree_edge(g.edge_count(), false);
  label[base] = Word();
  std::deque<VertexId> queue{base};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (Label l = 1; l <= g.alphabet(); ++l) {
      for (int sign : {1, -1}) {
        const auto s = table.step(v, Letter{l, sign});
        if (!s) continue;
        const VertexId u = table.target(v, *s);
        if (label[u]) continue;
        label[u] = *label[v] * Word({Letter{l, sign}});
        tree_edge[s->edge] = true;
        queue.push_back(u);
      }
    }
  }
  std::vector<Word> basis;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (tree_edge[e] || !label[edge.src]) continue;
    basis.push_back(free_reduce(*label[edge.src] * Word({Letter{edge.label, 1}}) * invert(*label[edge.dst])));
  }
  return basis;
}

ConjugateCountReport count_conjugates_meeting(const SubgroupGraph& h, const Word& w) {
  ConjugateCountReport r;
  r.count = decompose(h.graph, w).class_count;
  r.rank = rank(h);
  r.pass = static_cast<long>(r.count) <= r.rank;
  return r;
}

SubgroupGraph intersect(const SubgroupGraph& h1, const SubgroupGraph& h2) {
  if (!h1.graph.basepoint() || !h2.graph.basepoint()) {
    throw PreconditionViolation("intersect: subgroup graphs must be based");
  }
  const LabeledDigraph product = fiber_product(h1.graph, h2.graph);
  SubgroupGraph h;
  h.graph = core(component_of(product, *product.basepoint()));
  h.generators = free_basis(h.graph);
  return h;
}

bool is_trivial(const SubgroupGraph& h) { return h.graph.edge_count() == 0; }

SubgroupGraph conjugate(const SubgroupGraph& h, const Word& g) {
  const Word gr = free_reduce(g);
  const Word gi = invert(gr);
  std::vector<Word> gens;
  gens.reserve(h.generators.size());
  for (const Word& x : h.generators) gens.push_back(free_reduce(gi * x * gr));
  return stallings_graph(gens, h.graph.alphabet());
}

ShncReport check_shnc(const LabeledDigraph& g1, const LabeledDigraph& g2) {
  if (g1.vertex_count() == 0 || g2.vertex_count() == 0 || !is_connected(g1) || !is_connected(g2)) {
    throw PreconditionViolation("check_shnc: both graphs must be connected and nonempty");
  }
  const BettiReport b = betti(fiber_product(g1, g2));
  ShncReport r;
  for (const ComponentInfo& c : b.components) {
    r.component_beta1.push_back(c.beta1);
    r.component_reduced_ranks.push_back(reduced_rank(c.beta1));
    r.lhs += r.component_reduced_ranks.back();
  }
  r.rhs = reduced_rank(betti(g1).total) * reduced_rank(betti(g2).total);
  r.pass = r.lhs <= r.rhs;
  r.equality = r.lhs == r.rhs;
  return r;
}

ShncReport check_shnc(const SubgroupGraph& h1, const SubgroupGraph& h2) {
  return check_shnc(h1.graph, h2.graph);
}

RestatedReport check_restated_inequality(const Word& cycle_word, const LabeledDigraph& g2) {
  require_simple_cyclic_word(cycle_word, "check_restated_inequality");
  const LabeledDigraph loop = circle(cycle_word, g2.alphabet());
  RestatedReport r;
  r.lhs = betti(fiber_product(loop, g2)).total;
  r.rhs = betti(loop).total * betti(g2).total;
  r.class_count = decompose(g2, cycle_word).class_count;
  r.pass = r.lhs <= r.rhs;
  r.agrees_with_classes = r.lhs == static_cast<long>(r.class_count);
  return r;
}

bool is_basis_free_factor(const SubgroupGraph& h) {
  std::vector<Label> seen;
  for (const Word& g : h.generators) {
    if (g.size() != 1 || g[0].sign != 1) return false;
    if (std::find(seen.begin(), seen.end(), g[0].generator) != seen.end()) return false;
    seen.push_back(g[0].generator);
  }
  return true;
}

ConjugateIntersectionReport check_conjugate_intersection(const SubgroupGraph& h,
                                                         const std::vector<Word>& cosets) {
  if (!is_basis_free_factor(h)) {
    throw PreconditionViolation(
        "check_conjugate_intersection: isolation is only certified for subgroups generated by "
        "distinct basis letters");
  }
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (std::size_t j = i + 1; j < cosets.size(); ++j) {
      if (contains(h, cosets[i] * invert(cosets[j]))) {
        throw PreconditionViolation("check_conjugate_intersection: cosets H" +
                                    cosets[i].to_string() + " and H" + cosets[j].to_string() +
                                    " coincide");
      }
    }
  }
  ConjugateIntersectionReport r;
  r.rank = rank(h);
  r.cosets = cosets.size();
  if (static_cast<long>(cosets.size()) <= r.rank) return r;
  r.intersection = conjugate(h, cosets.front());
  for (std::size_t i = 1; i < cosets.size(); ++i) {
    r.intersection = intersect(r.intersection, conjugate(h, cosets[i]));
  }
  r.status = is_trivial(r.intersection) ? CheckStatus::kPass : CheckStatus::kFail;
  return r;
}

}  // namespace cyclecount
