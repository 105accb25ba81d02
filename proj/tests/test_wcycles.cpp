#include "doctest.h"

#include "cyclecount/error.hpp"
#include "cyclecount/generators.hpp"
#include "cyclecount/wcycles.hpp"
#include "support.hpp"

using namespace cyclecount;
using testing::make_graph;
using testing::W;

TEST_CASE("trace") {
  const LabeledDigraph r = rose(2);
  const auto t = trace(r, 0, W("abAB"));
  REQUIRE(t);
  CHECK(t->end == 0);
  CHECK(t->path.size() == 4);
  CHECK(t->path[2].dir == -1);

  CHECK_FALSE(trace(make_graph(2, 2, {{0, 1, 1}}), 0, W("b")));

  const auto step = trace(testing::a_square(), 0, W("a"));
  REQUIRE(step);
  CHECK(step->end == 1);
  CHECK(step->path.size() == 1);

  const auto back = trace(testing::a_square(), 0, W("A"));
  REQUIRE(back);
  CHECK(back->end == 3);
}

TEST_CASE("decompose examples") {
  const LabeledDigraph sq = testing::a_square();
  const WCycleDecomposition d = decompose(sq, W("a"));
  const testing::BruteCounts brute = testing::brute_counts(sq, W("a"));
  CHECK(d.count_with_multiplicity == brute.with_multiplicity);
  CHECK(d.class_count == brute.classes);
  CHECK(d.count_with_multiplicity == 4);
  CHECK(d.class_count == 1);
  REQUIRE(d.classes.size() == 1);
  CHECK(d.classes[0].period() == 4);
  CHECK(d.classes[0].path.size() == 4);

  for (const char* w : {"a", "ab", "abAB", "aabAB", "abc"}) {
    const Word word = W(w);
    const LabeledDigraph c = circle(word, 3);
    const WCycleDecomposition dc = decompose(c, word);
    CHECK(dc.count_with_multiplicity == 1);
    CHECK(dc.class_count == 1);
  }

  const WCycleDecomposition comm = decompose(rose(2), W("abAB"));
  const testing::BruteCounts bc = testing::brute_counts(rose(2), W("abAB"));
  CHECK(comm.count_with_multiplicity == bc.with_multiplicity);
  CHECK(comm.class_count == bc.classes);
  CHECK(comm.count_with_multiplicity == 1);
  CHECK(comm.class_count == 1);
}

TEST_CASE("decompose rejects unnormalized words") {
  CHECK_THROWS_AS(decompose(rose(1), W("aa")), PreconditionViolation);
  CHECK_THROWS_AS(decompose(rose(2), W("abA")), PreconditionViolation);
  CHECK_THROWS_AS(decompose(rose(2), W("")), PreconditionViolation);
  CHECK_THROWS_AS(decompose(rose(2), W("aAb")), PreconditionViolation);
  CHECK_THROWS_AS(decompose(make_graph(1, 3, {{0, 1, 1}, {0, 2, 1}}), W("a")), PreconditionViolation);
  try {
    decompose(rose(2), W("abab"));
  } catch (const PreconditionViolation& e) {
    CHECK(std::string(e.what()).find("proper power") != std::string::npos);
  }
}

TEST_CASE("letters missing from the graph never trace") {
  CHECK(decompose(rose(1), W("b")).class_count == 0);
  CHECK(decompose(rose(1), W("ab")).class_count == 0);
}

TEST_CASE("main inequality examples") {
  const MainInequalityReport c = check_main_inequality(circle(W("bb"), 2), W("a"));
  CHECK(c.pass);

  const MainInequalityReport circ = check_main_inequality(circle(W("aab"), 2), W("aab"));
  CHECK(circ.pass);
  CHECK(circ.equality);
  CHECK(circ.total_classes == 1);
  CHECK(circ.total_beta1 == 1);

  const MainInequalityReport r = check_main_inequality(rose(2), W("abAB"));
  CHECK(r.pass);
  CHECK_FALSE(r.equality);
  CHECK(r.total_classes == 1);
  CHECK(r.total_beta1 == 2);

  const MainInequalityReport none = check_main_inequality(testing::a2_b_graph(), W("ab"));
  CHECK(none.total_classes == 0);
  CHECK(none.pass);

  const LabeledDigraph path = make_graph(2, 3, {{0, 1, 1}, {1, 2, 2}});
  const MainInequalityReport z = check_main_inequality(path, W("ab"));
  CHECK(z.pass);
  CHECK(z.total_classes == 0);
  CHECK(z.total_beta1 == 0);

  // Two components, each checked separately.
  const LabeledDigraph two = disjoint_union(circle(W("ab"), 2), rose(2));
  const MainInequalityReport t = check_main_inequality(two, W("ab"));
  CHECK(t.components.size() == 2);
  CHECK(t.total_classes == 2);
  CHECK(t.total_beta1 == 3);
  CHECK(t.pass);
}

TEST_CASE("collapsed hypothesis and strict inequality") {
  const CollapsedHypothesis sq = collapsed_hypothesis(testing::a_square(), W("a"));
  CHECK_FALSE(sq.holds);
  CHECK(sq.edge_multiplicity == std::vector<std::size_t>{1, 1, 1, 1});

  const CollapsedHypothesis comm = collapsed_hypothesis(rose(2), W("abAB"));
  CHECK(comm.holds);
  CHECK(comm.edge_multiplicity == std::vector<std::size_t>{2, 2});

  CHECK(collapsed_hypothesis(make_graph(1, 1, {}), W("a")).holds);
  CHECK_THROWS_AS(collapsed_hypothesis(make_graph(1, 2, {}), W("a")), PreconditionViolation);

  const StrictInequalityReport s = check_strict_inequality(rose(2), W("abAB"));
  CHECK(s.status == CheckStatus::kPass);
  CHECK(s.count_with_multiplicity == 1);
  CHECK(s.beta1 == 2);

  CHECK(check_strict_inequality(make_graph(1, 1, {}), W("a")).status == CheckStatus::kNotApplicable);

  // Without the hypothesis the strict bound can fail badly.
  const StrictInequalityReport q = check_strict_inequality(testing::a_square(), W("a"));
  CHECK(q.status == CheckStatus::kNotApplicable);
  CHECK(q.count_with_multiplicity == 4);
  CHECK(q.beta1 == 1);
  CHECK(q.count_with_multiplicity > static_cast<std::size_t>(q.beta1));
}

TEST_CASE("library oracle") {
  CHECK(oracle_counts(testing::a_square(), W("a")) == OracleCounts{4, 1});
  CHECK(oracle_counts(circle(W("aab"), 2), W("aab")) == OracleCounts{1, 1});
  const LabeledDigraph two = disjoint_union(circle(W("ab"), 2), circle(W("ab"), 2));
  CHECK(oracle_counts(two, W("ab")) == OracleCounts{2, 2});
  CHECK_THROWS_AS(oracle_counts(circle(W("aaaaaaaaab"), 2), W("ab")), BoundExceeded);
}

TEST_CASE("decomposition properties") {
  Rng rng(21);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::uint32_t alphabet = static_cast<std::uint32_t>(uniform_index(rng, 1, 3));
    const Word w = random_simple_word(alphabet == 1 ? 1 : uniform_index(rng, 1, 6), alphabet, rng);
    const LabeledDigraph g = coin(rng, 0.5) ? random_w_rich_graph(w, alphabet, 10, 0.6, rng)
                                            : random_inverse_automaton(uniform_index(rng, 1, 8), alphabet, 0.7, rng);
    const WCycleDecomposition d = decompose(g, w);

    // Structure of the classes.
    std::size_t total = 0;
    std::vector<int> seen(g.vertex_count(), 0);
    for (std::size_t c = 0; c < d.classes.size(); ++c) {
      const WCycleClass& k = d.classes[c];
      total += k.period();
      CHECK(k.path.size() == k.period() * w.size());
      for (VertexId v : k.orbit) {
        ++seen[v];
        CHECK(d.class_of_vertex[v] == c);
        const auto end = testing::brute_trace(g, v, w.pow(k.period()));
        REQUIRE(end);
        CHECK(*end == v);
      }
      for (std::size_t i = 0; i < k.period(); ++i) {
        CHECK(testing::brute_trace(g, k.orbit[i], w) == k.orbit[(i + 1) % k.period()]);
      }
    }
    for (int s : seen) CHECK(s <= 1);
    CHECK(total == d.count_with_multiplicity);
    CHECK(d.classes.size() == d.class_count);
    CHECK(d.class_count <= d.count_with_multiplicity);
    CHECK(d.count_with_multiplicity <= g.vertex_count());

    std::size_t crossings = 0;
    for (std::size_t m : d.edge_multiplicity) crossings += m;
    CHECK(crossings == d.count_with_multiplicity * w.size());

    if (g.vertex_count() <= 8) {
      const testing::BruteCounts brute = testing::brute_counts(g, w);
      CHECK(d.count_with_multiplicity == brute.with_multiplicity);
      CHECK(d.class_count == brute.classes);
      const OracleCounts o = oracle_counts(g, w);
      CHECK(o.count_with_multiplicity == brute.with_multiplicity);
      CHECK(o.class_count == brute.classes);
    }

    for (std::size_t k = 1; k < w.size(); ++k) CHECK(decompose(g, w.rotate(k)).class_count == d.class_count);
    CHECK(decompose(g, invert(w)).class_count == d.class_count);
    CHECK(decompose(g, invert(w)).count_with_multiplicity == d.count_with_multiplicity);

    const MainInequalityReport r = check_main_inequality(g, w);
    CHECK(r.pass);
    for (const ComponentVerdict& c : r.components) CHECK(static_cast<long>(c.class_count) <= c.beta1);

    const PartialInjection sigma = trace_action(TransitionTable(g), w);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      CHECK(sigma.image[u] == testing::brute_trace(g, u, w));
      if (sigma.image[u]) CHECK(sigma.witness[u].size() == w.size());
      for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
        if (sigma.image[u] && sigma.image[v]) CHECK(*sigma.image[u] != *sigma.image[v]);
      }
    }
  }
}

TEST_CASE("strict inequality on pruned graphs") {
  Rng rng(8);
  std::size_t qualifying = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const std::uint32_t alphabet = static_cast<std::uint32_t>(uniform_index(rng, 2, 3));
    const Word w = random_simple_word(uniform_index(rng, 1, 6), alphabet, rng);
    const LabeledDigraph pruned =
        prune_to_multiplicity(random_w_rich_graph(w, alphabet, 12, 0.8, rng), w, 2);
    if (pruned.edge_count() == 0) continue;
    const LabeledDigraph g = component_of(pruned, pruned.edge(0).src);
    const StrictInequalityReport s = check_strict_inequality(g, w);
    REQUIRE(s.status != CheckStatus::kNotApplicable);
    CHECK(s.status == CheckStatus::kPass);
    CHECK(static_cast<long>(decompose(g, w).count_with_multiplicity) < testing::brute_betti(g));
    ++qualifying;
  }
  CHECK(qualifying > 50);
}
