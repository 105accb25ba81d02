#include "cyclecount/generators.hpp"

#include <algorithm>
#include <numeric>

#include "cyclecount/error.hpp"
#include "cyclecount/subgroups.hpp"
#include "cyclecount/wcycles.hpp"

namespace cyclecount {

void TrialConfig::validate() const {
  if (trials == 0) throw InvalidInput("trials must be positive");
  if (max_vertices == 0) throw InvalidInput("max-vertices must be positive");
  if (alphabet == 0) throw InvalidInput("alphabet must be positive");
  if (max_word_length == 0) throw InvalidInput("max-word-length must be positive");
  if (!(edge_density >= 0.0 && edge_density <= 1.0)) throw InvalidInput("density must lie in [0, 1]");
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t z = master_seed ^ (index + 0x9e3779b97f4a7c15ULL) * 0xbf58476d1ce4e5b9ULL;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

LabeledDigraph random_inverse_automaton(std::size_t vertices, std::uint32_t alphabet, double density,
                                        Rng& rng) {
  LabeledDigraph g(alphabet);
  for (std::size_t v = 0; v < vertices; ++v) g.add_vertex();
  std::vector<VertexId> perm(vertices);
  for (Label l = 1; l <= alphabet; ++l) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (VertexId v = 0; v < vertices; ++v) {
      if (coin(rng, density)) g.add_edge(v, perm[v], l);
    }
  }
  return g;
}

LabeledDigraph random_inverse_automaton(const TrialConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = uniform_index(rng, 1, cfg.max_vertices);
  return random_inverse_automaton(n, cfg.alphabet, cfg.edge_density, rng);
}

Word random_reduced_word(std::size_t length, std::uint32_t alphabet, Rng& rng) {
  if (alphabet == 0 && length > 0) throw PreconditionViolation("random word over an empty alphabet");
  std::vector<Letter> letters;
  letters.reserve(length);
  while (letters.size() < length) {
    const std::size_t k = uniform_index(rng, 0, 2 * alphabet - 1);
    const Letter l{static_cast<std::uint32_t>(k / 2 + 1), k % 2 == 0 ? 1 : -1};
    if (!letters.empty() && letters.back().is_inverse_of(l)) continue;
    letters.push_back(l);
  }
  return Word(std::move(letters));
}

Word random_simple_word(std::size_t length, std::uint32_t alphabet, Rng& rng) {
  if (length == 0) throw PreconditionViolation("random_simple_word: length must be positive");
  if (alphabet == 0) throw PreconditionViolation("random_simple_word: empty alphabet");
  if (alphabet == 1 && length > 1) {
    throw PreconditionViolation("random_simple_word: every word of length > 1 over one letter is a proper power");
  }
  for (;;) {
    Word w = random_reduced_word(length, alphabet, rng);
    if (is_cyclically_reduced(w) && is_simple(w)) return w;
  }
}

Word random_simple_word(const TrialConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t length = cfg.alphabet == 1 ? 1 : uniform_index(rng, 1, cfg.max_word_length);
  return random_simple_word(length, cfg.alphabet, rng);
}

LabeledDigraph random_w_rich_graph(const Word& w, std::uint32_t alphabet, std::size_t max_vertices,
                                   double density, Rng& rng) {
  std::vector<Word> loops;
  const std::size_t conjugates = uniform_index(rng, 1, 3);
  for (std::size_t k = 0; k < conjugates; ++k) {
    const Word u = random_reduced_word(uniform_index(rng, 0, 3), alphabet, rng);
    loops.push_back(free_reduce(u * w.pow(uniform_index(rng, 1, 2)) * invert(u)));
  }
  const std::size_t extras = uniform_index(rng, 0, 2);
  for (std::size_t k = 0; k < extras; ++k) {
    loops.push_back(random_reduced_word(uniform_index(rng, 1, 6), alphabet, rng));
  }
  const LabeledDigraph wedge = wedge_of_loops(loops, alphabet);
  LabeledDigraph g = fold(wedge);
  if (coin(rng, 0.5) && g.vertex_count() < max_vertices) {
    const std::size_t n = uniform_index(rng, 1, max_vertices - g.vertex_count());
    const LabeledDigraph other = random_inverse_automaton(n, alphabet, density, rng);
    LabeledDigraph joined = disjoint_union(g, other);
    joined.add_edge(uniform_index(rng, 0, g.vertex_count() - 1),
                    g.vertex_count() + uniform_index(rng, 0, n - 1),
                    static_cast<Label>(uniform_index(rng, 1, alphabet)));
    g = fold(joined);
  }
  return g;
}

LabeledDigraph random_component(const LabeledDigraph& g, Rng& rng) {
  if (coin(rng, 0.5)) {
    const BettiReport b = betti(g);
    const auto largest = std::max_element(
        b.components.begin(), b.components.end(),
        [](const ComponentInfo& x, const ComponentInfo& y) { return x.vertices.size() < y.vertices.size(); });
    return component_of(g, largest->vertices.front());
  }
  return component_of(g, uniform_index(rng, 0, g.vertex_count() - 1));
}

LabeledDigraph prune_to_multiplicity(const LabeledDigraph& g, const Word& w, std::size_t min_multiplicity) {
  LabeledDigraph current = g;
  for (;;) {
    const WCycleDecomposition d = decompose(current, w);
    std::vector<EdgeId> keep;
    for (EdgeId e = 0; e < current.edge_count(); ++e) {
      if (d.edge_multiplicity[e] >= min_multiplicity) keep.push_back(e);
    }
    if (keep.size() == current.edge_count()) return current;
    current = edge_subgraph(current, keep);
  }
}

StaggeredPresentation random_staggered_presentation(std::size_t relators, std::uint32_t alphabet,
                                                    std::size_t max_word_length, Rng& rng) {
  if (relators == 0 || alphabet < relators) {
    throw PreconditionViolation("random_staggered_presentation: need at least as many letters as relators");
  }
  StaggeredPresentation p;
  p.alphabet = alphabet;

  std::vector<Label> letters(alphabet);
  std::iota(letters.begin(), letters.end(), 1);
  std::shuffle(letters.begin(), letters.end(), rng);
  const std::size_t ordered = uniform_index(rng, relators, alphabet);
  p.ordered_letters.assign(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(ordered));
  const std::vector<Label> unordered(letters.begin() + static_cast<std::ptrdiff_t>(ordered), letters.end());

  // Strictly increasing minimum and maximum ranks with lo[i] <= hi[i].
  auto sorted_sample = [&]() {
    std::vector<std::size_t> ranks(ordered);
    std::iota(ranks.begin(), ranks.end(), 0);
    std::shuffle(ranks.begin(), ranks.end(), rng);
    ranks.resize(relators);
    std::sort(ranks.begin(), ranks.end());
    return ranks;
  };
  std::vector<std::size_t> lo;
  std::vector<std::size_t> hi;
  for (;;) {
    lo = sorted_sample();
    hi = sorted_sample();
    bool ok = true;
    for (std::size_t i = 0; i < relators; ++i) ok = ok && lo[i] <= hi[i];
    if (ok) break;
  }

  std::vector<Word> by_rank(relators);
  for (std::size_t i = 0; i < relators; ++i) {
    std::vector<Label> allowed(unordered);
    for (std::size_t k = lo[i]; k <= hi[i]; ++k) allowed.push_back(p.ordered_letters[k]);
    const Label low = p.ordered_letters[lo[i]];
    const Label high = p.ordered_letters[hi[i]];
    if (allowed.size() == 1) {
      by_rank[i] = Word({Letter{low, coin(rng, 0.5) ? 1 : -1}});
      continue;
    }
    const std::size_t min_length = low == high ? 1 : 2;
    for (;;) {
      const std::size_t length = uniform_index(rng, min_length, std::max(min_length, max_word_length));
      const Word pattern = random_reduced_word(length, static_cast<std::uint32_t>(allowed.size()), rng);
      std::vector<Letter> mapped;
      for (const Letter& l : pattern) mapped.push_back(Letter{allowed[l.generator - 1], l.sign});
      Word rel(std::move(mapped));
      bool has_low = false;
      bool has_high = false;
      for (const Letter& l : rel) {
        has_low = has_low || l.generator == low;
        has_high = has_high || l.generator == high;
      }
      if (has_low && has_high && is_cyclically_reduced(rel) && is_simple(rel)) {
        by_rank[i] = std::move(rel);
        break;
      }
    }
  }

  // List the relators in a shuffled order; relator_order recovers the ranks.
  std::vector<std::size_t> slot(relators);
  std::iota(slot.begin(), slot.end(), 0);
  std::shuffle(slot.begin(), slot.end(), rng);
  p.relators.resize(relators);
  p.relator_order.resize(relators);
  for (std::size_t i = 0; i < relators; ++i) {
    p.relators[slot[i]] = by_rank[i];
    p.relator_order[i] = slot[i];
  }
  return p;
}

}  // namespace cyclecount
