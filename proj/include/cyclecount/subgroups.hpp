#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclecount/automaton.hpp"
#include "cyclecount/wcycles.hpp"
#include "cyclecount/words.hpp"

namespace cyclecount {

/// Based, folded, core graph of a finitely generated subgroup H of the free
/// group on `graph.alphabet()` generators.
struct SubgroupGraph {
  LabeledDigraph graph;
  std::vector<Word> generators;
  /// Notes produced while building (e.g. generators that were reduced).
  std::vector<std::string> warnings;
};

/// Based vertex with one subdivided loop per word, each reading the word
/// as given (no reduction).
LabeledDigraph wedge_of_loops(const std::vector<Word>& words, std::uint32_t alphabet);

/// Wedge of subdivided loops reading the generators, folded and cored.
SubgroupGraph stallings_graph(const std::vector<Word>& generators, std::uint32_t alphabet);

long rank(const SubgroupGraph& h);

/// Whether the reduced form of w labels a closed path at the basepoint.
bool contains(const SubgroupGraph& h, const Word& w);

/// A free basis read off a spanning tree of the graph.
std::vector<Word> free_basis(const LabeledDigraph& g);

struct ConjugateCountReport {
  std::size_t count = 0;
  long rank = 0;
  bool pass = false;
};

/// Conjugates of <w> meeting H nontrivially, counted as classes of w-cycles
/// in the core graph; bounded by rank(H).
ConjugateCountReport count_conjugates_meeting(const SubgroupGraph& h, const Word& w);

/// H1 ∩ H2: the based component of the fiber product, cored.
SubgroupGraph intersect(const SubgroupGraph& h1, const SubgroupGraph& h2);

bool is_trivial(const SubgroupGraph& h);

/// g^-1 H g, rebuilt from the conjugated generators.
SubgroupGraph conjugate(const SubgroupGraph& h, const Word& g);

inline long reduced_rank(long beta1) { return beta1 > 1 ? beta1 - 1 : 0; }

struct ShncReport {
  std::vector<long> component_beta1;
  std::vector<long> component_reduced_ranks;
  long lhs = 0;
  long rhs = 0;
  bool pass = false;
  bool equality = false;
};

/// Sum of reduced ranks over fiber product components is at most the
/// product of the factors' reduced ranks. Both factors connected.
ShncReport check_shnc(const LabeledDigraph& g1, const LabeledDigraph& g2);
ShncReport check_shnc(const SubgroupGraph& h1, const SubgroupGraph& h2);

struct RestatedReport {
  long lhs = 0;
  long rhs = 0;
  std::size_t class_count = 0;
  bool pass = false;
  /// lhs equals #bar_w computed from the trace action.
  bool agrees_with_classes = false;
};

/// Sum of beta_1 over components of (w-circle x g2) <= beta_1(w-circle) *
/// beta_1(g2) = beta_1(g2).
RestatedReport check_restated_inequality(const Word& cycle_word, const LabeledDigraph& g2);

struct ConjugateIntersectionReport {
  CheckStatus status = CheckStatus::kNotApplicable;
  long rank = 0;
  std::size_t cosets = 0;
  SubgroupGraph intersection;
};

/// Generators are distinct basis letters, so H is a free factor and
/// therefore isolated.
bool is_basis_free_factor(const SubgroupGraph& h);

/// For distinct cosets H g_1, ..., H g_n with n > rank(H), the conjugates
/// g_i^-1 H g_i intersect trivially. Requires H to be a basis free factor.
ConjugateIntersectionReport check_conjugate_intersection(const SubgroupGraph& h,
                                                         const std::vector<Word>& cosets);

}  // namespace cyclecount
