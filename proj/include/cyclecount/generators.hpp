#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cyclecount/automaton.hpp"
#include "cyclecount/complex2.hpp"
#include "cyclecount/words.hpp"

namespace cyclecount {

using Rng = std::mt19937_64;

struct TrialConfig {
  std::uint64_t master_seed = 1;
  std::size_t trials = 1000;
  std::size_t max_vertices = 30;
  std::uint32_t alphabet = 3;
  std::size_t max_word_length = 16;
  /// Probability that a (vertex, label) slot carries an edge.
  double edge_density = 0.6;
  /// Rejection-sampled suites must find at least this many instances.
  std::size_t min_qualifying = 0;

  /// Throws InvalidInput on nonpositive bounds or density outside [0, 1].
  void validate() const;
};

/// splitmix64 of (master, index): per-trial seeds independent of scheduling.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index);

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi);
bool coin(Rng& rng, double p);

/// Each label is a random permutation of the vertices with every pair kept
/// with probability `density`: a partial injection, so the result is
/// deterministic by construction.
LabeledDigraph random_inverse_automaton(std::size_t vertices, std::uint32_t alphabet, double density,
                                        Rng& rng);
/// Vertex count uniform in [1, max_vertices].
LabeledDigraph random_inverse_automaton(const TrialConfig& cfg, std::uint64_t seed);

/// Uniform among reduced words of the given length.
Word random_reduced_word(std::size_t length, std::uint32_t alphabet, Rng& rng);

/// Reduced words re-rolled until cyclically reduced and not a proper power.
/// Throws PreconditionViolation when no such word exists (length 0, or a
/// one-letter alphabet with length > 1).
Word random_simple_word(std::size_t length, std::uint32_t alphabet, Rng& rng);
/// Length uniform in [1, max_word_length].
Word random_simple_word(const TrialConfig& cfg, std::uint64_t seed);

/// A folded graph carrying w-cycles: the wedge of conjugates u w^m u^-1 and
/// a few random words, optionally attached to a random automaton by one
/// edge and refolded.
LabeledDigraph random_w_rich_graph(const Word& w, std::uint32_t alphabet, std::size_t max_vertices,
                                   double density, Rng& rng);

/// Component of a random vertex (or the largest component, half the time).
LabeledDigraph random_component(const LabeledDigraph& g, Rng& rng);

/// Largest subgraph whose edges all lie on w-cycle class paths at least
/// `min_multiplicity` times, found by repeatedly deleting lighter edges.
LabeledDigraph prune_to_multiplicity(const LabeledDigraph& g, const Word& w, std::size_t min_multiplicity);

/// A staggered presentation with the given number of relators, each
/// cyclically reduced and simple. Needs alphabet >= relators.
StaggeredPresentation random_staggered_presentation(std::size_t relators, std::uint32_t alphabet,
                                                    std::size_t max_word_length, Rng& rng);

}  // namespace cyclecount
