#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclecount/automaton.hpp"
#include "cyclecount/wcycles.hpp"
#include "cyclecount/words.hpp"

namespace cyclecount {

/// Closed edge path in the skeleton bounding one 2-cell.
using CellBoundary = std::vector<PathStep>;

/// A labeled digraph with 2-cells attached along closed combinatorial paths.
struct TwoComplex {
  LabeledDigraph skeleton;
  std::vector<CellBoundary> cells;
};

/// Throws InvalidInput unless every cell boundary is a nonempty closed path
/// whose consecutive steps share endpoints.
void validate_complex(const TwoComplex& x);

/// Gamma^w: one cell per class of w-cycles, attached along the class path.
TwoComplex build_gamma_w(const LabeledDigraph& g, const Word& w);

long euler_characteristic(const TwoComplex& x);

struct FreeFace {
  EdgeId edge = 0;
  std::size_t cell = 0;
  friend bool operator==(const FreeFace&, const FreeFace&) = default;
};

/// Edge/cell pairs where the cell crosses the edge exactly once and no other
/// cell crosses it.
std::vector<FreeFace> free_faces(const TwoComplex& x);

inline constexpr std::size_t kExhaustiveCellCap = 12;

enum class CollapseMethod { kTrivial, kGreedy, kExhaustive, kEulerObstruction, kExhausted };

std::string to_string(CollapseMethod m);

struct CollapseResult {
  bool collapses = false;
  /// Witness: collapses in order, when collapses is true.
  std::vector<FreeFace> sequence;
  CollapseMethod method = CollapseMethod::kTrivial;
};

/// Whether free-face collapses can remove every cell leaving a tree. Greedy
/// first, then depth-first search over collapse orders memoized on the set
/// of remaining cells. Throws BoundExceeded when greedy fails on more than
/// `cell_cap` cells. Requires a connected skeleton.
CollapseResult collapses_to_tree(const TwoComplex& x, std::size_t cell_cap = kExhaustiveCellCap);

/// The exhaustive search alone, with no greedy pass and no Euler shortcut.
CollapseResult exhaustive_collapse(const TwoComplex& x, std::size_t cell_cap = kExhaustiveCellCap);

struct EqualityCollapseReport {
  CheckStatus status = CheckStatus::kNotApplicable;
  std::size_t class_count = 0;
  long beta1 = 0;
  CollapseResult collapse;
};

/// If #bar_w = beta_1 on connected g, Gamma^w must collapse to a tree.
EqualityCollapseReport check_equality_collapse(const LabeledDigraph& g, const Word& w,
                                               std::size_t cell_cap = kExhaustiveCellCap);

/// A 2-cell of Y attached at `vertex` along the closed path w^exponent.
struct Attachment {
  VertexId vertex = 0;
  std::size_t exponent = 1;
};

/// Y -> X, X the one-relator complex of w. The 1-skeleton of Y is g; the
/// cells must sit on distinct w-cycle classes, each going once around its
/// class (exponent equal to the class period).
TwoComplex build_immersion(const LabeledDigraph& g, const Word& w,
                           const std::vector<Attachment>& attachments);

enum class NpiBranch { kNonpositive, kContractible, kNone };

struct NpiReport {
  CheckStatus status = CheckStatus::kFail;
  NpiBranch branch = NpiBranch::kNone;
  long euler = 0;
  CollapseResult collapse;
};

std::string to_string(NpiBranch b);

/// chi(Y) <= 0, or Y collapses to a tree. When chi(Y) > 0 and the collapse
/// search is cut off by the cell cap the verdict is kInconclusive.
NpiReport check_npi(const LabeledDigraph& g, const Word& w,
                    const std::vector<Attachment>& attachments,
                    std::size_t cell_cap = kExhaustiveCellCap);

struct StaggeredPresentation {
  std::uint32_t alphabet = 0;
  std::vector<Word> relators;
  /// Ordered generators, least first.
  std::vector<Label> ordered_letters;
  /// Relator indices, least first.
  std::vector<std::size_t> relator_order;
};

struct StaggeredCheck {
  bool staggered = false;
  std::vector<std::string> diagnostics;
};

StaggeredCheck is_staggered(const StaggeredPresentation& p);

struct MultiwordReport {
  CheckStatus status = CheckStatus::kFail;
  std::vector<std::size_t> class_counts;
  std::size_t total_classes = 0;
  long beta1 = 0;
};

/// Sum over relators of #bar_{w_i} <= beta_1 for connected g.
MultiwordReport check_multiword_inequality(const LabeledDigraph& g, const StaggeredPresentation& p);

}  // namespace cyclecount
