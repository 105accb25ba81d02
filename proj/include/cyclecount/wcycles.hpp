#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cyclecount/automaton.hpp"
#include "cyclecount/words.hpp"

namespace cyclecount {

struct Trace {
  VertexId end = 0;
  std::vector<PathStep> path;
};

/// The unique path from v reading w; inverse letters cross edges backwards.
std::optional<Trace> trace(const TransitionTable& table, VertexId v, const Word& w);
std::optional<Trace> trace(const LabeledDigraph& g, VertexId v, const Word& w);

/// Throws PreconditionViolation unless w is nonempty, cyclically reduced
/// and not a proper power.
void require_simple_cyclic_word(const Word& w, const char* context);

/// The partial injection v -> end of the w-trace from v.
struct PartialInjection {
  std::vector<std::optional<VertexId>> image;
  std::vector<std::vector<PathStep>> witness;
};

PartialInjection trace_action(const TransitionTable& table, const Word& w);

/// One equivalence class of w-cycles: a cycle (v, s(v), ..., s^{n-1}(v)) of
/// the trace action together with the closed path reading w^n.
struct WCycleClass {
  std::vector<VertexId> orbit;
  std::vector<PathStep> path;
  std::size_t period() const { return orbit.size(); }
};

struct WCycleDecomposition {
  std::vector<WCycleClass> classes;
  /// #_w: based w-cycles, i.e. the sum of periods.
  std::size_t count_with_multiplicity = 0;
  /// #bar_w: number of classes.
  std::size_t class_count = 0;
  /// Traversals of each edge (either direction) summed over class paths.
  std::vector<std::size_t> edge_multiplicity;
  /// Class index of each vertex lying on a w-cycle.
  std::vector<std::optional<std::size_t>> class_of_vertex;
};

/// Rejects words that are not simple and cyclically reduced, and graphs that
/// are not deterministic.
WCycleDecomposition decompose(const LabeledDigraph& g, const Word& w);

struct ComponentVerdict {
  std::size_t component = 0;
  std::size_t class_count = 0;
  std::size_t count_with_multiplicity = 0;
  long beta1 = 0;
  bool pass = false;
  bool equality = false;
};

struct MainInequalityReport {
  std::vector<ComponentVerdict> components;
  std::size_t total_classes = 0;
  long total_beta1 = 0;
  bool pass = false;
  bool equality = false;
};

/// #bar_w <= beta_1, per component and in total.
MainInequalityReport check_main_inequality(const LabeledDigraph& g, const Word& w);

struct CollapsedHypothesis {
  bool holds = false;
  std::vector<std::size_t> edge_multiplicity;
};

/// Every edge is crossed at least twice by the class paths. Requires g
/// connected.
CollapsedHypothesis collapsed_hypothesis(const LabeledDigraph& g, const Word& w);

enum class CheckStatus { kPass, kFail, kNotApplicable, kInconclusive };

std::string to_string(CheckStatus s);

struct StrictInequalityReport {
  CheckStatus status = CheckStatus::kNotApplicable;
  std::size_t count_with_multiplicity = 0;
  long beta1 = 0;
  /// Why the check did not apply, when status is kNotApplicable.
  std::string reason;
};

/// #_w < beta_1 for connected graphs other than a vertex on which the
/// collapsed hypothesis holds. Unmet preconditions are reported as
/// kNotApplicable with a reason.
StrictInequalityReport check_strict_inequality(const LabeledDigraph& g, const Word& w);

struct OracleCounts {
  std::size_t count_with_multiplicity = 0;
  std::size_t class_count = 0;
  friend bool operator==(const OracleCounts&, const OracleCounts&) = default;
};

inline constexpr std::size_t kDefaultOracleBound = 8;

/// Brute force: reads w^n letter by letter through the raw edge list for
/// each vertex and each n <= |V|, then groups base vertices joined by
/// w^m-paths. Throws BoundExceeded above `max_vertices`.
OracleCounts oracle_counts(const LabeledDigraph& g, const Word& w,
                           std::size_t max_vertices = kDefaultOracleBound);

}  // namespace cyclecount
