#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cyclecount/words.hpp"

namespace cyclecount {

using VertexId = std::size_t;
using EdgeId = std::size_t;
using Label = std::uint32_t;

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  Label label = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite directed graph with generator-labeled edges and an optional
/// basepoint. Vertices are dense indices; each carries an opaque display
/// name used by the file formats. Parallel edges and self-loops are allowed.
///
/// Determinism (at most one outgoing and one incoming edge per label at each
/// vertex) is not enforced on construction; see validate() and fold().
class LabeledDigraph {
 public:
  LabeledDigraph() = default;
  explicit LabeledDigraph(std::uint32_t alphabet) : alphabet_(alphabet) {}

  VertexId add_vertex();
  VertexId add_vertex(std::string name);
  EdgeId add_edge(VertexId src, VertexId dst, Label label);
  void set_basepoint(std::optional<VertexId> v);

  std::uint32_t alphabet() const { return alphabet_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> basepoint() const { return basepoint_; }

  std::optional<VertexId> find_vertex(const std::string& name) const;

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;

 private:
  std::uint32_t alphabet_ = 0;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::optional<VertexId> basepoint_;
};

enum class Direction { kOutgoing, kIncoming };

struct DeterminismViolation {
  VertexId vertex = 0;
  Label label = 0;
  Direction direction = Direction::kOutgoing;
  std::vector<EdgeId> edges;
};

/// Empty iff g is an inverse automaton.
std::vector<DeterminismViolation> validate(const LabeledDigraph& g);

/// Throws PreconditionViolation naming the first violation, if any.
void require_deterministic(const LabeledDigraph& g, const char* context);

/// One traversal of an edge, forwards (+1) or backwards (-1).
struct PathStep {
  EdgeId edge = 0;
  int dir = 1;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// O(1) transitions of an inverse automaton. Construction validates.
class TransitionTable {
 public:
  explicit TransitionTable(const LabeledDigraph& g);

  /// The edge leaving v along the letter (forwards for positive letters,
  /// backwards for inverse letters), if any.
  std::optional<PathStep> step(VertexId v, Letter l) const;
  VertexId target(VertexId v, PathStep s) const;

  const LabeledDigraph& graph() const { return *graph_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t slot(VertexId v, Label l) const { return v * alphabet_ + (l - 1); }

  const LabeledDigraph* graph_;
  std::size_t alphabet_;
  std::vector<EdgeId> out_;
  std::vector<EdgeId> in_;
};

struct ComponentInfo {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  long beta1 = 0;
};

struct BettiReport {
  std::vector<ComponentInfo> components;
  long total = 0;
};

/// Per-vertex component index plus the number of components.
struct ComponentLabels {
  std::vector<std::size_t> of_vertex;
  std::size_t count = 0;
};

ComponentLabels connected_components(const LabeledDigraph& g);
bool is_connected(const LabeledDigraph& g);

BettiReport betti(const LabeledDigraph& g);

/// |V| - |E|.
long euler_characteristic(const LabeledDigraph& g);

/// Induced subgraph on the given vertices (edges with both ends inside),
/// keeping names and the basepoint if it survives. `vertex_map` receives the
/// new index of each old vertex, or npos.
LabeledDigraph induced_subgraph(const LabeledDigraph& g, const std::vector<VertexId>& vertices,
                                std::vector<std::size_t>* vertex_map = nullptr);

/// Subgraph keeping all vertices and only the listed edges.
LabeledDigraph edge_subgraph(const LabeledDigraph& g, const std::vector<EdgeId>& edges);

/// The component containing v.
LabeledDigraph component_of(const LabeledDigraph& g, VertexId v);

struct FoldResult {
  LabeledDigraph graph;
  /// Image of each input vertex in the folded graph.
  std::vector<VertexId> vertex_map;
  /// Number of vertex identifications performed.
  std::size_t identifications = 0;
};

/// Stallings folding. Without a shuffle seed the first conflict in edge
/// order is folded at every step; with a seed the conflict is chosen
/// pseudo-randomly, which is how fold confluence is exercised.
FoldResult fold_with_map(const LabeledDigraph& g, std::optional<std::uint64_t> shuffle_seed = {});
LabeledDigraph fold(const LabeledDigraph& g, std::optional<std::uint64_t> shuffle_seed = {});

/// Repeatedly removes non-basepoint vertices of degree <= 1 (spurs and the
/// isolated vertices they leave behind). Requires a basepoint.
LabeledDigraph core(const LabeledDigraph& g);

/// Vertex pairs, same-label edge pairs, basepoint pair when both exist.
/// Vertex (i, j) gets index i * |V2| + j.
LabeledDigraph fiber_product(const LabeledDigraph& g1, const LabeledDigraph& g2);

/// Breadth-first renumbering ordered by (label, outgoing before incoming),
/// from the basepoint if set, else from the start vertex giving the
/// lexicographically least edge list. Requires g deterministic, connected.
LabeledDigraph canonical_form(const LabeledDigraph& g);

/// Label-isomorphism (respecting basepoints) for connected deterministic
/// graphs.
bool isomorphic(const LabeledDigraph& a, const LabeledDigraph& b);

/// Wedge of one loop per generator at a single based vertex.
LabeledDigraph rose(std::uint32_t alphabet);

/// Closed path reading w from a based vertex c0 through c1 ... c_{|w|-1}.
LabeledDigraph circle(const Word& w, std::uint32_t alphabet);

/// Disjoint union; vertices of b are shifted by |V(a)|. Basepoint of a kept.
LabeledDigraph disjoint_union(const LabeledDigraph& a, const LabeledDigraph& b);

/// Graphviz rendering; labels drawn as letters.
std::string to_dot(const LabeledDigraph& g);

}  // namespace cyclecount
