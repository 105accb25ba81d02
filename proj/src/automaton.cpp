#include "cyclecount/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "cyclecount/error.hpp"

namespace cyclecount {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller index becomes the representative.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string label_text(Label l) { return letter_to_string(Letter{l, 1}); }

}  // namespace

VertexId LabeledDigraph::add_vertex() { return add_vertex("v" + std::to_string(names_.size())); }

VertexId LabeledDigraph::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

EdgeId LabeledDigraph::add_edge(VertexId src, VertexId dst, Label label) {
  if (src >= names_.size() || dst >= names_.size()) {
    throw InvalidInput("edge endpoint out of range");
  }
  if (label < 1 || label > alphabet_) {
    throw InvalidInput("edge label " + std::to_string(label) + " outside alphabet of size " +
                       std::to_string(alphabet_));
  }
  edges_.push_back(Edge{src, dst, label});
  return edges_.size() - 1;
}

void LabeledDigraph::set_basepoint(std::optional<VertexId> v) {
  if (v && *v >= names_.size()) throw InvalidInput("basepoint out of range");
  basepoint_ = v;
}

std::optional<VertexId> LabeledDigraph::find_vertex(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

std::vector<DeterminismViolation> validate(const LabeledDigraph& g) {
  std::map<std::pair<VertexId, Label>, std::vector<EdgeId>> out;
  std::map<std::pair<VertexId, Label>, std::vector<EdgeId>> in;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out[{edge.src, edge.label}].push_back(e);
    in[{edge.dst, edge.label}].push_back(e);
  }
  std::vector<DeterminismViolation> violations;
  for (const auto& [key, ids] : out) {
    if (ids.size() > 1) violations.push_back({key.first, key.second, Direction::kOutgoing, ids});
  }
  for (const auto& [key, ids] : in) {
    if (ids.size() > 1) violations.push_back({key.first, key.second, Direction::kIncoming, ids});
  }
  std::sort(violations.begin(), violations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.vertex, a.label, a.direction) < std::tie(b.vertex, b.label, b.direction);
  });
  return violations;
}

void require_deterministic(const LabeledDigraph& g, const char* context) {
  const auto violations = validate(g);
  if (violations.empty()) return;
  const auto& v = violations.front();
  throw PreconditionViolation(
      std::string(context) + ": graph is not deterministic at vertex " + g.name(v.vertex) +
      " (label " + label_text(v.label) + ", " +
      (v.direction == Direction::kOutgoing ? "outgoing" : "incoming") + ")");
}

TransitionTable::TransitionTable(const LabeledDigraph& g)
    : graph_(&g),
      alphabet_(g.alphabet()),
      out_(g.vertex_count() * g.alphabet(), kNone),
      in_(g.vertex_count() * g.alphabet(), kNone) {
  require_deterministic(g, "transition table");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out_[slot(edge.src, edge.label)] = e;
    in_[slot(edge.dst, edge.label)] = e;
  }
}

std::optional<PathStep> TransitionTable::step(VertexId v, Letter l) const {
  if (l.generator < 1 || l.generator > alphabet_) return std::nullopt;
  const EdgeId e = l.sign > 0 ? out_[slot(v, l.generator)] : in_[slot(v, l.generator)];
  if (e == kNone) return std::nullopt;
  return PathStep{e, l.sign > 0 ? 1 : -1};
}

VertexId TransitionTable::target(VertexId, PathStep s) const {
  const Edge& e = graph_->edge(s.edge);
  return s.dir > 0 ? e.dst : e.src;
}

ComponentLabels connected_components(const LabeledDigraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) sets.unite(e.src, e.dst);
  ComponentLabels labels;
  labels.of_vertex.assign(g.vertex_count(), kNpos);
  std::vector<std::size_t> root_to_label(g.vertex_count(), kNpos);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t root = sets.find(v);
    if (root_to_label[root] == kNpos) root_to_label[root] = labels.count++;
    labels.of_vertex[v] = root_to_label[root];
  }
  return labels;
}

bool is_connected(const LabeledDigraph& g) { return connected_components(g).count <= 1; }

BettiReport betti(const LabeledDigraph& g) {
  if (g.vertex_count() == 0) throw PreconditionViolation("betti: graph has no vertices");
  const ComponentLabels labels = connected_components(g);
  BettiReport report;
  report.components.resize(labels.count);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    report.components[labels.of_vertex[v]].vertices.push_back(v);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    report.components[labels.of_vertex[g.edge(e).src]].edges.push_back(e);
  }
  for (ComponentInfo& c : report.components) {
    c.beta1 = static_cast<long>(c.edges.size()) - static_cast<long>(c.vertices.size()) + 1;
    report.total += c.beta1;
  }
  return report;
}

long euler_characteristic(const LabeledDigraph& g) {
  return static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count());
}

LabeledDigraph induced_subgraph(const LabeledDigraph& g, const std::vector<VertexId>& vertices,
                                std::vector<std::size_t>* vertex_map) {
  std::vector<std::size_t> map(g.vertex_count(), kNpos);
  LabeledDigraph sub(g.alphabet());
  for (VertexId v : vertices) {
    if (map[v] == kNpos) map[v] = sub.add_vertex(g.name(v));
  }
  for (const Edge& e : g.edges()) {
    if (map[e.src] != kNpos && map[e.dst] != kNpos) sub.add_edge(map[e.src], map[e.dst], e.label);
  }
  if (g.basepoint() && map[*g.basepoint()] != kNpos) sub.set_basepoint(map[*g.basepoint()]);
  if (vertex_map) *vertex_map = std::move(map);
  return sub;
}

LabeledDigraph edge_subgraph(const LabeledDigraph& g, const std::vector<EdgeId>& edges) {
  LabeledDigraph sub(g.alphabet());
  for (VertexId v = 0; v < g.vertex_count(); ++v) sub.add_vertex(g.name(v));
  for (EdgeId e : edges) sub.add_edge(g.edge(e).src, g.edge(e).dst, g.edge(e).label);
  sub.set_basepoint(g.basepoint());
  return sub;
}

LabeledDigraph component_of(const LabeledDigraph& g, VertexId v) {
  const ComponentLabels labels = connected_components(g);
  std::vector<VertexId> members;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (labels.of_vertex[u] == labels.of_vertex[v]) members.push_back(u);
  }
  return induced_subgraph(g, members);
}

FoldResult fold_with_map(const LabeledDigraph& g, std::optional<std::uint64_t> shuffle_seed) {
  const std::size_t n = g.vertex_count();
  DisjointSets sets(n);
  std::vector<Edge> edges = g.edges();
  std::vector<bool> alive(edges.size(), true);
  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);

  std::size_t identifications = 0;
  for (;;) {
    // Re-point edges at representatives and drop exact duplicates; two
    // same-label edges with equal endpoints are folded into one.
    std::map<Edge, EdgeId> seen;
    for (EdgeId e = 0; e < edges.size(); ++e) {
      if (!alive[e]) continue;
      edges[e].src = sets.find(edges[e].src);
      edges[e].dst = sets.find(edges[e].dst);
      if (!seen.emplace(edges[e], e).second) alive[e] = false;
    }

    std::vector<std::pair<VertexId, VertexId>> conflicts;
    std::map<std::pair<VertexId, Label>, EdgeId> by_src;
    std::map<std::pair<VertexId, Label>, EdgeId> by_dst;
    for (EdgeId e = 0; e < edges.size(); ++e) {
      if (!alive[e]) continue;
      const Edge& edge = edges[e];
      auto [out_it, out_new] = by_src.emplace(std::make_pair(edge.src, edge.label), e);
      if (!out_new) conflicts.emplace_back(edges[out_it->second].dst, edge.dst);
      auto [in_it, in_new] = by_dst.emplace(std::make_pair(edge.dst, edge.label), e);
      if (!in_new) conflicts.emplace_back(edges[in_it->second].src, edge.src);
      if (!rng && !conflicts.empty()) break;
    }
    if (conflicts.empty()) break;

    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, conflicts.size() - 1)(*rng);
    if (sets.unite(conflicts[pick].first, conflicts[pick].second)) ++identifications;
  }

  FoldResult result;
  result.graph = LabeledDigraph(g.alphabet());
  std::vector<std::size_t> rep_index(n, kNpos);
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (rep_index[root] == kNpos) rep_index[root] = result.graph.add_vertex(g.name(root));
  }
  result.vertex_map.resize(n);
  for (VertexId v = 0; v < n; ++v) result.vertex_map[v] = rep_index[sets.find(v)];
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (!alive[e]) continue;
    result.graph.add_edge(result.vertex_map[edges[e].src], result.vertex_map[edges[e].dst],
                          edges[e].label);
  }
  if (g.basepoint()) result.graph.set_basepoint(result.vertex_map[*g.basepoint()]);
  result.identifications = identifications;
  return result;
}

LabeledDigraph fold(const LabeledDigraph& g, std::optional<std::uint64_t> shuffle_seed) {
  return fold_with_map(g, shuffle_seed).graph;
}

LabeledDigraph core(const LabeledDigraph& g) {
  if (!g.basepoint()) throw PreconditionViolation("core: graph has no basepoint");
  const VertexId base = *g.basepoint();
  std::vector<long> degree(g.vertex_count(), 0);
  std::vector<std::vector<EdgeId>> incident(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    ++degree[edge.src];
    ++degree[edge.dst];
    incident[edge.src].push_back(e);
    if (edge.dst != edge.src) incident[edge.dst].push_back(e);
  }
  std::vector<bool> vertex_alive(g.vertex_count(), true);
  std::vector<bool> edge_alive(g.edge_count(), true);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != base && degree[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (!vertex_alive[v]) continue;
    vertex_alive[v] = false;
    for (EdgeId e : incident[v]) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = false;
      const Edge& edge = g.edge(e);
      const VertexId other = edge.src == v ? edge.dst : edge.src;
      if (--degree[other] <= 1 && other != base && vertex_alive[other]) queue.push_back(other);
    }
  }
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (vertex_alive[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

LabeledDigraph fiber_product(const LabeledDigraph& g1, const LabeledDigraph& g2) {
  if (g1.alphabet() != g2.alphabet()) {
    throw PreconditionViolation("fiber_product: alphabet mismatch (" +
                                std::to_string(g1.alphabet()) + " vs " +
                                std::to_string(g2.alphabet()) + ")");
  }
  LabeledDigraph product(g1.alphabet());
  const std::size_t n2 = g2.vertex_count();
  for (VertexId a = 0; a < g1.vertex_count(); ++a) {
    for (VertexId b = 0; b < n2; ++b) product.add_vertex("(" + g1.name(a) + "," + g2.name(b) + ")");
  }
  std::vector<std::vector<EdgeId>> by_label(g2.alphabet() + 1);
  for (EdgeId e = 0; e < g2.edge_count(); ++e) by_label[g2.edge(e).label].push_back(e);
  for (const Edge& e1 : g1.edges()) {
    for (EdgeId id2 : by_label[e1.label]) {
      const Edge& e2 = g2.edge(id2);
      product.add_edge(e1.src * n2 + e2.src, e1.dst * n2 + e2.dst, e1.label);
    }
  }
  if (g1.basepoint() && g2.basepoint()) product.set_basepoint(*g1.basepoint() * n2 + *g2.basepoint());
  return product;
}

namespace {

// Edge list of g renumbered by the breadth-first order from `start`.
std::vector<Edge> bfs_relabel(const TransitionTable& table, VertexId start,
                              std::vector<std::size_t>& order) {
  const LabeledDigraph& g = table.graph();
  order.assign(g.vertex_count(), kNpos);
  std::size_t next = 0;
  std::deque<VertexId> queue{start};
  order[start] = next++;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (Label l = 1; l <= g.alphabet(); ++l) {
      for (int sign : {1, -1}) {
        if (auto s = table.step(v, Letter{l, sign})) {
          const VertexId u = table.target(v, *s);
          if (order[u] == kNpos) {
            order[u] = next++;
            queue.push_back(u);
          }
        }
      }
    }
  }
  std::vector<Edge> relabeled;
  relabeled.reserve(g.edge_count());
  for (const Edge& e : g.edges()) relabeled.push_back(Edge{order[e.src], order[e.dst], e.label});
  std::sort(relabeled.begin(), relabeled.end());
  return relabeled;
}

}  // namespace

LabeledDigraph canonical_form(const LabeledDigraph& g) {
  if (g.vertex_count() == 0) throw PreconditionViolation("canonical_form: empty graph");
  if (!is_connected(g)) throw PreconditionViolation("canonical_form: graph is disconnected");
  const TransitionTable table(g);
  std::vector<std::size_t> order;
  std::vector<Edge> best;
  if (g.basepoint()) {
    best = bfs_relabel(table, *g.basepoint(), order);
  } else {
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      std::vector<Edge> candidate = bfs_relabel(table, s, order);
      if (s == 0 || candidate < best) best = std::move(candidate);
    }
  }
  LabeledDigraph canon(g.alphabet());
  for (VertexId v = 0; v < g.vertex_count(); ++v) canon.add_vertex();
  for (const Edge& e : best) canon.add_edge(e.src, e.dst, e.label);
  if (g.basepoint()) canon.set_basepoint(0);
  return canon;
}

bool isomorphic(const LabeledDigraph& a, const LabeledDigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.basepoint().has_value() != b.basepoint().has_value()) return false;
  return canonical_form(a) == canonical_form(b);
}

LabeledDigraph rose(std::uint32_t alphabet) {
  LabeledDigraph g(alphabet);
  const VertexId v = g.add_vertex();
  for (Label l = 1; l <= alphabet; ++l) g.add_edge(v, v, l);
  g.set_basepoint(v);
  return g;
}

LabeledDigraph circle(const Word& w, std::uint32_t alphabet) {
  if (w.empty()) throw PreconditionViolation("circle: empty word");
  if (w.max_generator() > alphabet) throw InvalidInput("circle: word uses letters outside the alphabet");
  LabeledDigraph g(alphabet);
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("c" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (w[i].sign > 0) {
      g.add_edge(i, j, w[i].generator);
    } else {
      g.add_edge(j, i, w[i].generator);
    }
  }
  g.set_basepoint(0);
  return g;
}

LabeledDigraph disjoint_union(const LabeledDigraph& a, const LabeledDigraph& b) {
  LabeledDigraph g(std::max(a.alphabet(), b.alphabet()));
  for (VertexId v = 0; v < a.vertex_count(); ++v) g.add_vertex(a.name(v));
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    std::string name = b.name(v);
    if (a.find_vertex(name)) name += "'";
    g.add_vertex(std::move(name));
  }
  for (const Edge& e : a.edges()) g.add_edge(e.src, e.dst, e.label);
  const std::size_t shift = a.vertex_count();
  for (const Edge& e : b.edges()) g.add_edge(e.src + shift, e.dst + shift, e.label);
  g.set_basepoint(a.basepoint());
  return g;
}

std::string to_dot(const LabeledDigraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  n" << v << " [label=\"" << g.name(v) << "\"";
    if (g.basepoint() == v) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  n" << e.src << " -> n" << e.dst << " [label=\"" << label_text(e.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cyclecount
