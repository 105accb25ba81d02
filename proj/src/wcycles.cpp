#include "cyclecount/wcycles.hpp"

#include <algorithm>
#include <numeric>

#include "cyclecount/error.hpp"

namespace cyclecount {

std::optional<Trace> trace(const TransitionTable& table, VertexId v, const Word& w) {
  Trace t;
  t.path.reserve(w.size());
  VertexId at = v;
  for (const Letter& l : w) {
    const auto s = table.step(at, l);
    if (!s) return std::nullopt;
    t.path.push_back(*s);
    at = table.target(at, *s);
  }
  t.end = at;
  return t;
}

std::optional<Trace> trace(const LabeledDigraph& g, VertexId v, const Word& w) {
  if (v >= g.vertex_count()) throw InvalidInput("trace: start vertex out of range");
  return trace(TransitionTable(g), v, w);
}

void require_simple_cyclic_word(const Word& w, const char* context) {
  if (w.empty()) throw PreconditionViolation(std::string(context) + ": w must be nonempty");
  if (!is_cyclically_reduced(w)) {
    throw PreconditionViolation(std::string(context) + ": \"" + w.to_string() +
                                "\" is not cyclically reduced; normalize it first "
                                "(cyclic core \"" +
                                cyclic_reduce(w).core.to_string() + "\")");
  }
  const PrimitiveRoot root = primitive_root(w);
  if (root.exponent != 1) {
    throw PreconditionViolation(std::string(context) + ": \"" + w.to_string() +
                                "\" is a proper power (" + root.root.to_string() + ")^" +
                                std::to_string(root.exponent) + "; pass the root instead");
  }
}

PartialInjection trace_action(const TransitionTable& table, const Word& w) {
  const std::size_t n = table.graph().vertex_count();
  PartialInjection sigma;
  sigma.image.resize(n);
  sigma.witness.resize(n);
  std::vector<bool> hit(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if (auto t = trace(table, v, w)) {
      if (hit[t->end]) {
        throw PreconditionViolation("trace action is not injective; graph is not deterministic");
      }
      hit[t->end] = true;
      sigma.image[v] = t->end;
      sigma.witness[v] = std::move(t->path);
    }
  }
  return sigma;
}

WCycleDecomposition decompose(const LabeledDigraph& g, const Word& w) {
  require_simple_cyclic_word(w, "decompose");
  const TransitionTable table(g);
  const PartialInjection sigma = trace_action(table, w);
  const std::size_t n = g.vertex_count();

  WCycleDecomposition d;
  d.edge_multiplicity.assign(g.edge_count(), 0);
  d.class_of_vertex.assign(n, std::nullopt);
  // 0 = unvisited, 1 = off every cycle, 2 = on a cycle.
  std::vector<char> state(n, 0);
  for (VertexId start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    std::vector<VertexId> walk{start};
    std::optional<VertexId> at = sigma.image[start];
    // By injectivity the walk either returns to `start` or runs off the
    // domain; it cannot enter a cycle it did not start on.
    while (at && *at != start && state[*at] == 0 && walk.size() <= n) {
      walk.push_back(*at);
      at = sigma.image[*at];
    }
    if (at && *at == start) {
      WCycleClass c;
      c.orbit = walk;
      for (VertexId v : walk) {
        state[v] = 2;
        d.class_of_vertex[v] = d.classes.size();
        c.path.insert(c.path.end(), sigma.witness[v].begin(), sigma.witness[v].end());
      }
      for (const PathStep& s : c.path) ++d.edge_multiplicity[s.edge];
      d.count_with_multiplicity += c.period();
      d.classes.push_back(std::move(c));
    } else {
      for (VertexId v : walk) state[v] = 1;
    }
  }
  d.class_count = d.classes.size();
  return d;
}

MainInequalityReport check_main_inequality(const LabeledDigraph& g, const Word& w) {
  const WCycleDecomposition d = decompose(g, w);
  const BettiReport b = betti(g);
  const ComponentLabels labels = connected_components(g);

  MainInequalityReport report;
  report.components.resize(b.components.size());
  for (std::size_t c = 0; c < b.components.size(); ++c) {
    report.components[c].component = c;
    report.components[c].beta1 = b.components[c].beta1;
  }
  for (const WCycleClass& cls : d.classes) {
    ComponentVerdict& cv = report.components[labels.of_vertex[cls.orbit.front()]];
    ++cv.class_count;
    cv.count_with_multiplicity += cls.period();
  }
  report.pass = true;
  for (ComponentVerdict& cv : report.components) {
    cv.pass = static_cast<long>(cv.class_count) <= cv.beta1;
    cv.equality = static_cast<long>(cv.class_count) == cv.beta1;
    report.pass = report.pass && cv.pass;
  }
  report.total_classes = d.class_count;
  report.total_beta1 = b.total;
  report.pass = report.pass && static_cast<long>(report.total_classes) <= report.total_beta1;
  report.equality = static_cast<long>(report.total_classes) == report.total_beta1;
  return report;
}

CollapsedHypothesis collapsed_hypothesis(const LabeledDigraph& g, const Word& w) {
  if (!is_connected(g)) throw PreconditionViolation("collapsed_hypothesis: graph is disconnected");
  WCycleDecomposition d = decompose(g, w);
  CollapsedHypothesis h;
  h.holds = std::all_of(d.edge_multiplicity.begin(), d.edge_multiplicity.end(),
                        [](std::size_t m) { return m >= 2; });
  h.edge_multiplicity = std::move(d.edge_multiplicity);
  return h;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotApplicable: return "not-applicable";
    case CheckStatus::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

StrictInequalityReport check_strict_inequality(const LabeledDigraph& g, const Word& w) {
  StrictInequalityReport r;
  if (g.vertex_count() == 0) throw PreconditionViolation("check_strict_inequality: empty graph");
  if (!is_connected(g)) {
    r.reason = "graph is disconnected";
    return r;
  }
  const WCycleDecomposition d = decompose(g, w);
  r.count_with_multiplicity = d.count_with_multiplicity;
  r.beta1 = betti(g).total;
  if (g.vertex_count() == 1 && g.edge_count() == 0) {
    r.reason = "graph is a single vertex";
    return r;
  }
  const auto light = std::find_if(d.edge_multiplicity.begin(), d.edge_multiplicity.end(),
                                  [](std::size_t m) { return m < 2; });
  if (light != d.edge_multiplicity.end()) {
    const auto e = static_cast<std::size_t>(light - d.edge_multiplicity.begin());
    r.reason = "collapsed hypothesis fails: edge " + std::to_string(e) + " has multiplicity " +
               std::to_string(*light);
    return r;
  }
  r.status = static_cast<long>(r.count_with_multiplicity) < r.beta1 ? CheckStatus::kPass
                                                                     : CheckStatus::kFail;
  return r;
}

namespace {

// Follows one letter through the raw edge list without any index.
std::optional<VertexId> scan_step(const LabeledDigraph& g, VertexId at, Letter l) {
  for (const Edge& e : g.edges()) {
    if (e.label != l.generator) continue;
    if (l.sign > 0 && e.src == at) return e.dst;
    if (l.sign < 0 && e.dst == at) return e.src;
  }
  return std::nullopt;
}

std::optional<VertexId> scan_read(const LabeledDigraph& g, VertexId at, const Word& w) {
  for (const Letter& l : w) {
    const auto next = scan_step(g, at, l);
    if (!next) return std::nullopt;
    at = *next;
  }
  return at;
}

}  // namespace

OracleCounts oracle_counts(const LabeledDigraph& g, const Word& w, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices) {
    throw BoundExceeded("oracle_counts: " + std::to_string(n) + " vertices exceeds bound " +
                        std::to_string(max_vertices));
  }
  if (w.empty()) throw PreconditionViolation("oracle_counts: w must be nonempty");

  std::vector<bool> based(n, false);
  // reach[v][u]: some w^m with 1 <= m <= n reads from v to u.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t power = 1; power <= n; ++power) {
      const auto end = scan_read(g, v, w.pow(power));
      if (!end) break;
      reach[v][*end] = true;
      if (*end == v) based[v] = true;
    }
  }

  OracleCounts counts;
  std::vector<std::size_t> group(n);
  std::iota(group.begin(), group.end(), 0);
  for (VertexId v = 0; v < n; ++v) {
    if (!based[v]) continue;
    ++counts.count_with_multiplicity;
    for (VertexId u = 0; u < n; ++u) {
      if (based[u] && reach[v][u]) {
        const std::size_t from = group[u];
        const std::size_t to = group[v];
        if (from == to) continue;
        for (std::size_t& x : group) {
          if (x == from) x = to;
        }
      }
    }
  }
  std::vector<std::size_t> roots;
  for (VertexId v = 0; v < n; ++v) {
    if (based[v]) roots.push_back(group[v]);
  }
  std::sort(roots.begin(), roots.end());
  counts.class_count =
      static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
  return counts;
}

}  // namespace cyclecount
