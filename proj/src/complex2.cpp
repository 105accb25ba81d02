#include "cyclecount/complex2.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "cyclecount/error.hpp"

namespace cyclecount {

void validate_complex(const TwoComplex& x) {
  const LabeledDigraph& g = x.skeleton;
  for (std::size_t c = 0; c < x.cells.size(); ++c) {
    const CellBoundary& cell = x.cells[c];
    const std::string where = "cell " + std::to_string(c);
    if (cell.empty()) throw InvalidInput(where + " has an empty boundary");
    VertexId start = 0;
    VertexId at = 0;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      const PathStep& s = cell[i];
      if (s.edge >= g.edge_count()) throw InvalidInput(where + " references a missing edge");
      if (s.dir != 1 && s.dir != -1) throw InvalidInput(where + " has a step direction other than +1/-1");
      const Edge& e = g.edge(s.edge);
      const VertexId from = s.dir > 0 ? e.src : e.dst;
      const VertexId to = s.dir > 0 ? e.dst : e.src;
      if (i == 0) {
        start = from;
      } else if (from != at) {
        throw InvalidInput(where + " is not a path at step " + std::to_string(i));
      }
      at = to;
    }
    if (at != start) throw InvalidInput(where + " boundary is not closed");
  }
}

TwoComplex build_gamma_w(const LabeledDigraph& g, const Word& w) {
  WCycleDecomposition d = decompose(g, w);
  TwoComplex x{g, {}};
  x.cells.reserve(d.classes.size());
  for (WCycleClass& c : d.classes) x.cells.push_back(std::move(c.path));
  return x;
}

long euler_characteristic(const TwoComplex& x) {
  return euler_characteristic(x.skeleton) + static_cast<long>(x.cells.size());
}

namespace {

// Per cell, how often each edge is crossed.
std::vector<std::map<EdgeId, std::size_t>> crossing_counts(const TwoComplex& x) {
  std::vector<std::map<EdgeId, std::size_t>> counts(x.cells.size());
  for (std::size_t c = 0; c < x.cells.size(); ++c) {
    for (const PathStep& s : x.cells[c]) ++counts[c][s.edge];
  }
  return counts;
}

// Free faces among the cells whose bit is set in `alive`.
std::vector<FreeFace> free_faces_among(const std::vector<std::map<EdgeId, std::size_t>>& counts,
                                       std::size_t edge_count, const std::vector<bool>& alive) {
  std::vector<std::size_t> cells_on_edge(edge_count, 0);
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (!alive[c]) continue;
    for (const auto& [e, k] : counts[c]) ++cells_on_edge[e];
  }
  std::vector<FreeFace> faces;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (!alive[c]) continue;
    for (const auto& [e, k] : counts[c]) {
      if (k == 1 && cells_on_edge[e] == 1) faces.push_back(FreeFace{e, c});
    }
  }
  std::sort(faces.begin(), faces.end(),
            [](const FreeFace& a, const FreeFace& b) { return std::tie(a.edge, a.cell) < std::tie(b.edge, b.cell); });
  return faces;
}

bool remaining_graph_is_tree(const TwoComplex& x, const std::vector<FreeFace>& sequence) {
  std::vector<bool> removed(x.skeleton.edge_count(), false);
  for (const FreeFace& f : sequence) removed[f.edge] = true;
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < x.skeleton.edge_count(); ++e) {
    if (!removed[e]) kept.push_back(e);
  }
  const LabeledDigraph rest = edge_subgraph(x.skeleton, kept);
  return is_connected(rest) && betti(rest).total == 0;
}

class CollapseSearch {
 public:
  CollapseSearch(const TwoComplex& x)
      : counts_(crossing_counts(x)), edge_count_(x.skeleton.edge_count()) {}

  bool run(std::vector<bool>& alive, std::uint64_t mask, std::vector<FreeFace>& sequence) {
    if (mask == 0) return true;
    if (dead_.count(mask) != 0) return false;
    for (const FreeFace& f : free_faces_among(counts_, edge_count_, alive)) {
      alive[f.cell] = false;
      sequence.push_back(f);
      if (run(alive, mask & ~(std::uint64_t{1} << f.cell), sequence)) return true;
      sequence.pop_back();
      alive[f.cell] = true;
    }
    dead_.insert(mask);
    return false;
  }

 private:
  std::vector<std::map<EdgeId, std::size_t>> counts_;
  std::size_t edge_count_;
  std::unordered_set<std::uint64_t> dead_;
};

}  // namespace

std::vector<FreeFace> free_faces(const TwoComplex& x) {
  return free_faces_among(crossing_counts(x), x.skeleton.edge_count(),
                          std::vector<bool>(x.cells.size(), true));
}

std::string to_string(CollapseMethod m) {
  switch (m) {
    case CollapseMethod::kTrivial: return "trivial";
    case CollapseMethod::kGreedy: return "greedy";
    case CollapseMethod::kExhaustive: return "exhaustive";
    case CollapseMethod::kEulerObstruction: return "euler-obstruction";
    case CollapseMethod::kExhausted: return "exhausted";
  }
  return "unknown";
}

CollapseResult collapses_to_tree(const TwoComplex& x, std::size_t cell_cap) {
  if (x.skeleton.vertex_count() == 0) throw PreconditionViolation("collapses_to_tree: empty skeleton");
  if (!is_connected(x.skeleton)) throw PreconditionViolation("collapses_to_tree: skeleton is disconnected");
  validate_complex(x);

  CollapseResult result;
  if (x.cells.empty()) {
    result.collapses = betti(x.skeleton).total == 0;
    result.method = CollapseMethod::kTrivial;
    return result;
  }
  // Collapses preserve chi, and a tree has chi = 1.
  if (euler_characteristic(x) != 1) {
    result.method = CollapseMethod::kEulerObstruction;
    return result;
  }

  const auto counts = crossing_counts(x);
  std::vector<bool> alive(x.cells.size(), true);
  std::vector<FreeFace> greedy;
  for (;;) {
    const auto faces = free_faces_among(counts, x.skeleton.edge_count(), alive);
    if (faces.empty()) break;
    alive[faces.front().cell] = false;
    greedy.push_back(faces.front());
  }
  if (greedy.size() == x.cells.size()) {
    result.collapses = remaining_graph_is_tree(x, greedy);
    result.sequence = std::move(greedy);
    result.method = CollapseMethod::kGreedy;
    return result;
  }

  if (x.cells.size() > cell_cap) {
    throw BoundExceeded("collapses_to_tree: greedy collapse stalled and " +
                        std::to_string(x.cells.size()) + " cells exceed the exhaustive cap of " +
                        std::to_string(cell_cap));
  }
  return exhaustive_collapse(x, cell_cap);
}

CollapseResult exhaustive_collapse(const TwoComplex& x, std::size_t cell_cap) {
  if (x.cells.size() > cell_cap || x.cells.size() >= 64) {
    throw BoundExceeded("exhaustive_collapse: " + std::to_string(x.cells.size()) +
                        " cells exceed the cap of " + std::to_string(cell_cap));
  }
  validate_complex(x);
  CollapseSearch search(x);
  std::vector<bool> alive(x.cells.size(), true);
  std::vector<FreeFace> sequence;
  const std::uint64_t full = (std::uint64_t{1} << x.cells.size()) - 1;
  CollapseResult result;
  if (search.run(alive, full, sequence)) {
    result.collapses = remaining_graph_is_tree(x, sequence);
    result.sequence = std::move(sequence);
    result.method = CollapseMethod::kExhaustive;
  } else {
    result.method = CollapseMethod::kExhausted;
  }
  return result;
}

EqualityCollapseReport check_equality_collapse(const LabeledDigraph& g, const Word& w,
                                               std::size_t cell_cap) {
  if (g.vertex_count() == 0) throw PreconditionViolation("check_equality_collapse: empty graph");
  if (!is_connected(g)) throw PreconditionViolation("check_equality_collapse: graph is disconnected");
  const TwoComplex gw = build_gamma_w(g, w);
  EqualityCollapseReport r;
  r.class_count = gw.cells.size();
  r.beta1 = betti(g).total;
  if (static_cast<long>(r.class_count) != r.beta1) return r;
  try {
    r.collapse = collapses_to_tree(gw, cell_cap);
    r.status = r.collapse.collapses ? CheckStatus::kPass : CheckStatus::kFail;
  } catch (const BoundExceeded&) {
    r.status = CheckStatus::kInconclusive;
  }
  return r;
}

TwoComplex build_immersion(const LabeledDigraph& g, const Word& w,
                           const std::vector<Attachment>& attachments) {
  const WCycleDecomposition d = decompose(g, w);
  const TransitionTable table(g);
  std::vector<bool> class_used(d.classes.size(), false);
  TwoComplex y{g, {}};
  for (const Attachment& a : attachments) {
    if (a.vertex >= g.vertex_count()) throw InvalidInput("attachment vertex out of range");
    const std::string where = "attachment (" + g.name(a.vertex) + ", " + std::to_string(a.exponent) + ")";
    if (a.exponent == 0) throw PreconditionViolation(where + ": exponent must be positive");
    const auto t = trace(table, a.vertex, w.pow(a.exponent));
    if (!t || t->end != a.vertex) {
      throw PreconditionViolation(where + ": w^" + std::to_string(a.exponent) +
                                  " does not trace a closed path there");
    }
    const std::size_t cls = *d.class_of_vertex[a.vertex];
    if (a.exponent != d.classes[cls].period()) {
      throw PreconditionViolation(where + ": the cell wraps its w-cycle " +
                                  std::to_string(a.exponent / d.classes[cls].period()) +
                                  " times, which is not an immersion");
    }
    if (class_used[cls]) {
      throw PreconditionViolation(where + ": another cell already sits on this w-cycle class, "
                                  "which is not an immersion");
    }
    class_used[cls] = true;
    y.cells.push_back(t->path);
  }
  return y;
}

std::string to_string(NpiBranch b) {
  switch (b) {
    case NpiBranch::kNonpositive: return "nonpositive-euler";
    case NpiBranch::kContractible: return "contractible";
    case NpiBranch::kNone: return "none";
  }
  return "unknown";
}

NpiReport check_npi(const LabeledDigraph& g, const Word& w,
                    const std::vector<Attachment>& attachments, std::size_t cell_cap) {
  if (g.vertex_count() == 0) throw PreconditionViolation("check_npi: empty graph");
  if (!is_connected(g)) throw PreconditionViolation("check_npi: Y must be connected");
  const TwoComplex y = build_immersion(g, w, attachments);
  NpiReport r;
  r.euler = euler_characteristic(y);
  if (r.euler <= 0) {
    r.status = CheckStatus::kPass;
    r.branch = NpiBranch::kNonpositive;
    return r;
  }
  try {
    r.collapse = collapses_to_tree(y, cell_cap);
  } catch (const BoundExceeded&) {
    r.status = CheckStatus::kInconclusive;
    return r;
  }
  if (r.collapse.collapses) {
    r.status = CheckStatus::kPass;
    r.branch = NpiBranch::kContractible;
  } else {
    r.status = CheckStatus::kFail;
  }
  return r;
}

StaggeredCheck is_staggered(const StaggeredPresentation& p) {
  StaggeredCheck check;
  auto& diag = check.diagnostics;
  const std::size_t r = p.relators.size();

  std::vector<std::size_t> rank_of(p.alphabet + 1, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < p.ordered_letters.size(); ++i) {
    const Label l = p.ordered_letters[i];
    if (l < 1 || l > p.alphabet) {
      diag.push_back("ordered letter " + std::to_string(l) + " is outside the alphabet");
    } else if (rank_of[l] != static_cast<std::size_t>(-1)) {
      diag.push_back("ordered letter " + letter_to_string(Letter{l, 1}) + " is listed twice");
    } else {
      rank_of[l] = i;
    }
  }
  std::vector<std::size_t> order = p.relator_order;
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size() || i < r; ++i) {
    if (order.size() != r || order[i] != i) {
      diag.push_back("relator order is not a permutation of the relators");
      break;
    }
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> lo(r, kNone);
  std::vector<std::size_t> hi(r, kNone);
  for (std::size_t i = 0; i < r; ++i) {
    const Word& rel = p.relators[i];
    const std::string name = "relator " + std::to_string(i) + " \"" + rel.to_string() + "\"";
    if (rel.empty()) {
      diag.push_back(name + " is empty");
      continue;
    }
    if (rel.max_generator() > p.alphabet) diag.push_back(name + " uses letters outside the alphabet");
    if (!is_cyclically_reduced(rel)) diag.push_back(name + " is not cyclically reduced");
    for (const Letter& l : rel) {
      if (l.generator > p.alphabet || rank_of[l.generator] == kNone) continue;
      const std::size_t k = rank_of[l.generator];
      if (lo[i] == kNone || k < lo[i]) lo[i] = k;
      if (hi[i] == kNone || k > hi[i]) hi[i] = k;
    }
    if (lo[i] == kNone) diag.push_back(name + " traverses no ordered letter");
  }

  if (p.relator_order.size() == r) {
    for (std::size_t k = 1; k < r; ++k) {
      const std::size_t a = p.relator_order[k - 1];
      const std::size_t b = p.relator_order[k];
      if (a >= r || b >= r || lo[a] == kNone || lo[b] == kNone) continue;
      if (!(lo[a] < lo[b])) {
        diag.push_back("min(relator " + std::to_string(a) + ") is not below min(relator " +
                       std::to_string(b) + ")");
      }
      if (!(hi[a] < hi[b])) {
        diag.push_back("max(relator " + std::to_string(a) + ") is not below max(relator " +
                       std::to_string(b) + ")");
      }
    }
  }
  check.staggered = diag.empty();
  return check;
}

MultiwordReport check_multiword_inequality(const LabeledDigraph& g, const StaggeredPresentation& p) {
  const StaggeredCheck s = is_staggered(p);
  if (!s.staggered) {
    throw PreconditionViolation("check_multiword_inequality: presentation is not staggered: " +
                                s.diagnostics.front());
  }
  if (g.alphabet() != p.alphabet) {
    throw PreconditionViolation("check_multiword_inequality: graph and presentation alphabets differ");
  }
  if (g.vertex_count() == 0 || !is_connected(g)) {
    throw PreconditionViolation("check_multiword_inequality: graph must be connected and nonempty");
  }
  MultiwordReport r;
  for (const Word& rel : p.relators) {
    r.class_counts.push_back(decompose(g, rel).class_count);
    r.total_classes += r.class_counts.back();
  }
  r.beta1 = betti(g).total;
  r.status = static_cast<long>(r.total_classes) <= r.beta1 ? CheckStatus::kPass : CheckStatus::kFail;
  return r;
}

}  // namespace cyclecount
