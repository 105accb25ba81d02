#include "cyclecount/json_io.hpp"

#include <set>

#include "cyclecount/error.hpp"

namespace cyclecount {

namespace {

const Json& field(const Json& j, const char* key, const char* context) {
  if (!j.is_object()) throw InvalidInput(std::string(context) + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string(context) + ": missing field \"" + key + "\"");
  return *it;
}

std::uint64_t unsigned_field(const Json& j, const char* key, const char* context) {
  const Json& v = field(j, key, context);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw InvalidInput(std::string(context) + ": \"" + key + "\" must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::string string_field(const Json& j, const char* key, const char* context) {
  const Json& v = field(j, key, context);
  if (!v.is_string()) throw InvalidInput(std::string(context) + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* key, const char* context) {
  const Json& v = field(j, key, context);
  if (!v.is_array()) throw InvalidInput(std::string(context) + ": \"" + key + "\" must be an array");
  return v;
}

VertexId vertex_by_name(const LabeledDigraph& g, const std::string& name, const char* context) {
  const auto v = g.find_vertex(name);
  if (!v) throw InvalidInput(std::string(context) + ": unknown vertex \"" + name + "\"");
  return *v;
}

}  // namespace

Json graph_to_json(const LabeledDigraph& g) {
  Json j;
  j["alphabet"] = g.alphabet();
  j["vertices"] = g.names();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"src", g.name(e.src)}, {"dst", g.name(e.dst)}, {"label", e.label}});
  }
  j["edges"] = std::move(edges);
  if (g.basepoint()) j["basepoint"] = g.name(*g.basepoint());
  return j;
}

LabeledDigraph graph_from_json(const Json& j) {
  constexpr const char* kContext = "graph";
  const auto alphabet = unsigned_field(j, "alphabet", kContext);
  if (alphabet > 1'000'000) throw InvalidInput("graph: alphabet too large");
  LabeledDigraph g(static_cast<std::uint32_t>(alphabet));
  std::set<std::string> names;
  for (const Json& v : array_field(j, "vertices", kContext)) {
    if (!v.is_string()) throw InvalidInput("graph: vertex ids must be strings");
    const std::string name = v.get<std::string>();
    if (!names.insert(name).second) throw InvalidInput("graph: duplicate vertex id \"" + name + "\"");
    g.add_vertex(name);
  }
  for (const Json& e : array_field(j, "edges", kContext)) {
    const VertexId src = vertex_by_name(g, string_field(e, "src", "edge"), kContext);
    const VertexId dst = vertex_by_name(g, string_field(e, "dst", "edge"), kContext);
    const auto label = unsigned_field(e, "label", "edge");
    if (label < 1 || label > alphabet) {
      throw InvalidInput("graph: edge label " + std::to_string(label) + " outside alphabet 1.." +
                         std::to_string(alphabet));
    }
    g.add_edge(src, dst, static_cast<Label>(label));
  }
  if (j.contains("basepoint") && !j.at("basepoint").is_null()) {
    g.set_basepoint(vertex_by_name(g, string_field(j, "basepoint", kContext), kContext));
  }
  return g;
}

Json path_to_json(const std::vector<PathStep>& path) {
  Json out = Json::array();
  for (const PathStep& s : path) out.push_back({{"edge", s.edge}, {"dir", s.dir}});
  return out;
}

Json complex_to_json(const TwoComplex& x) {
  Json cells = Json::array();
  for (const CellBoundary& c : x.cells) cells.push_back(path_to_json(c));
  return {{"skeleton", graph_to_json(x.skeleton)}, {"cells", std::move(cells)}};
}

TwoComplex complex_from_json(const Json& j) {
  TwoComplex x;
  x.skeleton = graph_from_json(field(j, "skeleton", "complex"));
  for (const Json& cell : array_field(j, "cells", "complex")) {
    if (!cell.is_array()) throw InvalidInput("complex: each cell must be an array of steps");
    CellBoundary boundary;
    for (const Json& step : cell) {
      const auto edge = unsigned_field(step, "edge", "cell step");
      const Json& dir = field(step, "dir", "cell step");
      if (!dir.is_number_integer()) throw InvalidInput("cell step: \"dir\" must be +1 or -1");
      boundary.push_back(PathStep{static_cast<EdgeId>(edge), dir.get<int>()});
    }
    x.cells.push_back(std::move(boundary));
  }
  validate_complex(x);
  return x;
}

Json presentation_to_json(const StaggeredPresentation& p) {
  Json relators = Json::array();
  for (const Word& r : p.relators) relators.push_back(r.to_string());
  return {{"alphabet", p.alphabet},
          {"relators", std::move(relators)},
          {"ordered_letters", p.ordered_letters},
          {"relator_order", p.relator_order}};
}

StaggeredPresentation presentation_from_json(const Json& j) {
  constexpr const char* kContext = "presentation";
  StaggeredPresentation p;
  p.alphabet = static_cast<std::uint32_t>(unsigned_field(j, "alphabet", kContext));
  for (const Json& r : array_field(j, "relators", kContext)) {
    if (!r.is_string()) throw InvalidInput("presentation: relators must be strings");
    p.relators.push_back(Word::parse(r.get<std::string>()));
  }
  for (const Json& l : array_field(j, "ordered_letters", kContext)) {
    if (!l.is_number_integer() || l.get<std::int64_t>() < 1) {
      throw InvalidInput("presentation: ordered letters are 1-based generator indices");
    }
    p.ordered_letters.push_back(l.get<Label>());
  }
  if (j.contains("relator_order")) {
    for (const Json& k : array_field(j, "relator_order", kContext)) {
      if (!k.is_number_integer() || k.get<std::int64_t>() < 0) {
        throw InvalidInput("presentation: relator order entries are 0-based relator indices");
      }
      p.relator_order.push_back(k.get<std::size_t>());
    }
  } else {
    for (std::size_t i = 0; i < p.relators.size(); ++i) p.relator_order.push_back(i);
  }
  return p;
}

Json subgroup_spec_to_json(const SubgroupSpec& s) {
  Json gens = Json::array();
  for (const Word& w : s.generators) gens.push_back(w.to_string());
  return {{"alphabet", s.alphabet}, {"generators", std::move(gens)}};
}

SubgroupSpec subgroup_spec_from_json(const Json& j) {
  SubgroupSpec s;
  s.alphabet = static_cast<std::uint32_t>(unsigned_field(j, "alphabet", "subgroup"));
  for (const Json& g : array_field(j, "generators", "subgroup")) {
    if (!g.is_string()) throw InvalidInput("subgroup: generators must be strings");
    s.generators.push_back(Word::parse(g.get<std::string>()));
  }
  return s;
}

Json immersion_to_json(const ImmersionSpec& s) {
  Json attachments = Json::array();
  for (const Attachment& a : s.attachments) {
    attachments.push_back({{"vertex", s.graph.name(a.vertex)}, {"exponent", a.exponent}});
  }
  return {{"graph", graph_to_json(s.graph)}, {"word", s.word.to_string()}, {"attachments", std::move(attachments)}};
}

ImmersionSpec immersion_from_json(const Json& j) {
  ImmersionSpec s;
  s.graph = graph_from_json(field(j, "graph", "immersion"));
  s.word = Word::parse(string_field(j, "word", "immersion"));
  for (const Json& a : array_field(j, "attachments", "immersion")) {
    Attachment att;
    att.vertex = vertex_by_name(s.graph, string_field(a, "vertex", "attachment"), "attachment");
    att.exponent = static_cast<std::size_t>(unsigned_field(a, "exponent", "attachment"));
    s.attachments.push_back(att);
  }
  return s;
}

Json decomposition_to_json(const LabeledDigraph& g, const WCycleDecomposition& d) {
  Json classes = Json::array();
  for (const WCycleClass& c : d.classes) {
    Json orbit = Json::array();
    for (VertexId v : c.orbit) orbit.push_back(g.name(v));
    classes.push_back({{"period", c.period()}, {"orbit", std::move(orbit)}, {"path", path_to_json(c.path)}});
  }
  return {{"count_with_multiplicity", d.count_with_multiplicity},
          {"class_count", d.class_count},
          {"classes", std::move(classes)},
          {"edge_multiplicity", d.edge_multiplicity}};
}

Json betti_to_json(const LabeledDigraph& g, const BettiReport& b) {
  Json comps = Json::array();
  for (const ComponentInfo& c : b.components) {
    Json vs = Json::array();
    for (VertexId v : c.vertices) vs.push_back(g.name(v));
    comps.push_back({{"vertices", std::move(vs)}, {"beta1", c.beta1}});
  }
  return {{"components", std::move(comps)}, {"total", b.total}};
}

Json violations_to_json(const LabeledDigraph& g, const std::vector<DeterminismViolation>& v) {
  Json out = Json::array();
  for (const DeterminismViolation& x : v) {
    out.push_back({{"vertex", g.name(x.vertex)},
                   {"label", x.label},
                   {"direction", x.direction == Direction::kOutgoing ? "outgoing" : "incoming"},
                   {"edges", x.edges}});
  }
  return out;
}

Json main_report_to_json(const MainInequalityReport& r) {
  Json comps = Json::array();
  for (const ComponentVerdict& c : r.components) {
    comps.push_back({{"component", c.component},
                     {"class_count", c.class_count},
                     {"count_with_multiplicity", c.count_with_multiplicity},
                     {"beta1", c.beta1},
                     {"pass", c.pass},
                     {"equality", c.equality}});
  }
  return {{"components", std::move(comps)},
          {"total_classes", r.total_classes},
          {"total_beta1", r.total_beta1},
          {"pass", r.pass},
          {"equality", r.equality}};
}

Json collapse_to_json(const CollapseResult& r) {
  Json seq = Json::array();
  for (const FreeFace& f : r.sequence) seq.push_back({{"edge", f.edge}, {"cell", f.cell}});
  return {{"collapses", r.collapses}, {"method", to_string(r.method)}, {"sequence", std::move(seq)}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace cyclecount
