#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "cyclecount/automaton.hpp"
#include "cyclecount/complex2.hpp"
#include "cyclecount/error.hpp"
#include "cyclecount/harness.hpp"
#include "cyclecount/json_io.hpp"
#include "cyclecount/subgroups.hpp"
#include "cyclecount/wcycles.hpp"
#include "cyclecount/words.hpp"

using namespace cyclecount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

struct Options {
  std::string input = "-";
  std::string out;
  bool dot = false;
  unsigned jobs = 0;
  std::string counterexamples;
  std::string replay;
  TrialConfig cfg;
  // Which verify flags were given explicitly; the rest take suite defaults.
  std::map<std::string, CLI::Option*> verify_flags;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw InvalidInput("cannot write " + opt.out);
  out << text;
}

void emit(const Options& opt, const Json& j) { write_text(opt, j.dump(2) + "\n"); }

void emit_graph(const Options& opt, const LabeledDigraph& g, Json extra = Json::object()) {
  if (opt.dot) {
    write_text(opt, to_dot(g));
    return;
  }
  extra["graph"] = graph_to_json(g);
  emit(opt, extra);
}

Json input(const Options& opt) { return parse_json(read_text(opt.input)); }

Word word_field(const Json& j, const char* key = "word") { return Word::parse(j.at(key).get<std::string>()); }

// Accepts either a bare graph file or {"graph": ...}.
LabeledDigraph graph_input(const Json& j) { return graph_from_json(j.contains("graph") ? j.at("graph") : j); }

int status_exit(CheckStatus s) { return s == CheckStatus::kFail ? kExitFailure : kExitOk; }

// ---- words ----------------------------------------------------------------

int words_normalize(const Options& opt) {
  const Json in = input(opt);
  std::vector<std::string> texts;
  if (in.contains("words")) {
    texts = in.at("words").get<std::vector<std::string>>();
  } else {
    texts.push_back(in.at("word").get<std::string>());
  }
  Json out = Json::array();
  for (const std::string& t : texts) {
    const Word w = Word::parse(t);
    const Word reduced = free_reduce(w);
    const CyclicReduction c = cyclic_reduce(reduced);
    Json r{{"input", t},
           {"reduced", reduced.to_string()},
           {"cyclic_core", c.core.to_string()},
           {"conjugator", c.conjugator.to_string()},
           {"inverse", invert(reduced).to_string()}};
    if (!c.core.empty()) {
      const PrimitiveRoot p = primitive_root(c.core);
      r["root"] = p.root.to_string();
      r["exponent"] = p.exponent;
      r["simple"] = p.exponent == 1;
    } else {
      r["simple"] = false;
    }
    out.push_back(std::move(r));
  }
  emit(opt, in.contains("words") ? Json{{"words", out}} : out.front());
  return kExitOk;
}

// ---- graph ----------------------------------------------------------------

int graph_validate(const Options& opt) {
  const LabeledDigraph g = graph_input(input(opt));
  const auto v = validate(g);
  emit(opt, {{"deterministic", v.empty()}, {"violations", violations_to_json(g, v)}});
  return v.empty() ? kExitOk : kExitFailure;
}

int graph_betti(const Options& opt) {
  const LabeledDigraph g = graph_input(input(opt));
  emit(opt, betti_to_json(g, betti(g)));
  return kExitOk;
}

int graph_fold(const Options& opt) {
  const LabeledDigraph g = graph_input(input(opt));
  const FoldResult f = fold_with_map(g);
  Json map = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) map[g.name(v)] = f.graph.name(f.vertex_map[v]);
  emit_graph(opt, f.graph, {{"identifications", f.identifications}, {"vertex_map", map}});
  return kExitOk;
}

int graph_core(const Options& opt) {
  emit_graph(opt, core(graph_input(input(opt))));
  return kExitOk;
}

int graph_canon(const Options& opt) {
  emit_graph(opt, canonical_form(graph_input(input(opt))));
  return kExitOk;
}

int graph_fiber(const Options& opt) {
  const Json in = input(opt);
  const LabeledDigraph p = fiber_product(graph_from_json(in.at("graph1")), graph_from_json(in.at("graph2")));
  emit_graph(opt, p, {{"betti", betti_to_json(p, betti(p))}});
  return kExitOk;
}

// ---- wcycles --------------------------------------------------------------

int wcycles_count(const Options& opt) {
  const Json in = input(opt);
  const LabeledDigraph g = graph_input(in);
  const Word w = word_field(in);
  const WCycleDecomposition d = decompose(g, w);
  const MainInequalityReport r = check_main_inequality(g, w);
  emit(opt, {{"word", w.to_string()},
             {"count_with_multiplicity", d.count_with_multiplicity},
             {"class_count", d.class_count},
             {"beta1", r.total_beta1},
             {"inequality", main_report_to_json(r)}});
  return r.pass ? kExitOk : kExitFailure;
}

int wcycles_decompose(const Options& opt) {
  const Json in = input(opt);
  const LabeledDigraph g = graph_input(in);
  const Word w = word_field(in);
  Json out = decomposition_to_json(g, decompose(g, w));
  const MainInequalityReport r = check_main_inequality(g, w);
  out["inequality"] = main_report_to_json(r);
  if (is_connected(g)) {
    const StrictInequalityReport s = check_strict_inequality(g, w);
    out["strict"] = {{"status", to_string(s.status)}, {"beta1", s.beta1}, {"reason", s.reason}};
  }
  emit(opt, out);
  return r.pass ? kExitOk : kExitFailure;
}

// ---- complex --------------------------------------------------------------

int complex_gamma_w(const Options& opt) {
  const Json in = input(opt);
  const TwoComplex x = build_gamma_w(graph_input(in), word_field(in));
  Json out = complex_to_json(x);
  out["euler_characteristic"] = euler_characteristic(x);
  emit(opt, out);
  return kExitOk;
}

int complex_collapse(const Options& opt) {
  const TwoComplex x = complex_from_json(input(opt));
  const CollapseResult r = collapses_to_tree(x);
  Json out = collapse_to_json(r);
  out["euler_characteristic"] = euler_characteristic(x);
  emit(opt, out);
  return kExitOk;
}

int complex_npi(const Options& opt) {
  const ImmersionSpec spec = immersion_from_json(input(opt));
  const NpiReport r = check_npi(spec.graph, spec.word, spec.attachments);
  emit(opt, {{"status", to_string(r.status)},
             {"branch", to_string(r.branch)},
             {"euler_characteristic", r.euler},
             {"collapse", collapse_to_json(r.collapse)}});
  return status_exit(r.status);
}

int complex_staggered(const Options& opt) {
  const Json in = input(opt);
  const StaggeredPresentation p = presentation_from_json(in.contains("presentation") ? in.at("presentation") : in);
  const StaggeredCheck s = is_staggered(p);
  Json out{{"staggered", s.staggered}, {"diagnostics", s.diagnostics}};
  int code = kExitOk;
  if (in.contains("graph") && s.staggered) {
    const MultiwordReport r = check_multiword_inequality(graph_from_json(in.at("graph")), p);
    out["inequality"] = {{"status", to_string(r.status)},
                         {"class_counts", r.class_counts},
                         {"total_classes", r.total_classes},
                         {"beta1", r.beta1}};
    code = status_exit(r.status);
  }
  emit(opt, out);
  return code;
}

// ---- subgroup -------------------------------------------------------------

SubgroupGraph subgroup_input(const Json& j) {
  const SubgroupSpec spec = subgroup_spec_from_json(j);
  return stallings_graph(spec.generators, spec.alphabet);
}

Json words_json(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const Word& w : ws) out.push_back(w.to_string());
  return out;
}

int subgroup_build(const Options& opt) {
  const SubgroupGraph h = subgroup_input(input(opt));
  emit_graph(opt, h.graph,
             {{"rank", rank(h)}, {"basis", words_json(free_basis(h.graph))}, {"warnings", h.warnings}});
  return kExitOk;
}

int subgroup_rank(const Options& opt) {
  const SubgroupGraph h = subgroup_input(input(opt));
  emit(opt, {{"rank", rank(h)}, {"reduced_rank", reduced_rank(rank(h))}});
  return kExitOk;
}

int subgroup_conjugates(const Options& opt) {
  const Json in = input(opt);
  const ConjugateCountReport r = count_conjugates_meeting(subgroup_input(in.at("subgroup")), word_field(in));
  emit(opt, {{"count", r.count}, {"rank", r.rank}, {"pass", r.pass}});
  return r.pass ? kExitOk : kExitFailure;
}

// Either {"subgroups": [H1, H2, ...]} for an iterated intersection, or
// {"subgroup": H, "cosets": [...]} for the intersection of conjugates.
int subgroup_intersect(const Options& opt) {
  const Json in = input(opt);
  if (in.contains("cosets")) {
    std::vector<Word> cosets;
    for (const Json& c : in.at("cosets")) cosets.push_back(Word::parse(c.get<std::string>()));
    const ConjugateIntersectionReport r = check_conjugate_intersection(subgroup_input(in.at("subgroup")), cosets);
    Json extra{{"status", to_string(r.status)}, {"rank", r.rank}, {"cosets", r.cosets}};
    if (r.status == CheckStatus::kNotApplicable) {
      emit(opt, extra);
    } else {
      extra["trivial"] = is_trivial(r.intersection);
      extra["basis"] = words_json(r.intersection.generators);
      emit_graph(opt, r.intersection.graph, extra);
    }
    return status_exit(r.status);
  }
  const Json& list = in.at("subgroups");
  if (list.empty()) throw InvalidInput("subgroup intersect: no subgroups given");
  SubgroupGraph h = subgroup_input(list.front());
  for (std::size_t i = 1; i < list.size(); ++i) h = intersect(h, subgroup_input(list[i]));
  emit_graph(opt, h.graph, {{"rank", rank(h)}, {"trivial", is_trivial(h)}, {"basis", words_json(h.generators)}});
  return kExitOk;
}

// Pairs of subgroups or of raw connected graphs.
int subgroup_shnc(const Options& opt) {
  const Json in = input(opt);
  ShncReport r;
  if (in.contains("graph1")) {
    r = check_shnc(graph_from_json(in.at("graph1")), graph_from_json(in.at("graph2")));
  } else {
    r = check_shnc(subgroup_input(in.at("subgroup1")), subgroup_input(in.at("subgroup2")));
  }
  emit(opt, {{"component_beta1", r.component_beta1},
             {"component_reduced_ranks", r.component_reduced_ranks},
             {"lhs", r.lhs},
             {"rhs", r.rhs},
             {"pass", r.pass},
             {"equality", r.equality}});
  return r.pass ? kExitOk : kExitFailure;
}

// ---- verify ---------------------------------------------------------------

int verify(const std::string& suite, Options& opt) {
  if (!is_suite(suite)) throw InvalidInput("unknown suite \"" + suite + "\"");
  if (!opt.replay.empty()) {
    const Json j = parse_json(read_text(opt.replay));
    // A dumped counterexample file holds a list; a single instance works too.
    const Json instances = j.contains("counterexamples") ? j.at("counterexamples") : Json::array({j});
    Json results = Json::array();
    bool failed = false;
    for (const Json& entry : instances) {
      const TrialOutcome o = check_instance(suite, entry.contains("instance") ? entry.at("instance") : entry);
      failed = failed || o.status == TrialStatus::kFail;
      results.push_back({{"status", o.status == TrialStatus::kPass           ? "pass"
                                    : o.status == TrialStatus::kFail         ? "fail"
                                    : o.status == TrialStatus::kInconclusive ? "inconclusive"
                                                                             : "skipped"},
                         {"message", o.message}});
    }
    emit(opt, results);
    return failed ? kExitFailure : kExitOk;
  }

  TrialConfig cfg = default_config(suite);
  auto given = [&](const char* flag) { return opt.verify_flags.at(flag)->count() > 0; };
  if (given("--seed")) cfg.master_seed = opt.cfg.master_seed;
  if (given("--trials")) cfg.trials = opt.cfg.trials;
  if (given("--max-vertices")) cfg.max_vertices = opt.cfg.max_vertices;
  if (given("--alphabet")) cfg.alphabet = opt.cfg.alphabet;
  if (given("--max-word-length")) cfg.max_word_length = opt.cfg.max_word_length;
  if (given("--density")) cfg.edge_density = opt.cfg.edge_density;
  if (given("--min-qualifying")) cfg.min_qualifying = opt.cfg.min_qualifying;

  const VerdictReport report = run_suite(suite, cfg, opt.jobs);
  Json j = report.to_json();
  if (!report.failures.empty()) {
    const std::string path = opt.counterexamples.empty() ? "counterexamples-" + suite + ".json" : opt.counterexamples;
    std::ofstream dump(path);
    if (!dump) throw InvalidInput("cannot write " + path);
    dump << Json{{"suite", suite}, {"counterexamples", j.at("counterexamples")}}.dump(2) << "\n";
    j["counterexample_file"] = path;
  }
  emit(opt, j);
  std::cerr << suite << ": " << report.trials << " trials, " << report.passes << " passed, "
            << report.failure_count() << " failed, " << report.inconclusive << " inconclusive ("
            << report.wall_seconds << " s)\n";
  if (!report.qualifying_met()) {
    std::cerr << suite << ": only " << report.trials << " qualifying instances, " << cfg.min_qualifying
              << " required\n";
  }
  return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle counting in inverse automata"};
  app.require_subcommand(1);
  Options opt;
  std::function<int()> action;

  auto add = [&](CLI::App* parent, const std::string& name, const std::string& help, int (*fn)(const Options&),
                 bool graph_output = false) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    cmd->add_option("input", opt.input, "JSON input file ('-' for stdin)");
    cmd->add_option("--out", opt.out, "Write output to this file");
    if (graph_output) cmd->add_flag("--dot", opt.dot, "Emit Graphviz DOT instead of JSON");
    cmd->callback([&action, &opt, fn] { action = [&opt, fn] { return fn(opt); }; });
  };

  CLI::App* words = app.add_subcommand("words", "Word operations")->require_subcommand(1);
  add(words, "normalize", "Reduce, cyclically reduce and find the primitive root", words_normalize);

  CLI::App* graph = app.add_subcommand("graph", "Labeled graph operations")->require_subcommand(1);
  add(graph, "validate", "Report determinism violations", graph_validate);
  add(graph, "betti", "Components and first Betti numbers", graph_betti);
  add(graph, "fold", "Stallings folding", graph_fold, true);
  add(graph, "core", "Remove hanging trees away from the basepoint", graph_core, true);
  add(graph, "canon", "Canonical relabeling", graph_canon, true);
  add(graph, "fiber", "Fiber product of {graph1, graph2}", graph_fiber, true);

  CLI::App* wc = app.add_subcommand("wcycles", "w-cycle counting")->require_subcommand(1);
  add(wc, "count", "Counts with and without multiplicity against beta_1", wcycles_count);
  add(wc, "decompose", "Full decomposition into w-cycle classes", wcycles_decompose);

  CLI::App* cx = app.add_subcommand("complex", "2-complexes")->require_subcommand(1);
  add(cx, "gamma-w", "Build Gamma^w from {graph, word}", complex_gamma_w);
  add(cx, "collapse", "Decide whether a 2-complex collapses to a tree", complex_collapse);
  add(cx, "npi", "Check an immersion {graph, word, attachments}", complex_npi);
  add(cx, "staggered", "Check a presentation, and with a graph the summed class counts", complex_staggered);

  CLI::App* sg = app.add_subcommand("subgroup", "Finitely generated subgroups")->require_subcommand(1);
  add(sg, "build", "Stallings graph and free basis", subgroup_build, true);
  add(sg, "rank", "Rank and reduced rank", subgroup_rank);
  add(sg, "conjugates", "Conjugates of <w> meeting H", subgroup_conjugates);
  add(sg, "intersect", "Intersections of subgroups or of conjugates", subgroup_intersect, true);
  add(sg, "shnc", "Reduced rank inequality for a pair", subgroup_shnc);

  std::string suite;
  CLI::App* vf = app.add_subcommand("verify", "Run a seeded verification suite");
  vf->add_option("suite", suite, "Suite name")->required();
  auto& flags = opt.verify_flags;
  flags["--seed"] = vf->add_option("--seed", opt.cfg.master_seed, "Master seed");
  flags["--trials"] = vf->add_option("--trials", opt.cfg.trials, "Number of trials");
  flags["--max-vertices"] = vf->add_option("--max-vertices", opt.cfg.max_vertices, "Vertex bound");
  flags["--alphabet"] = vf->add_option("--alphabet", opt.cfg.alphabet, "Alphabet size");
  flags["--max-word-length"] = vf->add_option("--max-word-length", opt.cfg.max_word_length, "Word length bound");
  flags["--density"] = vf->add_option("--density", opt.cfg.edge_density, "Edge density");
  flags["--min-qualifying"] =
      vf->add_option("--min-qualifying", opt.cfg.min_qualifying, "Required number of checked instances");
  vf->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)");
  vf->add_option("--out", opt.out, "Write the report to this file");
  vf->add_option("--counterexamples", opt.counterexamples, "Counterexample dump file");
  vf->add_option("--replay", opt.replay, "Re-check instances from a counterexample file");
  vf->callback([&] { action = [&] { return verify(suite, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kExitInvalid;
  }
}
