#include "cyclecount/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "cyclecount/error.hpp"
#include "cyclecount/subgroups.hpp"

namespace cyclecount {

namespace {

// Constructed circle-reading-w instances appended to the equality suite.
constexpr std::size_t kEqualityCircles = 100;

std::uint32_t draw_alphabet(Rng& rng, const TrialConfig& cfg) {
  return static_cast<std::uint32_t>(uniform_index(rng, 1, cfg.alphabet));
}

Word draw_word(Rng& rng, std::uint32_t alphabet, std::size_t max_length) {
  const std::size_t length = alphabet == 1 ? 1 : uniform_index(rng, 1, max_length);
  return random_simple_word(length, alphabet, rng);
}

// A graph for (w, alphabet): plain random automaton or a w-rich fold, kept
// within the vertex bound.
LabeledDigraph draw_graph(Rng& rng, const TrialConfig& cfg, const Word& w, std::uint32_t alphabet) {
  if (coin(rng, 0.5)) {
    LabeledDigraph g = random_w_rich_graph(w, alphabet, cfg.max_vertices, cfg.edge_density, rng);
    if (g.vertex_count() <= cfg.max_vertices) return g;
  }
  return random_inverse_automaton(uniform_index(rng, 1, cfg.max_vertices), alphabet, cfg.edge_density, rng);
}

Json graph_word(const LabeledDigraph& g, const Word& w) {
  return {{"graph", graph_to_json(g)}, {"word", w.to_string()}};
}

LabeledDigraph read_graph(const Json& j, const char* key = "graph") { return graph_from_json(j.at(key)); }
Word read_word(const Json& j) { return Word::parse(j.at("word").get<std::string>()); }

TrialOutcome verdict(bool pass, std::string message) {
  TrialOutcome o;
  o.status = pass ? TrialStatus::kPass : TrialStatus::kFail;
  if (!pass) o.message = std::move(message);
  return o;
}

// ---- main -----------------------------------------------------------------

std::optional<Json> gen_main(const TrialConfig& cfg, std::size_t, Rng& rng) {
  const std::uint32_t alphabet = draw_alphabet(rng, cfg);
  const Word w = draw_word(rng, alphabet, cfg.max_word_length);
  return graph_word(draw_graph(rng, cfg, w, alphabet), w);
}

TrialOutcome check_main(const Json& inst) {
  const LabeledDigraph g = read_graph(inst);
  const MainInequalityReport r = check_main_inequality(g, read_word(inst));
  TrialOutcome o = verdict(r.pass, "classes exceed beta_1: " + main_report_to_json(r).dump());
  o.stats["components"] = static_cast<long>(r.components.size());
  if (r.total_classes > 0) o.stats["instances_with_w_cycles"] = 1;
  for (const ComponentVerdict& c : r.components) {
    if (c.equality && c.beta1 > 0) o.stats["components_with_equality"] += 1;
  }
  return o;
}

// ---- oracle ---------------------------------------------------------------

TrialOutcome check_oracle(const Json& inst) {
  const LabeledDigraph g = read_graph(inst);
  const Word w = read_word(inst);
  const WCycleDecomposition d = decompose(g, w);
  const OracleCounts brute = oracle_counts(g, w, kDefaultOracleBound);
  const bool same = d.count_with_multiplicity == brute.count_with_multiplicity &&
                    d.class_count == brute.class_count;
  TrialOutcome o = verdict(same, "decompose (" + std::to_string(d.count_with_multiplicity) + ", " +
                                     std::to_string(d.class_count) + ") vs oracle (" +
                                     std::to_string(brute.count_with_multiplicity) + ", " +
                                     std::to_string(brute.class_count) + ")");
  if (d.class_count > 0) o.stats["instances_with_w_cycles"] = 1;
  return o;
}

// ---- strict ---------------------------------------------------------------

std::optional<Json> gen_strict(const TrialConfig& cfg, std::size_t, Rng& rng) {
  const std::uint32_t alphabet = static_cast<std::uint32_t>(uniform_index(rng, std::min<std::uint32_t>(2, cfg.alphabet), cfg.alphabet));
  const Word w = draw_word(rng, alphabet, cfg.max_word_length);
  const LabeledDigraph pruned = prune_to_multiplicity(draw_graph(rng, cfg, w, alphabet), w, 2);
  std::vector<VertexId> starts;
  for (const Edge& e : pruned.edges()) starts.push_back(e.src);
  if (starts.empty()) return std::nullopt;
  const LabeledDigraph g = component_of(pruned, starts[uniform_index(rng, 0, starts.size() - 1)]);
  return graph_word(g, w);
}

TrialOutcome check_strict(const Json& inst) {
  const StrictInequalityReport r = check_strict_inequality(read_graph(inst), read_word(inst));
  if (r.status == CheckStatus::kNotApplicable) {
    return verdict(false, "generated instance does not meet the hypothesis: " + r.reason);
  }
  TrialOutcome o = verdict(r.status == CheckStatus::kPass,
                           "#_w = " + std::to_string(r.count_with_multiplicity) +
                               " is not below beta_1 = " + std::to_string(r.beta1));
  o.stats["beta1_sum"] = r.beta1;
  o.stats["count_with_multiplicity_sum"] = static_cast<long>(r.count_with_multiplicity);
  return o;
}

// ---- equality-collapse -----------------------------------------------------

std::optional<Json> gen_equality(const TrialConfig& cfg, std::size_t trial, Rng& rng) {
  if (trial >= cfg.trials) {
    const std::uint32_t alphabet = std::max<std::uint32_t>(cfg.alphabet, 1);
    const Word w = draw_word(rng, alphabet, cfg.max_word_length);
    return graph_word(circle(w, alphabet), w);
  }
  for (int attempt = 0; attempt < 4; ++attempt) {
    const std::uint32_t alphabet = draw_alphabet(rng, cfg);
    const Word w = draw_word(rng, alphabet, cfg.max_word_length);
    LabeledDigraph g = draw_graph(rng, cfg, w, alphabet);
    if (coin(rng, 0.5)) {
      // Keep only edges on w-cycles; equality is far more frequent there.
      g = prune_to_multiplicity(g, w, 1);
    }
    g = random_component(g, rng);
    if (static_cast<long>(decompose(g, w).class_count) == betti(g).total) return graph_word(g, w);
  }
  return std::nullopt;
}

TrialOutcome check_equality(const Json& inst) {
  const EqualityCollapseReport r = check_equality_collapse(read_graph(inst), read_word(inst));
  TrialOutcome o;
  switch (r.status) {
    case CheckStatus::kNotApplicable: o.status = TrialStatus::kSkipped; return o;
    case CheckStatus::kInconclusive:
      o.status = TrialStatus::kInconclusive;
      o.message = "collapse search exceeded the cell cap";
      return o;
    case CheckStatus::kFail:
      o.status = TrialStatus::kFail;
      o.message = "#bar_w = beta_1 = " + std::to_string(r.beta1) + " but Gamma^w does not collapse to a tree";
      return o;
    case CheckStatus::kPass: break;
  }
  o.stats[r.beta1 == 0 ? "vacuous_tree_instances" : "instances_with_cells"] = 1;
  if (r.collapse.method == CollapseMethod::kExhaustive) o.stats["exhaustive_collapses"] = 1;
  return o;
}

// ---- npi ------------------------------------------------------------------

std::optional<Json> gen_npi(const TrialConfig& cfg, std::size_t, Rng& rng) {
  const std::uint32_t alphabet = draw_alphabet(rng, cfg);
  const Word w = draw_word(rng, alphabet, cfg.max_word_length);
  LabeledDigraph g = draw_graph(rng, cfg, w, alphabet);
  if (coin(rng, 0.5)) g = prune_to_multiplicity(g, w, 1);
  g = random_component(g, rng);
  const WCycleDecomposition d = decompose(g, w);
  const bool all = coin(rng, 0.4);
  ImmersionSpec spec{g, w, {}};
  for (const WCycleClass& c : d.classes) {
    if (!all && !coin(rng, 0.5)) continue;
    spec.attachments.push_back(Attachment{c.orbit[uniform_index(rng, 0, c.period() - 1)], c.period()});
  }
  return immersion_to_json(spec);
}

TrialOutcome check_npi_instance(const Json& inst) {
  const ImmersionSpec spec = immersion_from_json(inst);
  const NpiReport r = check_npi(spec.graph, spec.word, spec.attachments);
  TrialOutcome o;
  if (r.status == CheckStatus::kInconclusive) {
    o.status = TrialStatus::kInconclusive;
    o.message = "chi(Y) > 0 and the collapse search exceeded the cell cap";
    return o;
  }
  o = verdict(r.status == CheckStatus::kPass,
              "chi(Y) = " + std::to_string(r.euler) + " > 0 and Y does not collapse to a tree");
  o.stats[to_string(r.branch)] = 1;
  return o;
}

// ---- fold-confluence -------------------------------------------------------

std::optional<Json> gen_fold(const TrialConfig& cfg, std::size_t, Rng& rng) {
  const std::size_t count = uniform_index(rng, 1, 4);
  Json gens = Json::array();
  for (std::size_t k = 0; k < count; ++k) {
    Word w = random_reduced_word(uniform_index(rng, 1, cfg.max_word_length), cfg.alphabet, rng);
    if (coin(rng, 0.2)) {
      // An unreduced generator exercises folding of backtracks.
      const Word x = random_reduced_word(1, cfg.alphabet, rng);
      const std::size_t at = uniform_index(rng, 0, w.size());
      std::vector<Letter> ls = w.letters();
      ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(at), {x[0], x[0].inverse()});
      w = Word(std::move(ls));
    }
    gens.push_back(w.to_string());
  }
  return Json{{"alphabet", cfg.alphabet},
              {"generators", std::move(gens)},
              {"shuffle_seeds", {rng(), rng()}}};
}

TrialOutcome check_fold(const Json& inst) {
  const SubgroupSpec spec = subgroup_spec_from_json(inst);
  const LabeledDigraph wedge = wedge_of_loops(spec.generators, spec.alphabet);
  const auto seeds = inst.at("shuffle_seeds").get<std::vector<std::uint64_t>>();
  std::vector<LabeledDigraph> canon;
  for (std::uint64_t seed : seeds) {
    const FoldResult f = fold_with_map(wedge, seed);
    if (!validate(f.graph).empty()) return verdict(false, "folded graph is not deterministic");
    if (f.identifications > wedge.edge_count()) {
      return verdict(false, "fold took " + std::to_string(f.identifications) + " identifications for " +
                                std::to_string(wedge.edge_count()) + " edges");
    }
    for (const Word& g : spec.generators) {
      const auto t = trace(f.graph, *f.graph.basepoint(), g);
      if (!t || t->end != *f.graph.basepoint()) {
        return verdict(false, "generator " + g.to_string() + " no longer closes at the base");
      }
    }
    canon.push_back(canonical_form(f.graph));
  }
  const bool same = std::all_of(canon.begin(), canon.end(), [&](const auto& c) { return c == canon.front(); });
  TrialOutcome o = verdict(same, "fold orders disagree: " + graph_to_json(canon.front()).dump() + " vs " +
                                     graph_to_json(canon.back()).dump());
  if (canon.front().vertex_count() < wedge.vertex_count()) o.stats["instances_with_identifications"] = 1;
  return o;
}

// ---- shnc -----------------------------------------------------------------

LabeledDigraph draw_connected_folded(Rng& rng, const TrialConfig& cfg) {
  if (coin(rng, 0.3)) {
    const LabeledDigraph g =
        random_inverse_automaton(uniform_index(rng, 1, cfg.max_vertices), cfg.alphabet, cfg.edge_density, rng);
    return random_component(g, rng);
  }
  std::vector<Word> gens;
  const std::size_t count = uniform_index(rng, 1, 3);
  for (std::size_t k = 0; k < count; ++k) {
    gens.push_back(random_reduced_word(uniform_index(rng, 1, cfg.max_word_length), cfg.alphabet, rng));
  }
  return stallings_graph(gens, cfg.alphabet).graph;
}

std::optional<Json> gen_shnc(const TrialConfig& cfg, std::size_t, Rng& rng) {
  const LabeledDigraph g1 = draw_connected_folded(rng, cfg);
  const LabeledDigraph g2 = draw_connected_folded(rng, cfg);
  return Json{{"graph1", graph_to_json(g1)}, {"graph2", graph_to_json(g2)}};
}

TrialOutcome check_shnc_instance(const Json& inst) {
  const ShncReport r = check_shnc(read_graph(inst, "graph1"), read_graph(inst, "graph2"));
  TrialOutcome o = verdict(r.pass, "sum of reduced ranks " + std::to_string(r.lhs) + " exceeds " +
                                       std::to_string(r.rhs));
  if (r.lhs > 0) o.stats["instances_with_positive_lhs"] = 1;
  if (r.equality && r.rhs > 0) o.stats["equality_instances"] = 1;
  return o;
}

// ---- restated -------------------------------------------------------------

TrialOutcome check_restated(const Json& inst) {
  const RestatedReport r = check_restated_inequality(read_word(inst), read_graph(inst));
  if (!r.agrees_with_classes) {
    return verdict(false, "product beta_1 sum " + std::to_string(r.lhs) + " differs from #bar_w " +
                              std::to_string(r.class_count));
  }
  TrialOutcome o = verdict(r.pass, "product beta_1 sum " + std::to_string(r.lhs) + " exceeds beta_1 " +
                                       std::to_string(r.rhs));
  if (r.lhs > 0) o.stats["instances_with_cycles"] = 1;
  return o;
}

// ---- conjugates -----------------------------------------------------------

std::optional<Json> gen_conjugates(const TrialConfig& cfg, std::size_t, Rng& rng) {
  const std::uint32_t alphabet = std::max<std::uint32_t>(cfg.alphabet, 1);
  const Word w = draw_word(rng, alphabet, cfg.max_word_length);
  SubgroupSpec spec{alphabet, {}};
  const std::size_t count = uniform_index(rng, 1, 4);
  for (std::size_t k = 0; k < count; ++k) {
    if (coin(rng, 0.4)) {
      const Word u = random_reduced_word(uniform_index(rng, 0, 3), alphabet, rng);
      spec.generators.push_back(free_reduce(invert(u) * w.pow(uniform_index(rng, 1, 3)) * u));
    } else {
      spec.generators.push_back(random_reduced_word(uniform_index(rng, 1, cfg.max_word_length), alphabet, rng));
    }
  }
  return Json{{"subgroup", subgroup_spec_to_json(spec)}, {"word", w.to_string()}};
}

TrialOutcome check_conjugates(const Json& inst) {
  const SubgroupSpec spec = subgroup_spec_from_json(inst.at("subgroup"));
  const SubgroupGraph h = stallings_graph(spec.generators, spec.alphabet);
  const ConjugateCountReport r = count_conjugates_meeting(h, read_word(inst));
  TrialOutcome o = verdict(r.pass, std::to_string(r.count) + " conjugates meet H but rank(H) = " +
                                       std::to_string(r.rank));
  if (r.count > 0) o.stats["instances_meeting_conjugates"] = 1;
  if (r.count > 1) o.stats["instances_meeting_several_conjugates"] = 1;
  return o;
}

// ---- conjugate-intersection ------------------------------------------------

std::optional<Json> gen_conjugate_intersection(const TrialConfig& cfg, std::size_t, Rng& rng) {
  const std::uint32_t alphabet = std::max<std::uint32_t>(cfg.alphabet, 2);
  std::vector<Label> letters(alphabet);
  for (Label l = 1; l <= alphabet; ++l) letters[l - 1] = l;
  std::shuffle(letters.begin(), letters.end(), rng);
  const std::size_t r = uniform_index(rng, 1, alphabet - 1);
  SubgroupSpec spec{alphabet, {}};
  for (std::size_t k = 0; k < r; ++k) spec.generators.push_back(Word({Letter{letters[k], 1}}));
  const SubgroupGraph h = stallings_graph(spec.generators, alphabet);

  std::vector<Word> cosets;
  while (cosets.size() < r + 1) {
    const Word g = random_reduced_word(uniform_index(rng, 0, cfg.max_word_length), alphabet, rng);
    const bool fresh = std::none_of(cosets.begin(), cosets.end(),
                                    [&](const Word& c) { return contains(h, c * invert(g)); });
    if (fresh) cosets.push_back(g);
  }
  Json cj = Json::array();
  for (const Word& c : cosets) cj.push_back(c.to_string());
  return Json{{"subgroup", subgroup_spec_to_json(spec)}, {"cosets", std::move(cj)}};
}

TrialOutcome check_conjugate_intersection_instance(const Json& inst) {
  const SubgroupSpec spec = subgroup_spec_from_json(inst.at("subgroup"));
  std::vector<Word> cosets;
  for (const Json& c : inst.at("cosets")) cosets.push_back(Word::parse(c.get<std::string>()));
  const ConjugateIntersectionReport r =
      check_conjugate_intersection(stallings_graph(spec.generators, spec.alphabet), cosets);
  if (r.status == CheckStatus::kNotApplicable) return verdict(false, "generated instance has n <= rank(H)");
  return verdict(r.status == CheckStatus::kPass,
                 "intersection of conjugates is nontrivial: " + graph_to_json(r.intersection.graph).dump());
}

// ---- staggered -------------------------------------------------------------

std::optional<Json> gen_staggered(const TrialConfig& cfg, std::size_t, Rng& rng) {
  const std::size_t relators = uniform_index(rng, 2, 3);
  const auto alphabet = static_cast<std::uint32_t>(std::max<std::size_t>(cfg.alphabet, relators));
  const StaggeredPresentation p = random_staggered_presentation(relators, alphabet, cfg.max_word_length, rng);
  const Word& w = p.relators[uniform_index(rng, 0, relators - 1)];
  LabeledDigraph g;
  switch (uniform_index(rng, 0, 3)) {
    case 0: g = rose(alphabet); break;
    case 1: {
      // Subgroup generated by conjugates of the relators.
      std::vector<Word> gens;
      for (const Word& rel : p.relators) {
        if (coin(rng, 0.7)) {
          const Word u = random_reduced_word(uniform_index(rng, 0, 2), alphabet, rng);
          gens.push_back(free_reduce(invert(u) * rel * u));
        }
      }
      g = stallings_graph(gens, alphabet).graph;
      break;
    }
    default: g = random_component(draw_graph(rng, cfg, w, alphabet), rng); break;
  }
  return Json{{"graph", graph_to_json(g)}, {"presentation", presentation_to_json(p)}};
}

TrialOutcome check_staggered(const Json& inst) {
  const StaggeredPresentation p = presentation_from_json(inst.at("presentation"));
  const StaggeredCheck s = is_staggered(p);
  if (!s.staggered) return verdict(false, "constructed presentation is not staggered: " + s.diagnostics.front());
  const MultiwordReport r = check_multiword_inequality(read_graph(inst), p);
  TrialOutcome o = verdict(r.status == CheckStatus::kPass, "sum of class counts " + std::to_string(r.total_classes) +
                                                               " exceeds beta_1 = " + std::to_string(r.beta1));
  if (r.total_classes > 0) o.stats["instances_with_w_cycles"] = 1;
  if (std::count_if(r.class_counts.begin(), r.class_counts.end(), [](std::size_t c) { return c > 0; }) > 1) {
    o.stats["instances_with_several_relators_tracing"] = 1;
  }
  return o;
}

struct Suite {
  std::string name;
  std::function<std::optional<Json>(const TrialConfig&, std::size_t, Rng&)> generate;
  std::function<TrialOutcome(const Json&)> check;
  std::size_t extra_trials = 0;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"main", gen_main, check_main},
      {"strict", gen_strict, check_strict},
      {"equality-collapse", gen_equality, check_equality, kEqualityCircles},
      {"oracle", gen_main, check_oracle},
      {"fold-confluence", gen_fold, check_fold},
      {"shnc", gen_shnc, check_shnc_instance},
      {"restated", gen_main, check_restated},
      {"conjugates", gen_conjugates, check_conjugates},
      {"conjugate-intersection", gen_conjugate_intersection, check_conjugate_intersection_instance},
      {"staggered", gen_staggered, check_staggered},
      {"npi", gen_npi, check_npi_instance},
  };
  return all;
}

const Suite& find_suite(const std::string& name) {
  for (const Suite& s : suites()) {
    if (s.name == name) return s;
  }
  throw InvalidInput("unknown suite \"" + name + "\"");
}

Json config_to_json(const TrialConfig& c) {
  return {{"seed", c.master_seed},
          {"trials", c.trials},
          {"max_vertices", c.max_vertices},
          {"alphabet", c.alphabet},
          {"max_word_length", c.max_word_length},
          {"density", c.edge_density},
          {"min_qualifying", c.min_qualifying}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Suite& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

TrialConfig default_config(const std::string& suite) {
  find_suite(suite);
  TrialConfig c;
  if (suite == "main") {
    c.trials = 10000;
    c.max_vertices = 30;
    c.alphabet = 3;
    c.max_word_length = 16;
  } else if (suite == "oracle") {
    c.trials = 1000;
    c.max_vertices = 8;
    c.max_word_length = 6;
  } else if (suite == "strict") {
    c.trials = 4000;
    c.max_vertices = 12;
    c.max_word_length = 8;
    c.edge_density = 0.8;
    c.min_qualifying = 200;
  } else if (suite == "equality-collapse") {
    c.trials = 1000;
    c.max_vertices = 16;
    c.max_word_length = 8;
  } else if (suite == "npi") {
    c.trials = 1000;
    c.max_vertices = 16;
    c.max_word_length = 8;
  } else if (suite == "fold-confluence") {
    c.trials = 500;
    c.max_word_length = 10;
  } else if (suite == "shnc") {
    c.trials = 1000;
    c.max_vertices = 12;
    c.max_word_length = 8;
  } else if (suite == "restated") {
    c.trials = 1000;
    c.max_vertices = 20;
    c.max_word_length = 10;
  } else if (suite == "conjugates") {
    c.trials = 1000;
    c.max_word_length = 8;
  } else if (suite == "conjugate-intersection") {
    c.trials = 200;
    c.max_word_length = 4;
  } else if (suite == "staggered") {
    c.trials = 500;
    c.max_vertices = 16;
    c.alphabet = 4;
    c.max_word_length = 6;
  }
  return c;
}

std::optional<Json> generate_instance(const std::string& suite, const TrialConfig& cfg, std::size_t trial,
                                      std::uint64_t seed) {
  Rng rng(seed);
  return find_suite(suite).generate(cfg, trial, rng);
}

TrialOutcome check_instance(const std::string& suite, const Json& instance) {
  return find_suite(suite).check(instance);
}

Json VerdictReport::to_json(bool include_timing) const {
  Json fails = Json::array();
  for (const TrialFailure& f : failures) {
    fails.push_back({{"trial", f.trial}, {"seed", f.seed}, {"message", f.message}, {"instance", f.instance}});
  }
  Json j{{"suite", suite},
         {"config", config_to_json(config)},
         {"attempts", attempts},
         {"trials", trials},
         {"passes", passes},
         {"failures", failures.size()},
         {"inconclusive", inconclusive},
         {"skipped", attempts - trials},
         {"qualifying_met", qualifying_met()},
         {"ok", ok()},
         {"stats", stats},
         {"counterexamples", std::move(fails)}};
  if (include_timing) j["wall_seconds"] = wall_seconds;
  return j;
}

VerdictReport run_suite(const std::string& name, const TrialConfig& cfg, unsigned jobs) {
  const Suite& suite = find_suite(name);
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();
  const std::size_t total = cfg.trials + suite.extra_trials;

  struct Slot {
    TrialOutcome outcome;
    std::uint64_t seed = 0;
    Json instance;
  };
  std::vector<Slot> slots(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      Slot& slot = slots[i];
      slot.seed = trial_seed(cfg.master_seed, i);
      std::optional<Json> inst;
      try {
        Rng rng(slot.seed);
        inst = suite.generate(cfg, i, rng);
        if (!inst) {
          slot.outcome.status = TrialStatus::kSkipped;
          continue;
        }
        slot.outcome = suite.check(*inst);
      } catch (const std::exception& e) {
        slot.outcome = TrialOutcome{TrialStatus::kFail, std::string("exception: ") + e.what(), {}};
      }
      if (slot.outcome.status == TrialStatus::kFail && inst) slot.instance = std::move(*inst);
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  VerdictReport report;
  report.suite = name;
  report.config = cfg;
  report.attempts = total;
  for (std::size_t i = 0; i < total; ++i) {
    Slot& slot = slots[i];
    switch (slot.outcome.status) {
      case TrialStatus::kSkipped: continue;
      case TrialStatus::kPass: ++report.passes; break;
      case TrialStatus::kInconclusive: ++report.inconclusive; break;
      case TrialStatus::kFail:
        report.failures.push_back({i, slot.seed, slot.outcome.message, std::move(slot.instance)});
        break;
    }
    ++report.trials;
    for (const auto& [key, value] : slot.outcome.stats) report.stats[key] += value;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace cyclecount
