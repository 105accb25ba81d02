#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyclecount/automaton.hpp"
#include "cyclecount/complex2.hpp"
#include "cyclecount/subgroups.hpp"
#include "cyclecount/wcycles.hpp"
#include "cyclecount/words.hpp"

namespace cyclecount {

using Json = nlohmann::json;

// Graph file:
//   {"alphabet": n, "vertices": ["v0", ...],
//    "edges": [{"src": "v0", "dst": "v1", "label": 1}, ...],
//    "basepoint": "v0"}          (basepoint optional)
Json graph_to_json(const LabeledDigraph& g);
LabeledDigraph graph_from_json(const Json& j);

// Complex file: {"skeleton": <graph>, "cells": [[{"edge": i, "dir": 1}, ...], ...]}
Json complex_to_json(const TwoComplex& x);
TwoComplex complex_from_json(const Json& j);

// {"alphabet": n, "relators": ["ab", ...], "ordered_letters": [1, 2, ...],
//  "relator_order": [0, 1, ...]}
Json presentation_to_json(const StaggeredPresentation& p);
StaggeredPresentation presentation_from_json(const Json& j);

// {"alphabet": n, "generators": ["aa", "b", ...]}
struct SubgroupSpec {
  std::uint32_t alphabet = 0;
  std::vector<Word> generators;
};
Json subgroup_spec_to_json(const SubgroupSpec& s);
SubgroupSpec subgroup_spec_from_json(const Json& j);

// {"graph": <graph>, "word": "ab", "attachments": [{"vertex": "v0", "exponent": 1}, ...]}
struct ImmersionSpec {
  LabeledDigraph graph;
  Word word;
  std::vector<Attachment> attachments;
};
Json immersion_to_json(const ImmersionSpec& s);
ImmersionSpec immersion_from_json(const Json& j);

Json path_to_json(const std::vector<PathStep>& path);
Json decomposition_to_json(const LabeledDigraph& g, const WCycleDecomposition& d);
Json betti_to_json(const LabeledDigraph& g, const BettiReport& b);
Json violations_to_json(const LabeledDigraph& g, const std::vector<DeterminismViolation>& v);
Json main_report_to_json(const MainInequalityReport& r);
Json collapse_to_json(const CollapseResult& r);

/// Parses text as JSON, mapping syntax errors to InvalidInput.
Json parse_json(const std::string& text);

}  // namespace cyclecount
