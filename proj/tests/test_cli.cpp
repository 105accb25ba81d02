#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclecount/json_io.hpp"

using cyclecount::Json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("cyclecount-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

Run run(const std::string& args) {
  const std::string cmd = std::string(CYCLECOUNT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const char* kSquare = R"({"alphabet": 1, "vertices": ["v0", "v1", "v2", "v3"],
  "edges": [{"src": "v0", "dst": "v1", "label": 1}, {"src": "v1", "dst": "v2", "label": 1},
            {"src": "v2", "dst": "v3", "label": 1}, {"src": "v3", "dst": "v0", "label": 1}],
  "basepoint": "v0"})";

}  // namespace

TEST_CASE("words normalize") {
  const fs::path in = write_file("word.json", R"({"words": ["baB", "abab", "aA"]})");
  const Run r = run("words normalize " + in.string());
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["words"][0]["cyclic_core"] == "a");
  CHECK(j["words"][0]["conjugator"] == "b");
  CHECK(j["words"][1]["root"] == "ab");
  CHECK(j["words"][1]["exponent"] == 2);
  CHECK(j["words"][2]["reduced"] == "");
}

TEST_CASE("graph commands") {
  const fs::path sq = write_file("square.json", kSquare);
  Run r = run("graph betti " + sq.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["total"] == 1);

  r = run("graph validate " + sq.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["deterministic"] == true);

  const fs::path bad = write_file("bad.json", R"({"alphabet": 1, "vertices": ["p", "q", "r"],
    "edges": [{"src": "p", "dst": "q", "label": 1}, {"src": "p", "dst": "r", "label": 1}]})");
  r = run("graph validate " + bad.string());
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["violations"].size() == 1);

  r = run("graph fold " + bad.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["graph"]["vertices"].size() == 2);

  r = run("graph canon --dot " + sq.string());
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);

  const fs::path pair = write_file("pair.json", std::string(R"({"graph1": )") + kSquare + R"(, "graph2": )" + kSquare + "}");
  r = run("graph fiber " + pair.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["betti"]["total"] == 4);

  r = run("graph core " + sq.string() + " --out " + (scratch() / "core.json").string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream core_file(scratch() / "core.json");
  std::stringstream core_text;
  core_text << core_file.rdbuf();
  CHECK(Json::parse(core_text.str())["graph"]["edges"].size() == 4);
}

TEST_CASE("stdin input") {
  const fs::path sq = write_file("square2.json", kSquare);
  const Run r = run("graph betti < " + sq.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["total"] == 1);
}

TEST_CASE("wcycles and complex commands") {
  const fs::path in = write_file("gw.json", std::string(R"({"graph": )") + kSquare + R"(, "word": "a"})");
  Run r = run("wcycles count " + in.string());
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["count_with_multiplicity"] == 4);
  CHECK(j["class_count"] == 1);
  CHECK(j["beta1"] == 1);

  r = run("wcycles decompose " + in.string());
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["classes"][0]["period"] == 4);
  CHECK(j["strict"]["status"] == "not-applicable");

  r = run("complex gamma-w " + in.string() + " --out " + (scratch() / "cx.json").string());
  CHECK(r.code == 0);
  r = run("complex collapse " + (scratch() / "cx.json").string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["collapses"] == true);

  const fs::path npi = write_file("npi.json", std::string(R"({"graph": )") + kSquare +
                                                  R"(, "word": "a", "attachments": [{"vertex": "v2", "exponent": 4}]})");
  r = run("complex npi " + npi.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["branch"] == "contractible");

  const fs::path st = write_file("st.json", R"({"alphabet": 2, "relators": ["ab", "ba"], "ordered_letters": [1, 2]})");
  r = run("complex staggered " + st.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["staggered"] == false);

  const fs::path nonsimple = write_file("ns.json", std::string(R"({"graph": )") + kSquare + R"(, "word": "aa"})");
  CHECK(run("wcycles count " + nonsimple.string()).code == 2);
}

TEST_CASE("subgroup commands") {
  const fs::path h = write_file("h.json", R"({"alphabet": 2, "generators": ["aa", "b"]})");
  Run r = run("subgroup rank " + h.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["rank"] == 2);

  r = run("subgroup build " + h.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["graph"]["vertices"].size() == 2);

  const fs::path pair = write_file("hh.json", R"({"subgroup1": {"alphabet": 2, "generators": ["aa", "b"]},
                                                 "subgroup2": {"alphabet": 2, "generators": ["aa", "b"]}})");
  r = run("subgroup shnc " + pair.string());
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["lhs"] == 1);
  CHECK(j["rhs"] == 1);
  CHECK(j["equality"] == true);

  const fs::path conj = write_file("c.json", R"({"subgroup": {"alphabet": 2, "generators": ["aa", "b"]}, "word": "a"})");
  r = run("subgroup conjugates " + conj.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["count"] == 1);

  const fs::path cosets = write_file("co.json", R"({"subgroup": {"alphabet": 2, "generators": ["a"]}, "cosets": ["", "b", "bb"]})");
  r = run("subgroup intersect " + cosets.string());
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["status"] == "pass");
  CHECK(j["trivial"] == true);

  const fs::path two = write_file("two.json", R"({"subgroups": [{"alphabet": 2, "generators": ["a"]},
                                                              {"alphabet": 2, "generators": ["b"]}]})");
  r = run("subgroup intersect " + two.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["trivial"] == true);
}

TEST_CASE("verify") {
  const fs::path report = scratch() / "report.json";
  Run r = run("verify oracle --trials 50 --seed 4 --out " + report.string());
  CHECK(r.code == 0);
  std::ifstream f(report);
  const Json j = Json::parse(f);
  CHECK(j["suite"] == "oracle");
  CHECK(j["trials"] == 50);
  CHECK(j["failures"] == 0);
  CHECK(j["config"]["max_vertices"] == 8);

  const Run a = run("verify shnc --trials 40 --seed 9 --jobs 1");
  const Run b = run("verify shnc --trials 40 --seed 9 --jobs 3");
  Json ja = Json::parse(a.out);
  Json jb = Json::parse(b.out);
  ja.erase("wall_seconds");
  jb.erase("wall_seconds");
  CHECK(ja == jb);

  // Unmet minimum of qualifying instances is a failure, not an error.
  CHECK(run("verify strict --trials 5 --min-qualifying 100").code == 1);

  CHECK(run("verify nope").code == 2);
  CHECK(run("verify main --density 2").code == 2);
}

TEST_CASE("replay and counterexample files") {
  const fs::path bad = write_file("cx.json", R"({"suite": "staggered", "counterexamples": [{"trial": 0, "seed": 1,
    "message": "", "instance": {"graph": {"alphabet": 2, "vertices": ["v0"], "edges": []},
    "presentation": {"alphabet": 2, "relators": ["ab", "ba"], "ordered_letters": [1, 2]}}}]})");
  const Run r = run("verify staggered --replay " + bad.string());
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)[0]["status"] == "fail");
}

TEST_CASE("invalid input") {
  const fs::path junk = write_file("junk.json", "{ nope");
  CHECK(run("graph betti " + junk.string()).code == 2);
  CHECK(run("graph betti " + (scratch() / "missing.json").string()).code == 2);
  const fs::path wrong = write_file("wrong.json", R"({"alphabet": "x"})");
  CHECK(run("graph betti " + wrong.string()).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}
