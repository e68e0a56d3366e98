#include <doctest.h>

#include <algorithm>
#include <string>

#include "pftlab/cli.hpp"
#include "pftlab/io.hpp"

using namespace pftlab;

namespace {

const std::string l3 = R"({"elements":["0","m","1"],"leq":[["0","m"],["m","1"]]})";
const std::string sierpinski = R"({"points":["0","1"],"opens":[[],["1"],["0","1"]]})";

cli::Outcome run(std::vector<std::string> args) { return cli::run(args, Bounds{}); }

io::Json out_json(const cli::Outcome& o) { return io::parse_text(o.out); }

std::size_t nodes(const std::string& dot) {
  std::size_t n = 0;
  std::size_t start = 0;
  for (auto end = dot.find('\n'); end != std::string::npos; start = end + 1, end = dot.find('\n', start)) {
    const std::string line = dot.substr(start, end - start);
    if (line.rfind("  \"", 0) == 0 && line.find("->") == std::string::npos) ++n;
  }
  return n;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("nuclei count") {
  const auto o = run({"nuclei", "--lattice", l3, "--count"});
  CHECK(o.status == cli::exit_ok);
  CHECK(out_json(o)["count"] == 4);
}

TEST_CASE("nuclei listing names the special nuclei") {
  const auto o = run({"nuclei", "--lattice", l3});
  REQUIRE(o.status == cli::exit_ok);
  const io::Json j = out_json(o);
  CHECK(j["nuclei"].size() == 4);
}

TEST_CASE("dual and assembly output") {
  const io::Json d = out_json(run({"dual", "--lattice", l3}));
  CHECK(d.dump().find("xm") != std::string::npos);
  const auto a = run({"assembly", "--lattice", l3, "--tower", "2"});
  REQUIRE(a.status == cli::exit_ok);
  CHECK(a.out.find("{x1,xm}") != std::string::npos);
}

TEST_CASE("checks succeed on L3 and the Sierpinski space") {
  for (const char* flag : {"--duality", "--nuclei", "--boolean", "--booleanization", "--spatial", "--essential"}) {
    const auto o = run({"check", "--lattice", l3, flag});
    CHECK_MESSAGE(o.status == cli::exit_ok, flag);
    CHECK(out_json(o)["ok"] == true);
  }
  for (const char* flag : {"--simmons", "--compactification", "--scatter"}) {
    const auto o = run({"check", "--space", sierpinski, flag});
    CHECK_MESSAGE(o.status == cli::exit_ok, flag);
  }
}

TEST_CASE("an invalid nucleus fails the check") {
  const auto o = run({"check", "--lattice", l3, "--nucleus", R"({"values":{"0":"1","m":"m","1":"1"}})"});
  CHECK(o.status == cli::exit_check_failed);
  CHECK(out_json(o)["ok"] == false);
}

TEST_CASE("exit codes") {
  CHECK(run({}).status == cli::exit_usage);
  CHECK(run({"frobnicate"}).status == cli::exit_usage);
  CHECK(run({"nuclei"}).status == cli::exit_usage);
  const auto malformed = run({"nuclei", "--lattice", "{not json"});
  CHECK(malformed.status == cli::exit_malformed_input);
  const io::Json err = io::parse_text(malformed.err);
  CHECK(err["error"]["code"] == "malformed_input");
  const std::string m3 =
      R"({"elements":["0","a","b","c","1"],"leq":[["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]})";
  const auto invalid = run({"nuclei", "--lattice", m3});
  CHECK(invalid.status == cli::exit_invalid_model);
  CHECK(io::parse_text(invalid.err)["error"]["code"] == "invalid_model");
  CHECK(run({"dual", "--lattice", "/nonexistent/lattice.json"}).status == cli::exit_io);
  CHECK(run({"sweep", "--kind", "posets", "--n", "12"}).status == cli::exit_bound_exceeded);
  CHECK(run({"sweep", "--kind", "posets", "--n", "2", "--suite", "nope"}).status == cli::exit_usage);
  const auto bad_highlight = run({"export-dot", "--lattice", l3, "--dual", "--highlight", "q"});
  CHECK(bad_highlight.status == cli::exit_malformed_input);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"nuclei", "--lattice", l3};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> sw{"sweep", "--kind", "topologies", "--n", "3", "--jobs", "4"};
  const std::vector<std::string> sw1{"sweep", "--kind", "topologies", "--n", "3", "--jobs", "1"};
  CHECK(run(sw).out == run(sw1).out);
}

TEST_CASE("sweeps") {
  const io::Json p = out_json(run({"sweep", "--kind", "posets", "--n", "4"}));
  CHECK(p["instances"] == 16);
  CHECK(p["failed"] == 0);
  CHECK(p["first_counterexample"].is_null());
  const io::Json t = out_json(run({"sweep", "--kind", "topologies", "--n", "3", "--suite", "simmons"}));
  CHECK(t["instances"] == 29);
  CHECK(t["failed"] == 0);
}

TEST_CASE("dot export") {
  const auto c2 = run({"export-dot", "--poset", R"({"elements":["a","b"],"leq":[["a","b"]]})"});
  REQUIRE(c2.status == cli::exit_ok);
  CHECK(c2.out.rfind("digraph \"P\" {", 0) == 0);
  CHECK(count(c2.out, "->") == 1);
  CHECK(nodes(c2.out) == 2);

  const auto x = run({"export-dot", "--lattice", l3, "--dual", "--highlight", "m"});
  REQUIRE(x.status == cli::exit_ok);
  CHECK(x.out.rfind("digraph \"X\" {", 0) == 0);
  CHECK(count(x.out, "fillcolor=gray") == 1);
  CHECK(count(x.out, "->") == 1);

  const auto n = run({"export-dot", "--lattice", l3, "--assembly"});
  REQUIRE(n.status == cli::exit_ok);
  CHECK(n.out.rfind("digraph \"N\" {", 0) == 0);
  CHECK(nodes(n.out) == 4);
  CHECK(count(n.out, "->") == 4);

  const auto s = run({"export-dot", "--space", R"({"points":["0","1"],"opens":[[],["0","1"]]})"});
  REQUIRE(s.status == cli::exit_ok);
  CHECK(count(s.out, "style=dashed") >= 1);
}
