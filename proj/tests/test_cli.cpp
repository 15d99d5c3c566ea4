#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sgprod/cli.hpp"
#include "sgprod/document.hpp"

using namespace sgprod;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("sgprod_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("gen families") {
  auto k3 = run({"gen", "antibalanced-complete", "3"});
  REQUIRE(k3.code == kExitOk);
  auto doc = parse_graph(k3.out);
  CHECK(doc.graph.all_negative());
  CHECK(doc.name == "K3^-");
  CHECK(parse_graph(run({"gen", "unbalanced-cycle", "5"}).out).name == "C5^-");
  CHECK(parse_graph(run({"gen", "path-all-positive", "3"}).out).graph.all_positive());
  CHECK(parse_graph(run({"gen", "null-graph", "2", "--name", "N"}).out).name == "N");
  auto custom = parse_graph(run({"gen", "signed-custom", "3", "0,1,-1", "1,2,1"}).out);
  CHECK(custom.graph.size() == 2);
  CHECK(custom.graph.sign_between(0, 1) == Sign::negative());
}

TEST_CASE("gen rejects bad input") {
  CHECK(run({"gen", "wheel", "3"}).code == kExitInput);
  CHECK(run({"gen", "unbalanced-cycle", "2"}).code == kExitInput);
  CHECK(run({"gen", "path", "0"}).code == kExitInput);
  CHECK(run({"gen", "path", "x"}).code == kExitInput);
  CHECK(run({"gen", "signed-custom", "3", "0,0,1"}).code == kExitInput);
  CHECK(run({"gen", "signed-custom", "3", "0,1,0"}).code == kExitInput);
  CHECK(run({"gen", "signed-custom", "3", "0,1"}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"bdim", "-", "--bogus"}).code == kExitInput);
}

TEST_CASE("bdim from stdin") {
  auto k3 = run({"gen", "antibalanced-complete", "3"}).out;
  auto r = run({"bdim", "-"}, k3);
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("bdim = 3\n", 0) == 0);
  auto o = run({"bdim", "-", "--oracle"}, k3);
  CHECK(o.out.find("oracle: agrees") != std::string::npos);

  auto k6 = run({"gen", "antibalanced-complete", "6"}).out;
  auto capped = run({"bdim", "-"}, k6);
  CHECK(capped.code == kExitComputation);
  CHECK(capped.err.find("k <= 6") != std::string::npos);
  auto raised = run({"bdim", "-", "--max-k", "8", "--oracle"}, k6);
  CHECK(raised.code == kExitOk);
  CHECK(raised.out.rfind("bdim = 7\n", 0) == 0);
  CHECK(raised.out.find("oracle: skipped") != std::string::npos);

  CHECK(run({"bdim", "-"}, "not json").code == kExitInput);
  CHECK(run({"bdim", "/nonexistent/graph.json"}).code == kExitInput);
}

TEST_CASE("cartesian product of unbalanced four-cycles") {
  TempDir dir;
  auto a = dir.file("a.json", run({"gen", "unbalanced-cycle", "4"}).out);
  auto p = run({"product", "cartesian", a, a});
  REQUIRE(p.code == kExitOk);
  auto doc = parse_graph(p.out);
  CHECK(doc.graph.order() == 16);
  CHECK(doc.graph.size() == 32);
  CHECK((*doc.vertex_labels)[5] == "1,1");
  CHECK(run({"bdim", "-"}, p.out).out.rfind("bdim = 2\n", 0) == 0);

  CHECK(run({"product", "hg_lex", "-", a}, run({"gen", "path", "2"}).out).code == kExitOk);
  CHECK(run({"product", "lexicographic", a, a}).code == kExitInput);
  CHECK(run({"product", "tensor", "-", "-"}).code == kExitInput);
}

TEST_CASE("balance") {
  auto r = run({"balance", "-"}, run({"gen", "path-all-positive", "3"}).out);
  CHECK(r.code == kExitOk);
  CHECK(r.out == "balanced: true\nantibalanced: true\nwitness: [1, 1, 1]\n");
  auto c = run({"balance", "-"}, run({"gen", "unbalanced-cycle", "4"}).out);
  CHECK(c.out == "balanced: false\nantibalanced: false\n");
}

TEST_CASE("switch applies a witness") {
  TempDir dir;
  auto g = dir.file("g.json", run({"gen", "unbalanced-cycle", "3"}).out);
  auto w = dir.path("w.json");
  REQUIRE(run({"bdim", g, "--witness", w}).code == kExitOk);
  auto s = run({"switch", g, w});
  REQUIRE(s.code == kExitOk);
  CHECK(parse_graph(s.out).graph.all_positive());

  auto bad = dir.file("bad.json", "{\"k\": 1, \"zeta\": [[1], [0], [1]]}");
  CHECK(run({"switch", g, bad}).code == kExitInput);
  auto short_w = dir.file("short.json", "{\"k\": 1, \"zeta\": [[1]]}");
  CHECK(run({"switch", g, short_w}).code == kExitInput);
}

TEST_CASE("witness-table") {
  auto t = run({"witness-table", "1", "4", "5"});
  CHECK(t.code == kExitOk);
  CHECK(parse_witness(t.out).zeta.size() == 20);
  CHECK(t.err.find("2-positive: true") != std::string::npos);
  auto t5 = run({"witness-table", "5", "6", "3"});
  CHECK(t5.code == kExitOk);
  CHECK(parse_witness(t5.out).zeta.dim() == 7);
  CHECK(run({"witness-table", "1", "3", "3"}).code == kExitInput);
  CHECK(run({"witness-table", "5", "3", "4"}).code == kExitInput);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--claims", "C2,C19", "--seed", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("C2 pass", 0) == 0);
  CHECK(r.out.find("\nC19 pass") != std::string::npos);

  auto j = run({"verify", "--claims", "C5", "--format", "json"});
  CHECK(j.code == kExitOk);
  auto rec = nlohmann::json::parse(j.out);
  CHECK(rec["id"] == "C5");
  CHECK(rec["status"] == "pass");
  CHECK(rec["counterexample"].is_null());

  CHECK(run({"verify", "--claims", "C42"}).code == kExitInput);
  CHECK(run({"verify", "--claims", "C1", "--oracle-max-vertices", "9"}).code == kExitInput);
  CHECK(run({"verify", "--claims", "C2", "--max-vertices", "4"}).code == kExitComputation);
  CHECK(run({"verify", "--format", "xml"}).code == kExitInput);
}

TEST_CASE("export-dot") {
  auto g = run({"gen", "unbalanced-cycle", "3"}).out;
  auto d = run({"export-dot", "-"}, g);
  CHECK(d.code == kExitOk);
  CHECK(d.out.find("0 -- 1 [style=dashed];") != std::string::npos);
  CHECK(d.out == run({"export-dot", "-"}, g).out);
}
