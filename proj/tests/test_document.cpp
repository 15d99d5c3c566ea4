#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgprod/document.hpp"
#include "sgprod/products.hpp"

using namespace sgprod;

TEST_CASE("graph document layout") {
  GraphDocument doc{generate({Family::unbalanced_cycle, 3, {}}), "C3^-", std::nullopt};
  CHECK(serialize_graph(doc) ==
        "{\n"
        "  \"n\": 3,\n"
        "  \"name\": \"C3^-\",\n"
        "  \"edges\": [\n"
        "    [0, 1, -1],\n"
        "    [0, 2, 1],\n"
        "    [1, 2, 1]\n"
        "  ]\n"
        "}\n");
  GraphDocument empty{generate({Family::null_graph, 2, {}}), std::nullopt,
                      std::vector<std::string>{"a", "b"}};
  CHECK(serialize_graph(empty) ==
        "{\n"
        "  \"n\": 2,\n"
        "  \"edges\": [],\n"
        "  \"vertex_labels\": [\"a\", \"b\"]\n"
        "}\n");
}

TEST_CASE("graph documents round-trip") {
  std::mt19937_64 rng(83);
  std::vector<GraphDocument> corpus;
  for (int t = 0; t < 30; ++t) corpus.push_back({oracle::random_graph(1 + rng() % 7, rng), std::nullopt, std::nullopt});
  for (auto f : {Family::all_positive_complete, Family::antibalanced_complete, Family::path,
                 Family::unbalanced_cycle, Family::null_graph})
    corpus.push_back({generate({f, 4, {}}), "named \"quoted\"", std::nullopt});
  auto a = generate({Family::unbalanced_cycle, 4, {}});
  auto b = generate({Family::antibalanced_complete, 3, {}});
  for (auto kind : {ProductKind::cartesian, ProductKind::hg_lex, ProductKind::bcd_lex,
                    ProductKind::tensor, ProductKind::strong})
    corpus.push_back({product(kind, a, b), std::string(product_kind_name(kind)), pair_labels(4, 3)});
  for (const auto& doc : corpus) {
    const std::string text = serialize_graph(doc);
    auto back = parse_graph(text);
    CHECK(back == doc);
    CHECK(serialize_graph(back) == text);
  }
}

TEST_CASE("compact JSON is accepted") {
  auto doc = parse_graph(R"({"n":3,"edges":[[2,0,-1],[0,1,1]]})");
  CHECK(doc.graph == oracle::graph(3, {{0, 2, -1}, {0, 1, 1}}));
  CHECK_FALSE(doc.name.has_value());
}

TEST_CASE("malformed graph documents") {
  for (const char* bad : {
           "",
           "[1, 2]",
           R"({"edges": []})",
           R"({"n": -1, "edges": []})",
           R"({"n": 2, "edges": [[0, 1, 0]]})",
           R"({"n": 2, "edges": [[0, 1]]})",
           R"({"n": 2, "edges": [[0, 2, 1]]})",
           R"({"n": 2, "edges": [[0, 0, 1]]})",
           R"({"n": 2, "edges": [[0, 1, 1], [1, 0, -1]]})",
           R"({"n": 2, "edges": [], "vertex_labels": ["a"]})",
           R"({"n": 2, "edges": "none"})",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_graph(bad), DocumentError);
  }
}

TEST_CASE("witness documents") {
  KSwitching z(2, {SwitchVector{1, 0}, SwitchVector{-1, 1}});
  const std::string text = serialize_witness({z});
  CHECK(text ==
        "{\n"
        "  \"k\": 2,\n"
        "  \"zeta\": [\n"
        "    [1, 0],\n"
        "    [-1, 1]\n"
        "  ]\n"
        "}\n");
  CHECK(parse_witness(text).zeta == z);
  CHECK_THROWS_AS(parse_witness(R"({"k": 2, "zeta": [[1, 0, 0]]})"), DocumentError);
  CHECK_THROWS_AS(parse_witness(R"({"k": 1, "zeta": [[2]]})"), DocumentError);
  CHECK_THROWS_AS(parse_witness(R"({"zeta": [[1]]})"), DocumentError);
}

TEST_CASE("DOT export") {
  GraphDocument doc{generate({Family::unbalanced_cycle, 3, {}}), "C3^-", std::nullopt};
  const std::string dot = export_dot(doc);
  CHECK(dot ==
        "graph \"C3^-\" {\n"
        "  0 [label=\"0\"];\n"
        "  1 [label=\"1\"];\n"
        "  2 [label=\"2\"];\n"
        "  0 -- 1 [style=dashed];\n"
        "  0 -- 2 [style=solid];\n"
        "  1 -- 2 [style=solid];\n"
        "}\n");
  CHECK(export_dot(doc) == dot);
  GraphDocument labelled{oracle::complete(2), std::nullopt, pair_labels(1, 2)};
  CHECK(export_dot(labelled).find("1 [label=\"0,1\"];") != std::string::npos);
}

TEST_CASE("pair labels") {
  CHECK(pair_labels(2, 2) == std::vector<std::string>{"0,0", "0,1", "1,0", "1,1"});
}
