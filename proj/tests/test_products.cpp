#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgprod/core.hpp"
#include "sgprod/products.hpp"

using namespace sgprod;

namespace {

// Edge-rule reference: sign of (i,j)-(k,l) in the product, 0 if absent.
int reference_sign(ProductKind kind, const SignedGraph& a, const SignedGraph& b, Vertex i,
                   Vertex j, Vertex k, Vertex l) {
  const int s1 = oracle::edge_sign(a, i, k);
  const int s2 = oracle::edge_sign(b, j, l);
  const bool same1 = i == k, same2 = j == l;
  switch (kind) {
    case ProductKind::cartesian:
      if (same2 && s1) return s1;
      if (same1 && s2) return s2;
      return 0;
    case ProductKind::hg_lex:
      if (s1) return s1;
      if (same1 && s2) return s2;
      return 0;
    case ProductKind::bcd_lex:
      if (s1 && s2) return s1 * s2;
      if (s1) return s1;
      if (same1 && s2) return s2;
      return 0;
    case ProductKind::tensor:
      return s1 * s2;
    case ProductKind::strong:
      if (s1 && s2) return s1 * s2;
      if (same2 && s1) return s1;
      if (same1 && s2) return s2;
      return 0;
  }
  return 0;
}

constexpr ProductKind kAll[] = {ProductKind::cartesian, ProductKind::hg_lex,
                                ProductKind::bcd_lex, ProductKind::tensor, ProductKind::strong};

SignedGraph swapped_relabel(const SignedGraph& g, std::size_t n1, std::size_t n2) {
  // Relabels (i,j) of an n1 x n2 product as (j,i) of an n2 x n1 product.
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    auto a = PairIndex::from_flat(e.u, n2), b = PairIndex::from_flat(e.v, n2);
    edges.push_back({PairIndex::from_pair(a.j, a.i, n1).flat,
                     PairIndex::from_pair(b.j, b.i, n1).flat, e.sign});
  }
  return build_graph(g.order(), edges);
}

SignedGraph canonical_p3() { return oracle::path(3); }

}  // namespace

TEST_CASE("product kind names") {
  for (auto k : kAll) CHECK(parse_product_kind(product_kind_name(k)) == k);
  CHECK(parse_product_kind("hg_lex") == ProductKind::hg_lex);
  CHECK(parse_product_kind("bcd-lex") == ProductKind::bcd_lex);
  CHECK_THROWS_AS(parse_product_kind("lex"), std::invalid_argument);
}

TEST_CASE("pair index is a bijection") {
  for (std::size_t n2 = 1; n2 <= 4; ++n2)
    for (Vertex i = 0; i < 3; ++i)
      for (Vertex j = 0; j < n2; ++j) {
        auto p = PairIndex::from_pair(i, j, n2);
        CHECK(p.flat == i * n2 + j);
        auto q = PairIndex::from_flat(p.flat, n2);
        CHECK(q.i == i);
        CHECK(q.j == j);
      }
}

TEST_CASE("every product matches the edge rules") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    auto a = oracle::random_graph(1 + rng() % 4, rng, 0.6);
    auto b = oracle::random_graph(1 + rng() % 4, rng, 0.6);
    const std::size_t n2 = b.order();
    for (auto kind : kAll) {
      auto p = product(kind, a, b);
      REQUIRE(p.order() == a.order() * n2);
      for (Vertex x = 0; x < p.order(); ++x)
        for (Vertex y = x + 1; y < p.order(); ++y) {
          auto u = PairIndex::from_flat(x, n2), v = PairIndex::from_flat(y, n2);
          const int want = reference_sign(kind, a, b, u.i, u.j, v.i, v.j);
          auto got = p.sign_between(x, y);
          REQUIRE((got ? got->value() : 0) == want);
        }
    }
  }
}

TEST_CASE("edge counts") {
  std::mt19937_64 rng(37);
  for (std::size_t n1 = 1; n1 <= 5; ++n1)
    for (std::size_t n2 = 1; n2 <= 5; ++n2) {
      auto a = oracle::random_graph(n1, rng), b = oracle::random_graph(n2, rng);
      const std::size_t e1 = a.size(), e2 = b.size();
      CHECK(cartesian(a, b).size() == n1 * e2 + n2 * e1);
      CHECK(hg_lex(a, b).size() == e1 * n2 * n2 + n1 * e2);
      CHECK(bcd_lex(a, b).size() == e1 * n2 * n2 + n1 * e2);
      CHECK(tensor(a, b).size() == 2 * e1 * e2);
      CHECK(strong(a, b).size() == n1 * e2 + n2 * e1 + 2 * e1 * e2);
    }
}

TEST_CASE("cartesian examples") {
  auto k2 = oracle::complete(2);
  auto sq = cartesian(k2, k2);
  CHECK(sq.order() == 4);
  CHECK(sq.size() == 4);
  CHECK(sq.all_positive());
  CHECK(is_balanced(sq).balanced);

  auto c3 = generate({Family::unbalanced_cycle, 3, {}});
  auto p = cartesian(c3, c3);
  for (Vertex j = 0; j < 3; ++j) {
    const std::vector<Vertex> column{PairIndex::from_pair(0, j, 3).flat,
                                     PairIndex::from_pair(1, j, 3).flat,
                                     PairIndex::from_pair(2, j, 3).flat};
    CHECK(cycle_sign(p, column) == Sign::negative());
  }

  auto c4 = generate({Family::unbalanced_cycle, 4, {}});
  auto q = cartesian(c4, c4);
  CHECK(q.order() == 16);
  CHECK(q.size() == 32);
}

TEST_CASE("hg_lex examples") {
  auto k4 = hg_lex(oracle::complete(2), oracle::complete(2, -1));
  CHECK(k4 == oracle::graph(4, {{0, 1, -1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, -1}}));
  CHECK(is_antibalanced(k4));

  auto c3 = generate({Family::unbalanced_cycle, 3, {}});
  auto two = hg_lex(generate({Family::null_graph, 2, {}}), c3);
  CHECK(two == oracle::graph(6, {{0, 1, -1}, {1, 2, 1}, {0, 2, 1}, {3, 4, -1}, {4, 5, 1}, {3, 5, 1}}));

  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n) {
      auto kmn = hg_lex(oracle::complete(m), oracle::complete(n));
      CHECK(kmn.size() == m * n * (m * n - 1) / 2);
    }
}

TEST_CASE("bcd_lex examples") {
  auto p3 = oracle::graph(3, {{0, 1, -1}, {1, 2, 1}});
  auto g = bcd_lex(p3, oracle::complete(2, -1));
  CHECK(g.order() == 6);
  CHECK(g.size() == 11);
  auto at = [](Vertex i, Vertex j) { return PairIndex::from_pair(i, j, 2).flat; };
  CHECK(g.sign_between(at(0, 0), at(1, 1)) == Sign::positive());
  CHECK(g.sign_between(at(0, 0), at(1, 0)) == Sign::negative());
  // A negative triangle of the negated product.
  const std::vector<Vertex> tri{at(0, 0), at(1, 1), at(1, 0)};
  CHECK(cycle_sign(negate(g), tri) == Sign::negative());

  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    auto a = oracle::random_graph(4, rng);
    auto b = oracle::random_graph(3, rng);
    auto pos = b.with_signs(std::vector<Sign>(b.size(), Sign::positive()));
    CHECK(bcd_lex(a, pos) == hg_lex(a, pos));
  }

  auto sq = bcd_lex(oracle::complete(2, -1), oracle::complete(2, -1));
  CHECK(sq.size() == 6);
  CHECK(is_balanced(sq).balanced);
  int negatives = 0;
  for (const auto& e : sq.edges()) negatives += e.sign.is_negative();
  CHECK(negatives == 4);
}

TEST_CASE("tensor examples") {
  auto k2 = oracle::complete(2);
  auto t = tensor(k2, k2);
  CHECK(t == oracle::graph(4, {{0, 3, 1}, {1, 2, 1}}));
  CHECK(bfs_components(t).size() == 2);

  CHECK(is_balanced(tensor(oracle::complete(3, -1), oracle::complete(2, -1))).balanced);

  auto mixed = tensor(oracle::complete(3, -1), oracle::complete(3));
  auto at = [](Vertex i, Vertex j) { return PairIndex::from_pair(i, j, 3).flat; };
  const std::vector<Vertex> diag{at(0, 0), at(1, 1), at(2, 2)};
  CHECK(cycle_sign(mixed, diag) == Sign::negative());
}

TEST_CASE("strong examples") {
  auto k2 = oracle::complete(2);
  CHECK(strong(k2, k2) == oracle::complete(4));
  auto s = strong(oracle::complete(2, -1), oracle::complete(2, -1));
  CHECK(s.size() == 6);
  CHECK(is_balanced(s).balanced);
  CHECK_FALSE(is_antibalanced(s));
  int negatives = 0;
  for (const auto& e : s.edges()) negatives += e.sign.is_negative();
  CHECK(negatives == 4);
}

TEST_CASE("commutative products up to relabeling") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    auto a = oracle::random_graph(1 + rng() % 4, rng);
    auto b = oracle::random_graph(1 + rng() % 4, rng);
    for (auto kind : {ProductKind::cartesian, ProductKind::tensor, ProductKind::strong}) {
      CHECK(product(kind, b, a) == swapped_relabel(product(kind, a, b), a.order(), b.order()));
    }
  }
}

TEST_CASE("cartesian and strong fibers embed the factors") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 20; ++t) {
    auto a = oracle::random_graph(4, rng), b = oracle::random_graph(3, rng);
    for (auto kind : {ProductKind::cartesian, ProductKind::strong}) {
      auto p = product(kind, a, b);
      for (Vertex j = 0; j < 3; ++j)
        for (const Edge& e : a.edges())
          CHECK(p.sign_between(PairIndex::from_pair(e.u, j, 3).flat,
                               PairIndex::from_pair(e.v, j, 3).flat) == e.sign);
      for (Vertex i = 0; i < 4; ++i)
        for (const Edge& e : b.edges())
          CHECK(p.sign_between(PairIndex::from_pair(i, e.u, 3).flat,
                               PairIndex::from_pair(i, e.v, 3).flat) == e.sign);
    }
  }
}

TEST_CASE("hg_lex balance criterion") {
  for (const auto& base1 : {canonical_p3(), oracle::cycle(3), oracle::cycle(4)})
    for (const auto& base2 : {oracle::complete(2), canonical_p3()})
      for (const auto& a : oracle::all_signatures(base1))
        for (const auto& b : oracle::all_signatures(base2)) {
          const bool want = oracle::balanced(a) && b.all_positive();
          REQUIRE(is_balanced(hg_lex(a, b)).balanced == want);
        }
}

TEST_CASE("tensor balance criterion") {
  for (const auto& base1 : {canonical_p3(), oracle::cycle(3), oracle::cycle(4)})
    for (const auto& base2 : {oracle::complete(2), canonical_p3()})
      for (const auto& a : oracle::all_signatures(base1))
        for (const auto& b : oracle::all_signatures(base2)) {
          const bool want = (oracle::balanced(a) && oracle::balanced(b)) ||
                            (oracle::antibalanced(a) && oracle::antibalanced(b));
          REQUIRE(is_balanced(tensor(a, b)).balanced == want);
        }
}

TEST_CASE("balanced factors give balanced cartesian and strong products") {
  for (const auto& base1 : {canonical_p3(), oracle::cycle(3), oracle::cycle(4)})
    for (const auto& base2 : {oracle::complete(2), canonical_p3(), oracle::cycle(3)})
      for (const auto& a : oracle::all_signatures(base1))
        for (const auto& b : oracle::all_signatures(base2)) {
          if (!oracle::balanced(a) || !oracle::balanced(b)) continue;
          CHECK(is_balanced(cartesian(a, b)).balanced);
          CHECK(is_balanced(strong(a, b)).balanced);
        }
}

TEST_CASE("switching transport") {
  std::mt19937_64 rng(53);
  auto random_switch = [&](std::size_t n) {
    std::vector<Sign> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rng() & 1 ? Sign::negative() : Sign::positive());
    return ScalarSwitching(v);
  };
  for (int t = 0; t < 100; ++t) {
    auto a = oracle::random_graph(2 + rng() % 4, rng, 0.7);
    auto b = oracle::random_graph(2 + rng() % 4, rng, 0.7);
    auto a2 = apply_switching(a, random_switch(a.order()));
    auto b2 = apply_switching(b, random_switch(b.order()));
    CHECK(is_switching_equivalent(hg_lex(a2, b), hg_lex(a, b)));
    CHECK(is_switching_equivalent(bcd_lex(a2, b), bcd_lex(a, b)));
    CHECK(is_switching_equivalent(strong(a2, b2), strong(a, b)));
  }
}

TEST_CASE("antibalance transport") {
  for (const auto& base : {oracle::cycle(3), oracle::cycle(4)})
    for (const auto& a : oracle::all_signatures(base)) {
      if (!oracle::antibalanced(a)) continue;
      CHECK(is_antibalanced(hg_lex(a, oracle::complete(2, -1))));
      CHECK(is_antibalanced(hg_lex(a, oracle::path(3, -1))));
    }
}

TEST_CASE("edgeless factors") {
  auto n3 = generate({Family::null_graph, 3, {}});
  auto c3 = oracle::cycle(3);
  CHECK(tensor(n3, c3).size() == 0);
  CHECK(cartesian(n3, c3).size() == 9);
  CHECK(hg_lex(c3, n3).size() == 27);
}
