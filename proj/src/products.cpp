#include "sgprod/products.hpp"

#include <string>

namespace sgprod {

namespace {

// Optional sign of the factor-1 and factor-2 relation between two product
// vertices; nullopt when the coordinates are non-adjacent (or equal).
using SignRule = std::optional<Sign> (*)(std::optional<Sign> s1, bool same1,
                                         std::optional<Sign> s2, bool same2);

SignedGraph build_product(const SignedGraph& g1, const SignedGraph& g2, SignRule rule) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  const std::size_t total = n1 * n2;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < total; ++a) {
    const auto pa = PairIndex::from_flat(a, n2);
    for (Vertex b = a + 1; b < total; ++b) {
      const auto pb = PairIndex::from_flat(b, n2);
      const bool same1 = pa.i == pb.i;
      const bool same2 = pa.j == pb.j;
      auto s = rule(same1 ? std::nullopt : g1.sign_between(pa.i, pb.i), same1,
                    same2 ? std::nullopt : g2.sign_between(pa.j, pb.j), same2);
      if (s) edges.push_back({a, b, *s});
    }
  }
  return build_graph(total, edges);
}

std::optional<Sign> cartesian_rule(std::optional<Sign> s1, bool same1,
                                   std::optional<Sign> s2, bool same2) {
  if (same2 && s1) return s1;
  if (same1 && s2) return s2;
  return std::nullopt;
}

std::optional<Sign> hg_lex_rule(std::optional<Sign> s1, bool same1,
                                std::optional<Sign> s2, bool) {
  if (s1) return s1;
  if (same1 && s2) return s2;
  return std::nullopt;
}

std::optional<Sign> bcd_lex_rule(std::optional<Sign> s1, bool same1,
                                 std::optional<Sign> s2, bool) {
  if (s1 && s2) return *s1 * *s2;
  if (s1) return s1;
  if (same1 && s2) return s2;
  return std::nullopt;
}

std::optional<Sign> tensor_rule(std::optional<Sign> s1, bool, std::optional<Sign> s2,
                                bool) {
  if (s1 && s2) return *s1 * *s2;
  return std::nullopt;
}

std::optional<Sign> strong_rule(std::optional<Sign> s1, bool same1,
                                std::optional<Sign> s2, bool same2) {
  if (s1 && s2) return *s1 * *s2;
  if (s1 && same2) return s1;
  if (same1 && s2) return s2;
  return std::nullopt;
}

}  // namespace

ProductKind parse_product_kind(std::string_view name) {
  std::string key(name);
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  if (key == "cartesian") return ProductKind::cartesian;
  if (key == "hg-lex") return ProductKind::hg_lex;
  if (key == "bcd-lex") return ProductKind::bcd_lex;
  if (key == "tensor") return ProductKind::tensor;
  if (key == "strong") return ProductKind::strong;
  throw std::invalid_argument("unknown product kind '" + std::string(name) + "'");
}

std::string_view product_kind_name(ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::hg_lex: return "hg-lex";
    case ProductKind::bcd_lex: return "bcd-lex";
    case ProductKind::tensor: return "tensor";
    case ProductKind::strong: return "strong";
  }
  return "?";
}

SignedGraph cartesian(const SignedGraph& g1, const SignedGraph& g2) {
  return build_product(g1, g2, cartesian_rule);
}

SignedGraph hg_lex(const SignedGraph& g1, const SignedGraph& g2) {
  return build_product(g1, g2, hg_lex_rule);
}

SignedGraph bcd_lex(const SignedGraph& g1, const SignedGraph& g2) {
  return build_product(g1, g2, bcd_lex_rule);
}

SignedGraph tensor(const SignedGraph& g1, const SignedGraph& g2) {
  return build_product(g1, g2, tensor_rule);
}

SignedGraph strong(const SignedGraph& g1, const SignedGraph& g2) {
  return build_product(g1, g2, strong_rule);
}

SignedGraph product(ProductKind kind, const SignedGraph& g1, const SignedGraph& g2) {
  switch (kind) {
    case ProductKind::cartesian: return cartesian(g1, g2);
    case ProductKind::hg_lex: return hg_lex(g1, g2);
    case ProductKind::bcd_lex: return bcd_lex(g1, g2);
    case ProductKind::tensor: return tensor(g1, g2);
    case ProductKind::strong: return strong(g1, g2);
  }
  throw std::invalid_argument("unknown product kind");
}

}  // namespace sgprod
