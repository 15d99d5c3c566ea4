#pragma once

#include <string_view>

#include "sgprod/core.hpp"

namespace sgprod {

enum class ProductKind { cartesian, hg_lex, bcd_lex, tensor, strong };

/// Parses "cartesian", "hg-lex", "bcd-lex", "tensor" or "strong"
/// (underscores accepted). Throws std::invalid_argument otherwise.
ProductKind parse_product_kind(std::string_view name);
std::string_view product_kind_name(ProductKind kind);

/// Vertex (i, j) of a product, i from the first factor and j from the second.
/// Product vertices are numbered flat = i * n2 + j.
struct PairIndex {
  Vertex i = 0;
  Vertex j = 0;
  Vertex flat = 0;

  static PairIndex from_pair(Vertex i, Vertex j, std::size_t n2) { return {i, j, i * n2 + j}; }
  static PairIndex from_flat(Vertex flat, std::size_t n2) { return {flat / n2, flat % n2, flat}; }
};

// (i,j)~(k,l) iff j=l and i~k, or i=k and j~l. Sign comes from the factor
// the edge moves in.
SignedGraph cartesian(const SignedGraph& g1, const SignedGraph& g2);

// (i,j)~(k,l) iff i~k, or i=k and j~l. Sign s1(ik) across fibers, s2(jl)
// inside a fiber.
SignedGraph hg_lex(const SignedGraph& g1, const SignedGraph& g2);

// Lexicographic edge set; sign s1(ik) if i~k and j,l non-adjacent (j=l
// included), s1(ik)s2(jl) if i~k and j~l, s2(jl) if i=k.
SignedGraph bcd_lex(const SignedGraph& g1, const SignedGraph& g2);

// (i,j)~(k,l) iff i~k and j~l, sign s1(ik)s2(jl).
SignedGraph tensor(const SignedGraph& g1, const SignedGraph& g2);

// Union of the Cartesian and tensor edge sets with their signs.
SignedGraph strong(const SignedGraph& g1, const SignedGraph& g2);

SignedGraph product(ProductKind kind, const SignedGraph& g1, const SignedGraph& g2);

}  // namespace sgprod
