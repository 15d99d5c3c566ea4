#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgprod {

using Vertex = std::size_t;

/// An edge label, always -1 or +1.
class Sign {
 public:
  constexpr Sign() = default;

  static constexpr Sign positive() { return Sign(1); }
  static constexpr Sign negative() { return Sign(-1); }
  /// Throws std::invalid_argument unless `v` is -1 or +1.
  static Sign from_int(int v);

  constexpr int value() const { return value_; }
  constexpr bool is_positive() const { return value_ > 0; }
  constexpr bool is_negative() const { return value_ < 0; }

  constexpr Sign operator-() const { return Sign(static_cast<std::int8_t>(-value_)); }
  constexpr Sign operator*(Sign other) const {
    return Sign(static_cast<std::int8_t>(value_ * other.value_));
  }
  constexpr bool operator==(const Sign&) const = default;

 private:
  constexpr explicit Sign(int v) : value_(static_cast<std::int8_t>(v)) {}
  std::int8_t value_ = 1;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Sign sign;

  bool operator==(const Edge&) const = default;
};

enum class GraphErrorKind { loop, duplicate_edge, vertex_out_of_range };

class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Simple undirected graph on vertices 0..n-1 with a sign on every edge.
///
/// Edges are stored normalized (u < v) and sorted lexicographically, so two
/// graphs compare equal exactly when they have the same vertex count, the
/// same edge set and the same signature. Instances are immutable.
class SignedGraph {
 public:
  struct Neighbor {
    Vertex to;
    Sign sign;
  };

  SignedGraph() = default;

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  /// Sign of the edge uv, or nullopt if u and v are not adjacent.
  std::optional<Sign> sign_between(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return sign_between(u, v).has_value(); }

  bool all_positive() const;
  bool all_negative() const;

  /// Same underlying graph, new signature; `signs` is indexed like edges().
  SignedGraph with_signs(std::span<const Sign> signs) const;

  /// True iff both graphs have the same order and the same unsigned edge set.
  bool same_underlying(const SignedGraph& other) const;

  bool operator==(const SignedGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  friend SignedGraph build_graph(std::size_t n, std::span<const Edge> edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Validates and normalizes an edge list. Throws GraphError on a loop, a
/// duplicate unordered pair or an out-of-range vertex id.
SignedGraph build_graph(std::size_t n, std::span<const Edge> edges);
SignedGraph build_graph(std::size_t n, std::initializer_list<Edge> edges);

/// Classical switching function: one sign per vertex.
class ScalarSwitching {
 public:
  ScalarSwitching() = default;
  explicit ScalarSwitching(std::vector<Sign> values) : values_(std::move(values)) {}
  static ScalarSwitching identity(std::size_t n) {
    return ScalarSwitching(std::vector<Sign>(n, Sign::positive()));
  }

  std::size_t size() const { return values_.size(); }
  Sign operator[](Vertex v) const { return values_.at(v); }
  const std::vector<Sign>& values() const { return values_; }

  bool operator==(const ScalarSwitching&) const = default;

 private:
  std::vector<Sign> values_;
};

enum class Family {
  all_positive_complete,
  all_negative_complete,
  antibalanced_complete,
  unbalanced_cycle,
  path,
  null_graph,
  signed_custom,
};

struct GeneratorSpec {
  Family kind = Family::null_graph;
  std::size_t order = 1;
  // signed_custom only.
  std::vector<Edge> edges;
};

/// Canonical representatives of the named families. Complete and
/// antibalanced-complete graphs are all-negative, unbalanced cycles carry
/// their single negative edge on (0,1), paths are all-positive.
SignedGraph generate(const GeneratorSpec& spec);

SignedGraph negate(const SignedGraph& g);

/// Product of edge signs along a closed vertex sequence. Throws
/// std::invalid_argument if the sequence is not a cycle of g.
Sign cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle);

/// sigma'(uv) = z(u) sigma(uv) z(v).
SignedGraph apply_switching(const SignedGraph& g, const ScalarSwitching& z);

struct BalanceResult {
  bool balanced = false;
  /// Present iff balanced; applying it makes g all-positive.
  std::optional<ScalarSwitching> witness;
};

BalanceResult is_balanced(const SignedGraph& g);
bool is_antibalanced(const SignedGraph& g);
bool is_switching_equivalent(const SignedGraph& g1, const SignedGraph& g2);

/// Connected components, each listed in BFS order from its smallest vertex
/// (neighbors visited by increasing id). Components are ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> bfs_components(const SignedGraph& g);

}  // namespace sgprod
