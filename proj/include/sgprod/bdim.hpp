#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgprod/core.hpp"

namespace sgprod {

/// A vector in {-1, 0, 1}^k.
class SwitchVector {
 public:
  SwitchVector() = default;
  /// Throws std::invalid_argument if any entry is outside {-1, 0, 1}.
  explicit SwitchVector(std::vector<std::int8_t> entries);
  SwitchVector(std::initializer_list<int> entries);

  /// (1, 0, ..., 0).
  static SwitchVector unit(std::size_t k);

  std::size_t dim() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<std::int8_t>& entries() const { return entries_; }
  bool is_zero() const;

  /// Entrywise product with a scalar sign.
  SwitchVector scaled(Sign s) const;
  /// Extends with trailing zeros up to dimension k (k >= dim()).
  SwitchVector padded(std::size_t k) const;

  bool operator==(const SwitchVector&) const = default;
  /// Lexicographic with -1 < 0 < +1.
  auto operator<=>(const SwitchVector&) const = default;

 private:
  std::vector<std::int8_t> entries_;
};

/// Sign of the standard inner product. Throws std::invalid_argument on a
/// dimension mismatch.
int inner_sign(const SwitchVector& a, const SwitchVector& b);

/// Vector-valued switching: one k-dimensional vector per vertex.
class KSwitching {
 public:
  KSwitching() = default;
  /// Throws std::invalid_argument if the vectors do not all have dimension k.
  KSwitching(std::size_t k, std::vector<SwitchVector> values);

  /// Lifts a scalar switching to k = 1.
  static KSwitching from_scalar(const ScalarSwitching& z);

  std::size_t dim() const { return k_; }
  std::size_t size() const { return values_.size(); }
  const SwitchVector& operator[](Vertex v) const { return values_.at(v); }
  const std::vector<SwitchVector>& values() const { return values_; }

  bool operator==(const KSwitching&) const = default;

 private:
  std::size_t k_ = 0;
  std::vector<SwitchVector> values_;
};

/// Thrown when a vector switching has orthogonal endpoint vectors on an edge.
class InvalidSwitching : public std::invalid_argument {
 public:
  InvalidSwitching(Edge edge, const std::string& what)
      : std::invalid_argument(what), edge_(edge) {}
  const Edge& edge() const { return edge_; }

 private:
  Edge edge_;
};

/// sigma'(uv) = sigma(uv) * sgn<z(u), z(v)>. Throws InvalidSwitching naming
/// the first edge (in edge order) whose endpoint vectors are orthogonal, and
/// std::invalid_argument if z does not cover every vertex.
SignedGraph apply_k_switching(const SignedGraph& g, const KSwitching& z);

/// True iff z is a valid switching for g that makes every edge positive.
bool is_k_positive(const SignedGraph& g, const KSwitching& z);

/// Raised by bdim_search when no positive function exists up to the cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t max_k);
  std::size_t max_k() const { return max_k_; }

 private:
  std::size_t max_k_;
};

/// Raised by the enumeration oracle when 3^(n*k) exceeds its guard.
class OracleGuardExceeded : public std::runtime_error {
 public:
  OracleGuardExceeded(std::size_t n, std::size_t k);
};

struct BdimResult {
  std::size_t dimension = 1;
  KSwitching witness;
  /// Number of consistent partial assignments made by the search.
  std::uint64_t explored = 0;
};

struct SearchOptions {
  /// 0 means "use the vertex count" (at least 1).
  std::size_t max_k = 0;
};

/// Exact balancing dimension by iterative deepening over k.
///
/// k = 1 is decided by is_balanced. For k >= 2 every connected component is
/// searched independently: vertices are assigned in BFS order, candidates are
/// the nonzero vectors of {-1,0,1}^k in lexicographic order, and a candidate
/// is rejected as soon as it leaves an edge to an already assigned vertex
/// negative. The first vertex of a component only takes the canonical forms
/// (1,..,1,0,..,0); coordinate permutations and per-coordinate sign flips
/// preserve every inner-product sign, so this loses no solutions. Dead ends
/// are unwound with conflict-directed backjumping, which only skips subtrees
/// without solutions, so the witness is the first one chronological
/// backtracking would find. Isolated vertices get (1,0,..,0).
///
/// Throws CapExceeded if no k <= max_k works.
BdimResult bdim_search(const SignedGraph& g, SearchOptions options = {});

/// Search restricted to a single dimension; nullopt if no k-positive
/// function exists. Uses the same ordering as bdim_search.
std::optional<KSwitching> find_k_positive(const SignedGraph& g, std::size_t k,
                                          std::uint64_t* explored = nullptr);

/// Largest value of 3^(n*k) the oracle is willing to enumerate.
inline constexpr std::uint64_t kOracleGuard = 100'000'000;

/// True iff 3^(n*k) <= kOracleGuard.
bool oracle_within_guard(std::size_t n, std::size_t k);

/// Plain enumeration of every map V -> {-1,0,1}^k. Throws
/// OracleGuardExceeded if the instance is too large.
bool oracle_has_positive(const SignedGraph& g, std::size_t k);

/// Least k <= max_k with a positive function, found by oracle_has_positive
/// for k = 1, 2, ... Throws CapExceeded or OracleGuardExceeded.
std::size_t bdim_oracle(const SignedGraph& g, std::size_t max_k);

/// Witness assignments for the tabulated products. Vertex (u_i, v_j) is
/// flat index (i-1)*n + (j-1) of the Cartesian product of the canonical
/// factors from generate().
///
///   1: C_m^- x C_n^-, m,n > 3, k = 2
///   2: C_3^- x C_n^-, n > 3,   k = 3
///   3: C_m^- x C_3^-, m > 3,   k = 3
///   4: C_3^- x C_3^-,          k = 3
///   5: K_m^- x K_n^-, m >= n,  cyclic shift of a positive function `base`
///      for the all-negative K_m: (u_i, v_j) -> base(u_{(i+j-2) mod m + 1}).
///
/// Throws std::invalid_argument on a parameter/table mismatch.
KSwitching table_witness(int table_id, std::size_t m, std::size_t n,
                         const std::optional<KSwitching>& base = std::nullopt);

/// The Cartesian product a table witness applies to.
SignedGraph table_product(int table_id, std::size_t m, std::size_t n);

enum class Provenance { quoted, computed };

/// Balancing dimensions of all-negative complete graphs. Seeded with the two
/// quoted values (n = 3, 4); other entries are added only after computing
/// them with bdim_search and confirming with the oracle when it fits.
class KnownBdim {
 public:
  KnownBdim();

  std::optional<std::size_t> lookup(std::size_t n) const;
  std::optional<Provenance> provenance(std::size_t n) const;

  /// Returns the stored value or computes, checks and records it.
  std::size_t antibalanced_complete(std::size_t n);

 private:
  std::map<std::size_t, std::pair<std::size_t, Provenance>> entries_;
};

}  // namespace sgprod
