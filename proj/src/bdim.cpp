#include "sgprod/bdim.hpp"

#include <algorithm>
#include <string>

#include "sgprod/products.hpp"

namespace sgprod {

SwitchVector::SwitchVector(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
  for (auto e : entries_) {
    if (e < -1 || e > 1) {
      throw std::invalid_argument("switch vector entry out of {-1,0,1}: " + std::to_string(e));
    }
  }
}

SwitchVector::SwitchVector(std::initializer_list<int> entries) {
  entries_.reserve(entries.size());
  for (int e : entries) {
    if (e < -1 || e > 1) {
      throw std::invalid_argument("switch vector entry out of {-1,0,1}: " + std::to_string(e));
    }
    entries_.push_back(static_cast<std::int8_t>(e));
  }
}

SwitchVector SwitchVector::unit(std::size_t k) {
  std::vector<std::int8_t> e(k, 0);
  if (k > 0) e[0] = 1;
  return SwitchVector(std::move(e));
}

bool SwitchVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

SwitchVector SwitchVector::scaled(Sign s) const {
  auto e = entries_;
  for (auto& x : e) x = static_cast<std::int8_t>(x * s.value());
  return SwitchVector(std::move(e));
}

SwitchVector SwitchVector::padded(std::size_t k) const {
  if (k < entries_.size()) throw std::invalid_argument("cannot pad to a smaller dimension");
  auto e = entries_;
  e.resize(k, 0);
  return SwitchVector(std::move(e));
}

int inner_sign(const SwitchVector& a, const SwitchVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
  int dot = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) dot += a[i] * b[i];
  return (dot > 0) - (dot < 0);
}

KSwitching::KSwitching(std::size_t k, std::vector<SwitchVector> values)
    : k_(k), values_(std::move(values)) {
  for (const auto& v : values_) {
    if (v.dim() != k_) {
      throw std::invalid_argument("switch vector of dimension " + std::to_string(v.dim()) +
                                  " in a " + std::to_string(k_) + "-switching");
    }
  }
}

KSwitching KSwitching::from_scalar(const ScalarSwitching& z) {
  std::vector<SwitchVector> v;
  v.reserve(z.size());
  for (Sign s : z.values()) v.push_back(SwitchVector{s.value()});
  return KSwitching(1, std::move(v));
}

SignedGraph apply_k_switching(const SignedGraph& g, const KSwitching& z) {
  if (z.size() < g.order()) {
    throw std::invalid_argument("switching function does not cover vertex " +
                                std::to_string(z.size()));
  }
  std::vector<Sign> signs;
  signs.reserve(g.size());
  for (const Edge& e : g.edges()) {
    const int s = inner_sign(z[e.u], z[e.v]);
    if (s == 0) {
      throw InvalidSwitching(e, "orthogonal vectors on edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ")");
    }
    signs.push_back(e.sign * Sign::from_int(s));
  }
  return g.with_signs(signs);
}

bool is_k_positive(const SignedGraph& g, const KSwitching& z) {
  if (z.size() < g.order()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    if (z[e.u].dim() != z[e.v].dim()) return false;
    return inner_sign(z[e.u], z[e.v]) == e.sign.value();
  });
}

CapExceeded::CapExceeded(std::size_t max_k)
    : std::runtime_error("no positive function with k <= " + std::to_string(max_k)),
      max_k_(max_k) {}

OracleGuardExceeded::OracleGuardExceeded(std::size_t n, std::size_t k)
    : std::runtime_error("oracle guard exceeded: 3^(" + std::to_string(n) + "*" +
                         std::to_string(k) + ") > " + std::to_string(kOracleGuard)) {}

namespace {

std::uint64_t pow3(std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 3;
  return r;
}

// All vectors of {-1,0,1}^k in lexicographic order, flattened.
std::vector<std::int8_t> all_vectors(std::size_t k, bool include_zero) {
  const std::uint64_t count = pow3(k);
  std::vector<std::int8_t> out;
  out.reserve(count * k);
  std::vector<std::int8_t> digits(k, -1);
  for (std::uint64_t c = 0; c < count; ++c) {
    const bool zero = std::all_of(digits.begin(), digits.end(), [](auto d) { return d == 0; });
    if (include_zero || !zero) out.insert(out.end(), digits.begin(), digits.end());
    for (std::size_t i = k; i-- > 0;) {
      if (digits[i] < 1) {
        ++digits[i];
        break;
      }
      digits[i] = -1;
    }
  }
  return out;
}

// Inner-product signs between the vectors of one dimension.
class VectorTable {
 public:
  VectorTable(std::size_t k, bool include_zero)
      : k_(k), vecs_(all_vectors(k, include_zero)), count_(k ? vecs_.size() / k : 0) {
    if (k_ <= kMaxTabulated) {
      table_.resize(count_ * count_);
      for (std::size_t a = 0; a < count_; ++a)
        for (std::size_t b = a; b < count_; ++b)
          table_[a * count_ + b] = table_[b * count_ + a] = compute(a, b);
    }
  }

  std::size_t count() const { return count_; }
  std::size_t dim() const { return k_; }

  int sign(std::size_t a, std::size_t b) const {
    return table_.empty() ? compute(a, b) : table_[a * count_ + b];
  }

  SwitchVector vector(std::size_t a) const {
    return SwitchVector(std::vector<std::int8_t>(vecs_.begin() + a * k_,
                                                 vecs_.begin() + (a + 1) * k_));
  }

  std::size_t index_of(const std::vector<std::int8_t>& v) const {
    for (std::size_t a = 0; a < count_; ++a) {
      if (std::equal(v.begin(), v.end(), vecs_.begin() + a * k_)) return a;
    }
    throw std::logic_error("vector not in table");
  }

 private:
  static constexpr std::size_t kMaxTabulated = 7;

  std::int8_t compute(std::size_t a, std::size_t b) const {
    int dot = 0;
    const std::int8_t* va = vecs_.data() + a * k_;
    const std::int8_t* vb = vecs_.data() + b * k_;
    for (std::size_t i = 0; i < k_; ++i) dot += va[i] * vb[i];
    return static_cast<std::int8_t>((dot > 0) - (dot < 0));
  }

  std::size_t k_;
  std::vector<std::int8_t> vecs_;
  std::size_t count_;
  std::vector<std::int8_t> table_;
};

// Dynamic bitset over search positions, used for conflict sets.
class PositionSet {
 public:
  explicit PositionSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  void insert(std::size_t p) { words_[p / 64] |= std::uint64_t{1} << (p % 64); }
  void erase(std::size_t p) { words_[p / 64] &= ~(std::uint64_t{1} << (p % 64)); }
  void merge(const PositionSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }
  // Largest member, or nullopt if empty.
  std::optional<std::size_t> max() const {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i]) return i * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(words_[i]));
    }
    return std::nullopt;
  }

 private:
  std::vector<std::uint64_t> words_;
};

class ComponentSearch {
 public:
  ComponentSearch(const SignedGraph& g, const std::vector<Vertex>& order,
                  const VectorTable& table)
      : table_(table), order_(order), size_(order.size()) {
    std::vector<std::size_t> pos(g.order(), SIZE_MAX);
    for (std::size_t p = 0; p < size_; ++p) pos[order_[p]] = p;
    constraints_.resize(size_);
    for (std::size_t p = 0; p < size_; ++p) {
      for (const auto& nb : g.neighbors(order_[p])) {
        if (pos[nb.to] < p) {
          constraints_[p].push_back({pos[nb.to], static_cast<std::int8_t>(nb.sign.value())});
        }
      }
      std::sort(constraints_[p].begin(), constraints_[p].end(),
                [](const Constraint& a, const Constraint& b) { return a.pos < b.pos; });
    }
    const std::size_t k = table_.dim();
    for (std::size_t ones = 1; ones <= k; ++ones) {
      std::vector<std::int8_t> v(k, 0);
      std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(ones), 1);
      roots_.push_back(table_.index_of(v));
    }
    std::sort(roots_.begin(), roots_.end());
    compatible_.resize(table_.count() * 2);
    built_.assign(table_.count() * 2, false);
  }

  // Fills `assignment` (indexed by position) with vector indices.
  bool run(std::vector<std::size_t>& assignment, std::uint64_t& explored) {
    if (size_ == 1) {
      assignment.assign(1, roots_.front());
      ++explored;
      return true;
    }
    assignment.assign(size_, 0);
    std::vector<std::size_t> cursor(size_, 0);
    std::vector<PositionSet> conflicts(size_, PositionSet(size_));
    std::size_t p = 0;
    while (true) {
      const auto& domain = domain_for(p, assignment);
      bool placed = false;
      while (cursor[p] < domain.size()) {
        const std::size_t cand = domain[cursor[p]++];
        if (consistent(p, cand, assignment, conflicts[p])) {
          assignment[p] = cand;
          placed = true;
          break;
        }
      }
      if (placed) {
        ++explored;
        if (p + 1 == size_) return true;
        ++p;
        cursor[p] = 0;
        conflicts[p].clear();
        // The first constraint filters the domain; it always takes part in
        // any failure explanation at p.
        conflicts[p].insert(constraints_[p].front().pos);
        continue;
      }
      const auto jump = conflicts[p].max();
      if (!jump) return false;
      const std::size_t h = *jump;
      conflicts[p].erase(h);
      conflicts[h].merge(conflicts[p]);
      for (std::size_t r = h + 1; r <= p; ++r) {
        cursor[r] = 0;
        conflicts[r].clear();
      }
      p = h;
    }
  }

 private:
  struct Constraint {
    std::size_t pos;
    std::int8_t sign;
  };

  const std::vector<std::size_t>& domain_for(std::size_t p,
                                             const std::vector<std::size_t>& assignment) {
    if (p == 0) return roots_;
    const auto& first = constraints_[p].front();
    return compatible(assignment[first.pos], first.sign);
  }

  // Vectors b, in lexicographic order, with sgn<a, b> == sign.
  const std::vector<std::size_t>& compatible(std::size_t a, std::int8_t sign) {
    const std::size_t slot = a * 2 + (sign > 0 ? 1 : 0);
    if (!built_[slot]) {
      auto& list = compatible_[slot];
      for (std::size_t b = 0; b < table_.count(); ++b) {
        if (table_.sign(a, b) == sign) list.push_back(b);
      }
      built_[slot] = true;
    }
    return compatible_[slot];
  }

  bool consistent(std::size_t p, std::size_t cand, const std::vector<std::size_t>& assignment,
                  PositionSet& conflict) const {
    const auto& cs = constraints_[p];
    for (std::size_t c = 1; c < cs.size(); ++c) {
      if (table_.sign(assignment[cs[c].pos], cand) != cs[c].sign) {
        conflict.insert(cs[c].pos);
        return false;
      }
    }
    return true;
  }

  const VectorTable& table_;
  const std::vector<Vertex>& order_;
  std::size_t size_;
  std::vector<std::vector<Constraint>> constraints_;
  std::vector<std::size_t> roots_;
  std::vector<std::vector<std::size_t>> compatible_;
  std::vector<bool> built_;
};

}  // namespace

std::optional<KSwitching> find_k_positive(const SignedGraph& g, std::size_t k,
                                          std::uint64_t* explored) {
  if (k < 1) throw std::invalid_argument("dimension must be >= 1");
  std::uint64_t local = 0;
  std::uint64_t& count = explored ? *explored : local;
  const VectorTable table(k, false);
  std::vector<SwitchVector> values(g.order());
  std::vector<std::size_t> assignment;
  for (const auto& comp : bfs_components(g)) {
    ComponentSearch search(g, comp, table);
    if (!search.run(assignment, count)) return std::nullopt;
    for (std::size_t p = 0; p < comp.size(); ++p) values[comp[p]] = table.vector(assignment[p]);
  }
  return KSwitching(k, std::move(values));
}

BdimResult bdim_search(const SignedGraph& g, SearchOptions options) {
  const std::size_t max_k =
      options.max_k ? options.max_k : std::max<std::size_t>(1, g.order());
  BdimResult result;
  auto balance = is_balanced(g);
  if (balance.balanced) {
    result.dimension = 1;
    result.witness = KSwitching::from_scalar(*balance.witness);
    result.explored = g.order();
    return result;
  }
  for (std::size_t k = 2; k <= max_k; ++k) {
    if (auto w = find_k_positive(g, k, &result.explored)) {
      result.dimension = k;
      result.witness = std::move(*w);
      return result;
    }
  }
  throw CapExceeded(max_k);
}

bool oracle_within_guard(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n * k; ++i) {
    r *= 3;
    if (r > kOracleGuard) return false;
  }
  return true;
}

bool oracle_has_positive(const SignedGraph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (!oracle_within_guard(n, k)) throw OracleGuardExceeded(n, k);
  if (n == 0) return true;
  const VectorTable table(k, true);
  const std::size_t count = table.count();
  std::vector<std::size_t> z(n, 0);
  const auto& edges = g.edges();
  while (true) {
    bool ok = true;
    for (const Edge& e : edges) {
      if (table.sign(z[e.u], z[e.v]) != e.sign.value()) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = n;
    while (i-- > 0) {
      if (++z[i] < count) break;
      z[i] = 0;
    }
    if (i == SIZE_MAX) return false;
  }
}

std::size_t bdim_oracle(const SignedGraph& g, std::size_t max_k) {
  for (std::size_t k = 1; k <= max_k; ++k) {
    if (oracle_has_positive(g, k)) return k;
  }
  throw CapExceeded(max_k);
}

namespace {

using Cell = std::vector<int>;

KSwitching expand_table(std::size_t m, std::size_t n, std::size_t k,
                        const std::vector<std::vector<Cell>>& cells,
                        std::size_t (*row_class)(std::size_t, std::size_t),
                        std::size_t (*col_class)(std::size_t, std::size_t)) {
  std::vector<SwitchVector> values;
  values.reserve(m * n);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const Cell& c = cells[row_class(i, m)][col_class(j, n)];
      std::vector<std::int8_t> e(c.begin(), c.end());
      values.emplace_back(std::move(e));
    }
  }
  return KSwitching(k, std::move(values));
}

// Classes "1", "2", "3..size-1", "size".
std::size_t four_classes(std::size_t i, std::size_t size) {
  if (i == 1) return 0;
  if (i == 2) return 1;
  if (i == size) return 3;
  return 2;
}

// Classes "1", "2..size-1", "size".
std::size_t three_classes(std::size_t i, std::size_t size) {
  if (i == 1) return 0;
  if (i == size) return 2;
  return 1;
}

const std::vector<std::vector<Cell>>& two_dim_cycle_table() {
  static const std::vector<std::vector<Cell>> t = {
      {{-1, 1}, {1, 0}, {1, 1}, {0, 1}},
      {{1, 0}, {-1, -1}, {0, -1}, {1, -1}},
      {{1, 1}, {0, -1}, {1, -1}, {1, 0}},
      {{0, 1}, {1, -1}, {1, 0}, {1, 1}},
  };
  return t;
}

// Tables 2-4 share their cell values; only the class ranges differ.
const std::vector<std::vector<Cell>>& three_dim_cycle_table() {
  static const std::vector<std::vector<Cell>> t = {
      {{-1, -1, 1}, {1, -1, -1}, {-1, -1, -1}},
      {{1, -1, -1}, {1, 1, 1}, {1, 0, 0}},
      {{-1, -1, -1}, {1, 0, 0}, {1, -1, -1}},
  };
  return t;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

KSwitching table_witness(int table_id, std::size_t m, std::size_t n,
                         const std::optional<KSwitching>& base) {
  switch (table_id) {
    case 1:
      require(m > 3 && n > 3, "table 1 needs m, n > 3");
      return expand_table(m, n, 2, two_dim_cycle_table(), four_classes, four_classes);
    case 2:
      require(m == 3 && n > 3, "table 2 needs m = 3, n > 3");
      return expand_table(m, n, 3, three_dim_cycle_table(), three_classes, three_classes);
    case 3:
      require(m > 3 && n == 3, "table 3 needs m > 3, n = 3");
      return expand_table(m, n, 3, three_dim_cycle_table(), three_classes, three_classes);
    case 4:
      require(m == 3 && n == 3, "table 4 needs m = n = 3");
      return expand_table(m, n, 3, three_dim_cycle_table(), three_classes, three_classes);
    case 5: {
      require(n >= 1 && m >= n, "table 5 needs m >= n >= 1");
      require(base.has_value(), "table 5 needs a positive function for K_m^-");
      require(base->size() == m, "table 5 base must have one vector per vertex of K_m^-");
      require(is_k_positive(generate({Family::all_negative_complete, m, {}}), *base),
              "table 5 base is not a positive function for K_m^-");
      std::vector<SwitchVector> values;
      values.reserve(m * n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) values.push_back((*base)[(i + j) % m]);
      return KSwitching(base->dim(), std::move(values));
    }
    default:
      throw std::invalid_argument("no table " + std::to_string(table_id));
  }
}

SignedGraph table_product(int table_id, std::size_t m, std::size_t n) {
  const Family f = table_id == 5 ? Family::all_negative_complete : Family::unbalanced_cycle;
  if (table_id < 1 || table_id > 5) throw std::invalid_argument("no table " + std::to_string(table_id));
  return cartesian(generate({f, m, {}}), generate({f, n, {}}));
}

KnownBdim::KnownBdim() {
  entries_[3] = {3, Provenance::quoted};
  entries_[4] = {3, Provenance::quoted};
}

std::optional<std::size_t> KnownBdim::lookup(std::size_t n) const {
  auto it = entries_.find(n);
  if (it == entries_.end()) return std::nullopt;
  return it->second.first;
}

std::optional<Provenance> KnownBdim::provenance(std::size_t n) const {
  auto it = entries_.find(n);
  if (it == entries_.end()) return std::nullopt;
  return it->second.second;
}

std::size_t KnownBdim::antibalanced_complete(std::size_t n) {
  if (auto v = lookup(n)) return *v;
  const SignedGraph g = generate({Family::all_negative_complete, n, {}});
  // The dimension can exceed n (7 for n = 6), so the cap is loosened.
  const std::size_t d = bdim_search(g, {3 * n}).dimension;
  if (oracle_within_guard(n, d) && bdim_oracle(g, d) != d) {
    throw std::logic_error("search and oracle disagree on K_" + std::to_string(n) + "^-");
  }
  entries_[n] = {d, Provenance::computed};
  return d;
}

}  // namespace sgprod
