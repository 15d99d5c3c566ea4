#include "sgprod/core.hpp"

#include <algorithm>
#include <string>

namespace sgprod {

Sign Sign::from_int(int v) {
  if (v != 1 && v != -1) {
    throw std::invalid_argument("sign must be -1 or 1, got " + std::to_string(v));
  }
  return Sign(v);
}

std::optional<Sign> SignedGraph::sign_between(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return std::nullopt;
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& nb, Vertex x) { return nb.to < x; });
  if (it == adj.end() || it->to != v) return std::nullopt;
  return it->sign;
}

bool SignedGraph::all_positive() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.sign.is_positive(); });
}

bool SignedGraph::all_negative() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.sign.is_negative(); });
}

SignedGraph SignedGraph::with_signs(std::span<const Sign> signs) const {
  if (signs.size() != edges_.size()) {
    throw std::invalid_argument("signature length does not match edge count");
  }
  std::vector<Edge> edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].sign = signs[i];
  return build_graph(n_, edges);
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
  }
  return true;
}

SignedGraph build_graph(std::size_t n, std::span<const Edge> edges) {
  SignedGraph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError(GraphErrorKind::vertex_out_of_range,
                       "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") references a vertex >= " + std::to_string(n));
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrorKind::loop, "loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v), e.sign});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v) {
      throw GraphError(GraphErrorKind::duplicate_edge,
                       "duplicate edge (" + std::to_string(g.edges_[i].u) + "," +
                           std::to_string(g.edges_[i].v) + ")");
    }
  }
  g.adjacency_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back({e.v, e.sign});
    g.adjacency_[e.v].push_back({e.u, e.sign});
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end(),
              [](const SignedGraph::Neighbor& a, const SignedGraph::Neighbor& b) {
                return a.to < b.to;
              });
  }
  return g;
}

SignedGraph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

SignedGraph generate(const GeneratorSpec& spec) {
  const std::size_t n = spec.order;
  if (n < 1) throw std::invalid_argument("generator order must be >= 1");
  std::vector<Edge> edges;
  switch (spec.kind) {
    case Family::all_positive_complete:
    case Family::all_negative_complete:
    case Family::antibalanced_complete: {
      const Sign s = spec.kind == Family::all_positive_complete ? Sign::positive()
                                                                 : Sign::negative();
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, s});
      break;
    }
    case Family::unbalanced_cycle:
      if (n < 3) throw std::invalid_argument("unbalanced cycle needs order >= 3");
      for (Vertex u = 0; u < n; ++u) {
        edges.push_back({u, (u + 1) % n, u == 0 ? Sign::negative() : Sign::positive()});
      }
      break;
    case Family::path:
      for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, Sign::positive()});
      break;
    case Family::null_graph:
      break;
    case Family::signed_custom:
      edges = spec.edges;
      break;
  }
  return build_graph(n, edges);
}

SignedGraph negate(const SignedGraph& g) {
  std::vector<Sign> signs;
  signs.reserve(g.size());
  for (const Edge& e : g.edges()) signs.push_back(-e.sign);
  return g.with_signs(signs);
}

Sign cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Vertex> seen(cycle.begin(), cycle.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("cycle repeats a vertex");
  }
  Sign product = Sign::positive();
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    auto s = g.sign_between(a, b);
    if (!s) {
      throw std::invalid_argument("vertices " + std::to_string(a) + " and " +
                                  std::to_string(b) + " are not adjacent");
    }
    product = product * *s;
  }
  return product;
}

SignedGraph apply_switching(const SignedGraph& g, const ScalarSwitching& z) {
  if (z.size() < g.order()) {
    throw std::invalid_argument("switching function does not cover vertex " +
                                std::to_string(z.size()));
  }
  std::vector<Sign> signs;
  signs.reserve(g.size());
  for (const Edge& e : g.edges()) signs.push_back(z[e.u] * e.sign * z[e.v]);
  return g.with_signs(signs);
}

std::vector<std::vector<Vertex>> bfs_components(const SignedGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const auto& nb : g.neighbors(comp[head])) {
        if (!seen[nb.to]) {
          seen[nb.to] = true;
          comp.push_back(nb.to);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

BalanceResult is_balanced(const SignedGraph& g) {
  // Propagate signs along a BFS spanning forest, then verify every edge.
  std::vector<Sign> z(g.order());
  std::vector<bool> placed(g.order(), false);
  for (const auto& comp : bfs_components(g)) {
    z[comp.front()] = Sign::positive();
    placed[comp.front()] = true;
    for (Vertex u : comp) {
      for (const auto& nb : g.neighbors(u)) {
        if (!placed[nb.to]) {
          z[nb.to] = z[u] * nb.sign;
          placed[nb.to] = true;
        }
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if ((z[e.u] * e.sign * z[e.v]).is_negative()) return {false, std::nullopt};
  }
  return {true, ScalarSwitching(std::move(z))};
}

bool is_antibalanced(const SignedGraph& g) { return is_balanced(negate(g)).balanced; }

bool is_switching_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
  if (!g1.same_underlying(g2)) return false;
  std::vector<Sign> product;
  product.reserve(g1.size());
  for (std::size_t i = 0; i < g1.size(); ++i) {
    product.push_back(g1.edges()[i].sign * g2.edges()[i].sign);
  }
  return is_balanced(g1.with_signs(product)).balanced;
}

}  // namespace sgprod
