#include <algorithm>
#include <sstream>

#include "sgprod/bdim.hpp"
#include "sgprod/products.hpp"
#include "sgprod/verify.hpp"

namespace sgprod {

namespace {

using Check = std::optional<std::string>;
using Named = std::pair<std::string, SignedGraph>;

SignedGraph complete(std::size_t n, Sign s = Sign::positive()) {
  auto g = generate({Family::all_positive_complete, n, {}});
  return s.is_positive() ? g : negate(g);
}

SignedGraph path(std::size_t n) { return generate({Family::path, n, {}}); }

SignedGraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n, Sign::positive()});
  return build_graph(n, edges);
}

SignedGraph unbalanced_cycle(std::size_t n) { return generate({Family::unbalanced_cycle, n, {}}); }

SignedGraph null_graph(std::size_t k) { return generate({Family::null_graph, k, {}}); }

// Every signature of the underlying graph of `base`; bit i of the label mask
// set means edge i (in edge order) is negative.
std::vector<Named> signatures(const std::string& name, const SignedGraph& base) {
  std::vector<Named> out;
  const std::size_t m = base.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Sign> signs(m);
    for (std::size_t i = 0; i < m; ++i) {
      signs[i] = (mask >> i) & 1 ? Sign::negative() : Sign::positive();
    }
    out.emplace_back(name + "#" + std::to_string(mask), base.with_signs(signs));
  }
  return out;
}

template <typename Pred>
std::vector<Named> filtered(std::vector<Named> in, Pred pred) {
  std::erase_if(in, [&](const Named& x) { return !pred(x.second); });
  return in;
}

template <typename Pred>
std::vector<Named> signatures_where(const std::string& name, const SignedGraph& base, Pred p) {
  return filtered(signatures(name, base), p);
}

std::vector<Named> concat(std::initializer_list<std::vector<Named>> parts) {
  std::vector<Named> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Seeded sample of `count` signatures of `base` (with repetition).
std::vector<Named> sampled_signatures(const std::string& name, const SignedGraph& base,
                                      std::size_t count, std::mt19937_64& rng) {
  std::vector<Named> out;
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << base.size()) - 1);
  for (std::size_t t = 0; t < count; ++t) {
    const auto mask = dist(rng);
    std::vector<Sign> signs(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      signs[i] = (mask >> i) & 1 ? Sign::negative() : Sign::positive();
    }
    out.emplace_back(name + "#" + std::to_string(mask), base.with_signs(signs));
  }
  return out;
}

ScalarSwitching random_switching(std::size_t n, std::mt19937_64& rng) {
  std::vector<Sign> v(n);
  for (auto& s : v) s = (rng() & 1) ? Sign::negative() : Sign::positive();
  return ScalarSwitching(std::move(v));
}

// Order in [lo, hi], each pair adjacent with probability 1/2, random signs.
SignedGraph random_graph(std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> order(lo, hi);
  const std::size_t n = order(rng);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() & 1) edges.push_back({u, v, (rng() & 1) ? Sign::negative() : Sign::positive()});
  return build_graph(n, edges);
}

Instance make(const std::string& label, SignedGraph g1, std::optional<SignedGraph> g2 = {}) {
  Instance inst;
  inst.label = label;
  inst.g1 = std::move(g1);
  inst.g2 = std::move(g2);
  return inst;
}

std::vector<Instance> pairs(const std::vector<Named>& left, const std::vector<Named>& right,
                            const std::string& op) {
  std::vector<Instance> out;
  for (const auto& [n1, g1] : left)
    for (const auto& [n2, g2] : right) out.push_back(make(n1 + " " + op + " " + n2, g1, g2));
  return out;
}

std::string str(std::size_t v) { return std::to_string(v); }

bool balanced(const SignedGraph& g) { return is_balanced(g).balanced; }

// zeta(i, j) = z1(i) * z2(j).
KSwitching lift(const KSwitching& z1, const ScalarSwitching& z2) {
  std::vector<SwitchVector> v;
  for (const auto& a : z1.values())
    for (Sign s : z2.values()) v.push_back(a.scaled(s));
  return KSwitching(z1.dim(), std::move(v));
}

// zeta(i, j) = z1(i) * z2(j) with the scalar switching on the first factor.
KSwitching lift_mirror(const ScalarSwitching& z1, const KSwitching& z2) {
  std::vector<SwitchVector> v;
  for (Sign s : z1.values())
    for (const auto& b : z2.values()) v.push_back(b.scaled(s));
  return KSwitching(z2.dim(), std::move(v));
}

// zeta(i, j) = z(i).
KSwitching lift_first(const KSwitching& z, std::size_t n2) {
  std::vector<SwitchVector> v;
  for (const auto& a : z.values())
    for (std::size_t j = 0; j < n2; ++j) v.push_back(a);
  return KSwitching(z.dim(), std::move(v));
}

// zeta(i, j) = z(j).
KSwitching lift_second(std::size_t n1, const KSwitching& z) {
  std::vector<SwitchVector> v;
  for (std::size_t i = 0; i < n1; ++i)
    for (const auto& b : z.values()) v.push_back(b);
  return KSwitching(z.dim(), std::move(v));
}

// eta(i, j) = z(i) or z(j) as scalar switchings of a product.
ScalarSwitching lift_scalar_first(const ScalarSwitching& z, std::size_t n2) {
  std::vector<Sign> v;
  for (Sign s : z.values())
    for (std::size_t j = 0; j < n2; ++j) v.push_back(s);
  return ScalarSwitching(std::move(v));
}

ScalarSwitching lift_scalar_second(std::size_t n1, const ScalarSwitching& z) {
  std::vector<Sign> v;
  for (std::size_t i = 0; i < n1; ++i)
    for (Sign s : z.values()) v.push_back(s);
  return ScalarSwitching(std::move(v));
}

std::string mismatch(const std::string& what, std::size_t got, std::size_t want) {
  return what + " = " + str(got) + ", expected " + str(want);
}

// Shared body of the "bdim(product) = bdim(factor) when the other factor is
// balanced" theorems (Cartesian and strong), including the product witness
// z1(i) z2(j) used to prove the upper bound.
Check balanced_factor_bdim(ProductKind kind, const Instance& inst, CheckContext& ctx) {
  const auto& g1 = inst.g1;
  const auto& g2 = *inst.g2;
  const auto p = product(kind, g1, g2);
  const auto b1 = is_balanced(g1);
  const auto b2 = is_balanced(g2);
  if (b1.balanced && b2.balanced && !balanced(p)) return "both factors balanced, product not";
  const std::size_t d = ctx.bdim(p);
  if (b2.balanced) {
    const std::size_t d1 = ctx.bdim(g1);
    if (d != d1) return mismatch("bdim(product)", d, d1);
    if (!is_k_positive(p, lift(ctx.bdim_witness(g1), *b2.witness))) {
      return std::string("lifted witness z1(i)z2(j) is not positive");
    }
  }
  if (b1.balanced) {
    const std::size_t d2 = ctx.bdim(g2);
    if (d != d2) return mismatch("bdim(product)", d, d2);
    if (!is_k_positive(p, lift_mirror(*b1.witness, ctx.bdim_witness(g2)))) {
      return std::string("lifted witness z1(i)z2(j) is not positive");
    }
  }
  return std::nullopt;
}

// Unbalanced factors for the balanced-factor theorems.
std::vector<Named> unbalanced_family(CheckContext& ctx) {
  return concat({
      signatures_where("C3", cycle(3), [](const SignedGraph& g) { return !balanced(g); }),
      signatures_where("C4", cycle(4), [](const SignedGraph& g) { return !balanced(g); }),
      {{"-K3", complete(3, Sign::negative())}, {"K4^-", complete(4, Sign::negative())}},
      filtered(sampled_signatures("K4", complete(4), 6, ctx.rng()),
               [](const SignedGraph& g) { return !balanced(g); }),
  });
}

std::vector<Named> balanced_family() {
  return concat({
      signatures("K2", complete(2)),
      signatures("P3", path(3)),
      signatures_where("C4", cycle(4), balanced),
  });
}

std::vector<Instance> both_orders(const std::vector<Named>& a, const std::vector<Named>& b,
                                  const std::string& op) {
  auto out = pairs(a, b, op);
  auto rev = pairs(b, a, op);
  out.insert(out.end(), rev.begin(), rev.end());
  return out;
}

// Random factor pairs with switchings for the transport theorems.
std::vector<Instance> transport_instances(CheckContext& ctx, bool both) {
  std::vector<Instance> out;
  for (std::size_t t = 0; t < ctx.budget().trials; ++t) {
    auto inst = make("trial " + str(t), random_graph(2, 4, ctx.rng()), random_graph(2, 4, ctx.rng()));
    inst.zeta1 = random_switching(inst.g1.order(), ctx.rng());
    if (both) inst.zeta2 = random_switching(inst.g2->order(), ctx.rng());
    out.push_back(std::move(inst));
  }
  return out;
}

Check transport(ProductKind kind, const Instance& inst) {
  const auto& g1 = inst.g1;
  const auto& g2 = *inst.g2;
  const auto g1s = apply_switching(g1, *inst.zeta1);
  const auto g2s = inst.zeta2 ? apply_switching(g2, *inst.zeta2) : g2;
  const auto before = product(kind, g1, g2);
  const auto after = product(kind, g1s, g2s);
  if (!is_switching_equivalent(before, after)) return std::string("products not switching equivalent");
  // The explicit switching eta(i,j) = z1(i) z2(j) realizes the equivalence.
  auto eta = lift_scalar_first(*inst.zeta1, g2.order());
  if (inst.zeta2) {
    const auto second = lift_scalar_second(g1.order(), *inst.zeta2);
    std::vector<Sign> v;
    for (std::size_t x = 0; x < eta.size(); ++x) v.push_back(eta[x] * second[x]);
    eta = ScalarSwitching(std::move(v));
  }
  if (apply_switching(before, eta) != after) return std::string("lifted switching does not map the products");
  return std::nullopt;
}

std::vector<Claim> build_registry() {
  std::vector<Claim> claims;

  claims.push_back(Claim{
      "C1",
      "Cartesian product: bdim equals the other factor's bdim when one factor is balanced",
      "unbalanced {C3, C4 signatures, -K3, K4^-, 6 sampled K4 signatures} x balanced {K2, P3, "
      "balanced C4 signatures}, both orders",
      [](CheckContext& ctx) { return both_orders(unbalanced_family(ctx), balanced_family(), "[]"); },
      [](const Instance& inst, CheckContext& ctx) {
        return balanced_factor_bdim(ProductKind::cartesian, inst, ctx);
      }});

  claims.push_back(Claim{
      "C2",
      "bdim(C_m^- [] C_n^-) = 2 if m,n > 3, else 3; tabulated witnesses are positive",
      "canonical unbalanced cycles, m, n in {3, 4, 5}",
      [](CheckContext&) {
        std::vector<Instance> out;
        for (std::size_t m = 3; m <= 5; ++m)
          for (std::size_t n = 3; n <= 5; ++n)
            out.push_back(make("C" + str(m) + "^- [] C" + str(n) + "^-", unbalanced_cycle(m),
                               unbalanced_cycle(n)));
        return out;
      },
      [](const Instance& inst, CheckContext& ctx) -> Check {
        const std::size_t m = inst.g1.order();
        const std::size_t n = inst.g2->order();
        const auto p = cartesian(inst.g1, *inst.g2);
        const std::size_t want = (m > 3 && n > 3) ? 2 : 3;
        const std::size_t d = ctx.bdim(p);
        if (d != want) return mismatch("bdim", d, want);
        if (inst.g1 == unbalanced_cycle(m) && *inst.g2 == unbalanced_cycle(n)) {
          const int table = m > 3 && n > 3 ? 1 : m == 3 && n > 3 ? 2 : m > 3 ? 3 : 4;
          const auto w = table_witness(table, m, n);
          if (w.dim() != want || !is_k_positive(p, w)) {
            return "table " + std::to_string(table) + " witness is not positive";
          }
        }
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C3",
      "bdim(K_m^- [] K_n^-) = bdim(K_max(m,n)^-); the cyclic witness is positive",
      "all-negative complete graphs, m, n in {2, 3, 4}",
      [](CheckContext&) {
        std::vector<Instance> out;
        for (std::size_t m = 2; m <= 4; ++m)
          for (std::size_t n = 2; n <= 4; ++n)
            out.push_back(make("K" + str(m) + "^- [] K" + str(n) + "^-",
                               complete(m, Sign::negative()), complete(n, Sign::negative())));
        return out;
      },
      [](const Instance& inst, CheckContext& ctx) -> Check {
        if (!is_antibalanced(inst.g1) || !is_antibalanced(*inst.g2)) {
          return std::string("factors must be antibalanced complete graphs");
        }
        const std::size_t m = inst.g1.order();
        const std::size_t n = inst.g2->order();
        const auto p = cartesian(inst.g1, *inst.g2);
        const auto big = complete(std::max(m, n), Sign::negative());
        const std::size_t want = ctx.bdim(big);
        const std::size_t d = ctx.bdim(p);
        if (d != want) return mismatch("bdim", d, want);
        if (m >= n && inst.g1.all_negative() && inst.g2->all_negative()) {
          const auto w = table_witness(5, m, n, ctx.bdim_witness(big));
          if (!is_k_positive(p, w)) return std::string("table 5 witness is not positive");
        }
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C4",
      "bdim(S [] K_n^-) = bdim(K_n^-) for antibalanced S on n vertices",
      "antibalanced signatures of K2, P3, C3, P4, C4, K4",
      [](CheckContext&) {
        auto ab = [](const SignedGraph& g) { return is_antibalanced(g); };
        std::vector<Instance> out;
        for (const auto& [name, g] :
             concat({signatures_where("K2", complete(2), ab), signatures_where("P3", path(3), ab),
                     signatures_where("C3", cycle(3), ab), signatures_where("P4", path(4), ab),
                     signatures_where("C4", cycle(4), ab),
                     signatures_where("K4", complete(4), ab)})) {
          const std::size_t n = g.order();
          out.push_back(make(name + " [] K" + str(n) + "^-", g, complete(n, Sign::negative())));
        }
        return out;
      },
      [](const Instance& inst, CheckContext& ctx) -> Check {
        const std::size_t d = ctx.bdim(cartesian(inst.g1, *inst.g2));
        const std::size_t want = ctx.bdim(*inst.g2);
        if (d != want) return mismatch("bdim", d, want);
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C5",
      "HG-lexicographic product is balanced iff S1 is balanced and S2 is all-positive",
      "all signature pairs of {K2, P3, C3, C4} [ {K2, P3} ]",
      [](CheckContext&) {
        auto left = concat({signatures("K2", complete(2)), signatures("P3", path(3)),
                            signatures("C3", cycle(3)), signatures("C4", cycle(4))});
        auto right = concat({signatures("K2", complete(2)), signatures("P3", path(3))});
        return pairs(left, right, "[.]");
      },
      [](const Instance& inst, CheckContext&) -> Check {
        const bool lhs = balanced(hg_lex(inst.g1, *inst.g2));
        const bool rhs = balanced(inst.g1) && inst.g2->all_positive();
        if (lhs != rhs) {
          return std::string("product balanced = ") + (lhs ? "true" : "false") +
                 ", criterion = " + (rhs ? "true" : "false");
        }
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C6",
      "bdim(S1[S2]) >= 3 when S2 has a negative edge (S1 with at least one edge)",
      "signatures of {K2, P3} [ signatures of {K2, P3, C3} with a negative edge ]",
      [](CheckContext&) {
        auto neg = [](const SignedGraph& g) { return !g.all_positive(); };
        auto left = concat({signatures("K2", complete(2)), signatures("P3", path(3))});
        auto right = concat({signatures_where("K2", complete(2), neg),
                             signatures_where("P3", path(3), neg),
                             signatures_where("C3", cycle(3), neg)});
        return pairs(left, right, "[.]");
      },
      [](const Instance& inst, CheckContext& ctx) -> Check {
        const std::size_t d = ctx.bdim(hg_lex(inst.g1, *inst.g2));
        if (d < 3) return "bdim = " + str(d) + " < 3";
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C7",
      "bdim(N_k[S]) = bdim(S[N_k]) = bdim(S)",
      "S in {C3^-, C4^-, C5^-, -K3, K4^-, P3 signatures, 4 sampled K4 signatures}, k in {1,2,3}",
      [](CheckContext& ctx) {
        auto family = concat({{{"C3^-", unbalanced_cycle(3)},
                               {"C4^-", unbalanced_cycle(4)},
                               {"C5^-", unbalanced_cycle(5)},
                               {"-K3", complete(3, Sign::negative())},
                               {"K4^-", complete(4, Sign::negative())}},
                              signatures("P3", path(3)),
                              sampled_signatures("K4", complete(4), 4, ctx.rng())});
        std::vector<Instance> out;
        for (const auto& [name, g] : family)
          for (std::size_t k = 1; k <= 3; ++k)
            out.push_back(make("N" + str(k) + " / " + name, g, null_graph(k)));
        return out;
      },
      [](const Instance& inst, CheckContext& ctx) -> Check {
        const std::size_t want = ctx.bdim(inst.g1);
        const std::size_t left = ctx.bdim(hg_lex(*inst.g2, inst.g1));
        const std::size_t right = ctx.bdim(hg_lex(inst.g1, *inst.g2));
        if (left != want) return mismatch("bdim(N_k[S])", left, want);
        if (right != want) return mismatch("bdim(S[N_k])", right, want);
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C8",
      "S1 ~ S1' implies S1[S2] ~ S1'[S2]",
      "random factors of order 2..4 (edge probability 1/2, random signs), random switching of S1",
      [](CheckContext& ctx) { return transport_instances(ctx, false); },
      [](const Instance& inst, CheckContext&) { return transport(ProductKind::hg_lex, inst); }});

  claims.push_back(Claim{
      "C9",
      "S1 antibalanced and S2 all-negative imply S1[S2] antibalanced",
      "antibalanced signatures of {C3, C4, K4} [ {-K2, -P3, -K3} ]",
      [](CheckContext&) {
        auto ab = [](const SignedGraph& g) { return is_antibalanced(g); };
        auto left = concat({signatures_where("C3", cycle(3), ab),
                            signatures_where("C4", cycle(4), ab),
                            signatures_where("K4", complete(4), ab)});
        std::vector<Named> right = {{"-K2", complete(2, Sign::negative())},
                                    {"-P3", negate(path(3))},
                                    {"-K3", complete(3, Sign::negative())}};
        return pairs(left, right, "[.]");
      },
      [](const Instance& inst, CheckContext&) -> Check {
        if (!is_antibalanced(hg_lex(inst.g1, *inst.g2))) return std::string("product not antibalanced");
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C10",
      "bdim(K_m^-[-K_n]) = bdim(K_mn^-)",
      "m, n in {2, 3, 4} with switched antibalanced K_m; bdim compared directly when mn <= 6, "
      "otherwise the product is checked to be switching equivalent to the all-negative K_mn",
      [](CheckContext& ctx) {
        std::vector<Instance> out;
        for (std::size_t m = 2; m <= 4; ++m) {
          for (std::size_t n = 2; n <= 4; ++n) {
            const auto base = complete(m, Sign::negative());
            out.push_back(make("K" + str(m) + "^-[-K" + str(n) + "]", base,
                               complete(n, Sign::negative())));
            for (int t = 0; t < 2; ++t) {
              out.push_back(make("switched K" + str(m) + "^-[-K" + str(n) + "]",
                                 apply_switching(base, random_switching(m, ctx.rng())),
                                 complete(n, Sign::negative())));
            }
          }
        }
        return out;
      },
      [](const Instance& inst, CheckContext& ctx) -> Check {
        const std::size_t mn = inst.g1.order() * inst.g2->order();
        const auto p = hg_lex(inst.g1, *inst.g2);
        const auto target = complete(mn, Sign::negative());
        if (!p.same_underlying(target)) return std::string("product is not complete");
        if (!is_switching_equivalent(p, target)) return std::string("product is not antibalanced");
        if (mn <= 6) {
          const std::size_t d = ctx.bdim(p);
          const std::size_t want = ctx.bdim(target);
          if (d != want) return mismatch("bdim", d, want);
        }
        return std::nullopt;
      }});

  auto positive_second = [](CheckContext& ctx) {
    auto left = concat({signatures("P3", path(3)), signatures("C3", cycle(3)),
                        signatures("C4", cycle(4)),
                        sampled_signatures("K4", complete(4), 6, ctx.rng())});
    std::vector<Named> right = {{"+K2", complete(2)}, {"+P3", path(3)}, {"+K3", complete(3)},
                                {"N2", null_graph(2)}};
    return pairs(left, right, "o");
  };

  claims.push_back(Claim{
      "C11",
      "S2 all-positive implies bdim(S1[S2]) = bdim(S1)",
      "signatures of {P3, C3, C4}, 6 sampled K4 signatures [ {+K2, +P3, +K3, N2} ]",
      positive_second,
      [](const Instance& inst, CheckContext& ctx) -> Check {
        const auto p = hg_lex(inst.g1, *inst.g2);
        const std::size_t d = ctx.bdim(p);
        const std::size_t want = ctx.bdim(inst.g1);
        if (d != want) return mismatch("bdim", d, want);
        if (!is_k_positive(p, lift_first(ctx.bdim_witness(inst.g1), inst.g2->order()))) {
          return std::string("lifted witness z1(i) is not positive");
        }
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C12",
      "S1 ~ S1' implies S1*S2 ~ S1'*S2",
      "random factors of order 2..4 (edge probability 1/2, random signs), random switching of S1",
      [](CheckContext& ctx) { return transport_instances(ctx, false); },
      [](const Instance& inst, CheckContext&) { return transport(ProductKind::bcd_lex, inst); }});

  claims.push_back(Claim{
      "C13",
      "S2 all-positive implies bdim(S1*S2) = bdim(S1)",
      "signatures of {P3, C3, C4}, 6 sampled K4 signatures * {+K2, +P3, +K3, N2}",
      positive_second,
      [](const Instance& inst, CheckContext& ctx) -> Check {
        const auto p = bcd_lex(inst.g1, *inst.g2);
        const std::size_t d = ctx.bdim(p);
        const std::size_t want = ctx.bdim(inst.g1);
        if (d != want) return mismatch("bdim", d, want);
        if (!is_k_positive(p, lift_first(ctx.bdim_witness(inst.g1), inst.g2->order()))) {
          return std::string("lifted witness z1(i) is not positive");
        }
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C14",
      "S1 balanced and S2 a signed complete graph imply bdim(S1*S2) = bdim(S2)",
      "balanced signatures of {K2, P3, C3, C4} * {all K2 and K3 signatures, 8 sampled K4 "
      "signatures}",
      [](CheckContext& ctx) {
        auto left = concat({signatures("K2", complete(2)), signatures("P3", path(3)),
                            signatures_where("C3", cycle(3), balanced),
                            signatures_where("C4", cycle(4), balanced)});
        auto right = concat({signatures("K2", complete(2)), signatures("K3", complete(3)),
                             sampled_signatures("K4", complete(4), 8, ctx.rng())});
        return pairs(left, right, "*");
      },
      [](const Instance& inst, CheckContext& ctx) -> Check {
        const auto p = bcd_lex(inst.g1, *inst.g2);
        const std::size_t d = ctx.bdim(p);
        const std::size_t want = ctx.bdim(*inst.g2);
        if (d != want) return mismatch("bdim", d, want);
        // After switching S1 to all-positive, z(i,j) = z2(j) is positive.
        const auto eta = lift_scalar_first(*is_balanced(inst.g1).witness, inst.g2->order());
        if (!is_k_positive(apply_switching(p, eta),
                           lift_second(inst.g1.order(), ctx.bdim_witness(*inst.g2)))) {
          return std::string("lifted witness z2(j) is not positive");
        }
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C15",
      "tensor product of connected factors of order >= 2 is balanced iff both are balanced or "
      "both antibalanced",
      "all signature pairs of {K2, P3, C3, C4}",
      [](CheckContext&) {
        auto fam = concat({signatures("K2", complete(2)), signatures("P3", path(3)),
                           signatures("C3", cycle(3)), signatures("C4", cycle(4))});
        return pairs(fam, fam, "x");
      },
      [](const Instance& inst, CheckContext&) -> Check {
        const bool lhs = balanced(tensor(inst.g1, *inst.g2));
        const bool rhs = (balanced(inst.g1) && balanced(*inst.g2)) ||
                         (is_antibalanced(inst.g1) && is_antibalanced(*inst.g2));
        if (lhs != rhs) {
          return std::string("product balanced = ") + (lhs ? "true" : "false") +
                 ", criterion = " + (rhs ? "true" : "false");
        }
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C16",
      "bdim(S1 x S2) <= bdim(S1) when S2 is balanced (and symmetrically); strict and equality "
      "instances exist",
      "unbalanced {C3, C4 signatures, -K3, K4^-, 6 sampled K4 signatures} x balanced {K2, P3, "
      "balanced C4 signatures}, both orders; -K3 x -K2 (strict), -K3 x +K3 (equality)",
      [](CheckContext& ctx) {
        auto out = both_orders(unbalanced_family(ctx), balanced_family(), "x");
        auto strict = make("-K3 x -K2 (strict)", complete(3, Sign::negative()),
                           complete(2, Sign::negative()));
        strict.params["expect_bdim"] = 1;
        auto equal = make("-K3 x +K3 (equality)", complete(3, Sign::negative()), complete(3));
        equal.params["expect_bdim"] = 3;
        out.push_back(strict);
        out.push_back(equal);
        return out;
      },
      [](const Instance& inst, CheckContext& ctx) -> Check {
        const auto p = tensor(inst.g1, *inst.g2);
        const std::size_t d = ctx.bdim(p);
        const auto b1 = is_balanced(inst.g1);
        const auto b2 = is_balanced(*inst.g2);
        if (b2.balanced) {
          const std::size_t d1 = ctx.bdim(inst.g1);
          if (d > d1) return "bdim(product) = " + str(d) + " > bdim(S1) = " + str(d1);
          if (!is_k_positive(p, lift(ctx.bdim_witness(inst.g1), *b2.witness))) {
            return std::string("lifted witness z1(i)z2(j) is not positive");
          }
        }
        if (b1.balanced) {
          const std::size_t d2 = ctx.bdim(*inst.g2);
          if (d > d2) return "bdim(product) = " + str(d) + " > bdim(S2) = " + str(d2);
        }
        if (auto it = inst.params.find("expect_bdim"); it != inst.params.end()) {
          if (d != static_cast<std::size_t>(it->second)) {
            return mismatch("bdim", d, static_cast<std::size_t>(it->second));
          }
          const std::size_t d1 = ctx.bdim(inst.g1);
          if (it->second == 1 && !(d < d1)) return std::string("expected strict inequality");
          if (it->second == 3 && d != d1) return std::string("expected equality with bdim(S1)");
        }
        return std::nullopt;
      }});

  claims.push_back(Claim{
      "C17",
      "S1 ~ S1' and S2 ~ S2' imply S1 (x) S2 ~ S1' (x) S2' for the strong product",
      "random factors of order 2..4 (edge probability 1/2, random signs), random switchings of "
      "both factors",
      [](CheckContext& ctx) { return transport_instances(ctx, true); },
      [](const Instance& inst, CheckContext&) { return transport(ProductKind::strong, inst); }});

  claims.push_back(Claim{
      "C18",
      "strong product: bdim equals the other factor's bdim when one factor is balanced; "
      "balanced factors give a balanced product",
      "unbalanced {C3, C4 signatures, -K3, K4^-, 6 sampled K4 signatures} (x) balanced {K2, P3, "
      "balanced C4 signatures}, both orders; balanced x balanced pairs",
      [](CheckContext& ctx) {
        auto out = both_orders(unbalanced_family(ctx), balanced_family(), "(x)");
        auto bb = pairs(balanced_family(), balanced_family(), "(x)");
        out.insert(out.end(), bb.begin(), bb.end());
        return out;
      },
      [](const Instance& inst, CheckContext& ctx) {
        return balanced_factor_bdim(ProductKind::strong, inst, ctx);
      }});

  claims.push_back(Claim{
      "C19",
      "worked examples: +K2[-K2] is K4^- with bdim 3; -K3 x -K2 balanced; -K3 x +K3 has a "
      "negative triangle; -K2 (x) -K2 balanced, not antibalanced; lexicographic "
      "non-commutativity; P3 * -K2 not antibalanced",
      "the six fixed instances named in the description",
      [](CheckContext&) {
        std::vector<Instance> out;
        auto add = [&](const std::string& label, SignedGraph g1, SignedGraph g2, int which) {
          auto inst = make(label, std::move(g1), std::move(g2));
          inst.params["case"] = which;
          out.push_back(std::move(inst));
        };
        add("+K2[-K2]", complete(2), complete(2, Sign::negative()), 1);
        add("-K3 x -K2", complete(3, Sign::negative()), complete(2, Sign::negative()), 2);
        add("-K3 x +K3", complete(3, Sign::negative()), complete(3), 3);
        add("-K2 (x) -K2", complete(2, Sign::negative()), complete(2, Sign::negative()), 4);
        add("balanced triangle vs +K2",
            build_graph(3, {{0, 1, Sign::negative()}, {1, 2, Sign::negative()},
                            {0, 2, Sign::positive()}}),
            complete(2), 5);
        add("P3 * -K2", build_graph(3, {{0, 1, Sign::negative()}, {1, 2, Sign::positive()}}),
            complete(2, Sign::negative()), 6);
        return out;
      },
      [](const Instance& inst, CheckContext& ctx) -> Check {
        const auto& g1 = inst.g1;
        const auto& g2 = *inst.g2;
        switch (inst.params.at("case")) {
          case 1: {
            const auto p = hg_lex(g1, g2);
            const auto k4 = complete(4, Sign::negative());
            if (!p.same_underlying(k4) || !is_antibalanced(p)) {
              return std::string("+K2[-K2] is not the antibalanced K4");
            }
            if (ctx.bdim(p) != 3) return mismatch("bdim(+K2[-K2])", ctx.bdim(p), 3);
            if (ctx.bdim(g2) == 3) return std::string("bdim(-K2) should differ from 3");
            if (ctx.bdim(bcd_lex(g1, g2)) != ctx.bdim(g2)) {
              return std::string("BCD counterpart should keep bdim(S2)");
            }
            return std::nullopt;
          }
          case 2: {
            const auto p = tensor(g1, g2);
            if (!balanced(p)) return std::string("-K3 x -K2 is not balanced");
            if (ctx.bdim(p) != 1) return mismatch("bdim(-K3 x -K2)", ctx.bdim(p), 1);
            if (ctx.bdim(g1) != 3) return mismatch("bdim(-K3)", ctx.bdim(g1), 3);
            return std::nullopt;
          }
          case 3: {
            const auto p = tensor(g1, g2);
            const std::vector<Vertex> tri{0 * 3 + 0, 1 * 3 + 1, 2 * 3 + 2};
            if (cycle_sign(p, tri) != Sign::negative()) {
              return std::string("(u1,v1)(u2,v2)(u3,v3) is not a negative triangle");
            }
            if (ctx.bdim(p) != ctx.bdim(g1)) return mismatch("bdim", ctx.bdim(p), ctx.bdim(g1));
            return std::nullopt;
          }
          case 4: {
            const auto p = strong(g1, g2);
            if (!balanced(p)) return std::string("-K2 (x) -K2 is not balanced");
            if (is_antibalanced(p)) return std::string("-K2 (x) -K2 should not be antibalanced");
            if (!is_antibalanced(g1) || !is_antibalanced(g2)) {
              return std::string("factors should be antibalanced");
            }
            return std::nullopt;
          }
          case 5: {
            if (!balanced(g1)) return std::string("S1 should be balanced");
            const std::size_t ab = ctx.bdim(hg_lex(g1, g2));
            const std::size_t ba = ctx.bdim(hg_lex(g2, g1));
            if (ab != 1) return mismatch("bdim(S1[S2])", ab, 1);
            if (ba < 3) return "bdim(S2[S1]) = " + str(ba) + " < 3";
            return std::nullopt;
          }
          case 6: {
            if (!is_antibalanced(g1) || !g2.all_negative()) {
              return std::string("factors should be antibalanced / all-negative");
            }
            const auto p = bcd_lex(g1, g2);
            if (is_antibalanced(p)) return std::string("P3 * -K2 should not be antibalanced");
            const std::vector<Vertex> tri{0 * 2 + 0, 1 * 2 + 0, 1 * 2 + 1};
            if (cycle_sign(negate(p), tri) != Sign::negative()) {
              return std::string("named triangle is not negative in -(S1*S2)");
            }
            return std::nullopt;
          }
          default:
            return std::string("unknown case");
        }
      }});

  return claims;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

}  // namespace sgprod
