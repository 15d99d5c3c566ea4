#include "sgprod/verify.hpp"

#include <algorithm>
#include <atomic>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "sgprod/document.hpp"

namespace sgprod {

using nlohmann::json;

Budget BudgetOverrides::apply(Budget b) const {
  if (max_vertices) b.max_vertices = *max_vertices;
  if (max_k) b.max_k = *max_k;
  if (trials) b.trials = *trials;
  if (oracle_max_vertices) b.oracle_max_vertices = *oracle_max_vertices;
  if (oracle_max_k) b.oracle_max_k = *oracle_max_k;
  return b;
}

namespace {

json switching_json(const ScalarSwitching& z) {
  json arr = json::array();
  for (Sign s : z.values()) arr.push_back(s.value());
  return arr;
}

ScalarSwitching switching_from_json(const json& arr) {
  std::vector<Sign> values;
  for (const auto& x : arr) values.push_back(Sign::from_int(x.get<int>()));
  return ScalarSwitching(std::move(values));
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  json j;
  j["label"] = inst.label;
  j["g1"] = json::parse(serialize_graph({inst.g1, std::nullopt, std::nullopt}));
  if (inst.g2) j["g2"] = json::parse(serialize_graph({*inst.g2, std::nullopt, std::nullopt}));
  if (inst.zeta1) j["zeta1"] = switching_json(*inst.zeta1);
  if (inst.zeta2) j["zeta2"] = switching_json(*inst.zeta2);
  j["params"] = inst.params;
  return j.dump();
}

Instance parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed instance: ") + e.what());
  }
  if (!j.is_object() || !j.contains("g1")) throw DocumentError("instance needs a 'g1' graph");
  Instance inst;
  try {
    inst.label = j.value("label", "");
    inst.g1 = parse_graph(j.at("g1").dump()).graph;
    if (j.contains("g2")) inst.g2 = parse_graph(j.at("g2").dump()).graph;
    if (j.contains("zeta1")) inst.zeta1 = switching_from_json(j.at("zeta1"));
    if (j.contains("zeta2")) inst.zeta2 = switching_from_json(j.at("zeta2"));
    if (j.contains("params")) inst.params = j.at("params").get<std::map<std::string, long long>>();
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("malformed instance: ") + e.what());
  }
  return inst;
}

CheckContext::CheckContext(Budget budget, std::uint64_t seed, const std::string& claim_id)
    : budget_(budget) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(fnv1a(claim_id)),
                    static_cast<std::uint32_t>(fnv1a(claim_id) >> 32)};
  rng_.seed(seq);
}

const BdimResult& CheckContext::solve(const SignedGraph& g) {
  std::vector<long long> key{static_cast<long long>(g.order())};
  for (const Edge& e : g.edges()) {
    key.push_back(static_cast<long long>(e.u));
    key.push_back(static_cast<long long>(e.v));
    key.push_back(e.sign.value());
  }
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  if (g.order() > budget_.max_vertices) {
    throw SkipInstance("graph with " + std::to_string(g.order()) +
                       " vertices exceeds max_vertices");
  }
  BdimResult result;
  try {
    result = bdim_search(g, {budget_.max_k});
  } catch (const CapExceeded& e) {
    throw SkipInstance(e.what());
  }
  if (g.order() <= budget_.oracle_max_vertices && result.dimension <= budget_.oracle_max_k) {
    std::size_t oracle = 0;
    try {
      oracle = bdim_oracle(g, result.dimension);
    } catch (const CapExceeded&) {
      oracle = 0;
    }
    if (oracle != result.dimension) {
      throw std::logic_error("search gives " + std::to_string(result.dimension) +
                             " but the oracle disagrees");
    }
  }
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

std::size_t CheckContext::bdim(const SignedGraph& g) { return solve(g).dimension; }

const KSwitching& CheckContext::bdim_witness(const SignedGraph& g) { return solve(g).witness; }

std::string_view status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "?";
}

const Claim& find_claim(const std::string& id) {
  for (const Claim& c : claim_registry()) {
    if (c.id == id) return c;
  }
  throw UnknownClaim(id);
}

ClaimReport run_claim(const Claim& claim, std::uint64_t seed, const Budget& budget) {
  const auto start = std::chrono::steady_clock::now();
  ClaimReport report;
  report.id = claim.id;
  report.description = claim.description;
  report.family = claim.family;
  CheckContext ctx(budget, seed, claim.id);
  for (const Instance& inst : claim.instances(ctx)) {
    std::optional<std::string> failure;
    try {
      failure = claim.check(inst, ctx);
    } catch (const SkipInstance&) {
      ++report.instances_skipped;
      continue;
    } catch (const std::logic_error& e) {
      failure = std::string("internal inconsistency: ") + e.what();
    }
    ++report.instances_checked;
    if (failure) {
      report.status = ClaimStatus::fail;
      report.failure = inst.label + ": " + *failure;
      report.counterexample = serialize_instance(inst);
      break;
    }
  }
  if (report.status != ClaimStatus::fail) {
    report.status = report.instances_checked ? ClaimStatus::pass : ClaimStatus::skipped;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<ClaimReport> run_claims(const std::vector<std::string>& selection,
                                    std::uint64_t seed, const BudgetOverrides& overrides,
                                    unsigned jobs) {
  const Budget budget = overrides.apply(Budget{});
  if (!oracle_within_guard(budget.oracle_max_vertices, budget.oracle_max_k)) {
    throw BudgetError("oracle budget 3^(" + std::to_string(budget.oracle_max_vertices) + "*" +
                      std::to_string(budget.oracle_max_k) + ") exceeds the oracle guard");
  }
  if (budget.max_k < 1) throw BudgetError("max_k must be >= 1");

  const auto& registry = claim_registry();
  std::vector<const Claim*> chosen;
  const bool all = std::find(selection.begin(), selection.end(), "all") != selection.end();
  for (const auto& id : selection) {
    if (id != "all") find_claim(id);
  }
  for (const Claim& c : registry) {
    if (all || std::find(selection.begin(), selection.end(), c.id) != selection.end()) {
      chosen.push_back(&c);
    }
  }

  std::vector<ClaimReport> reports(chosen.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, chosen.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) {
      reports[i] = run_claim(*chosen[i], seed, budget);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return reports;
}

std::optional<std::string> recheck(const Claim& claim, std::string_view counterexample,
                                   std::uint64_t seed, const Budget& budget) {
  CheckContext ctx(budget, seed, claim.id);
  return claim.check(parse_instance(counterexample), ctx);
}

std::string report_text(const ClaimReport& r) {
  std::ostringstream out;
  out << r.id << " " << status_name(r.status) << "  checked=" << r.instances_checked
      << " skipped=" << r.instances_skipped << " elapsed=" << r.elapsed.count() << "ms  "
      << r.description;
  if (r.status == ClaimStatus::fail) {
    out << "\n    failure: " << r.failure << "\n    counterexample: " << *r.counterexample;
  }
  return out.str();
}

std::string report_json(const ClaimReport& r) {
  json j;
  j["id"] = r.id;
  j["status"] = status_name(r.status);
  j["description"] = r.description;
  j["family"] = r.family;
  j["instances_checked"] = r.instances_checked;
  j["instances_skipped"] = r.instances_skipped;
  j["elapsed_ms"] = r.elapsed.count();
  j["counterexample"] = r.counterexample ? json::parse(*r.counterexample) : json(nullptr);
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j.dump();
}

}  // namespace sgprod
