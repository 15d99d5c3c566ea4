#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgprod/bdim.hpp"
#include "sgprod/core.hpp"

namespace sgprod {

/// Size limits for one claim run.
struct Budget {
  /// Largest graph whose balancing dimension a check may compute.
  std::size_t max_vertices = 25;
  /// Search cap passed to bdim_search.
  std::size_t max_k = 8;
  /// Randomized trials for the sampled claims.
  std::size_t trials = 100;
  /// Results on graphs with at most this many vertices and dimension at most
  /// oracle_max_k are confirmed by the enumeration oracle.
  std::size_t oracle_max_vertices = 5;
  std::size_t oracle_max_k = 3;
};

struct BudgetOverrides {
  std::optional<std::size_t> max_vertices;
  std::optional<std::size_t> max_k;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> oracle_max_vertices;
  std::optional<std::size_t> oracle_max_k;

  Budget apply(Budget b) const;
};

class UnknownClaim : public std::invalid_argument {
 public:
  explicit UnknownClaim(const std::string& id)
      : std::invalid_argument("unknown claim id '" + id + "'") {}
};

class BudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One concrete instance a claim is checked on: up to two factors, optional
/// scalar switchings of them and integer parameters.
struct Instance {
  std::string label;
  SignedGraph g1;
  std::optional<SignedGraph> g2;
  std::optional<ScalarSwitching> zeta1;
  std::optional<ScalarSwitching> zeta2;
  std::map<std::string, long long> params;

  bool operator==(const Instance&) const = default;
};

/// JSON object with graph documents for the factors.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(std::string_view text);

/// Thrown by a check that cannot evaluate an instance within budget.
class SkipInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-run helpers shared by claim checks. Not thread-safe; each claim run
/// owns one.
class CheckContext {
 public:
  CheckContext(Budget budget, std::uint64_t seed, const std::string& claim_id);

  const Budget& budget() const { return budget_; }
  std::mt19937_64& rng() { return rng_; }

  /// Memoized bdim_search under the budget, confirmed by the oracle on
  /// small inputs. Throws SkipInstance when the graph is too large or the
  /// cap is hit, std::logic_error if search and oracle disagree.
  std::size_t bdim(const SignedGraph& g);
  /// Positive function at dimension bdim(g).
  const KSwitching& bdim_witness(const SignedGraph& g);

 private:
  const BdimResult& solve(const SignedGraph& g);

  Budget budget_;
  std::mt19937_64 rng_;
  std::map<std::vector<long long>, BdimResult> cache_;
};

using CheckFn = std::function<std::optional<std::string>(const Instance&, CheckContext&)>;
using InstanceFn = std::function<std::vector<Instance>(CheckContext&)>;

struct Claim {
  std::string id;
  std::string description;
  /// Which instances are checked and at what sizes.
  std::string family;
  InstanceFn instances;
  /// nullopt when the instance satisfies the claim, otherwise a reason.
  CheckFn check;
};

enum class ClaimStatus { pass, fail, skipped };
std::string_view status_name(ClaimStatus s);

struct ClaimReport {
  std::string id;
  std::string description;
  std::string family;
  ClaimStatus status = ClaimStatus::skipped;
  std::size_t instances_checked = 0;
  std::size_t instances_skipped = 0;
  /// Serialized Instance; present iff status == fail.
  std::optional<std::string> counterexample;
  std::string failure;
  std::chrono::milliseconds elapsed{0};
};

/// The claims C1..C19 in id order.
const std::vector<Claim>& claim_registry();
const Claim& find_claim(const std::string& id);

ClaimReport run_claim(const Claim& claim, std::uint64_t seed, const Budget& budget);

/// Runs the selected claims ("all" or ids) and returns reports in registry
/// order. Claims run on up to `jobs` threads; 0 picks the hardware count.
/// Throws UnknownClaim or BudgetError.
std::vector<ClaimReport> run_claims(const std::vector<std::string>& selection,
                                    std::uint64_t seed, const BudgetOverrides& overrides = {},
                                    unsigned jobs = 1);

/// Re-executes a claim's check on a serialized counterexample.
std::optional<std::string> recheck(const Claim& claim, std::string_view counterexample,
                                   std::uint64_t seed = 0, const Budget& budget = {});

std::string report_text(const ClaimReport& r);
std::string report_json(const ClaimReport& r);

}  // namespace sgprod
