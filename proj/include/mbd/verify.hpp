#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mbd/graph.hpp"
#include "mbd/solver.hpp"

namespace mbd {

enum class VerifyStatus {
    Pass,
    Fail,
    Unknown,        // resource limit hit; the claim is neither confirmed nor refuted
    NotApplicable,  // a hypothesis of the statement does not hold for the instance
};

std::string to_string(VerifyStatus s);
VerifyStatus verify_status_from_string(const std::string& text);

// One checked instance of one statement. `predicted` describes what the
// statement asserts for the instance, `computed` what the solver found.
// For NotApplicable, `computed` names the failed hypothesis.
struct VerificationReport {
    std::string theorem_id;
    std::string g_graph6;
    std::string h_graph6;  // empty for single-graph checks
    std::string predicted;
    std::string computed;
    VerifyStatus status = VerifyStatus::Unknown;
    std::int64_t elapsed_ms = 0;

    // Sort key for deterministic suite output.
    std::string instance_key() const;

    std::string to_json() const;
    static VerificationReport from_json(const std::string& text);

    static std::string csv_header();
    std::string to_csv_row() const;

    std::string to_text() const;
};

struct VerifyLimits {
    std::uint64_t node_limit = 200'000'000;
    std::size_t table_memory_mb = 256;
    int max_order = 26;
};

// Statement checks on one instance. Resource exhaustion yields status
// Unknown, never an exception.

// All four identities for K1 (.) H: mb = 1, mb' = mb(H), smb = inf,
// smb' = smb(H).
VerificationReport verify_k1_corona(const Graph& h, const VerifyLimits& limits = {});

// o(G (.) H) is D when o(H) is D or N, and S when o(H) is S.
// Requires g connected with order >= 2.
VerificationReport verify_outcome(const Graph& g, const Graph& h,
                                  const VerifyLimits& limits = {});

// When o(H) = S: smb(G (.) H) = smb'(G (.) H) = 1 + smb(H).
// Requires g connected with order >= 2.
VerificationReport verify_smb_formula(const Graph& g, const Graph& h,
                                      const VerifyLimits& limits = {});

// When o(H) = D and g is connected with order >= 2, interval bounds on
// mb and mb' of the product; exact equalities when mb(H) = mb'(H).
VerificationReport verify_bounds_d(const Graph& g, const Graph& h,
                                   const VerifyLimits& limits = {});

// For a tree T with a perfect matching and any g of order >= 2:
// mb = ceil(n/2) + floor(n/2) * n(T)/2 and mb' with floor/ceil swapped.
VerificationReport verify_tree_pm(const Graph& g, const Graph& t,
                                  const VerifyLimits& limits = {});

// When o(H) = N and order(g) >= 2, interval bounds on mb and mb' of the
// product; exact equalities when mb(H) = gamma(H). The source statement
// allows any g; for disconnected g the check is recorded without a
// Pass/Fail verdict (status NotApplicable, values still reported).
VerificationReport verify_bounds_n(const Graph& g, const Graph& h,
                                   const VerifyLimits& limits = {});

// mb(K2 (.) H) = 1 + mb(H), tested under both published hypothesis
// readings: "o(H) = D" as stated, and "o(H) = N" as the proof uses.
// Returns one report per reading.
std::vector<VerificationReport> verify_k2_corona(const Graph& h,
                                                 const VerifyLimits& limits = {});

// The four small-value characterizations of corona products, each checked
// as a biconditional: mb = mb' = 2, smb = smb' = 2, smb = smb' = 3, mb = 3.
// Requires order(g) >= 2.
VerificationReport verify_small_values(const Graph& g, const Graph& h,
                                       const VerifyLimits& limits = {});

// Property checks on one graph.

// Exactly one player wins each of the D-game and S-game.
VerificationReport verify_no_draw(const Graph& g, const VerifyLimits& limits = {});

// Finite smb' is at most ceil(n/2); finite smb is at most floor(n/2).
VerificationReport verify_staller_bounds(const Graph& g, const VerifyLimits& limits = {});

// mb <= mb' and smb >= smb', with infinity as the top element.
VerificationReport verify_ordering(const Graph& g, const VerifyLimits& limits = {});

// Monotonicity under predomination: B subset of A implies value(G|A) <=
// value(G|B) for the Dominator count, both first players. Exhaustive over
// all nested pairs up to order 5, otherwise `samples` seeded random pairs.
VerificationReport verify_continuation(const Graph& g, int samples, unsigned seed,
                                       const VerifyLimits& limits = {});

// Allowing the non-counted player to pass never changes the value, for
// all four objective/first-player combinations.
VerificationReport verify_no_skip(const Graph& g, const VerifyLimits& limits = {});

// Suite driver.

struct SuiteOptions {
    VerifyLimits limits{};
    int continuation_samples = 500;
    unsigned seed = 1;
    unsigned workers = 0;  // 0 = hardware concurrency
};

struct SuiteSummary {
    int pass = 0;
    int fail = 0;
    int unknown = 0;
    int not_applicable = 0;
    int total() const { return pass + fail + unknown + not_applicable; }
};

// Selector names: outcome, smb-formula, bounds-d, bounds-n, tree-pm,
// small-values (pair corpus); k1-corona, k2-corona, no-draw,
// staller-bounds, ordering, continuation, no-skip (single corpus); all.
bool selector_uses_pairs(const std::string& selector);
const std::vector<std::string>& all_selectors();

std::vector<VerificationReport> run_suite(const std::string& selector,
                                          const std::vector<std::pair<Graph, Graph>>& pairs,
                                          const std::vector<Graph>& singles,
                                          const SuiteOptions& options = {});

SuiteSummary summarize(const std::vector<VerificationReport>& reports);

// Default corpora: connected G of order 2..4 crossed with every H of
// order 1..4 subject to the product order cap; every graph of order
// 1..max_order for single-graph checks.
std::vector<std::pair<Graph, Graph>> default_pair_corpus(int product_cap = 20);
std::vector<Graph> default_single_corpus(int max_order = 6);

}  // namespace mbd
