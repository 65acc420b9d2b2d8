#pragma once

// Closed-form optima, converse bounds and regime detectors. All functions are
// pure evaluators over an Instance.

#include "cdc/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cdc {

struct LoadPair {
    int total;
    int worst;
    friend bool operator==(const LoadPair&, const LoadPair&) = default;
};

struct BoundTerm {
    std::string name;
    int value;
};

struct BoundReport {
    int total_lower = 0;
    std::optional<int> optimal_total;
    std::string total_tag;  // "K2", "K3", "coding_regime", "nocoding_regime", "uncharacterized"
    int worst_lower = 0;
    std::vector<BoundTerm> worst_lower_terms;
    std::optional<int> optimal_worst;
    std::string worst_tag;  // "K2", "Condition1".."Condition3", regime tags or "uncharacterized"

    int term(const std::string& name) const;
};

// K = 2: total = max{N, 2N-L}, worst = N - min{L1, L2, N - ceil(N/2)}.
LoadPair optimum_k2(const Instance& inst);

struct TotalK3 {
    int value;
    bool characterized;  // false when some L_k is odd
};
// max{N, ceil((7N-2L)/3), 3N-2L}, evaluated for any budgets.
TotalK3 total_formula_k3(const Instance& inst);
// Strict form: throws PreconditionViolated when some L_k is odd.
int total_optimum_k3(const Instance& inst);

// The four converse terms for K = 3, named full_cut, single_cut, pair_cut and
// seven_thirds. worst_lower is their maximum; the contradiction term is not
// included here (see bound_report).
BoundReport worst_lower_k3(const Instance& inst);

// Largest beta in [0..N] with
// beta <= ceil(ceil((7N - 2 * sum_k min{L_k, 2(beta-1)}) / 3) / 3).
int contradiction_bound_k3(const Instance& inst);

struct ConditionalOptimum {
    int value;
    int condition;  // 1, 2 or 3
};
struct ConditionsK3 {
    bool c1 = false, c2 = false, c3 = false;
};
ConditionsK3 worst_conditions_k3(const Instance& inst);
// Value under the lowest-numbered satisfied condition, or nullopt.
std::optional<ConditionalOptimum> worst_optimum_k3(const Instance& inst);
// Closed form for a single condition, whether or not it holds.
int worst_condition_value_k3(const Instance& inst, int condition);

// L <= N/(K-1): (KN - (K-1)L, N - L + max L_k).
std::optional<LoadPair> regime_coding(const Instance& inst);
// min L_k >= (K-1) ceil(N/K): (N, ceil(N/K)).
std::optional<LoadPair> regime_nocoding(const Instance& inst);

// Lower bound on sum_{i in S} M_i: max(0, (N|S| - sum_{k not in S} L_k) / |S|).
Rational cutset_bound(const Instance& inst, NodeSet subset);
// max over nonempty S of ceil(cutset(S) / |S|).
int worst_cutset_lower(const Instance& inst);

// M_total < 3N - 2 M_worst - min_{i != j}(L_i + L_j).
bool tradeoff_incompatible(const Instance& inst, int total_opt, int worst_opt);

// Every bound and optimum that applies to the instance, for any K.
BoundReport bound_report(const Instance& inst);

int min_pair_sum(const Instance& inst);
int min_budget(const Instance& inst);
int max_budget(const Instance& inst);

} // namespace cdc
