#pragma once

// Deterministic Map/Shuffle/Reduce execution over synthetic intermediate
// values. Every node keeps its own copy of the blocks it holds, so a decoded
// block is a real XOR result that can be compared against the generator.

#include "cdc/core.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cdc {

using Block = std::vector<std::uint64_t>;  // B bits, unused high bits of the last word are zero
using IvKey = std::pair<int, FileId>;      // (q, n)

// a_{q,n} as a keyed pseudorandom function of (seed, q, n).
Block generate_block(std::uint64_t seed, int q, FileId n, int bits);

struct IVStore {
    std::uint64_t seed = 0;
    int iv_bits = 0;
    std::vector<std::map<IvKey, Block>> held;  // held[k-1]
    std::int64_t generated = 0;                // blocks produced by the Map phase

    bool holds(NodeId k, int q, FileId n) const { return held.at(k - 1).contains({q, n}); }
    std::size_t count(NodeId k) const { return held.at(k - 1).size(); }
};

IVStore map_phase(const Instance& inst, const Placement& placement, std::uint64_t seed);

struct ShuffleOutcome {
    std::vector<std::int64_t> egress_bits;        // per node
    std::vector<NodeId> over_budget;              // nodes whose normalized egress exceeds L_k
    std::vector<std::pair<NodeId, std::size_t>> undecodable;  // (receiver, transmission index)
    std::vector<std::string> faults;              // sender lacking a block, decode mismatch
    std::int64_t decoded = 0;
};

// Runs every transmission and records all problems without stopping.
ShuffleOutcome run_shuffle(const Instance& inst, const ShufflePlan& plan, IVStore& store);
// As run_shuffle, but throws the first problem: InvalidInput for a sender
// lacking a block, UndecodablePayload, then BudgetViolation.
ShuffleOutcome shuffle_phase(const Instance& inst, const ShufflePlan& plan, IVStore& store);

struct ReduceOutput {
    std::map<std::pair<NodeId, int>, Block> digests;  // (k, q) for q in W_k
};

// Throws MissingIntermediate listing every (node, q, n) gap.
ReduceOutput reduce_phase(const Instance& inst, const IVStore& store);
std::vector<MissingValue> missing_values(const Instance& inst, const IVStore& store);

struct Verification {
    bool feasible = false;
    LoadReport report;
    std::vector<NodeId> budget_violations;
    std::vector<std::pair<NodeId, std::size_t>> undecodable;
    std::vector<MissingValue> missing;
    std::vector<std::string> errors;  // human-readable summary of every problem
    ReduceOutput output;
};

// Runs all three phases and aggregates every error into the verdict.
Verification verify_plan(const Instance& inst, const Placement& placement, const ShufflePlan& plan,
                         std::uint64_t seed);

} // namespace cdc
