#pragma once

// Problem instances, file placements, exclusivity profiles, shuffle plans and
// load accounting. Node and file indices are 1-based throughout.

#include "cdc/errors.hpp"

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <vector>

namespace cdc {

using NodeId = int;
using FileId = int;
using Rational = boost::rational<std::int64_t>;

inline constexpr int kMaxNodes = 16;

// Subset of [1..K] stored as a bitmask. Ordering is lexicographic on the
// sorted member list, which is the canonical key order for every map keyed
// by node subsets.
class NodeSet {
public:
    constexpr NodeSet() = default;
    NodeSet(std::initializer_list<NodeId> nodes);
    static NodeSet from_mask(std::uint32_t mask) { NodeSet s; s.mask_ = mask; return s; }
    static NodeSet all(int node_count);

    std::uint32_t mask() const noexcept { return mask_; }
    bool contains(NodeId k) const noexcept { return (mask_ >> (k - 1)) & 1u; }
    int size() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }
    NodeSet with(NodeId k) const { return from_mask(mask_ | (1u << (k - 1))); }
    NodeSet without(NodeId k) const { return from_mask(mask_ & ~(1u << (k - 1))); }
    std::vector<NodeId> members() const;

    friend bool operator==(NodeSet a, NodeSet b) noexcept { return a.mask_ == b.mask_; }
    friend std::strong_ordering operator<=>(NodeSet a, NodeSet b);

private:
    std::uint32_t mask_ = 0;
};

// All p-subsets of [1..K] in lexicographic order.
std::vector<NodeSet> subsets_of_size(int node_count, int p);
// All nonempty subsets of [1..K] in canonical (lexicographic) order.
std::vector<NodeSet> nonempty_subsets(int node_count);

std::int64_t binomial(int n, int k);
// floor/ceil division for possibly negative numerators, positive denominators.
std::int64_t floor_div(std::int64_t num, std::int64_t den);
std::int64_t ceil_div(std::int64_t num, std::int64_t den);

class Instance {
public:
    // Throws InvalidInput unless K >= 2, N >= K, Q > 0 with Q mod K = 0,
    // B, F > 0, |L| = K and every L_k >= 0.
    Instance(int nodes, int functions, int files, int iv_bits, int file_bits, std::vector<int> budgets);

    // Q = K, B = 32, F = 256: the shape used by every worked example.
    static Instance with_budgets(int files, std::vector<int> budgets);

    int nodes() const noexcept { return nodes_; }
    int functions() const noexcept { return functions_; }
    int files() const noexcept { return files_; }
    int iv_bits() const noexcept { return iv_bits_; }
    int file_bits() const noexcept { return file_bits_; }
    int budget(NodeId k) const { return budgets_.at(k - 1); }
    const std::vector<int>& budgets() const noexcept { return budgets_; }
    int total_budget() const noexcept { return total_budget_; }
    int functions_per_node() const noexcept { return functions_ / nodes_; }
    // W_k = [(k-1)Q/K + 1 .. kQ/K].
    std::vector<int> reduce_set(NodeId k) const;
    NodeId reducer_of(int function) const { return (function - 1) / functions_per_node() + 1; }
    // Payload width of one group of Q/K intermediate values.
    std::int64_t group_bits() const { return std::int64_t(functions_per_node()) * iv_bits_; }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    int nodes_;
    int functions_;
    int files_;
    int iv_bits_;
    int file_bits_;
    std::vector<int> budgets_;
    int total_budget_;
};

class Placement {
public:
    Placement() = default;
    explicit Placement(std::vector<std::set<FileId>> assigned);

    int nodes() const noexcept { return static_cast<int>(assigned_.size()); }
    const std::set<FileId>& files_at(NodeId k) const { return assigned_.at(k - 1); }
    bool holds(NodeId k, FileId n) const { return files_at(k).contains(n); }
    int load(NodeId k) const { return static_cast<int>(files_at(k).size()); }
    // The set of nodes holding file n.
    NodeSet holders(FileId n) const;
    const std::vector<std::set<FileId>>& assigned() const noexcept { return assigned_; }

    // Throws InvalidInput if indices fall outside [1..N], the node count is
    // not K, or some file is placed nowhere.
    void validate(const Instance& inst) const;

    friend bool operator==(const Placement&, const Placement&) = default;

private:
    std::vector<std::set<FileId>> assigned_;
};

struct ExclusivityProfile {
    std::map<NodeSet, int> counts;
    int at(NodeSet a) const;
};

ExclusivityProfile exclusivity_profile(const Placement& p, const Instance& inst);

// The block a_{W_owner, file}: the Q/K intermediate values of `file` needed
// by node `owner`.
struct IvGroup {
    NodeId owner;
    FileId file;
    friend auto operator<=>(const IvGroup&, const IvGroup&) = default;
};

struct Transmission {
    NodeId sender;
    std::set<IvGroup> payload;  // XOR of the listed groups
    int width_iv = 1;
    friend bool operator==(const Transmission&, const Transmission&) = default;
};

struct ShufflePlan {
    std::vector<Transmission> transmissions;
    friend bool operator==(const ShufflePlan&, const ShufflePlan&) = default;
};

// Sender holds every file it encodes, owners differ from the sender, payloads
// are nonempty and width_iv = 1. Throws InvalidInput otherwise.
void check_plan(const Placement& p, const ShufflePlan& plan, const Instance& inst);

struct LoadReport {
    std::vector<int> per_node_load;
    int total = 0;
    int worst = 0;
    std::vector<std::int64_t> egress_bits;
    std::vector<Rational> per_node_egress_norm;  // K * bits / (Q * B)
    std::vector<NodeId> over_budget;

    bool within_budget() const noexcept { return over_budget.empty(); }
};

// Exact accounting; budget overruns are recorded in over_budget.
LoadReport measure_loads(const Placement& p, const ShufflePlan& plan, const Instance& inst);
// As measure_loads, but throws BudgetViolation for the first node over L_k.
LoadReport load_report(const Placement& p, const ShufflePlan& plan, const Instance& inst);

} // namespace cdc
