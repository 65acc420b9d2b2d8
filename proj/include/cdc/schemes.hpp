#pragma once

// Parameter designers and planners for the three scheme classes:
//   GammaDesign  - batch/redundancy scheme minimizing the total load (any K)
//   SDesign16    - sixteen-group scheme minimizing the worst-case load (K = 3)
//   DualDesign   - coded-group scheme targeting both loads (any K)

#include "cdc/core.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cdc {

struct Scheme {
    Placement placement;
    ShufflePlan plan;
};

// ---------------------------------------------------------------- GammaDesign

struct GammaDesign {
    int nodes = 0;
    std::vector<int> gamma_c;  // gamma_c[p-1], p in [1..K]
    std::vector<int> gamma_r;  // gamma_r[p-2], p in [2..K-1]

    static GammaDesign zero(int node_count);
    int c(int p) const { return gamma_c.at(p - 1); }
    int r(int p) const { return gamma_r.at(p - 2); }
    int& c(int p) { return gamma_c.at(p - 1); }
    int& r(int p) { return gamma_r.at(p - 2); }

    std::int64_t communication() const;  // sum_p (K-p) r_p + sum_{p<K} C(K-1,p) c_p
    std::int64_t coverage() const;       // sum_p r_p + sum_p C(K-1,p-1) c_p
    std::int64_t objective() const;      // sum_p p r_p + sum_p p C(K-1,p-1) c_p

    // Throws InvalidInput on negative entries, wrong sizes, coverage != N or
    // communication > L.
    void validate(const Instance& inst) const;

    friend bool operator==(const GammaDesign&, const GammaDesign&) = default;
};

GammaDesign design_total(const Instance& inst);
// The K = 3 closed form (may contain negative entries outside its hypothesis).
GammaDesign design_total_k3_formula(const Instance& inst);
// Exact minimum of the objective over all valid designs (dynamic program).
GammaDesign design_total_search(const Instance& inst);
Scheme plan_total(const Instance& inst, const GammaDesign& d);

// ------------------------------------------------------------------ SDesign16

// Group order: S1 S2 S3 S12r1 S12r2 S12c1 S12c2 S13r1 S13r3 S13c1 S13c3
//              S23r2 S23r3 S23c2 S23c3 S123
struct SDesign16 {
    enum Index {
        S1, S2, S3, S12r1, S12r2, S12c1, S12c2, S13r1, S13r3, S13c1, S13c3,
        S23r2, S23r3, S23c2, S23c3, S123, Count
    };
    std::array<int, Count> u{};

    static const std::array<const char*, Count>& names();
    // Size of the exclusive group at a single node k.
    int single(NodeId k) const;
    // Pair group {i,j} handled by `sender` (a member of the pair).
    int redundant(NodeId i, NodeId j, NodeId sender) const;
    int coded(NodeId i, NodeId j, NodeId sender) const;
    static Index redundant_index(NodeId i, NodeId j, NodeId sender);
    static Index coded_index(NodeId i, NodeId j, NodeId sender);
    static Index single_index(NodeId k);

    std::array<int, 3> loads() const;
    int worst() const;
    int total() const;
    // 2 * (2 S_k + r-terms + c-terms / 2); kept doubled to stay integral.
    int doubled_egress(NodeId k) const;

    void validate(const Instance& inst) const;

    friend bool operator==(const SDesign16&, const SDesign16&) = default;
};

SDesign16 design_worst_k3(const Instance& inst);
// Closed form for condition 1, 2 or 3 (condition 3 relabels budgets ascending).
SDesign16 design_worst_condition(const Instance& inst, int condition);
// Minimum worst-case load over the sixteen-group class (ties: smaller total,
// then lexicographically larger group vector). Throws GuardExceeded for N above
// `max_files`.
SDesign16 design_worst_search(const Instance& inst, int max_files = 24);
Scheme plan_worst_k3(const Instance& inst, const SDesign16& d);

// ----------------------------------------------------------------- DualDesign

struct DualDesign {
    int nodes = 0;
    std::map<std::pair<NodeSet, NodeId>, int> s_c;  // (A, j) -> S_A^{c_j}, 1 <= |A| <= K-1
    int s_full = 0;

    // y[j-1][p-1] files per group S_A^{c_j} for every A containing j with |A| = p.
    static DualDesign symmetric(int node_count, const std::vector<std::vector<int>>& y, int s_full);
    int group(NodeSet a, NodeId j) const;
    // Per-group size of sender j's p-groups; requires the symmetry condition.
    int per_group(NodeId j, int p) const;

    std::vector<int> loads() const;
    int total() const;
    int worst() const;
    // Normalized egress of node j as counted by the budget condition.
    Rational egress(NodeId j) const;

    // Coverage, symmetry and budget conditions; throws InvalidInput.
    void validate(const Instance& inst) const;

    friend bool operator==(const DualDesign&, const DualDesign&) = default;
};

DualDesign design_dual(const Instance& inst);
// Lexicographic minimum of (worst, total) over symmetric designs.
// Throws GuardExceeded if the search visits more than `max_nodes` states.
DualDesign design_dual_search(const Instance& inst, std::int64_t max_nodes = 200'000'000);
Scheme plan_dual(const Instance& inst, const DualDesign& d);

} // namespace cdc
