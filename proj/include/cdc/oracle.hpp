#pragma once

// Scheme-class oracles: exhaustive enumeration over each designer's parameter
// space. Minima are exact within a scheme class and say nothing about plans
// outside it.

#include "cdc/bounds.hpp"
#include "cdc/schemes.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace cdc {

struct OracleLimits {
    int gamma_max_nodes = 4;
    int gamma_max_files = 12;
    int s16_max_files = 10;
    int dual_max_nodes = 4;
    int dual_max_files = 10;
    bool parallel = true;  // split the outermost coordinate across std::async tasks
};

struct PairOrder {
    bool operator()(const LoadPair& a, const LoadPair& b) const {
        return std::make_pair(a.total, a.worst) < std::make_pair(b.total, b.worst);
    }
};

// Pareto frontier of (total, worst) pairs, sorted by total ascending.
std::vector<LoadPair> pareto_frontier(const std::vector<LoadPair>& points);

struct GammaOracle {
    int minimum = 0;
    std::int64_t count_of_argmins = 0;
    GammaDesign one_argmin;  // lexicographically smallest (gamma_c, gamma_r)
};

struct S16Oracle {
    int minimum = 0;  // minimum worst-case load
    std::int64_t count_of_argmins = 0;
    SDesign16 one_argmin;  // lexicographically smallest group vector
    std::map<LoadPair, SDesign16, PairOrder> attained;  // every (total, worst) with its smallest witness
    std::vector<LoadPair> frontier;
};

struct DualOracle {
    LoadPair minimum{};  // lexicographic minimum of (worst, total)
    std::int64_t count_of_argmins = 0;
    DualDesign one_argmin;  // lexicographically smallest per-group vector
    std::map<LoadPair, DualDesign, PairOrder> attained;
    std::vector<LoadPair> frontier;
};

// Throw GuardExceeded outside the configured limits.
GammaOracle exhaust_gamma(const Instance& inst, const OracleLimits& limits = {});
S16Oracle exhaust_s16(const Instance& inst, const OracleLimits& limits = {});
DualOracle exhaust_dual(const Instance& inst, const OracleLimits& limits = {});

struct JointCheck {
    bool condition = false;   // the tradeoff inequality holds for (total, worst)
    bool consistent = true;   // condition implies no design attains both
    bool vacuous = false;     // condition is false
    std::optional<SDesign16> s16_witness;  // a sixteen-group design attaining both, if any
    std::optional<DualDesign> dual_witness;
};

JointCheck joint_infeasibility_check(const Instance& inst, int total_opt, int worst_opt,
                                     const OracleLimits& limits = {});

} // namespace cdc
