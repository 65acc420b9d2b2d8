#include "cdc/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace cdc {

namespace {

// One integer coordinate of a design: it consumes `weight` files and `cost`
// units of the budget pool `pool`.
struct Coord {
    int weight;
    int pool;
    std::int64_t cost;
};

template <class Leaf>
void enumerate(const std::vector<Coord>& coords, std::size_t idx, int files_left,
               std::vector<std::int64_t>& pools, std::vector<int>& values, Leaf& leaf) {
    if (idx == coords.size()) {
        leaf(values, files_left);
        return;
    }
    const Coord& c = coords[idx];
    for (int v = 0; v * c.weight <= files_left && v * c.cost <= pools[c.pool]; ++v) {
        values[idx] = v;
        pools[c.pool] -= v * c.cost;
        enumerate(coords, idx + 1, files_left - v * c.weight, pools, values, leaf);
        pools[c.pool] += v * c.cost;
        if (c.weight == 0 && c.cost == 0) break;
    }
    values[idx] = 0;
}

// Runs `make_acc()` accumulators over slices fixed by the first coordinate
// and merges them in slice order.
template <class Acc, class MakeAcc, class Merge>
Acc run_sliced(const std::vector<Coord>& coords, int files, std::vector<std::int64_t> pools, bool parallel,
               MakeAcc make_acc, Merge merge) {
    const Coord& first = coords.front();
    std::vector<int> firsts;
    for (int v = 0; v * first.weight <= files && v * first.cost <= pools[first.pool]; ++v) firsts.push_back(v);

    auto slice = [&](int v) {
        Acc acc = make_acc();
        std::vector<int> values(coords.size(), 0);
        values[0] = v;
        std::vector<std::int64_t> left = pools;
        left[first.pool] -= v * first.cost;
        enumerate(coords, 1, files - v * first.weight, left, values, acc);
        return acc;
    };

    std::vector<Acc> parts;
    if (parallel) {
        std::vector<std::future<Acc>> futures;
        for (int v : firsts) futures.push_back(std::async(std::launch::async, slice, v));
        for (auto& f : futures) parts.push_back(f.get());
    } else {
        for (int v : firsts) parts.push_back(slice(v));
    }
    Acc total = make_acc();
    for (auto& p : parts) merge(total, p);
    return total;
}

template <class Design, class Less>
void merge_attained(std::map<LoadPair, Design, PairOrder>& into, const std::map<LoadPair, Design, PairOrder>& from,
                    Less less) {
    for (const auto& [key, design] : from) {
        auto it = into.find(key);
        if (it == into.end()) into.emplace(key, design);
        else if (less(design, it->second)) it->second = design;
    }
}

std::vector<LoadPair> keys_of(const auto& attained) {
    std::vector<LoadPair> out;
    for (const auto& [key, design] : attained) out.push_back(key);
    return out;
}

} // namespace

std::vector<LoadPair> pareto_frontier(const std::vector<LoadPair>& points) {
    std::vector<LoadPair> sorted = points;
    std::sort(sorted.begin(), sorted.end(), PairOrder{});
    std::vector<LoadPair> out;
    for (const LoadPair& p : sorted) {
        if (!out.empty() && out.back().total == p.total) continue;
        if (out.empty() || p.worst < out.back().worst) out.push_back(p);
    }
    return out;
}

// -------------------------------------------------------------------- gamma

namespace {

std::vector<int> gamma_key(const GammaDesign& d) {
    std::vector<int> key = d.gamma_c;
    key.insert(key.end(), d.gamma_r.begin(), d.gamma_r.end());
    return key;
}

struct GammaAcc {
    int K = 0;
    bool found = false;
    GammaOracle result;

    void operator()(const std::vector<int>& v, int files_left) {
        GammaDesign d = GammaDesign::zero(K);
        for (int p = 1; p <= K - 1; ++p) d.c(p) = v[p - 1];
        for (int p = 2; p <= K - 1; ++p) d.r(p) = v[K - 1 + p - 2];
        d.c(K) = files_left;
        const int obj = static_cast<int>(d.objective());
        if (!found || obj < result.minimum) {
            found = true;
            result.minimum = obj;
            result.count_of_argmins = 1;
            result.one_argmin = d;
        } else if (obj == result.minimum) {
            ++result.count_of_argmins;
            if (gamma_key(d) < gamma_key(result.one_argmin)) result.one_argmin = d;
        }
    }
};

} // namespace

GammaOracle exhaust_gamma(const Instance& inst, const OracleLimits& limits) {
    const int K = inst.nodes();
    if (K > limits.gamma_max_nodes || inst.files() > limits.gamma_max_files)
        throw GuardExceeded("gamma enumeration is limited to K <= " + std::to_string(limits.gamma_max_nodes) +
                            " and N <= " + std::to_string(limits.gamma_max_files));
    std::vector<Coord> coords;
    for (int p = 1; p <= K - 1; ++p)
        coords.push_back({static_cast<int>(binomial(K - 1, p - 1)), 0, binomial(K - 1, p)});
    for (int p = 2; p <= K - 1; ++p) coords.push_back({1, 0, K - p});

    auto acc = run_sliced<GammaAcc>(
        coords, inst.files(), {inst.total_budget()}, limits.parallel,
        [K] { GammaAcc a; a.K = K; return a; },
        [](GammaAcc& into, const GammaAcc& part) {
            if (!part.found) return;
            if (!into.found || part.result.minimum < into.result.minimum) {
                into.result = part.result;
                into.found = true;
            } else if (part.result.minimum == into.result.minimum) {
                into.result.count_of_argmins += part.result.count_of_argmins;
                if (gamma_key(part.result.one_argmin) < gamma_key(into.result.one_argmin))
                    into.result.one_argmin = part.result.one_argmin;
            }
        });
    return acc.result;
}

// ---------------------------------------------------------------------- s16

namespace {

struct S16Acc {
    bool found = false;
    S16Oracle result;

    void operator()(const std::vector<int>& v, int files_left) {
        // v: S1 S2 S3 S12r1 S12r2 x1 x2 S13r1 S13r3 x3 S23r2 S23r3
        SDesign16 d;
        d.u = {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[5], v[9], v[10], v[11], v[6], v[9],
               files_left};
        const auto m = d.loads();
        const int worst = std::max({m[0], m[1], m[2]});
        const LoadPair key{m[0] + m[1] + m[2], worst};
        auto it = result.attained.find(key);
        if (it == result.attained.end()) result.attained.emplace(key, d);
        else if (d.u < it->second.u) it->second = d;

        if (!found || worst < result.minimum) {
            found = true;
            result.minimum = worst;
            result.count_of_argmins = 1;
            result.one_argmin = d;
        } else if (worst == result.minimum) {
            ++result.count_of_argmins;
            if (d.u < result.one_argmin.u) result.one_argmin = d;
        }
    }
};

} // namespace

S16Oracle exhaust_s16(const Instance& inst, const OracleLimits& limits) {
    if (inst.nodes() != 3) throw WrongK(3, inst.nodes());
    if (inst.files() > limits.s16_max_files)
        throw GuardExceeded("sixteen-group enumeration is limited to N <= " + std::to_string(limits.s16_max_files));
    // Budgets are doubled so that the coded pairs cost whole units.
    const std::vector<Coord> coords = {
        {1, 0, 4}, {1, 1, 4}, {1, 2, 4},  // S1 S2 S3
        {1, 0, 2}, {1, 1, 2},             // S12r1 S12r2
        {2, 0, 2}, {2, 1, 2},             // x1 x2
        {1, 0, 2}, {1, 2, 2},             // S13r1 S13r3
        {2, 2, 2},                        // x3
        {1, 1, 2}, {1, 2, 2},             // S23r2 S23r3
    };
    std::vector<std::int64_t> pools{2LL * inst.budget(1), 2LL * inst.budget(2), 2LL * inst.budget(3)};
    auto acc = run_sliced<S16Acc>(
        coords, inst.files(), pools, limits.parallel, [] { return S16Acc{}; },
        [](S16Acc& into, const S16Acc& part) {
            if (!part.found) return;
            merge_attained(into.result.attained, part.result.attained,
                           [](const SDesign16& a, const SDesign16& b) { return a.u < b.u; });
            if (!into.found || part.result.minimum < into.result.minimum) {
                auto attained = std::move(into.result.attained);
                into.result = part.result;
                into.result.attained = std::move(attained);
                into.found = true;
            } else if (part.result.minimum == into.result.minimum) {
                into.result.count_of_argmins += part.result.count_of_argmins;
                if (part.result.one_argmin.u < into.result.one_argmin.u)
                    into.result.one_argmin = part.result.one_argmin;
            }
        });
    acc.result.frontier = pareto_frontier(keys_of(acc.result.attained));
    return acc.result;
}

// --------------------------------------------------------------------- dual

namespace {

struct DualAcc {
    int K = 0;
    bool found = false;
    DualOracle result;
    std::vector<int> best_key;
    std::map<LoadPair, std::vector<int>, PairOrder> keys;

    DualDesign build(const std::vector<int>& v, int files_left) const {
        std::vector<std::vector<int>> y(K, std::vector<int>(K - 1, 0));
        for (int j = 0; j < K; ++j)
            for (int p = 1; p <= K - 1; ++p) y[j][p - 1] = v[j * (K - 1) + (p - 1)];
        return DualDesign::symmetric(K, y, files_left);
    }

    void operator()(const std::vector<int>& v, int files_left) {
        DualDesign d = build(v, files_left);
        const auto m = d.loads();
        const int total = std::accumulate(m.begin(), m.end(), 0);
        const int worst = *std::max_element(m.begin(), m.end());
        const LoadPair key{total, worst};
        auto it = keys.find(key);
        if (it == keys.end()) {
            keys.emplace(key, v);
            result.attained.emplace(key, d);
        } else if (v < it->second) {
            it->second = v;
            result.attained[key] = d;
        }
        const auto rank = std::make_pair(worst, total);
        if (!found || rank < std::make_pair(result.minimum.worst, result.minimum.total)) {
            found = true;
            result.minimum = key;
            result.count_of_argmins = 1;
            result.one_argmin = d;
            best_key = v;
        } else if (rank == std::make_pair(result.minimum.worst, result.minimum.total)) {
            ++result.count_of_argmins;
            if (v < best_key) {
                best_key = v;
                result.one_argmin = d;
            }
        }
    }
};

} // namespace

DualOracle exhaust_dual(const Instance& inst, const OracleLimits& limits) {
    const int K = inst.nodes();
    if (K > limits.dual_max_nodes || inst.files() > limits.dual_max_files)
        throw GuardExceeded("dual enumeration is limited to K <= " + std::to_string(limits.dual_max_nodes) +
                            " and N <= " + std::to_string(limits.dual_max_files));
    // Budget condition scaled by lcm(1..K-1) so every coefficient is integral.
    std::int64_t scale = 1;
    for (int p = 1; p <= K - 1; ++p) scale = std::lcm(scale, static_cast<std::int64_t>(p));
    std::vector<Coord> coords;
    for (int j = 0; j < K; ++j)
        for (int p = 1; p <= K - 1; ++p)
            coords.push_back({static_cast<int>(binomial(K - 1, p - 1)), j,
                              scale / p * (K - p) * binomial(K - 1, p - 1)});
    std::vector<std::int64_t> pools;
    for (NodeId j = 1; j <= K; ++j) pools.push_back(scale * inst.budget(j));

    auto acc = run_sliced<DualAcc>(
        coords, inst.files(), pools, limits.parallel, [K] { DualAcc a; a.K = K; return a; },
        [](DualAcc& into, const DualAcc& part) {
            if (!part.found) return;
            for (const auto& [key, v] : part.keys) {
                auto it = into.keys.find(key);
                if (it == into.keys.end() || v < it->second) {
                    into.keys[key] = v;
                    into.result.attained.insert_or_assign(key, part.result.attained.at(key));
                }
            }
            const auto mine = std::make_pair(into.result.minimum.worst, into.result.minimum.total);
            const auto theirs = std::make_pair(part.result.minimum.worst, part.result.minimum.total);
            if (!into.found || theirs < mine) {
                into.found = true;
                into.result.minimum = part.result.minimum;
                into.result.count_of_argmins = part.result.count_of_argmins;
                into.result.one_argmin = part.result.one_argmin;
                into.best_key = part.best_key;
            } else if (theirs == mine) {
                into.result.count_of_argmins += part.result.count_of_argmins;
                if (part.best_key < into.best_key) {
                    into.best_key = part.best_key;
                    into.result.one_argmin = part.result.one_argmin;
                }
            }
        });
    acc.result.frontier = pareto_frontier(keys_of(acc.result.attained));
    return acc.result;
}

// -------------------------------------------------------------------- joint

JointCheck joint_infeasibility_check(const Instance& inst, int total_opt, int worst_opt,
                                     const OracleLimits& limits) {
    JointCheck out;
    out.condition = tradeoff_incompatible(inst, total_opt, worst_opt);
    out.vacuous = !out.condition;

    const S16Oracle s16 = exhaust_s16(inst, limits);
    for (const auto& [key, design] : s16.attained) {
        if (key.total <= total_opt && key.worst <= worst_opt) {
            out.s16_witness = design;
            break;
        }
    }
    const DualOracle dual = exhaust_dual(inst, limits);
    for (const auto& [key, design] : dual.attained) {
        if (key.total <= total_opt && key.worst <= worst_opt) {
            out.dual_witness = design;
            break;
        }
    }
    out.consistent = !out.condition || (!out.s16_witness && !out.dual_witness);
    return out;
}

} // namespace cdc
