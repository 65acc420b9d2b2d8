#include "cdc/schemes.hpp"

#include "cdc/bounds.hpp"

#include <algorithm>
#include <functional>

namespace cdc {

DualDesign DualDesign::symmetric(int node_count, const std::vector<std::vector<int>>& y, int s_full) {
    DualDesign d;
    d.nodes = node_count;
    d.s_full = s_full;
    for (int p = 1; p <= node_count - 1; ++p)
        for (NodeSet a : subsets_of_size(node_count, p))
            for (NodeId j : a.members()) d.s_c[{a, j}] = y.at(j - 1).at(p - 1);
    return d;
}

int DualDesign::group(NodeSet a, NodeId j) const {
    auto it = s_c.find({a, j});
    return it == s_c.end() ? 0 : it->second;
}

int DualDesign::per_group(NodeId j, int p) const {
    for (NodeSet a : subsets_of_size(nodes, p))
        if (a.contains(j)) return group(a, j);
    return 0;
}

std::vector<int> DualDesign::loads() const {
    std::vector<int> m(nodes, s_full);
    for (const auto& [key, size] : s_c)
        for (NodeId i : key.first.members()) m[i - 1] += size;
    return m;
}

int DualDesign::total() const {
    int sum = 0;
    for (int v : loads()) sum += v;
    return sum;
}

int DualDesign::worst() const {
    auto m = loads();
    return *std::max_element(m.begin(), m.end());
}

Rational DualDesign::egress(NodeId j) const {
    Rational sum(0);
    for (const auto& [key, size] : s_c) {
        if (key.second != j) continue;
        const int p = key.first.size();
        sum += Rational(nodes - p, p) * size;
    }
    return sum;
}

void DualDesign::validate(const Instance& inst) const {
    const int K = inst.nodes();
    if (nodes != K) throw InvalidInput("dual design does not match K");
    if (s_full < 0) throw InvalidInput("dual design has a negative entry");
    std::int64_t covered = s_full;
    for (const auto& [key, size] : s_c) {
        const NodeSet a = key.first;
        const int p = a.size();
        if (p < 1 || p > K - 1 || (a.mask() & ~NodeSet::all(K).mask()) != 0 || !a.contains(key.second))
            throw InvalidInput("dual design has a malformed group key");
        if (size < 0) throw InvalidInput("dual design has a negative entry");
        covered += size;
    }
    if (covered != inst.files()) throw InvalidInput("dual design does not cover exactly N files");
    for (NodeId j = 1; j <= K; ++j) {
        for (int p = 2; p <= K - 1; ++p) {
            const int ref = per_group(j, p);
            for (NodeSet a : subsets_of_size(K, p))
                if (a.contains(j) && group(a, j) != ref)
                    throw InvalidInput("coded groups of node " + std::to_string(j) +
                                       " must have equal sizes within each order");
        }
        if (egress(j) > Rational(inst.budget(j)))
            throw InvalidInput("dual design exceeds the budget of node " + std::to_string(j));
    }
}

DualDesign design_dual_search(const Instance& inst, std::int64_t max_nodes) {
    const int K = inst.nodes();
    const int N = inst.files();
    const int P = K - 1;
    std::vector<std::int64_t> files_per(P + 1), comm_per(P + 1), other_per(P + 1);
    for (int p = 1; p <= P; ++p) {
        files_per[p] = binomial(K - 1, p - 1);
        comm_per[p] = binomial(K - 1, p);
        other_per[p] = binomial(K - 2, p - 2);
    }

    std::vector<std::vector<int>> y(K, std::vector<int>(P, 0));
    std::vector<std::vector<int>> best_y;
    int best_worst = 0, best_total = 0;
    bool found = false;
    std::int64_t visited = 0;

    std::function<void(int, int, std::int64_t, std::int64_t)> rec =
        [&](int j, int p, std::int64_t covered, std::int64_t spent) {
            if (++visited > max_nodes)
                throw GuardExceeded("dual search exceeded its state limit");
            if (j == K) {
                const std::int64_t full = N - covered;
                int worst = 0, total = 0;
                for (int i = 0; i < K; ++i) {
                    std::int64_t m = full;
                    for (int q = 1; q <= P; ++q) {
                        m += files_per[q] * y[i][q - 1];
                        for (int o = 0; o < K; ++o)
                            if (o != i) m += other_per[q] * y[o][q - 1];
                    }
                    worst = std::max(worst, static_cast<int>(m));
                    total += static_cast<int>(m);
                }
                if (!found || std::make_pair(worst, total) < std::make_pair(best_worst, best_total)) {
                    found = true;
                    best_worst = worst;
                    best_total = total;
                    best_y = y;
                }
                return;
            }
            if (p > P) {
                rec(j + 1, 1, covered, 0);
                return;
            }
            for (int v = 0;; ++v) {
                const std::int64_t c = covered + files_per[p] * v;
                const std::int64_t s = spent + comm_per[p] * v;
                if (c > N || s > inst.budget(j + 1)) break;
                y[j][p - 1] = v;
                rec(j, p + 1, c, s);
            }
            y[j][p - 1] = 0;
        };
    rec(0, 1, 0, 0);

    std::int64_t covered = 0;
    for (int j = 0; j < K; ++j)
        for (int p = 1; p <= P; ++p) covered += files_per[p] * best_y[j][p - 1];
    return DualDesign::symmetric(K, best_y, static_cast<int>(N - covered));
}

DualDesign design_dual(const Instance& inst) {
    const int K = inst.nodes();
    const int N = inst.files();
    const int L = inst.total_budget();
    std::vector<std::vector<int>> y(K, std::vector<int>(K - 1, 0));
    if (K == 2) {
        const NodeId small = inst.budget(1) <= inst.budget(2) ? 1 : 2;
        const NodeId large = 3 - small;
        const int first = std::min(inst.budget(small), (N + 1) / 2);
        y[small - 1][0] = first;
        y[large - 1][0] = std::min(inst.budget(large), N - first);
        return DualDesign::symmetric(K, y, std::max(N - L, 0));
    }
    if (regime_coding(inst)) {
        for (NodeId j = 1; j <= K; ++j) y[j - 1][K - 2] = inst.budget(j);
        return DualDesign::symmetric(K, y, N - (K - 1) * L);
    }
    if (regime_nocoding(inst)) {
        for (NodeId i = 1; i <= K; ++i) y[i - 1][0] = i <= N % K ? (N + K - 1) / K : N / K;
        return DualDesign::symmetric(K, y, 0);
    }
    return design_dual_search(inst);
}

Scheme plan_dual(const Instance& inst, const DualDesign& d) {
    d.validate(inst);
    const int K = inst.nodes();
    const int N = inst.files();

    std::map<std::pair<NodeSet, NodeId>, std::vector<FileId>> groups;
    std::vector<std::set<FileId>> assigned(K);
    FileId n = 1;
    for (int p = 1; p <= K - 1; ++p) {
        for (NodeSet a : subsets_of_size(K, p)) {
            for (NodeId j : a.members()) {
                auto& g = groups[{a, j}];
                for (int c = 0; c < d.group(a, j); ++c) {
                    g.push_back(n);
                    for (NodeId m : a.members()) assigned[m - 1].insert(n);
                    ++n;
                }
            }
        }
    }
    for (FileId f = N - d.s_full + 1; f <= N; ++f)
        for (auto& m : assigned) m.insert(f);

    ShufflePlan plan;
    for (NodeId k = 1; k <= K; ++k) {
        const auto& own = groups[{NodeSet{k}, k}];
        for (int i = 1; i <= K - 1; ++i) {
            const NodeId to = (k + i - 1) % K + 1;
            for (FileId f : own) plan.transmissions.push_back({k, {{to, f}}, 1});
        }
        for (int p = 2; p <= K - 1; ++p) {
            const int count = d.per_group(k, p);
            for (NodeSet other : subsets_of_size(K, p)) {
                if (other.contains(k)) continue;
                for (int i = 0; i < count; ++i) {
                    Transmission tx{k, {}, 1};
                    for (NodeId j : other.members())
                        tx.payload.insert({j, groups.at({other.with(k).without(j), k}).at(i)});
                    plan.transmissions.push_back(std::move(tx));
                }
            }
        }
    }
    return {Placement(std::move(assigned)), std::move(plan)};
}

} // namespace cdc
