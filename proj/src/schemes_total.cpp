#include "cdc/schemes.hpp"

#include "cdc/bounds.hpp"

#include <algorithm>
#include <limits>

namespace cdc {

GammaDesign GammaDesign::zero(int node_count) {
    GammaDesign d;
    d.nodes = node_count;
    d.gamma_c.assign(node_count, 0);
    d.gamma_r.assign(std::max(node_count - 2, 0), 0);
    return d;
}

std::int64_t GammaDesign::communication() const {
    const int K = nodes;
    std::int64_t sum = 0;
    for (int p = 2; p <= K - 1; ++p) sum += std::int64_t(K - p) * r(p);
    for (int p = 1; p <= K - 1; ++p) sum += binomial(K - 1, p) * c(p);
    return sum;
}

std::int64_t GammaDesign::coverage() const {
    const int K = nodes;
    std::int64_t sum = 0;
    for (int p = 2; p <= K - 1; ++p) sum += r(p);
    for (int p = 1; p <= K; ++p) sum += binomial(K - 1, p - 1) * c(p);
    return sum;
}

std::int64_t GammaDesign::objective() const {
    const int K = nodes;
    std::int64_t sum = 0;
    for (int p = 2; p <= K - 1; ++p) sum += std::int64_t(p) * r(p);
    for (int p = 1; p <= K; ++p) sum += p * binomial(K - 1, p - 1) * c(p);
    return sum;
}

void GammaDesign::validate(const Instance& inst) const {
    const int K = inst.nodes();
    if (nodes != K || static_cast<int>(gamma_c.size()) != K ||
        static_cast<int>(gamma_r.size()) != std::max(K - 2, 0))
        throw InvalidInput("gamma design does not match K");
    for (int v : gamma_c)
        if (v < 0) throw InvalidInput("gamma design has a negative entry");
    for (int v : gamma_r)
        if (v < 0) throw InvalidInput("gamma design has a negative entry");
    if (coverage() != inst.files()) throw InvalidInput("gamma design does not cover exactly N files");
    if (communication() > inst.total_budget()) throw InvalidInput("gamma design exceeds the total budget");
}

GammaDesign design_total_k3_formula(const Instance& inst) {
    if (inst.nodes() != 3) throw WrongK(3, inst.nodes());
    const int N = inst.files();
    const int L = inst.total_budget();
    const int t = total_formula_k3(inst).value;
    const int a = std::min(L, 2 * N);
    const int b = std::min(2 * L, N);
    GammaDesign d = GammaDesign::zero(3);
    d.c(2) = 3 * N - a - t;
    d.c(1) = a + d.c(2) - b;
    d.r(2) = 2 * b - 3 * d.c(2) - a;
    d.c(3) = N - d.r(2) - d.c(1) - 2 * d.c(2);
    return d;
}

GammaDesign design_total_search(const Instance& inst) {
    const int K = inst.nodes();
    const int N = inst.files();
    const int cap = static_cast<int>(std::min<std::int64_t>(inst.total_budget(), std::int64_t(K - 1) * N));

    struct Item {
        bool coding;
        int p;
        int files;
        int comm;
        int load;
    };
    std::vector<Item> items;
    for (int p = 1; p <= K; ++p) {
        int files = static_cast<int>(binomial(K - 1, p - 1));
        items.push_back({true, p, files, static_cast<int>(binomial(K - 1, p)), p * files});
    }
    for (int p = 2; p <= K - 1; ++p) items.push_back({false, p, 1, K - p, p});

    constexpr int inf = std::numeric_limits<int>::max() / 2;
    const int width = cap + 1;
    std::vector<int> best((N + 1) * width, inf);
    std::vector<int> parent((N + 1) * width, -1);
    best[0] = 0;
    for (int i = 0; i < static_cast<int>(items.size()); ++i) {
        const Item& it = items[i];
        for (int f = it.files; f <= N; ++f) {
            for (int c = it.comm; c <= cap; ++c) {
                int from = best[(f - it.files) * width + (c - it.comm)];
                if (from == inf) continue;
                int& to = best[f * width + c];
                if (from + it.load < to) {
                    to = from + it.load;
                    parent[f * width + c] = i;
                }
            }
        }
    }
    int bc = -1;
    for (int c = 0; c <= cap; ++c)
        if (best[N * width + c] < inf && (bc < 0 || best[N * width + c] < best[N * width + bc])) bc = c;
    if (bc < 0) throw PlanningFailure("no gamma design covers the files");

    GammaDesign d = GammaDesign::zero(K);
    int f = N;
    int c = bc;
    while (f > 0) {
        const Item& it = items[parent[f * width + c]];
        if (it.coding) ++d.c(it.p);
        else ++d.r(it.p);
        f -= it.files;
        c -= it.comm;
    }
    return d;
}

GammaDesign design_total(const Instance& inst) {
    const int K = inst.nodes();
    const int N = inst.files();
    const int L = inst.total_budget();
    GammaDesign d = GammaDesign::zero(K);
    if (K == 2) {
        d.c(1) = std::min(L, N);
        d.c(2) = std::max(N - L, 0);
        return d;
    }
    if (K == 3) {
        GammaDesign f = design_total_k3_formula(inst);
        try {
            f.validate(inst);
            return f;
        } catch (const InvalidInput&) {
            return design_total_search(inst);
        }
    }
    if (regime_coding(inst)) {
        d.c(K - 1) = L;
        d.c(K) = N - (K - 1) * L;
        return d;
    }
    if (regime_nocoding(inst)) {
        d.c(1) = N;
        return d;
    }
    return design_total_search(inst);
}

namespace {

NodeId next_node(NodeId k, int K) { return k % K + 1; }

} // namespace

Scheme plan_total(const Instance& inst, const GammaDesign& d) {
    d.validate(inst);
    const int K = inst.nodes();
    std::vector<int> rem = inst.budgets();
    auto left = [&](NodeId k) -> int& { return rem[k - 1]; };

    std::vector<std::set<FileId>> assigned(K);
    ShufflePlan plan;
    NodeId k = 1;
    FileId n = 1;

    for (int p = 1; p <= K; ++p) {
        const int load = static_cast<int>(binomial(K - 1, p));
        const auto sets = subsets_of_size(K, p);
        for (int i = 1; i <= d.c(p); ++i) {
            int steps = 0;
            while (left(k) < load) {
                k = next_node(k, K);
                if (++steps >= K)
                    throw PlanningFailure("no node can send a coding batch of order " + std::to_string(p));
            }
            std::map<NodeSet, FileId> batch;
            for (NodeSet a : sets) {
                if (!a.contains(k)) continue;
                for (NodeId m : a.members()) assigned[m - 1].insert(n);
                batch[a] = n++;
            }
            for (NodeSet a : sets) {
                if (a.contains(k)) continue;
                Transmission tx{k, {}, 1};
                for (NodeId j : a.members()) tx.payload.insert({j, batch.at(a.with(k).without(j))});
                plan.transmissions.push_back(std::move(tx));
            }
            left(k) -= load;
            k = next_node(k, K);
        }
    }

    for (int p = 2; p <= K - 1; ++p) {
        const auto sets = subsets_of_size(K, p);
        for (int i = 1; i <= d.r(p); ++i) {
            NodeSet chosen;
            for (int steps = 0;; ++steps) {
                if (steps >= K)
                    throw PlanningFailure("no node group can forward a redundant file of order " +
                                          std::to_string(p));
                for (NodeSet a : sets) {
                    if (!a.contains(k)) continue;
                    int sum = 0;
                    for (NodeId m : a.members()) sum += left(m);
                    if (sum >= K - p) {
                        chosen = a;
                        break;
                    }
                }
                if (!chosen.empty()) break;
                k = next_node(k, K);
            }
            for (NodeId m : chosen.members()) assigned[m - 1].insert(n);
            NodeSet senders = chosen;
            for (NodeId j = 1; j <= K; ++j) {
                if (chosen.contains(j)) continue;
                while (left(k) == 0) {
                    senders = senders.without(k);
                    if (senders.empty()) throw PlanningFailure("redundant file has no sender with budget left");
                    k = senders.members().back();
                }
                plan.transmissions.push_back({k, {{j, n}}, 1});
                left(k) -= 1;
            }
            ++n;
            k = next_node(k, K);
        }
    }
    return {Placement(std::move(assigned)), std::move(plan)};
}

} // namespace cdc
