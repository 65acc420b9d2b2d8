#include "cdc/schemes.hpp"

#include "cdc/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace cdc {

const std::array<const char*, SDesign16::Count>& SDesign16::names() {
    static const std::array<const char*, Count> n = {
        "S1", "S2", "S3", "S12r1", "S12r2", "S12c1", "S12c2", "S13r1", "S13r3", "S13c1", "S13c3",
        "S23r2", "S23r3", "S23c2", "S23c3", "S123"};
    return n;
}

namespace {

// Position of (pair, sender) inside the four-entry block of that pair.
int pair_base(NodeId i, NodeId j) {
    if (i > j) std::swap(i, j);
    if (i == 1 && j == 2) return SDesign16::S12r1;
    if (i == 1 && j == 3) return SDesign16::S13r1;
    if (i == 2 && j == 3) return SDesign16::S23r2;
    throw InvalidInput("not a node pair of a three-node system");
}

int pair_slot(NodeId i, NodeId j, NodeId sender) {
    if (sender != i && sender != j) throw InvalidInput("sender must belong to the pair");
    return sender == std::min(i, j) ? 0 : 1;
}

} // namespace

SDesign16::Index SDesign16::single_index(NodeId k) {
    if (k < 1 || k > 3) throw InvalidInput("node out of range");
    return static_cast<Index>(S1 + (k - 1));
}

SDesign16::Index SDesign16::redundant_index(NodeId i, NodeId j, NodeId sender) {
    return static_cast<Index>(pair_base(i, j) + pair_slot(i, j, sender));
}

SDesign16::Index SDesign16::coded_index(NodeId i, NodeId j, NodeId sender) {
    return static_cast<Index>(pair_base(i, j) + 2 + pair_slot(i, j, sender));
}

int SDesign16::single(NodeId k) const { return u[single_index(k)]; }
int SDesign16::redundant(NodeId i, NodeId j, NodeId s) const { return u[redundant_index(i, j, s)]; }
int SDesign16::coded(NodeId i, NodeId j, NodeId s) const { return u[coded_index(i, j, s)]; }

std::array<int, 3> SDesign16::loads() const {
    auto pair_total = [&](NodeId i, NodeId j) {
        int b = pair_base(i, j);
        return u[b] + u[b + 1] + u[b + 2] + u[b + 3];
    };
    std::array<int, 3> m{};
    m[0] = u[S1] + pair_total(1, 2) + pair_total(1, 3) + u[S123];
    m[1] = u[S2] + pair_total(1, 2) + pair_total(2, 3) + u[S123];
    m[2] = u[S3] + pair_total(1, 3) + pair_total(2, 3) + u[S123];
    return m;
}

int SDesign16::worst() const {
    auto m = loads();
    return *std::max_element(m.begin(), m.end());
}

int SDesign16::total() const {
    auto m = loads();
    return m[0] + m[1] + m[2];
}

int SDesign16::doubled_egress(NodeId k) const {
    int sum = 4 * single(k);
    for (NodeId j = 1; j <= 3; ++j) {
        if (j == k) continue;
        sum += 2 * redundant(k, j, k) + coded(k, j, k);
    }
    return sum;
}

void SDesign16::validate(const Instance& inst) const {
    if (inst.nodes() != 3) throw WrongK(3, inst.nodes());
    for (int v : u)
        if (v < 0) throw InvalidInput("sixteen-group design has a negative entry");
    if (std::accumulate(u.begin(), u.end(), 0) != inst.files())
        throw InvalidInput("sixteen-group design does not cover exactly N files");
    if (u[S12c1] != u[S13c1] || u[S12c2] != u[S23c2] || u[S13c3] != u[S23c3])
        throw InvalidInput("coded groups of the same sender must have equal sizes");
    for (NodeId k = 1; k <= 3; ++k)
        if (doubled_egress(k) > 2 * inst.budget(k))
            throw InvalidInput("sixteen-group design exceeds the budget of node " + std::to_string(k));
}

SDesign16 design_worst_condition(const Instance& inst, int condition) {
    if (inst.nodes() != 3) throw WrongK(3, inst.nodes());
    const int N = inst.files();
    SDesign16 d;
    switch (condition) {
    case 1:
        d.u[SDesign16::S1] = (N + 2) / 3;
        d.u[SDesign16::S2] = N / 3;
        d.u[SDesign16::S3] = N - (N + 2) / 3 - N / 3;
        break;
    case 2:
        for (NodeId k = 1; k <= 3; ++k)
            for (NodeId j = 1; j <= 3; ++j)
                if (j != k) d.u[SDesign16::coded_index(k, j, k)] = inst.budget(k);
        d.u[SDesign16::S123] = N - 2 * inst.total_budget();
        break;
    case 3: {
        std::array<NodeId, 3> order{1, 2, 3};
        std::stable_sort(order.begin(), order.end(),
                         [&](NodeId a, NodeId b) { return inst.budget(a) < inst.budget(b); });
        const int l1 = inst.budget(order[0]);
        const int c = static_cast<int>(ceil_div(2LL * N - l1, 4));
        d.u[SDesign16::single_index(order[0])] = N - 2 * c;
        d.u[SDesign16::single_index(order[1])] = N - 2 * c;
        d.u[SDesign16::single_index(order[2])] = c;
        d.u[SDesign16::redundant_index(order[0], order[1], order[0])] = l1 - 2 * N + 4 * c;
        d.u[SDesign16::redundant_index(order[0], order[1], order[1])] = N - l1 - c;
        break;
    }
    default:
        throw InvalidInput("condition must be 1, 2 or 3");
    }
    return d;
}

SDesign16 design_worst_search(const Instance& inst, int max_files) {
    if (inst.nodes() != 3) throw WrongK(3, inst.nodes());
    const int N = inst.files();
    if (N > max_files)
        throw GuardExceeded("sixteen-group search is limited to N <= " + std::to_string(max_files));
    const std::array<int, 3> L{inst.budget(1), inst.budget(2), inst.budget(3)};

    bool found = false;
    std::tuple<int, int, std::array<int, SDesign16::Count>> best;

    // Coded pairs x_k use 2 files and x_k budget; r-groups are pooled per pair
    // and split afterwards by a transport check.
    std::array<int, 3> s{}, x{};
    for (s[0] = 0; 2 * s[0] <= L[0] && s[0] <= N; ++s[0])
    for (s[1] = 0; 2 * s[1] <= L[1] && s[0] + s[1] <= N; ++s[1])
    for (s[2] = 0; 2 * s[2] <= L[2] && s[0] + s[1] + s[2] <= N; ++s[2])
    for (x[0] = 0; 2 * s[0] + x[0] <= L[0] && s[0] + s[1] + s[2] + 2 * x[0] <= N; ++x[0])
    for (x[1] = 0; 2 * s[1] + x[1] <= L[1] && s[0] + s[1] + s[2] + 2 * (x[0] + x[1]) <= N; ++x[1])
    for (x[2] = 0; 2 * s[2] + x[2] <= L[2] && s[0] + s[1] + s[2] + 2 * (x[0] + x[1] + x[2]) <= N; ++x[2]) {
        const int used = s[0] + s[1] + s[2] + 2 * (x[0] + x[1] + x[2]);
        std::array<int, 3> slack;
        for (int k = 0; k < 3; ++k) slack[k] = L[k] - 2 * s[k] - x[k];
        const int slack_sum = slack[0] + slack[1] + slack[2];
        for (int r12 = 0; used + r12 <= N && r12 <= slack[0] + slack[1]; ++r12)
        for (int r13 = 0; used + r12 + r13 <= N && r13 <= slack[0] + slack[2] && r12 + r13 <= slack_sum; ++r13)
        for (int r23 = 0; used + r12 + r13 + r23 <= N && r23 <= slack[1] + slack[2] &&
                          r12 + r13 + r23 <= slack_sum; ++r23) {
            const int full = N - used - r12 - r13 - r23;
            const int g12 = r12 + x[0] + x[1];
            const int g13 = r13 + x[0] + x[2];
            const int g23 = r23 + x[1] + x[2];
            const int m1 = s[0] + g12 + g13 + full;
            const int m2 = s[1] + g12 + g23 + full;
            const int m3 = s[2] + g13 + g23 + full;
            const int worst = std::max({m1, m2, m3});
            const int total = m1 + m2 + m3;
            if (found && std::make_pair(worst, total) > std::make_pair(std::get<0>(best), std::get<1>(best)))
                continue;

            // Lexicographically smallest split of the pooled r-groups.
            bool split = false;
            std::array<int, SDesign16::Count> u{};
            for (int a = 0; a <= r12 && !split; ++a) {
                const int b = r12 - a;
                if (a > slack[0] || b > slack[1]) continue;
                for (int c = 0; c <= r13 && !split; ++c) {
                    const int dd = r13 - c;
                    if (a + c > slack[0] || dd > slack[2]) continue;
                    for (int e = 0; e <= r23 && !split; ++e) {
                        const int f = r23 - e;
                        if (b + e > slack[1] || dd + f > slack[2]) continue;
                        u = {s[0], s[1], s[2], a, b, x[0], x[1], c, dd, x[0], x[2], e, f, x[1], x[2], full};
                        split = true;
                    }
                }
            }
            if (!split) continue;
            auto cand = std::make_tuple(worst, total, u);
            const bool better = !found || std::make_pair(worst, total) < std::make_pair(std::get<0>(best), std::get<1>(best)) ||
                                (std::make_pair(worst, total) == std::make_pair(std::get<0>(best), std::get<1>(best)) &&
                                 u > std::get<2>(best));
            if (better) {
                best = cand;
                found = true;
            }
        }
    }
    if (!found) throw PlanningFailure("sixteen-group search found no feasible design");
    SDesign16 d;
    d.u = std::get<2>(best);
    return d;
}

SDesign16 design_worst_k3(const Instance& inst) {
    if (inst.nodes() != 3) throw WrongK(3, inst.nodes());
    if (auto opt = worst_optimum_k3(inst)) {
        SDesign16 d = design_worst_condition(inst, opt->condition);
        try {
            d.validate(inst);
            return d;
        } catch (const InvalidInput&) {
        }
    }
    return design_worst_search(inst);
}

Scheme plan_worst_k3(const Instance& inst, const SDesign16& d) {
    d.validate(inst);
    std::array<std::vector<FileId>, SDesign16::Count> groups;
    FileId n = 1;
    for (int i = 0; i < SDesign16::Count; ++i)
        for (int c = 0; c < d.u[i]; ++c) groups[i].push_back(n++);

    std::vector<std::set<FileId>> assigned(3);
    auto place = [&](int index, std::initializer_list<NodeId> nodes) {
        for (NodeId k : nodes) assigned[k - 1].insert(groups[index].begin(), groups[index].end());
    };
    place(SDesign16::S1, {1});
    place(SDesign16::S2, {2});
    place(SDesign16::S3, {3});
    for (int i = SDesign16::S12r1; i <= SDesign16::S12c2; ++i) place(i, {1, 2});
    for (int i = SDesign16::S13r1; i <= SDesign16::S13c3; ++i) place(i, {1, 3});
    for (int i = SDesign16::S23r2; i <= SDesign16::S23c3; ++i) place(i, {2, 3});
    place(SDesign16::S123, {1, 2, 3});

    ShufflePlan plan;
    for (NodeId k = 1; k <= 3; ++k) {
        const NodeId k1 = k % 3 + 1;
        const NodeId k2 = k1 % 3 + 1;
        const auto& own = groups[SDesign16::single_index(k)];
        for (FileId f : own) plan.transmissions.push_back({k, {{k1, f}}, 1});
        for (FileId f : own) plan.transmissions.push_back({k, {{k2, f}}, 1});
        for (FileId f : groups[SDesign16::redundant_index(k, k1, k)])
            plan.transmissions.push_back({k, {{k2, f}}, 1});
        for (FileId f : groups[SDesign16::redundant_index(k, k2, k)])
            plan.transmissions.push_back({k, {{k1, f}}, 1});
        const auto& ca = groups[SDesign16::coded_index(k, k1, k)];
        const auto& cb = groups[SDesign16::coded_index(k, k2, k)];
        for (std::size_t i = 0; i < ca.size(); ++i)
            plan.transmissions.push_back({k, {{k2, ca[i]}, {k1, cb[i]}}, 1});
    }
    return {Placement(std::move(assigned)), std::move(plan)};
}

} // namespace cdc
