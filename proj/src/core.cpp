#include "cdc/core.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace cdc {

WrongK::WrongK(int expected, int actual)
    : Error("expected K=" + std::to_string(expected) + ", got K=" + std::to_string(actual)) {}

BudgetViolation::BudgetViolation(int node)
    : Error("node " + std::to_string(node) + " exceeds its communication budget"), node_(node) {}

UndecodablePayload::UndecodablePayload(int receiver, std::size_t transmission)
    : Error("node " + std::to_string(receiver) + " cannot decode transmission #" +
            std::to_string(transmission)),
      receiver_(receiver), transmission_(transmission) {}

namespace {

std::string describe_gaps(const std::vector<MissingValue>& gaps) {
    std::string s = std::to_string(gaps.size()) + " intermediate value(s) missing";
    std::size_t shown = 0;
    for (const auto& g : gaps) {
        if (shown++ == 8) {
            s += " ...";
            break;
        }
        s += " (node " + std::to_string(g.node) + ", q=" + std::to_string(g.function) +
             ", n=" + std::to_string(g.file) + ")";
    }
    return s;
}

} // namespace

MissingIntermediate::MissingIntermediate(std::vector<MissingValue> gaps)
    : Error(describe_gaps(gaps)), gaps_(std::move(gaps)) {}

NodeSet::NodeSet(std::initializer_list<NodeId> nodes) {
    for (NodeId k : nodes) {
        if (k < 1 || k > kMaxNodes) throw InvalidInput("node index out of range");
        mask_ |= 1u << (k - 1);
    }
}

NodeSet NodeSet::all(int node_count) {
    return from_mask(node_count >= 32 ? ~0u : (1u << node_count) - 1);
}

int NodeSet::size() const noexcept { return std::popcount(mask_); }

std::vector<NodeId> NodeSet::members() const {
    std::vector<NodeId> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::strong_ordering operator<=>(NodeSet a, NodeSet b) {
    if (a.mask_ == b.mask_) return std::strong_ordering::equal;
    auto am = a.members();
    auto bm = b.members();
    return std::lexicographical_compare_three_way(am.begin(), am.end(), bm.begin(), bm.end());
}

namespace {

void subsets_rec(int node_count, int p, int next, std::uint32_t mask, std::vector<NodeSet>& out) {
    if (p == 0) {
        out.push_back(NodeSet::from_mask(mask));
        return;
    }
    for (int k = next; k <= node_count - p + 1; ++k)
        subsets_rec(node_count, p - 1, k + 1, mask | (1u << (k - 1)), out);
}

} // namespace

std::vector<NodeSet> subsets_of_size(int node_count, int p) {
    std::vector<NodeSet> out;
    if (p < 0 || p > node_count) return out;
    subsets_rec(node_count, p, 1, 0, out);
    return out;
}

std::vector<NodeSet> nonempty_subsets(int node_count) {
    std::vector<NodeSet> out;
    for (std::uint32_t m = 1; m < (1u << node_count); ++m) out.push_back(NodeSet::from_mask(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return -floor_div(-num, den); }

Instance::Instance(int nodes, int functions, int files, int iv_bits, int file_bits,
                   std::vector<int> budgets)
    : nodes_(nodes), functions_(functions), files_(files), iv_bits_(iv_bits),
      file_bits_(file_bits), budgets_(std::move(budgets)), total_budget_(0) {
    if (nodes_ < 2) throw InvalidInput("K must be at least 2");
    if (nodes_ > kMaxNodes) throw InvalidInput("K exceeds the supported maximum of 16");
    if (files_ < nodes_) throw InvalidInput("N must be at least K");
    if (functions_ <= 0 || functions_ % nodes_ != 0)
        throw InvalidInput("Q must be a positive multiple of K");
    if (iv_bits_ <= 0 || file_bits_ <= 0) throw InvalidInput("B and F must be positive");
    if (static_cast<int>(budgets_.size()) != nodes_)
        throw InvalidInput("L must have exactly K entries");
    for (int l : budgets_) {
        if (l < 0) throw InvalidInput("budgets must be nonnegative");
        total_budget_ += l;
    }
}

Instance Instance::with_budgets(int files, std::vector<int> budgets) {
    int k = static_cast<int>(budgets.size());
    return Instance(k, k, files, 32, 256, std::move(budgets));
}

std::vector<int> Instance::reduce_set(NodeId k) const {
    std::vector<int> w;
    int per = functions_per_node();
    for (int q = (k - 1) * per + 1; q <= k * per; ++q) w.push_back(q);
    return w;
}

Placement::Placement(std::vector<std::set<FileId>> assigned) : assigned_(std::move(assigned)) {}

NodeSet Placement::holders(FileId n) const {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < assigned_.size(); ++k)
        if (assigned_[k].contains(n)) mask |= 1u << k;
    return NodeSet::from_mask(mask);
}

void Placement::validate(const Instance& inst) const {
    if (nodes() != inst.nodes()) throw InvalidInput("placement must list exactly K nodes");
    std::vector<bool> seen(inst.files() + 1, false);
    for (const auto& files : assigned_) {
        for (FileId n : files) {
            if (n < 1 || n > inst.files()) throw InvalidInput("file index out of range in placement");
            seen[n] = true;
        }
    }
    for (int n = 1; n <= inst.files(); ++n)
        if (!seen[n]) throw InvalidInput("file " + std::to_string(n) + " is placed nowhere");
}

int ExclusivityProfile::at(NodeSet a) const {
    auto it = counts.find(a);
    return it == counts.end() ? 0 : it->second;
}

ExclusivityProfile exclusivity_profile(const Placement& p, const Instance& inst) {
    ExclusivityProfile prof;
    for (NodeSet a : nonempty_subsets(inst.nodes())) prof.counts[a] = 0;
    for (FileId n = 1; n <= inst.files(); ++n) {
        NodeSet h = p.holders(n);
        if (!h.empty()) ++prof.counts[h];
    }
    return prof;
}

void check_plan(const Placement& p, const ShufflePlan& plan, const Instance& inst) {
    const int K = inst.nodes();
    for (std::size_t t = 0; t < plan.transmissions.size(); ++t) {
        const auto& tx = plan.transmissions[t];
        std::string where = "transmission #" + std::to_string(t) + ": ";
        if (tx.sender < 1 || tx.sender > K) throw InvalidInput(where + "sender out of range");
        if (tx.payload.empty()) throw InvalidInput(where + "empty payload");
        if (tx.width_iv != 1) throw InvalidInput(where + "width_iv must be 1");
        for (const auto& g : tx.payload) {
            if (g.owner < 1 || g.owner > K) throw InvalidInput(where + "owner out of range");
            if (g.owner == tx.sender) throw InvalidInput(where + "sender cannot be an owner");
            if (g.file < 1 || g.file > inst.files()) throw InvalidInput(where + "file out of range");
            if (!p.holds(tx.sender, g.file))
                throw InvalidInput(where + "sender does not hold file " + std::to_string(g.file));
        }
    }
}

LoadReport measure_loads(const Placement& p, const ShufflePlan& plan, const Instance& inst) {
    const int K = inst.nodes();
    LoadReport r;
    r.per_node_load.resize(K);
    r.egress_bits.assign(K, 0);
    for (NodeId k = 1; k <= K; ++k) {
        r.per_node_load[k - 1] = p.load(k);
        r.total += p.load(k);
        r.worst = std::max(r.worst, p.load(k));
    }
    for (const auto& tx : plan.transmissions) {
        if (tx.sender < 1 || tx.sender > K) throw InvalidInput("sender out of range");
        r.egress_bits[tx.sender - 1] += inst.group_bits() * tx.width_iv;
    }
    const std::int64_t denom = std::int64_t(inst.functions()) * inst.iv_bits();
    for (NodeId k = 1; k <= K; ++k) {
        Rational norm(K * r.egress_bits[k - 1], denom);
        r.per_node_egress_norm.push_back(norm);
        if (norm > Rational(inst.budget(k))) r.over_budget.push_back(k);
    }
    return r;
}

LoadReport load_report(const Placement& p, const ShufflePlan& plan, const Instance& inst) {
    LoadReport r = measure_loads(p, plan, inst);
    if (!r.over_budget.empty()) throw BudgetViolation(r.over_budget.front());
    return r;
}

} // namespace cdc
