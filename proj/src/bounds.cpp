#include "cdc/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace cdc {

namespace {

void require_k(const Instance& inst, int k) {
    if (inst.nodes() != k) throw WrongK(k, inst.nodes());
}

int seven_thirds(const Instance& inst) {
    return static_cast<int>(ceil_div(7LL * inst.files() - 2LL * inst.total_budget(), 3));
}

} // namespace

int BoundReport::term(const std::string& name) const {
    for (const auto& t : worst_lower_terms)
        if (t.name == name) return t.value;
    throw InvalidInput("no bound term named " + name);
}

int min_pair_sum(const Instance& inst) {
    std::vector<int> l = inst.budgets();
    std::sort(l.begin(), l.end());
    return l[0] + l[1];
}

int min_budget(const Instance& inst) {
    return *std::min_element(inst.budgets().begin(), inst.budgets().end());
}

int max_budget(const Instance& inst) {
    return *std::max_element(inst.budgets().begin(), inst.budgets().end());
}

LoadPair optimum_k2(const Instance& inst) {
    require_k(inst, 2);
    const int N = inst.files();
    const int L = inst.total_budget();
    int total = std::max(N, 2 * N - L);
    int worst = N - std::min({inst.budget(1), inst.budget(2), N - (N + 1) / 2});
    return {total, worst};
}

TotalK3 total_formula_k3(const Instance& inst) {
    require_k(inst, 3);
    const int N = inst.files();
    const int L = inst.total_budget();
    int value = std::max({N, seven_thirds(inst), 3 * N - 2 * L});
    bool even = std::all_of(inst.budgets().begin(), inst.budgets().end(),
                            [](int l) { return l % 2 == 0; });
    return {value, even};
}

int total_optimum_k3(const Instance& inst) {
    TotalK3 t = total_formula_k3(inst);
    if (!t.characterized)
        throw PreconditionViolated("total optimum for K=3 is characterized only for even budgets");
    return t.value;
}

BoundReport worst_lower_k3(const Instance& inst) {
    require_k(inst, 3);
    const int N = inst.files();
    BoundReport r;
    r.worst_lower_terms = {
        {"full_cut", static_cast<int>(ceil_div(N, 3))},
        {"single_cut", N - min_pair_sum(inst)},
        {"pair_cut", static_cast<int>(ceil_div(2LL * N - min_budget(inst), 4))},
        {"seven_thirds", static_cast<int>(ceil_div(seven_thirds(inst), 3))},
    };
    r.worst_lower = 0;
    for (const auto& t : r.worst_lower_terms) r.worst_lower = std::max(r.worst_lower, t.value);
    return r;
}

int contradiction_bound_k3(const Instance& inst) {
    require_k(inst, 3);
    const std::int64_t N = inst.files();
    for (std::int64_t beta = N; beta >= 0; --beta) {
        std::int64_t tightened = 0;
        for (int l : inst.budgets()) tightened += std::min<std::int64_t>(l, 2 * (beta - 1));
        std::int64_t rhs = ceil_div(ceil_div(7 * N - 2 * tightened, 3), 3);
        if (beta <= rhs) return static_cast<int>(beta);
    }
    return 0;
}

ConditionsK3 worst_conditions_k3(const Instance& inst) {
    require_k(inst, 3);
    const int N = inst.files();
    const int lmin = min_budget(inst);
    const int lmax = max_budget(inst);
    const int c = static_cast<int>(ceil_div(2LL * N - lmin, 4));
    ConditionsK3 out;
    out.c1 = lmin >= 2 * ceil_div(N, 3);
    out.c2 = 2 * inst.total_budget() <= N;
    out.c3 = lmin >= 2 && 3 * lmin <= 2 * N && 3 * N - min_pair_sum(inst) <= 5 * c && 2 * c <= lmax;
    return out;
}

int worst_condition_value_k3(const Instance& inst, int condition) {
    require_k(inst, 3);
    const int N = inst.files();
    switch (condition) {
    case 1: return static_cast<int>(ceil_div(N, 3));
    case 2: return N - min_pair_sum(inst);
    case 3: return static_cast<int>(ceil_div(2LL * N - min_budget(inst), 4));
    default: throw InvalidInput("condition must be 1, 2 or 3");
    }
}

std::optional<ConditionalOptimum> worst_optimum_k3(const Instance& inst) {
    ConditionsK3 c = worst_conditions_k3(inst);
    if (c.c1) return ConditionalOptimum{worst_condition_value_k3(inst, 1), 1};
    if (c.c2) return ConditionalOptimum{worst_condition_value_k3(inst, 2), 2};
    if (c.c3) return ConditionalOptimum{worst_condition_value_k3(inst, 3), 3};
    return std::nullopt;
}

std::optional<LoadPair> regime_coding(const Instance& inst) {
    const int K = inst.nodes();
    const int N = inst.files();
    const int L = inst.total_budget();
    if (static_cast<std::int64_t>(K - 1) * L > N) return std::nullopt;
    return LoadPair{K * N - (K - 1) * L, N - L + max_budget(inst)};
}

std::optional<LoadPair> regime_nocoding(const Instance& inst) {
    const int K = inst.nodes();
    const int N = inst.files();
    const int share = static_cast<int>(ceil_div(N, K));
    if (min_budget(inst) < (K - 1) * share) return std::nullopt;
    return LoadPair{N, share};
}

Rational cutset_bound(const Instance& inst, NodeSet subset) {
    const int K = inst.nodes();
    if (subset.empty() || (subset.mask() & ~NodeSet::all(K).mask()) != 0)
        throw InvalidInput("cut-set subset must be a nonempty subset of [1..K]");
    const std::int64_t s = subset.size();
    std::int64_t outside = 0;
    for (NodeId k = 1; k <= K; ++k)
        if (!subset.contains(k)) outside += inst.budget(k);
    std::int64_t num = inst.files() * s - outside;
    if (num <= 0) return Rational(0);
    return Rational(num, s);
}

int worst_cutset_lower(const Instance& inst) {
    int best = 0;
    for (NodeSet s : nonempty_subsets(inst.nodes())) {
        Rational c = cutset_bound(inst, s) / Rational(s.size());
        best = std::max(best, static_cast<int>(ceil_div(c.numerator(), c.denominator())));
    }
    return best;
}

bool tradeoff_incompatible(const Instance& inst, int total_opt, int worst_opt) {
    require_k(inst, 3);
    return total_opt < 3 * inst.files() - 2 * worst_opt - min_pair_sum(inst);
}

namespace {

std::vector<BoundTerm> cut_terms(const Instance& inst) {
    const int K = inst.nodes();
    std::vector<BoundTerm> terms;
    for (int s = 1; s <= K; ++s) {
        int best = 0;
        for (NodeSet set : subsets_of_size(K, s)) {
            Rational c = cutset_bound(inst, set) / Rational(s);
            best = std::max(best, static_cast<int>(ceil_div(c.numerator(), c.denominator())));
        }
        std::string name = s == 1 ? "single_cut" : s == K ? "full_cut" : "cut_" + std::to_string(s);
        terms.push_back({name, best});
    }
    return terms;
}

} // namespace

BoundReport bound_report(const Instance& inst) {
    const int K = inst.nodes();
    const int N = inst.files();
    const int L = inst.total_budget();
    BoundReport r;
    auto coding = regime_coding(inst);
    auto nocoding = regime_nocoding(inst);

    if (K == 3) {
        r = worst_lower_k3(inst);
        int beta = contradiction_bound_k3(inst);
        r.worst_lower_terms.push_back({"contradiction", beta});
        r.worst_lower = std::max(r.worst_lower, beta);
    } else {
        r.worst_lower_terms = cut_terms(inst);
        for (const auto& t : r.worst_lower_terms) r.worst_lower = std::max(r.worst_lower, t.value);
    }

    if (K == 2) {
        LoadPair opt = optimum_k2(inst);
        r.total_lower = opt.total;
        r.optimal_total = opt.total;
        r.total_tag = "K2";
        r.optimal_worst = opt.worst;
        r.worst_tag = "K2";
        return r;
    }

    if (K == 3) {
        TotalK3 t = total_formula_k3(inst);
        r.total_lower = t.value;
        if (t.characterized) {
            r.optimal_total = t.value;
            r.total_tag = "K3";
        } else {
            r.total_tag = "uncharacterized";
        }
        if (auto w = worst_optimum_k3(inst)) {
            r.optimal_worst = w->value;
            r.worst_tag = "Condition" + std::to_string(w->condition);
        }
    } else {
        r.total_lower = std::max(N, K * N - (K - 1) * L);
        r.total_tag = "uncharacterized";
    }

    if (coding) {
        r.optimal_total = coding->total;
        r.total_tag = "coding_regime";
        if (!r.optimal_worst) {
            r.optimal_worst = coding->worst;
            r.worst_tag = "coding_regime";
        }
    } else if (nocoding) {
        r.optimal_total = nocoding->total;
        r.total_tag = "nocoding_regime";
        if (!r.optimal_worst) {
            r.optimal_worst = nocoding->worst;
            r.worst_tag = "nocoding_regime";
        }
    }
    if (!r.optimal_worst) r.worst_tag = "uncharacterized";
    return r;
}

} // namespace cdc
