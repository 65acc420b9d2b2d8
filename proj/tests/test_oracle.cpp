#include "cdc/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace cdc;

namespace {

Instance k3(int n, int l1, int l2, int l3) { return Instance::with_budgets(n, {l1, l2, l3}); }

OracleLimits serial() {
    OracleLimits l;
    l.parallel = false;
    return l;
}

} // namespace

TEST_CASE("gamma oracle on the small examples") {
    CHECK(exhaust_gamma(k3(7, 2, 2, 14)).minimum == 7);
    CHECK(exhaust_gamma(k3(8, 2, 4, 6)).minimum == 11);
    CHECK(exhaust_gamma(Instance::with_budgets(5, {0, 0})).minimum == 10);
    auto o = exhaust_gamma(k3(8, 2, 4, 6));
    CHECK(o.count_of_argmins >= 1);
    CHECK(o.one_argmin.objective() == 11);
    CHECK_NOTHROW(o.one_argmin.validate(k3(8, 2, 4, 6)));
}

TEST_CASE("gamma oracle guard") {
    CHECK_THROWS_AS(exhaust_gamma(Instance::with_budgets(13, {1, 1, 1})), GuardExceeded);
    CHECK_THROWS_AS(exhaust_gamma(Instance::with_budgets(6, {1, 1, 1, 1, 1})), GuardExceeded);
    OracleLimits wide;
    wide.gamma_max_files = 14;
    CHECK(exhaust_gamma(Instance::with_budgets(13, {0, 0, 0}), wide).minimum == 39);
}

TEST_CASE("gamma oracle equals the total formula on the even grid") {
    for (int N = 3; N <= 10; ++N)
        for (int l1 = 0; l1 <= 2 * N; l1 += 2)
            for (int l2 = 0; l2 <= 2 * N; l2 += 2)
                for (int l3 = 0; l3 <= 2 * N; l3 += 2) {
                    auto inst = k3(N, l1, l2, l3);
                    CHECK(exhaust_gamma(inst, serial()).minimum == total_optimum_k3(inst));
                }
}

TEST_CASE("sixteen-group oracle on the three seven-file cases") {
    CHECK(exhaust_s16(k3(7, 2, 2, 14)).minimum == 4);
    CHECK(exhaust_s16(k3(7, 2, 4, 12)).minimum == 3);
    CHECK(exhaust_s16(k3(7, 6, 6, 6)).minimum == 3);
    auto a = exhaust_s16(k3(7, 2, 2, 14));
    CHECK(a.count_of_argmins > 1);
    CHECK(a.one_argmin.worst() == 4);
    CHECK(a.attained.contains(LoadPair{9, 4}));
    CHECK_THROWS_AS(exhaust_s16(k3(11, 1, 1, 1)), GuardExceeded);
    CHECK_THROWS_AS(exhaust_s16(Instance::with_budgets(4, {1, 1})), WrongK);
}

TEST_CASE("sixteen-group oracle against the converse and the conditions") {
    int characterized = 0;
    for (int N = 3; N <= 8; ++N)
        for (int l1 = 0; l1 <= 2 * N; ++l1)
            for (int l2 = l1; l2 <= 2 * N; ++l2)
                for (int l3 = l2; l3 <= 2 * N; ++l3) {
                    auto inst = k3(N, l1, l2, l3);
                    const int found = exhaust_s16(inst, serial()).minimum;
                    const int conv = std::max(worst_lower_k3(inst).worst_lower, contradiction_bound_k3(inst));
                    CHECK(found >= conv);
                    if (auto opt = worst_optimum_k3(inst)) {
                        ++characterized;
                        CHECK(found == opt->value);
                    }
                }
    CHECK(characterized > 100);
}

TEST_CASE("contradiction bound is tight on the seven-file instance") {
    auto inst = k3(7, 2, 2, 14);
    CHECK(exhaust_s16(inst).minimum == contradiction_bound_k3(inst));
}

TEST_CASE("dual oracle on the seven-file instance") {
    auto o = exhaust_dual(k3(7, 2, 2, 14));
    CHECK(o.frontier == std::vector<LoadPair>{{7, 5}, {11, 4}});
    CHECK(o.minimum == LoadPair{11, 4});
    CHECK_FALSE(o.attained.contains(LoadPair{7, 4}));
    CHECK_FALSE(o.attained.contains(LoadPair{9, 4}));
    CHECK_NOTHROW(o.one_argmin.validate(k3(7, 2, 2, 14)));
}

TEST_CASE("dual oracle frontiers collapse in the regimes") {
    auto a = exhaust_dual(k3(9, 6, 6, 6));
    CHECK(a.frontier == std::vector<LoadPair>{{9, 3}});
    auto b = exhaust_dual(k3(5, 0, 0, 0));
    CHECK(b.frontier == std::vector<LoadPair>{{15, 5}});
    CHECK(b.attained.size() == 1);
    auto c = exhaust_dual(Instance::with_budgets(5, {2, 3}));
    CHECK(c.frontier == std::vector<LoadPair>{{5, 3}});
}

TEST_CASE("dual oracle guard") {
    CHECK_THROWS_AS(exhaust_dual(k3(11, 1, 1, 1)), GuardExceeded);
    CHECK_THROWS_AS(exhaust_dual(Instance::with_budgets(6, {1, 1, 1, 1, 1})), GuardExceeded);
}

TEST_CASE("pareto frontier helper") {
    auto f = pareto_frontier({{9, 4}, {7, 5}, {11, 4}, {8, 5}, {7, 6}, {12, 3}});
    CHECK(f == std::vector<LoadPair>{{7, 5}, {9, 4}, {12, 3}});
}

TEST_CASE("parallel and serial enumeration agree") {
    for (auto inst : {k3(7, 2, 2, 14), k3(9, 3, 5, 8), k3(10, 1, 2, 2)}) {
        auto a = exhaust_s16(inst);
        auto b = exhaust_s16(inst, serial());
        CHECK(a.minimum == b.minimum);
        CHECK(a.count_of_argmins == b.count_of_argmins);
        CHECK(a.one_argmin == b.one_argmin);
        CHECK(a.frontier == b.frontier);
        auto c = exhaust_dual(inst);
        auto d = exhaust_dual(inst, serial());
        CHECK(c.minimum == d.minimum);
        CHECK(c.one_argmin == d.one_argmin);
        CHECK(c.frontier == d.frontier);
        auto e = exhaust_gamma(inst);
        auto g = exhaust_gamma(inst, serial());
        CHECK(e.one_argmin == g.one_argmin);
        CHECK(e.count_of_argmins == g.count_of_argmins);
    }
}

TEST_CASE("joint infeasibility check") {
    auto a = joint_infeasibility_check(k3(7, 2, 2, 14), 7, 4);
    CHECK(a.condition);
    CHECK(a.consistent);
    CHECK_FALSE(a.vacuous);
    CHECK_FALSE(a.s16_witness);
    CHECK_FALSE(a.dual_witness);

    auto c = joint_infeasibility_check(k3(7, 6, 6, 6), 7, 3);
    CHECK_FALSE(c.condition);
    CHECK(c.vacuous);
    CHECK(c.consistent);
    REQUIRE(c.s16_witness);
    CHECK(c.s16_witness->total() == 7);
    CHECK(c.s16_witness->worst() == 3);

    auto z = joint_infeasibility_check(k3(4, 0, 0, 0), 12, 4);
    CHECK(z.vacuous);
    CHECK(z.consistent);
}

TEST_CASE("tradeoff condition is never contradicted by an enumerated design") {
    for (int N = 3; N <= 7; ++N)
        for (int l1 = 0; l1 <= 2 * N; l1 += 1)
            for (int l2 = l1; l2 <= 2 * N; l2 += 2)
                for (int l3 = l2; l3 <= 2 * N; l3 += 3) {
                    auto inst = k3(N, l1, l2, l3);
                    auto opt = worst_optimum_k3(inst);
                    const int w = opt ? opt->value : exhaust_s16(inst, serial()).minimum;
                    const int t = total_formula_k3(inst).value;
                    CHECK(joint_infeasibility_check(inst, t, w, serial()).consistent);
                }
}

TEST_CASE("designers reach the oracle minima") {
    for (int N = 3; N <= 8; ++N)
        for (int l1 = 0; l1 <= 2 * N; ++l1)
            for (int l2 = l1; l2 <= 2 * N; l2 += 2)
                for (int l3 = l2; l3 <= 2 * N; l3 += 2) {
                    auto inst = k3(N, l1, l2, l3);
                    CHECK(design_total(inst).objective() == exhaust_gamma(inst, serial()).minimum);
                    CHECK(design_worst_k3(inst).worst() == exhaust_s16(inst, serial()).minimum);
                    auto d = design_dual(inst);
                    CHECK(LoadPair{d.total(), d.worst()} == exhaust_dual(inst, serial()).minimum);
                }
}

TEST_CASE("designers reach the oracle minima for four nodes") {
    std::mt19937 rng(31);
    for (int t = 0; t < 40; ++t) {
        const int N = 4 + static_cast<int>(rng() % 5);
        std::vector<int> L(4);
        for (int& l : L) l = static_cast<int>(rng() % (N + 1));
        auto inst = Instance::with_budgets(N, L);
        CHECK(design_total(inst).objective() == exhaust_gamma(inst, serial()).minimum);
        auto d = design_dual(inst);
        CHECK(LoadPair{d.total(), d.worst()} == exhaust_dual(inst, serial()).minimum);
    }
}
