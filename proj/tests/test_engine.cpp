#include "cdc/engine.hpp"
#include "cdc/schemes.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cdc;

namespace {

Instance k3(int n, int l1, int l2, int l3) { return Instance::with_budgets(n, {l1, l2, l3}); }

Placement fig1_placement() { return Placement({{1, 6, 7}, {6, 7}, {2, 3, 4, 5}}); }

ShufflePlan fig1_plan() {
    ShufflePlan plan;
    plan.transmissions.push_back({1, {{2, 1}}, 1});
    plan.transmissions.push_back({1, {{3, 1}}, 1});
    plan.transmissions.push_back({2, {{3, 6}}, 1});
    plan.transmissions.push_back({2, {{3, 7}}, 1});
    for (FileId n = 2; n <= 5; ++n) {
        plan.transmissions.push_back({3, {{1, n}}, 1});
        plan.transmissions.push_back({3, {{2, n}}, 1});
    }
    return plan;
}

} // namespace

TEST_CASE("generated blocks are deterministic and masked to B bits") {
    auto a = generate_block(42, 1, 1, 70);
    CHECK(a.size() == 2);
    CHECK((a[1] >> 6) == 0);
    CHECK(a == generate_block(42, 1, 1, 70));
    CHECK(a != generate_block(43, 1, 1, 70));
    CHECK(a != generate_block(42, 2, 1, 70));
    CHECK(a != generate_block(42, 1, 2, 70));
    CHECK(generate_block(1, 1, 1, 64).size() == 1);
}

TEST_CASE("map phase holds exactly the mapped files") {
    Instance inst(3, 3, 7, 32, 256, {2, 2, 14});
    auto store = map_phase(inst, fig1_placement(), 7);
    CHECK(store.count(3) == 12);
    CHECK(store.count(1) == 9);
    CHECK(store.count(2) == 6);
    CHECK(store.generated == 27);
    CHECK(store.holds(3, 2, 5));
    CHECK_FALSE(store.holds(3, 1, 1));

    auto again = map_phase(inst, fig1_placement(), 7);
    CHECK(again.held == store.held);

    auto sparse = map_phase(k3(3, 3, 0, 0), Placement({{1, 2, 3}, {}, {}}), 7);
    CHECK(sparse.count(2) == 0);
    CHECK(sparse.count(1) == 9);
}

TEST_CASE("side information decodes a coded pair") {
    auto inst = k3(8, 4, 4, 4);
    Placement p({{1, 4, 6, 8}, {2, 5, 7}, {3, 6, 7, 8}});
    ShufflePlan plan;
    plan.transmissions.push_back({3, {{1, 7}, {2, 6}}, 1});
    auto store = map_phase(inst, p, 11);
    CHECK_FALSE(store.holds(1, 1, 7));
    CHECK_FALSE(store.holds(2, 2, 6));
    auto out = shuffle_phase(inst, plan, store);
    CHECK(out.faults.empty());
    CHECK(out.decoded == 2);
    CHECK(store.holds(1, 1, 7));
    CHECK(store.holds(2, 2, 6));
    CHECK(store.held[0].at({1, 7}) == generate_block(11, 1, 7, 32));
    CHECK(store.held[1].at({2, 6}) == generate_block(11, 2, 6, 32));
    CHECK(out.egress_bits == std::vector<std::int64_t>{0, 0, 32});
}

TEST_CASE("uncoded payloads are stored directly") {
    auto inst = k3(3, 2, 2, 2);
    Placement p({{1}, {2}, {3}});
    ShufflePlan plan;
    plan.transmissions.push_back({1, {{2, 1}}, 1});
    auto store = map_phase(inst, p, 2);
    shuffle_phase(inst, plan, store);
    CHECK(store.holds(2, 2, 1));
    CHECK(store.held[1].at({2, 1}) == generate_block(2, 2, 1, 32));
}

TEST_CASE("a payload with two unknowns at the receiver is undecodable") {
    auto inst = k3(3, 2, 2, 2);
    Placement p({{1, 2}, {3}, {3}});
    ShufflePlan plan;
    plan.transmissions.push_back({1, {{3, 1}}, 1});
    plan.transmissions.push_back({1, {{2, 1}, {2, 2}}, 1});
    auto store = map_phase(inst, p, 3);
    try {
        shuffle_phase(inst, plan, store);
        FAIL("expected UndecodablePayload");
    } catch (const UndecodablePayload& e) {
        CHECK(e.receiver() == 2);
        CHECK(e.transmission() == 1);
    }
    auto fresh = map_phase(inst, p, 3);
    auto out = run_shuffle(inst, plan, fresh);
    REQUIRE(out.undecodable.size() == 1);
    CHECK(out.undecodable[0] == std::pair<NodeId, std::size_t>{2, 1});
}

TEST_CASE("a sender lacking a block is rejected") {
    auto inst = k3(3, 2, 2, 2);
    Placement p({{1}, {2}, {3}});
    ShufflePlan plan;
    plan.transmissions.push_back({1, {{2, 3}}, 1});
    auto store = map_phase(inst, p, 3);
    CHECK_THROWS_AS(shuffle_phase(inst, plan, store), InvalidInput);
}

TEST_CASE("egress beyond the budget is reported") {
    auto inst = k3(3, 2, 3, 3);
    Placement p({{1, 2}, {2, 3}, {3}});
    ShufflePlan plan;
    plan.transmissions.push_back({1, {{2, 1}}, 1});
    plan.transmissions.push_back({1, {{3, 1}}, 1});
    plan.transmissions.push_back({1, {{3, 2}}, 1});
    plan.transmissions.push_back({2, {{1, 3}}, 1});
    auto store = map_phase(inst, p, 3);
    try {
        shuffle_phase(inst, plan, store);
        FAIL("expected BudgetViolation");
    } catch (const BudgetViolation& e) {
        CHECK(e.node() == 1);
    }
    auto v = verify_plan(inst, p, plan, 3);
    CHECK_FALSE(v.feasible);
    CHECK(v.budget_violations == std::vector<NodeId>{1});
    CHECK(v.report.per_node_egress_norm[0] == Rational(3));
    CHECK(v.missing.empty());
}

TEST_CASE("reduce phase on the seven-file scheme") {
    Instance inst(3, 3, 7, 32, 256, {2, 2, 14});
    auto store = map_phase(inst, fig1_placement(), 5);
    shuffle_phase(inst, fig1_plan(), store);
    auto out = reduce_phase(inst, store);
    CHECK(out.digests.size() == 3);
    CHECK(out.digests.contains({2, 2}));

    auto again = map_phase(inst, fig1_placement(), 5);
    shuffle_phase(inst, fig1_plan(), again);
    CHECK(reduce_phase(inst, again).digests == out.digests);

    auto other = map_phase(inst, fig1_placement(), 6);
    shuffle_phase(inst, fig1_plan(), other);
    CHECK(reduce_phase(inst, other).digests != out.digests);
}

TEST_CASE("a dropped transmission leaves exactly its values missing") {
    Instance inst(3, 3, 7, 32, 256, {2, 2, 14});
    auto plan = fig1_plan();
    plan.transmissions.erase(plan.transmissions.begin() + 2);  // node 2 -> node 3, file 6
    auto store = map_phase(inst, fig1_placement(), 5);
    shuffle_phase(inst, plan, store);
    try {
        reduce_phase(inst, store);
        FAIL("expected MissingIntermediate");
    } catch (const MissingIntermediate& e) {
        CHECK(e.gaps() == std::vector<MissingValue>{{3, 3, 6}});
    }
    auto v = verify_plan(inst, fig1_placement(), plan, 5);
    CHECK_FALSE(v.feasible);
    CHECK(v.missing == std::vector<MissingValue>{{3, 3, 6}});
}

TEST_CASE("wider reduce groups are dropped as a whole") {
    Instance inst(3, 6, 7, 32, 256, {2, 2, 14});
    auto plan = fig1_plan();
    plan.transmissions.erase(plan.transmissions.begin() + 2);
    auto v = verify_plan(inst, fig1_placement(), plan, 5);
    CHECK(v.missing == std::vector<MissingValue>{{3, 5, 6}, {3, 6, 6}});
}

TEST_CASE("full replication needs no shuffle") {
    auto inst = k3(4, 0, 0, 0);
    Placement p({{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}});
    auto v = verify_plan(inst, p, {}, 1);
    CHECK(v.feasible);
    CHECK(v.output.digests.size() == 3);
}

TEST_CASE("verify the seven-file worst-case scheme") {
    auto inst = k3(7, 2, 2, 14);
    auto v = verify_plan(inst, fig1_placement(), fig1_plan(), 1);
    CHECK(v.feasible);
    CHECK(v.report.worst == 4);
    CHECK(v.errors.empty());
}

TEST_CASE("verify the asymmetric eight-file scheme") {
    auto inst = k3(8, 2, 4, 6);
    Placement p({{1, 6, 8}, {2, 4, 7}, {3, 5, 6, 7, 8}});
    ShufflePlan plan;
    for (auto [s, o, n] : std::vector<std::array<int, 3>>{
             {1, 2, 1}, {1, 3, 1}, {2, 1, 2}, {2, 3, 2}, {2, 1, 4}, {2, 3, 4},
             {3, 1, 3}, {3, 2, 3}, {3, 1, 5}, {3, 2, 5}, {3, 2, 8}})
        plan.transmissions.push_back({s, {{o, n}}, 1});
    plan.transmissions.push_back({3, {{1, 7}, {2, 6}}, 1});
    auto v = verify_plan(inst, p, plan, 1);
    CHECK(v.feasible);
    CHECK(v.report.total == 11);
    CHECK(v.report.per_node_egress_norm == std::vector<Rational>{2, 4, 6});
}

TEST_CASE("an inflated plan violates node 1's budget") {
    auto inst = k3(7, 2, 2, 14);
    auto plan = fig1_plan();
    plan.transmissions.push_back({1, {{2, 6}}, 1});  // redundant third send from node 1
    auto v = verify_plan(inst, fig1_placement(), plan, 1);
    CHECK_FALSE(v.feasible);
    CHECK(v.report.per_node_egress_norm[0] == Rational(3));
    CHECK(v.budget_violations == std::vector<NodeId>{1});
    auto store = map_phase(inst, fig1_placement(), 1);
    try {
        shuffle_phase(inst, plan, store);
        FAIL("expected BudgetViolation");
    } catch (const BudgetViolation& e) {
        CHECK(e.node() == 1);
    }
}

TEST_CASE("an adversarial XOR makes the plan infeasible") {
    auto inst = k3(7, 2, 2, 14);
    auto plan = fig1_plan();
    // Replace node 3's uncoded send of a_{1,2} by a_{1,2} xor a_{1,3}; node 1 holds neither.
    plan.transmissions[4] = {3, {{1, 2}, {1, 3}}, 1};
    auto v = verify_plan(inst, fig1_placement(), plan, 1);
    CHECK_FALSE(v.feasible);
    REQUIRE(v.undecodable.size() == 1);
    CHECK(v.undecodable[0].first == 1);
    CHECK(v.undecodable[0].second == 4);
    CHECK(v.missing == std::vector<MissingValue>{{1, 1, 2}});
}

TEST_CASE("verify_plan reports malformed plans instead of throwing") {
    auto inst = k3(3, 2, 2, 2);
    Placement p({{1}, {2}, {3}});
    ShufflePlan plan;
    plan.transmissions.push_back({1, {{2, 3}}, 1});
    auto v = verify_plan(inst, p, plan, 1);
    CHECK_FALSE(v.feasible);
    CHECK_FALSE(v.errors.empty());
}

TEST_CASE("decoded blocks match the generator across planner outputs") {
    for (int N = 3; N <= 9; ++N)
        for (int l = 0; l <= 2 * N; l += 3) {
            Instance inst(3, 6, N, 40, 64, {l, l + 1, 2 * l});
            auto s = plan_worst_k3(inst, design_worst_k3(inst));
            auto store = map_phase(inst, s.placement, N * 100 + l);
            auto out = run_shuffle(inst, s.plan, store);
            CHECK(out.faults.empty());
            CHECK(out.undecodable.empty());
            for (NodeId k = 1; k <= 3; ++k)
                for (const auto& [key, block] : store.held[k - 1])
                    CHECK(block == generate_block(store.seed, key.first, key.second, 40));
        }
}
