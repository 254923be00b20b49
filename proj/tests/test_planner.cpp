#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tgr/changeability.hpp"
#include "tgr/oracle.hpp"
#include "tgr/planner.hpp"

using namespace tgr;
using namespace tgr::test;

TEST(DecreaseDifference, Tri) {
    auto [g1, g2] = tri();
    auto step = decrease_difference(g1, g2);
    EXPECT_EQ(step.chosen, te(g1, "a", "c", 1));
    EXPECT_EQ(step.level, 0u);
    EXPECT_EQ(step.g1_ops, (ReconfigSequence{{op(g1, "a", "c", 1, 2)}}));
    EXPECT_TRUE(step.g2_ops.ops.empty());
    EXPECT_EQ(difference(apply_sequence(g1, step.g1_ops), apply_sequence(g2, step.g2_ops)), 0u);
}

TEST(DecreaseDifference, Errors) {
    auto [g1, g2] = tri();
    EXPECT_THROW((void)decrease_difference(g1, g1), PreconditionError);
    auto [i1, i2] = infeas();
    try {
        (void)decrease_difference(i1, i2);
        FAIL();
    } catch (const UnchangeableEdgeError& e) {
        EXPECT_EQ(e.witness(), te(i1, "a", "b", 1));
    }
}

// Phases whose chosen edge needs k >= 1 preparatory ops, which are then
// replayed on g2.
TEST(DecreaseDifference, SharedOpsValidOnSecondGraph) {
    std::mt19937_64 rng(31);
    std::size_t found = 0;
    for (int i = 0; i < 3000 && found < 50; ++i) {
        auto a = random_instance(rng, 4, 12, 2, 3, 3);
        auto b = (i % 2) ? random_walk(a, 1 + rng() % 12, rng) : random_relabelling(a, rng);
        if (!feasible(a, b).feasible) {
            continue;
        }
        while (difference(a, b) > 0) {
            auto step = decrease_difference(a, b);
            auto next_a = apply_sequence(a, step.g1_ops);
            auto next_b = apply_sequence(b, step.g2_ops);
            ASSERT_TRUE(validate_sequence(a, step.g1_ops, next_a).ok);
            ASSERT_TRUE(validate_sequence(b, step.g2_ops, next_b).ok);
            ASSERT_EQ(difference(next_a, next_b) + 1, difference(a, b));
            if (!step.g2_ops.ops.empty()) {
                ASSERT_GE(step.level, 1u);
                ++found;
            }
            a = next_a;
            b = next_b;
        }
    }
    EXPECT_GE(found, 10u);
}

// g1 holds v1-v3 at {1, 2}, g2 at {2, 3}. Making (v0v3, 3) a non-bridge
// moves (v1v3, 2) to time 3, a slot g2 already holds; that op is not
// replayed on g2.
TEST(DecreaseDifference, SharedOpTargetAlreadyInSecondGraph) {
    auto v = [](VertexId a, VertexId b, TimeLabel t) { return TemporalEdge{StaticEdge::make(a, b), t}; };
    std::vector<TemporalEdge> common{v(0, 1, 1), v(0, 1, 2), v(0, 1, 3), v(0, 2, 1), v(0, 2, 3),
                                     v(0, 3, 2), v(1, 2, 1), v(1, 2, 2), v(1, 2, 3), v(1, 3, 2)};
    auto e1 = common;
    e1.insert(e1.end(), {v(0, 3, 3), v(1, 3, 1)});
    auto e2 = common;
    e2.insert(e2.end(), {v(0, 3, 1), v(1, 3, 3)});
    TemporalGraph g1(4, 3, e1);
    TemporalGraph g2(4, 3, e2);
    ASSERT_TRUE(is_always_connected(g1));
    ASSERT_TRUE(is_always_connected(g2));

    auto step = decrease_difference(g1, g2);
    EXPECT_EQ(step.chosen, v(0, 3, 3));
    EXPECT_EQ(step.level, 1u);
    EXPECT_EQ(step.g1_ops, (ReconfigSequence{{{StaticEdge::make(1, 3), 2, 3}, {StaticEdge::make(0, 3), 3, 1}}}));
    EXPECT_TRUE(step.g2_ops.ops.empty());
    EXPECT_EQ(difference(apply_sequence(g1, step.g1_ops), g2), 1u);

    auto p = plan(g1, g2);
    ASSERT_TRUE(p.feasible);
    EXPECT_TRUE(validate_sequence(g1, p.sequence, g2).ok);
    EXPECT_EQ(oracle_shortest_sequence(g1, g2).status, OracleStatus::Found);
}

TEST(Plan, Fixtures) {
    auto [t1, t2] = tri();
    auto p = plan(t1, t2);
    ASSERT_TRUE(p.feasible);
    EXPECT_EQ(p.sequence.length(), 1u);
    EXPECT_TRUE(validate_sequence(t1, p.sequence, t2).ok);

    auto [i1, i2] = infeas();
    auto q = plan(i1, i2);
    EXPECT_FALSE(q.feasible);
    EXPECT_EQ(q.kind, InfeasibleKind::UnchangeableEdge);
    EXPECT_EQ(q.witness, te(i1, "a", "b", 1));
    EXPECT_FALSE(classify(i1).at(*q.witness).changeable());
    EXPECT_FALSE(i2.contains(*q.witness));

    auto same = plan(t1, t1);
    ASSERT_TRUE(same.feasible);
    EXPECT_EQ(same.sequence.length(), 0u);
    EXPECT_EQ(same.phases, 0u);
}

TEST(Plan, PairCountMismatch) {
    auto a = named_graph({"a", "b", "c"}, 1, {{"a", "b", 1}, {"b", "c", 1}});
    auto b = named_graph({"a", "b", "c"}, 1, {{"a", "c", 1}, {"b", "c", 1}});
    auto p = plan(a, b);
    EXPECT_FALSE(p.feasible);
    EXPECT_EQ(p.kind, InfeasibleKind::PairCountMismatch);
    EXPECT_EQ(p.mismatched_pair, te(a, "a", "b", 1).edge);
    auto f = feasible(a, b);
    EXPECT_FALSE(f.feasible);
    EXPECT_EQ(f.kind, InfeasibleKind::PairCountMismatch);
}

TEST(Plan, Preconditions) {
    auto [t1, t2] = tri();
    EXPECT_THROW((void)plan(t1, chain2()), PreconditionError);
    auto broken = named_graph({"a", "b", "c"}, 2, {{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}, {"a", "b", 2}});
    EXPECT_THROW((void)plan(broken, broken), PreconditionError);
    EXPECT_THROW((void)feasible(broken, broken), PreconditionError);
}

TEST(Feasible, Fixtures) {
    auto [t1, t2] = tri();
    EXPECT_TRUE(feasible(t1, t2).feasible);
    EXPECT_TRUE(feasible(t1, t1).feasible);
    auto [i1, i2] = infeas();
    auto f = feasible(i1, i2);
    EXPECT_FALSE(f.feasible);
    EXPECT_EQ(f.witness, te(i1, "a", "b", 1));
}

TEST(Plan, PhasesStreamAndAccount) {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
        auto g1 = random_instance(rng, 4, 23, 2, 4, 3);
        auto g2 = random_walk(g1, rng() % 30, rng);
        std::vector<DifferenceStep> steps;
        auto p = plan(g1, g2, [&](const DifferenceStep& s) { steps.push_back(s); });
        ASSERT_TRUE(p.feasible);
        ASSERT_EQ(steps.size(), p.phases);
        EXPECT_EQ(p.phases, difference(g1, g2));
        std::size_t bound = 0;
        for (std::size_t k = 0; k < steps.size(); ++k) {
            EXPECT_EQ(steps[k].level, p.phase_levels[k]);
            EXPECT_EQ(steps[k].g1_ops.length(), steps[k].level + 1);
            EXPECT_LE(steps[k].g2_ops.length(), steps[k].level);
            bound += 2 * (steps[k].level + 1);
        }
        EXPECT_LE(p.sequence.length(), bound);
        auto r = validate_sequence(g1, p.sequence, g2);
        ASSERT_TRUE(r.ok) << "instance " << i;
        ASSERT_TRUE(p.meeting_graph.has_value());
    }
}

TEST(Properties, DecisionMatchesOracle) {
    std::mt19937_64 rng(41);
    for (std::uint64_t s = 0; s < 200; ++s) {
        auto g1 = small_instance(2000 + s);
        if (g1.edge_count() > 10) {
            continue;
        }
        auto g2 = (s % 2) ? random_relabelling(g1, rng) : random_walk(g1, 1 + rng() % 4, rng);
        auto o = oracle_shortest_sequence(g1, g2);
        ASSERT_NE(o.status, OracleStatus::BudgetExceeded);
        ASSERT_EQ(feasible(g1, g2).feasible, o.status == OracleStatus::Found) << "seed " << s;
    }
}
