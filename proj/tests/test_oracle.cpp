#include "vmdp/oracle.hpp"
#include "vmdp/recursion.hpp"

#include "support/reference_values.hpp"
#include "support/properties.hpp"
#include "support/random_models.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace vmdp;
using vmdp::fixtures::vec;

namespace {

MarkovPolicy constant_policy(const VmdpModel& model, ActionIndex a) {
    MarkovPolicy p = first_action_markov_policy(model);
    for (auto& rule : p.rules)
        for (auto& entry : rule)
            entry = a;
    return p;
}

} // namespace

TEST(EvaluateMarkov, AllFirstActionOnCounterexample) {
    const VmdpModel model = builtin_counterexample();
    const MarkovValue v = evaluate_markov(model, constant_policy(model, 0));
    EXPECT_EQ(v.at(1, 0), vec("1939/64", "-579/64"));
    EXPECT_EQ(v.at(1, 0).to_decimal_string(1), "(30.3, -9.0)");
    EXPECT_EQ(v.at(4, 0), model.terminal(0));
    EXPECT_EQ(v.at(4, 1), model.terminal(1));
}

TEST(EvaluateMarkov, AllFirstActionOnDeterministicVariant) {
    const VmdpModel model = builtin_deterministic_variant();
    EXPECT_EQ(evaluate_markov(model, constant_policy(model, 0)).at(1, 0), (RewardVector{34, -15}));
}

TEST(EvaluateMarkov, SingleActionModelIsTrajectoryAverage) {
    VmdpModel model(1, 3, {"x", "y"}, {{"go"}, {"go"}});
    for (Epoch t = 1; t < 3; ++t) {
        model.set_reward(t, 0, 0, RewardVector{1});
        model.set_reward(t, 1, 0, RewardVector{10});
        model.set_transition(t, 0, 0, {Rational(1, 3), Rational(2, 3)});
        model.set_transition(t, 1, 0, {Rational(0), Rational(1)});
    }
    model.set_terminal(0, RewardVector{0});
    model.set_terminal(1, RewardVector{100});
    // Paths from x: xxx 1/9, xxy 2/9, xy* 2/3.
    const Rational expected = Rational(1, 9) * Rational(2) + Rational(2, 9) * Rational(102) +
                              Rational(2, 3) * Rational(111);
    EXPECT_EQ(evaluate_markov(model, first_action_markov_policy(model)).at(1, 0), RewardVector{expected});
}

TEST(EvaluateMarkov, RejectsMalformedPolicy) {
    const VmdpModel model = builtin_counterexample();
    MarkovPolicy p = first_action_markov_policy(model);
    p.rules[1][0] = 2;
    EXPECT_THROW(evaluate_markov(model, p), std::invalid_argument);
    p.rules.pop_back();
    EXPECT_THROW(evaluate_markov(model, p), std::invalid_argument);
    HistoryPolicy hp = first_action_history_policy(model);
    hp.rules[2].pop_back();
    EXPECT_THROW(evaluate_history(model, hp), std::invalid_argument);
}

TEST(Enumeration, CountsOnCounterexample) {
    const VmdpModel model = builtin_counterexample();
    MarkovPolicyEnumerator markov(model);
    std::set<std::vector<std::vector<ActionIndex>>> seen;
    do
        seen.insert(markov.current().rules);
    while (markov.next());
    EXPECT_EQ(seen.size(), 64u);
    EXPECT_EQ(markov.total(), 64u);

    HistoryPolicyEnumerator history(model);
    std::uint64_t count = 0;
    do
        ++count;
    while (history.next());
    EXPECT_EQ(count, 16384u);
}

TEST(Enumeration, CapIsEnforcedBeforeWork) {
    const VmdpModel model = builtin_counterexample();
    EXPECT_THROW(MarkovPolicyEnumerator(model, 63), CapExceeded);
    EXPECT_NO_THROW(MarkovPolicyEnumerator(model, 64));
    try {
        v_sets_history(model, {.cap = 1000});
        FAIL() << "expected CapExceeded";
    } catch (const CapExceeded& e) {
        EXPECT_EQ(e.required().value, 16384u);
        EXPECT_EQ(e.cap(), 1000u);
    }
}

TEST(MarkovOracle, CounterexampleFront) {
    const VmdpModel model = builtin_counterexample();
    const MarkovVSets v = v_sets_markov(model);
    EXPECT_EQ(v.policies, 64u);
    const ParetoSet front = efficient_subset(v.at(1, 0));
    EXPECT_EQ(front.vectors(), fixtures::counterexample_markov_front_exact());
    EXPECT_NE(front, white_recursion(model).at(1, 0));
}

TEST(MarkovOracle, DeterministicVariantFront) {
    const MarkovVSets v = v_sets_markov(builtin_deterministic_variant());
    EXPECT_EQ(efficient_subset(v.at(1, 0)).vectors(), fixtures::deterministic_front());
}

TEST(HistoryOracle, CounterexampleFrontEqualsRecursion) {
    const VmdpModel model = builtin_counterexample();
    const HistoryVSets v = v_sets_history(model);
    EXPECT_EQ(v.policies, 16384u);
    EXPECT_EQ(efficient_subset(v.at(1, 0)).vectors(), fixtures::counterexample_u1_exact());
}

TEST(HistoryOracle, MarkovReturnsAreContainedInHistoryReturns) {
    const VmdpModel model = builtin_counterexample();
    const MarkovVSets markov = v_sets_markov(model);
    const HistoryVSets history = v_sets_history(model);
    for (Epoch t = 1; t <= model.horizon(); ++t)
        for (std::size_t h = 0; h < history_count(2, t); ++h)
            EXPECT_TRUE(markov.at(t, h % 2).is_subset_of(history.at(t, h))) << "t=" << t << " h=" << h;
}

TEST(HistoryOracle, KernelPropertyOfHistoryFronts) {
    const VmdpModel model = builtin_counterexample();
    const HistoryVSets v = v_sets_history(model);
    for (const auto& layer : v.sets)
        for (const auto& set : layer) {
            const ParetoSet front = efficient_subset(set);
            for (const auto& u : set) {
                bool covered = false;
                for (const auto& y : front)
                    covered = covered || fixtures::brute_force_geq(y, u);
                ASSERT_TRUE(covered);
            }
        }
}

TEST(Embed, EvaluatorsAgreeForEveryMarkovPolicy) {
    const VmdpModel model = builtin_counterexample();
    MarkovPolicyEnumerator policies(model);
    std::set<std::vector<std::vector<ActionIndex>>> embedded;
    do {
        const MarkovPolicy& p = policies.current();
        const HistoryPolicy hp = embed(model, p);
        embedded.insert(hp.rules);
        const MarkovValue mv = evaluate_markov(model, p);
        const HistoryValue hv = evaluate_history(model, hp);
        for (Epoch t = 1; t <= model.horizon(); ++t)
            for (std::size_t h = 0; h < history_count(2, t); ++h)
                ASSERT_EQ(hv.at(t, h), mv.at(t, h % 2));
    } while (policies.next());
    EXPECT_EQ(embedded.size(), 64u);
}

TEST(Embed, RulesAreConstantInThePrefix) {
    const VmdpModel model = builtin_counterexample();
    MarkovPolicy p = first_action_markov_policy(model);
    p.rules[2][1] = 1;
    const HistoryPolicy hp = embed(model, p);
    for (std::size_t h = 0; h < hp.rules[2].size(); ++h)
        EXPECT_EQ(hp.action(3, h), h % 2 == 1 ? 1u : 0u);
}

TEST(Stitch, CounterexampleMixedContinuations) {
    const VmdpModel model = builtin_counterexample();
    const std::map<StateIndex, HistoryPolicy> continuations{{0, embed(model, constant_policy(model, 0))},
                                                            {1, embed(model, constant_policy(model, 1))}};
    const StitchResult r = stitch(model, History{{0}}, 0, continuations);
    EXPECT_EQ(evaluate_history(model, r.policy).at(1, 0), r.target);
    EXPECT_EQ(r.policy.action(1, 0), 0u);
    // After (s1, s2) the all-a2 continuation is followed, after (s1, s1) the all-a1 one.
    EXPECT_EQ(r.policy.action(2, History{{0, 1}}, 2), 1u);
    EXPECT_EQ(r.policy.action(3, History{{0, 1, 0}}, 2), 1u);
    EXPECT_EQ(r.policy.action(3, History{{0, 0, 1}}, 2), 0u);
}

TEST(Stitch, EqualContinuationsGiveOneStepDeviation) {
    const VmdpModel model = builtin_counterexample();
    std::mt19937_64 rng(19);
    for (int i = 0; i < 20; ++i) {
        const MarkovPolicy base = fixtures::random_markov_policy(rng, model);
        const ActionIndex a = i % 2;
        const std::map<StateIndex, HistoryPolicy> continuations{{0, embed(model, base)}, {1, embed(model, base)}};
        MarkovPolicy deviated = base;
        deviated.rules[0][0] = a;
        EXPECT_EQ(stitch(model, History{{0}}, a, continuations).target, evaluate_markov(model, deviated).at(1, 0));
    }
}

TEST(Stitch, LastDecisionEpochIgnoresContinuations) {
    const VmdpModel model = builtin_counterexample();
    std::mt19937_64 rng(23);
    const History h{{1, 0, 0}};
    const RewardVector expected = RewardVector{11, -5} + Rational(3, 4) * model.terminal(0) +
                                  Rational(1, 4) * model.terminal(1);
    for (int i = 0; i < 10; ++i) {
        const std::map<StateIndex, HistoryPolicy> continuations{{0, fixtures::random_history_policy(rng, model)},
                                                                {1, fixtures::random_history_policy(rng, model)}};
        EXPECT_EQ(stitch(model, h, 0, continuations).target, expected);
    }
}

TEST(Stitch, OffHistoryEntriesTakeFirstAction) {
    const VmdpModel model = builtin_counterexample();
    HistoryPolicy all_second = embed(model, constant_policy(model, 1));
    const StitchResult r = stitch(model, History{{1}}, 1, {{0, all_second}, {1, all_second}});
    for (std::size_t h = 0; h < 4; ++h)
        EXPECT_EQ(r.policy.action(3, h), 0u) << "histories from s1 are off the stitched subtree";
    EXPECT_EQ(r.policy.action(1, 0), 0u);
    EXPECT_EQ(r.policy.action(1, 1), 1u);
}

TEST(Stitch, RejectsBadArguments) {
    const VmdpModel model = builtin_counterexample();
    const HistoryPolicy p = first_action_history_policy(model);
    EXPECT_THROW(stitch(model, History{{0}}, 2, {{0, p}, {1, p}}), std::invalid_argument);
    EXPECT_THROW(stitch(model, History{{0}}, 0, {{0, p}}), std::invalid_argument);
    EXPECT_THROW(stitch(model, History{{0, 0, 0, 0}}, 0, {{0, p}, {1, p}}), std::invalid_argument);
    // A zero-probability successor needs no continuation.
    const VmdpModel det = builtin_deterministic_variant();
    EXPECT_NO_THROW(stitch(det, History{{0}}, 0, {{0, first_action_history_policy(det)}}));
}

TEST(Stitch, RandomInstancesEvaluateToTarget) {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 200; ++i) {
        const auto failure = fixtures::stitch_case(rng);
        ASSERT_FALSE(failure.has_value()) << *failure;
    }
}

TEST(Witness, MarkovSearchFindsNoPolicyForInfeasibleVector) {
    const VmdpModel model = builtin_counterexample();
    const auto r = find_markov_witness(model, 1, 0, fixtures::counterexample_infeasible_exact());
    EXPECT_FALSE(r.policy.has_value());
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.searched, 64u);
    const auto rounded = find_markov_witness(model, 1, 0, vec("30", "-7.8"), {.round_places = 1});
    EXPECT_FALSE(rounded.policy.has_value());
}

TEST(Witness, HistorySearchFindsPolicyForInfeasibleVector) {
    const VmdpModel model = builtin_counterexample();
    const auto r = find_history_witness(model, History{{0}}, fixtures::counterexample_infeasible_exact());
    ASSERT_TRUE(r.policy.has_value());
    EXPECT_FALSE(r.exhaustive);
    EXPECT_EQ(evaluate_history(model, *r.policy).at(1, 0), fixtures::counterexample_infeasible_exact());
}

TEST(Witness, ConstructedTargetIsFound) {
    const VmdpModel model = builtin_counterexample();
    const auto r = find_markov_witness(model, 1, 0, vec("1939/64", "-579/64"));
    ASSERT_TRUE(r.policy.has_value());
    EXPECT_EQ(evaluate_markov(model, *r.policy).at(1, 0), vec("1939/64", "-579/64"));
    EXPECT_EQ(r.searched, 1u);
}
