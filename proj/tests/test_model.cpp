#include "vmdp/model.hpp"
#include "vmdp/model_io.hpp"
#include "vmdp/policy.hpp"

#include "support/random_models.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace vmdp;

namespace {

bool has_violation(const ValidationReport& r, const std::string& needle) {
    for (const auto& v : r.violations)
        if (v.find(needle) != std::string::npos)
            return true;
    return false;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("vmdp_test_" + name);
}

} // namespace

TEST(Builtins, CounterexampleHasDocumentedEntries) {
    const VmdpModel m = builtin_counterexample();
    EXPECT_EQ(m.horizon(), 4);
    EXPECT_EQ(m.objectives(), 2u);
    EXPECT_EQ(m.state_count(), 2u);
    EXPECT_EQ(m.reward(1, 0, 1), (RewardVector{9, 5}));
    EXPECT_EQ(m.reward(3, 0, 0), (RewardVector{11, -5}));
    EXPECT_EQ(m.reward(2, 1, 1), (RewardVector{5, -10}));
    EXPECT_EQ(m.terminal(1), (RewardVector{0, 1}));
    EXPECT_EQ(m.terminal(0), (RewardVector{1, 0}));
    EXPECT_EQ(m.transition(2, 0, 0), (std::vector<Rational>{Rational(3, 4), Rational(1, 4)}));
    EXPECT_EQ(m.transition(1, 1, 1), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
}

TEST(Builtins, DeterministicVariantTransitions) {
    const VmdpModel m = builtin_deterministic_variant();
    EXPECT_EQ(m.transition(2, 1, 1), (std::vector<Rational>{0, 1}));
    EXPECT_EQ(m.transition(1, 0, 0), (std::vector<Rational>{1, 0}));
    EXPECT_EQ(m.transition(3, 0, 1), (std::vector<Rational>{0, 1}));
    EXPECT_EQ(m.transition(3, 1, 0), (std::vector<Rational>{1, 0}));
    EXPECT_EQ(m.reward(1, 0, 0), builtin_counterexample().reward(1, 0, 0));
}

TEST(Validate, BuiltinsAreValid) {
    EXPECT_TRUE(validate_model(builtin_counterexample()).ok());
    EXPECT_TRUE(validate_model(builtin_deterministic_variant()).ok());
}

TEST(Validate, ReportsRowSum) {
    VmdpModel m = builtin_counterexample();
    m.set_transition(1, 0, 0, {Rational(1, 2), Rational(1, 4)});
    const auto r = validate_model(m);
    ASSERT_FALSE(r.ok());
    EXPECT_TRUE(has_violation(r, "transition row (t=1,s=s1,a=a1) sums to 3/4 ≠ 1"));
}

TEST(Validate, ReportsDimensionMismatch) {
    VmdpModel m = builtin_counterexample();
    m.set_reward(2, 1, 0, RewardVector{1, 2, 3});
    const auto r = validate_model(m);
    ASSERT_FALSE(r.ok());
    EXPECT_TRUE(has_violation(r, "dimension mismatch"));
    EXPECT_THROW(require_valid(m), ModelError);
    EXPECT_THROW(analyze_model(m), ModelError);
}

TEST(Validate, ReportsMissingEntriesAndBadStructure) {
    VmdpModel m(2, 1, {"x", "x"}, {{"a"}, {}});
    const auto r = validate_model(m);
    EXPECT_TRUE(has_violation(r, "horizon N=1 is less than 2"));
    EXPECT_TRUE(has_violation(r, "duplicate state"));
    EXPECT_TRUE(has_violation(r, "has no actions"));
    EXPECT_TRUE(has_violation(r, "missing terminal reward"));

    VmdpModel partial(1, 2, {"s"}, {{"a"}});
    partial.set_terminal(0, RewardVector{0});
    const auto r2 = validate_model(partial);
    EXPECT_TRUE(has_violation(r2, "missing reward (t=1,s=s,a=a)"));
    EXPECT_TRUE(has_violation(r2, "missing transition row (t=1,s=s,a=a)"));
}

TEST(Validate, ReportsOutOfRangeProbabilities) {
    VmdpModel m = builtin_counterexample();
    m.set_transition(1, 0, 0, {Rational(5, 4), Rational(-1, 4)});
    const auto r = validate_model(m);
    EXPECT_TRUE(has_violation(r, "outside [0,1]"));
    EXPECT_FALSE(has_violation(r, "sums to"));
}

TEST(Analyze, Counterexample) {
    const auto p = analyze_model(builtin_counterexample());
    EXPECT_FALSE(p.is_deterministic);
    EXPECT_TRUE(p.is_stationary);
    EXPECT_EQ(p.markov_policy_count.value, 64u);
    EXPECT_EQ(p.history_policy_count.value, 16384u);
    EXPECT_FALSE(p.history_policy_count.saturated);
}

TEST(Analyze, DeterministicVariant) {
    const auto p = analyze_model(builtin_deterministic_variant());
    EXPECT_TRUE(p.is_deterministic);
    EXPECT_TRUE(p.is_stationary);
}

TEST(Analyze, DetectsTimeDependence) {
    VmdpModel m = builtin_counterexample();
    m.set_reward(2, 0, 0, RewardVector{11, -4});
    EXPECT_FALSE(analyze_model(m).is_stationary);
}

TEST(Analyze, HistoryCountSaturates) {
    std::vector<std::vector<std::string>> actions(3, {"a", "b", "c"});
    VmdpModel m(1, 12, {"x", "y", "z"}, actions);
    EXPECT_TRUE(history_policy_count(m).saturated);
    EXPECT_TRUE(history_policy_count(m).exceeds(1'000'000));
    EXPECT_EQ(markov_policy_count(m).value, 5559060566555523ULL); // 27^11
}

TEST(Analyze, OneHotRowsAreDeterministicAndPerturbationFlipsIt) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        auto shape = fixtures::random_shape(rng, 2, 4, 2, 3, 3, true);
        shape.states = std::max<std::size_t>(shape.states, 2);
        VmdpModel m = fixtures::random_model(rng, shape);
        ASSERT_TRUE(analyze_model(m).is_deterministic);

        std::uniform_int_distribution<int> pick_t(1, m.horizon() - 1);
        std::uniform_int_distribution<std::size_t> pick_s(0, m.state_count() - 1);
        const Epoch t = pick_t(rng);
        const StateIndex s = pick_s(rng);
        std::vector<Rational> row(m.state_count(), Rational(0));
        row[0] = Rational(1, 2);
        row[1] = Rational(1, 2);
        m.set_transition(t, s, 0, row);
        EXPECT_FALSE(analyze_model(m).is_deterministic);
    }
}

TEST(Analyze, PolicyCountsMatchEnumeration) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const auto shape = fixtures::random_shape(rng, 2, 3, 1, 2, 3, false);
        const VmdpModel m = fixtures::random_model(rng, shape);
        const auto props = analyze_model(m);

        std::uint64_t markov = 0;
        MarkovPolicyEnumerator me(m);
        do
            ++markov;
        while (me.next());
        EXPECT_EQ(markov, props.markov_policy_count.value);

        std::uint64_t history = 0;
        HistoryPolicyEnumerator he(m);
        do
            ++history;
        while (he.next());
        EXPECT_EQ(history, props.history_policy_count.value);
    }
}

TEST(ModelIo, BundledFilesMatchBuiltins) {
    const auto dir = std::filesystem::path(VMDP_SOURCE_DIR) / "models";
    const VmdpModel ce = load_model(dir / "counterexample.json");
    EXPECT_TRUE(validate_model(ce).ok());
    EXPECT_EQ(model_to_json(ce), model_to_json(builtin_counterexample()));
    const VmdpModel det = load_model(dir / "deterministic.json");
    EXPECT_EQ(model_to_json(det), model_to_json(builtin_deterministic_variant()));
    EXPECT_EQ(model_digest(ce), model_digest(builtin_counterexample()));
    EXPECT_NE(model_digest(ce), model_digest(det));
}

TEST(ModelIo, AcceptsDecimalAndIntegerScalars) {
    const auto doc = nlohmann::json::parse(R"({
        "m": 1, "horizon": 2, "states": ["a", "b"], "actions": {"a": ["go"], "b": ["go"]},
        "stationary": true,
        "rewards": {"all": {"a": {"go": [3]}, "b": {"go": ["-0.5"]}}},
        "transitions": {"all": {"a": {"go": ["0.75", "1/4"]}, "b": {"go": [0, 1]}}},
        "terminal": {"a": ["2/3"], "b": [1]}})");
    const VmdpModel m = model_from_json(doc);
    EXPECT_TRUE(validate_model(m).ok());
    EXPECT_EQ(m.transition(1, 0, 0)[0], Rational(3, 4));
    EXPECT_EQ(m.reward(1, 1, 0)[0], Rational(-1, 2));
    EXPECT_EQ(m.terminal(0)[0], Rational(2, 3));
}

TEST(ModelIo, EpochKeysOverrideAll) {
    const auto doc = nlohmann::json::parse(R"({
        "m": 1, "horizon": 3, "states": ["a"], "actions": {"a": ["go"]},
        "stationary": false,
        "rewards": {"all": {"a": {"go": [1]}}, "2": {"a": {"go": [5]}}},
        "transitions": {"all": {"a": {"go": [1]}}},
        "terminal": {"a": [0]}})");
    const VmdpModel m = model_from_json(doc);
    EXPECT_EQ(m.reward(1, 0, 0)[0], Rational(1));
    EXPECT_EQ(m.reward(2, 0, 0)[0], Rational(5));
    EXPECT_FALSE(analyze_model(m).is_stationary);
}

TEST(ModelIo, StructuralErrorsThrow) {
    const char* bad_docs[] = {
        R"([1, 2])",
        R"({"horizon": 2})",
        R"({"m": 1, "horizon": 2, "states": ["a"], "actions": {"b": ["x"]}, "rewards": {}, "transitions": {}, "terminal": {}})",
        R"({"m": 1, "horizon": 2, "states": ["a"], "actions": {"a": ["x"]}, "rewards": {"all": {"a": {"y": [1]}}}, "transitions": {}, "terminal": {}})",
        R"({"m": 1, "horizon": 2, "states": ["a"], "actions": {"a": ["x"]}, "rewards": {"all": {"a": {"x": [0.5]}}}, "transitions": {}, "terminal": {}})",
        R"({"m": 1, "horizon": 2, "states": ["a"], "actions": {"a": ["x"]}, "rewards": {"7": {}}, "transitions": {}, "terminal": {}})",
        R"({"m": 1, "horizon": 3, "states": ["a"], "actions": {"a": ["x"]}, "stationary": true, "rewards": {"1": {}}, "transitions": {}, "terminal": {}})",
        R"({"m": 1, "horizon": 2, "states": ["a"], "actions": {"a": ["x"]}, "rewards": {}, "transitions": {}, "terminal": {"a": ["1/0"]}})",
    };
    for (const char* text : bad_docs)
        EXPECT_THROW(model_from_json(nlohmann::json::parse(text)), ModelFormatError) << text;
}

TEST(ModelIo, ContentProblemsLoadAndValidateBadly) {
    const auto doc = nlohmann::json::parse(R"({
        "m": 2, "horizon": 2, "states": ["a"], "actions": {"a": ["x"]},
        "rewards": {"all": {"a": {"x": [1, 2, 3]}}},
        "transitions": {"all": {"a": {"x": ["3/4"]}}},
        "terminal": {"a": [0, 0]}})");
    const VmdpModel m = model_from_json(doc);
    const auto r = validate_model(m);
    EXPECT_TRUE(has_violation(r, "dimension mismatch"));
    EXPECT_TRUE(has_violation(r, "sums to 3/4"));
}

TEST(ModelIo, UnreadableAndTruncatedFiles) {
    EXPECT_THROW(load_model(temp_path("does_not_exist.json")), ModelFormatError);
    const auto path = temp_path("truncated.json");
    std::ofstream(path) << R"({"m": 2, "horizon": 4, "states": [)";
    EXPECT_THROW(load_model(path), ModelFormatError);
    std::filesystem::remove(path);
}

TEST(ModelIo, SaveLoadRoundTripPreservesModels) {
    std::mt19937_64 rng(2024);
    const auto path = temp_path("roundtrip.json");
    for (int i = 0; i < 50; ++i) {
        const auto shape = fixtures::random_shape(rng, 2, 4, 3, 3, 3, i % 2 == 0);
        const VmdpModel m = fixtures::random_model(rng, shape);
        save_model(m, path);
        const VmdpModel back = load_model(path);
        ASSERT_EQ(back.states(), m.states());
        for (StateIndex s = 0; s < m.state_count(); ++s) {
            ASSERT_EQ(back.actions(s), m.actions(s));
            EXPECT_EQ(back.terminal(s), m.terminal(s));
            for (Epoch t = 1; t < m.horizon(); ++t)
                for (ActionIndex a = 0; a < m.action_count(s); ++a) {
                    EXPECT_EQ(back.reward(t, s, a), m.reward(t, s, a));
                    EXPECT_EQ(back.transition(t, s, a), m.transition(t, s, a));
                }
        }
        save_model(back, path);
        EXPECT_EQ(model_to_json(load_model(path)), model_to_json(m));
    }
    std::filesystem::remove(path);
}
