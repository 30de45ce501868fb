#include "vmdp/checks.hpp"

namespace vmdp {

namespace {

void audit(const FSet& f, const VectorSet& attainable, Epoch t, const History& where, FeasibilityReport& report) {
    for (std::size_t i = 0; i < f.vectors.size(); ++i) {
        ++report.vectors_checked;
        if (!attainable.contains(f.vectors[i])) {
            report.holds = false;
            report.violations.push_back({t, where, f.vectors[i], f.generators[i]});
        }
    }
}

} // namespace

FeasibilityReport check_property_P(const VmdpModel& model, OracleOptions options) {
    const ValueTable table = white_recursion(model, {.keep_f_sets = true});
    const MarkovVSets v = v_sets_markov(model, options);
    FeasibilityReport report;
    report.policies = v.policies;
    for (Epoch t = 1; t < model.horizon(); ++t)
        for (StateIndex s = 0; s < model.state_count(); ++s)
            audit(*table.f_set_at(t, s), v.at(t, s), t, History{{s}}, report);
    return report;
}

HistoryValueTable history_white_recursion(const VmdpModel& model) {
    require_valid(model);
    const int n = model.horizon();
    const std::size_t n_states = model.state_count();
    HistoryValueTable out;
    out.fronts.resize(static_cast<std::size_t>(n));
    out.f_sets.resize(static_cast<std::size_t>(n - 1));

    auto& last = out.fronts.back();
    const std::size_t terminal_histories = history_count(n_states, n);
    last.reserve(terminal_histories);
    for (std::size_t h = 0; h < terminal_histories; ++h)
        last.push_back(ParetoSet::singleton(model.terminal(h % n_states)));

    std::vector<ParetoSet> next(n_states);
    for (Epoch t = n - 1; t >= 1; --t) {
        const auto idx = static_cast<std::size_t>(t - 1);
        const auto& successors = out.fronts[idx + 1];
        const std::size_t count = history_count(n_states, t);
        for (std::size_t h = 0; h < count; ++h) {
            for (StateIndex j = 0; j < n_states; ++j)
                next[j] = successors[h * n_states + j];
            FSet f = f_set(model, t, h % n_states, next);
            out.fronts[idx].push_back(efficient_subset(f.vectors));
            out.f_sets[idx].push_back(std::move(f));
        }
    }
    return out;
}

FeasibilityReport check_property_P_prime(const VmdpModel& model, OracleOptions options) {
    const HistoryVSets v = v_sets_history(model, options);
    const HistoryValueTable table = history_white_recursion(model);
    const std::size_t n_states = model.state_count();
    FeasibilityReport report;
    report.policies = v.policies;
    for (Epoch t = 1; t < model.horizon(); ++t) {
        const auto& layer = table.f_sets[static_cast<std::size_t>(t - 1)];
        for (std::size_t h = 0; h < layer.size(); ++h)
            audit(layer[h], v.at(t, h), t, history_from_index(h, t, n_states), report);
    }
    return report;
}

ConsistencyReport compare_recursion_with_markov_oracle(const VmdpModel& model, OracleOptions options) {
    const ValueTable table = white_recursion(model);
    const MarkovVSets v = v_sets_markov(model, options);
    ConsistencyReport report;
    report.policies = v.policies;
    for (Epoch t = 1; t <= model.horizon(); ++t) {
        for (StateIndex s = 0; s < model.state_count(); ++s) {
            ++report.fronts_compared;
            ParetoSet actual = efficient_subset(v.at(t, s));
            if (actual != table.at(t, s)) {
                report.holds = false;
                report.mismatches.push_back({t, History{{s}}, table.at(t, s), std::move(actual)});
            }
        }
    }
    return report;
}

ConsistencyReport compare_recursion_with_history_oracle(const VmdpModel& model, OracleOptions options) {
    const ValueTable table = white_recursion(model);
    const HistoryVSets v = v_sets_history(model, options);
    const std::size_t n_states = model.state_count();
    ConsistencyReport report;
    report.policies = v.policies;
    for (Epoch t = 1; t <= model.horizon(); ++t) {
        const std::size_t count = history_count(n_states, t);
        for (std::size_t h = 0; h < count; ++h) {
            ++report.fronts_compared;
            const ParetoSet& expected = table.at(t, h % n_states);
            ParetoSet actual = efficient_subset(v.at(t, h));
            if (actual != expected) {
                report.holds = false;
                report.mismatches.push_back({t, history_from_index(h, t, n_states), expected, std::move(actual)});
            }
        }
    }
    return report;
}

ConsistencyReport check_history_fronts_depend_on_last_state(const VmdpModel& model, OracleOptions options) {
    const HistoryVSets v = v_sets_history(model, options);
    const std::size_t n_states = model.state_count();
    ConsistencyReport report;
    report.policies = v.policies;
    for (Epoch t = 1; t <= model.horizon(); ++t) {
        std::vector<ParetoSet> reference(n_states);
        std::vector<bool> seen(n_states, false);
        const std::size_t count = history_count(n_states, t);
        for (std::size_t h = 0; h < count; ++h) {
            const StateIndex s = h % n_states;
            ParetoSet front = efficient_subset(v.at(t, h));
            ++report.fronts_compared;
            if (!seen[s]) {
                reference[s] = std::move(front);
                seen[s] = true;
            } else if (front != reference[s]) {
                report.holds = false;
                report.mismatches.push_back({t, history_from_index(h, t, n_states), reference[s], std::move(front)});
            }
        }
    }
    return report;
}

} // namespace vmdp
