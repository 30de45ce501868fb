#include "vmdp/oracle.hpp"

#include <stdexcept>
#include <unordered_set>

namespace vmdp {

namespace {

void add_scaled(RewardVector& acc, const Rational& p, const RewardVector& x) {
    for (std::size_t k = 0; k < acc.size(); ++k)
        acc[k] += p * x[k];
}

void evaluate_markov_into(const VmdpModel& model, const MarkovPolicy& policy, MarkovValue& out) {
    const int n = model.horizon();
    const std::size_t n_states = model.state_count();
    out.values.resize(static_cast<std::size_t>(n));
    auto& last = out.values.back();
    last.resize(n_states);
    for (StateIndex s = 0; s < n_states; ++s)
        last[s] = model.terminal(s);
    for (Epoch t = n - 1; t >= 1; --t) {
        const auto& next = out.values[static_cast<std::size_t>(t)];
        auto& cur = out.values[static_cast<std::size_t>(t - 1)];
        cur.resize(n_states);
        for (StateIndex s = 0; s < n_states; ++s) {
            const ActionIndex a = policy.rules[static_cast<std::size_t>(t - 1)][s];
            cur[s] = model.reward(t, s, a);
            const auto& row = model.transition(t, s, a);
            for (StateIndex j = 0; j < n_states; ++j)
                if (!row[j].is_zero())
                    add_scaled(cur[s], row[j], next[j]);
        }
    }
}

void evaluate_history_into(const VmdpModel& model, const HistoryPolicy& policy, HistoryValue& out) {
    const int n = model.horizon();
    const std::size_t n_states = model.state_count();
    out.values.resize(static_cast<std::size_t>(n));
    auto& last = out.values.back();
    last.resize(history_count(n_states, n));
    for (std::size_t h = 0; h < last.size(); ++h)
        last[h] = model.terminal(h % n_states);
    for (Epoch t = n - 1; t >= 1; --t) {
        const auto& next = out.values[static_cast<std::size_t>(t)];
        auto& cur = out.values[static_cast<std::size_t>(t - 1)];
        const auto& rule = policy.rules[static_cast<std::size_t>(t - 1)];
        cur.resize(rule.size());
        for (std::size_t h = 0; h < rule.size(); ++h) {
            const StateIndex s = h % n_states;
            const ActionIndex a = rule[h];
            cur[h] = model.reward(t, s, a);
            const auto& row = model.transition(t, s, a);
            for (StateIndex j = 0; j < n_states; ++j)
                if (!row[j].is_zero())
                    add_scaled(cur[h], row[j], next[h * n_states + j]);
        }
    }
}

using Collector = std::vector<std::vector<std::unordered_set<RewardVector>>>;

std::vector<std::vector<VectorSet>> finish(Collector& collected) {
    std::vector<std::vector<VectorSet>> out(collected.size());
    for (std::size_t t = 0; t < collected.size(); ++t) {
        out[t].reserve(collected[t].size());
        for (auto& set : collected[t])
            out[t].emplace_back(std::vector<RewardVector>(set.begin(), set.end()));
    }
    return out;
}

bool matches(const RewardVector& value, const RewardVector& target, const std::optional<int>& places) {
    if (!places)
        return value == target;
    return round_half_away(value, *places) == round_half_away(target, *places);
}

} // namespace

MarkovValue evaluate_markov(const VmdpModel& model, const MarkovPolicy& policy) {
    require_valid(model);
    check_policy(model, policy);
    MarkovValue out;
    evaluate_markov_into(model, policy, out);
    return out;
}

HistoryValue evaluate_history(const VmdpModel& model, const HistoryPolicy& policy) {
    require_valid(model);
    check_policy(model, policy);
    HistoryValue out;
    evaluate_history_into(model, policy, out);
    return out;
}

MarkovVSets v_sets_markov(const VmdpModel& model, OracleOptions options) {
    require_valid(model);
    MarkovPolicyEnumerator policies(model, options.cap);
    Collector collected(static_cast<std::size_t>(model.horizon()),
                        std::vector<std::unordered_set<RewardVector>>(model.state_count()));
    MarkovValue value;
    MarkovVSets out;
    do {
        evaluate_markov_into(model, policies.current(), value);
        for (std::size_t t = 0; t < value.values.size(); ++t)
            for (StateIndex s = 0; s < model.state_count(); ++s)
                collected[t][s].insert(value.values[t][s]);
        ++out.policies;
    } while (policies.next());
    out.sets = finish(collected);
    return out;
}

HistoryVSets v_sets_history(const VmdpModel& model, OracleOptions options) {
    require_valid(model);
    HistoryPolicyEnumerator policies(model, options.cap);
    const std::size_t n_states = model.state_count();
    Collector collected;
    for (Epoch t = 1; t <= model.horizon(); ++t)
        collected.emplace_back(history_count(n_states, t));
    HistoryValue value;
    HistoryVSets out;
    do {
        evaluate_history_into(model, policies.current(), value);
        for (std::size_t t = 0; t < value.values.size(); ++t)
            for (std::size_t h = 0; h < value.values[t].size(); ++h)
                collected[t][h].insert(value.values[t][h]);
        ++out.policies;
    } while (policies.next());
    out.sets = finish(collected);
    return out;
}

HistoryPolicy embed(const VmdpModel& model, const MarkovPolicy& policy) {
    check_policy(model, policy);
    const std::size_t n_states = model.state_count();
    HistoryPolicy out;
    for (Epoch t = 1; t < model.horizon(); ++t) {
        std::vector<ActionIndex> rule(history_count(n_states, t));
        for (std::size_t h = 0; h < rule.size(); ++h)
            rule[h] = policy.action(t, h % n_states);
        out.rules.push_back(std::move(rule));
    }
    return out;
}

StitchResult stitch(const VmdpModel& model, const History& h, ActionIndex action,
                    const std::map<StateIndex, HistoryPolicy>& continuations) {
    require_valid(model);
    const Epoch t = h.length();
    const std::size_t n_states = model.state_count();
    if (t < 1 || t >= model.horizon())
        throw std::invalid_argument("stitch: history length " + std::to_string(t) + " is not a decision epoch");
    const StateIndex s = h.last();
    if (s >= n_states)
        throw std::invalid_argument("stitch: history contains an unknown state");
    if (action >= model.action_count(s))
        throw std::invalid_argument("stitch: action index " + std::to_string(action) + " is not available in state " +
                                    model.state_name(s));

    const auto& row = model.transition(t, s, action);
    for (StateIndex j = 0; j < n_states; ++j) {
        const auto it = continuations.find(j);
        if (it == continuations.end()) {
            if (!row[j].is_zero())
                throw std::invalid_argument("stitch: missing continuation for successor " + model.state_name(j));
            continue;
        }
        check_policy(model, it->second);
    }

    StitchResult out{first_action_history_policy(model), model.reward(t, s, action)};
    const std::size_t root = history_index(h, n_states);
    out.policy.rules[static_cast<std::size_t>(t - 1)][root] = action;

    // Histories of length k extending h occupy [root * |S|^(k-t), (root+1) * |S|^(k-t)),
    // and the state observed at t+1 is digit k-t-1 from the right.
    for (Epoch k = t + 1; k < model.horizon(); ++k) {
        const std::size_t span = history_count(n_states, k - t);
        const std::size_t digit = history_count(n_states, k - t - 1);
        auto& rule = out.policy.rules[static_cast<std::size_t>(k - 1)];
        for (std::size_t g = root * span; g < (root + 1) * span; ++g) {
            const StateIndex j = (g / digit) % n_states;
            const auto it = continuations.find(j);
            if (it != continuations.end())
                rule[g] = it->second.rules[static_cast<std::size_t>(k - 1)][g];
        }
    }

    HistoryValue cont_value;
    for (StateIndex j = 0; j < n_states; ++j) {
        if (row[j].is_zero())
            continue;
        evaluate_history_into(model, continuations.at(j), cont_value);
        add_scaled(out.target, row[j], cont_value.at(t + 1, root * n_states + j));
    }
    return out;
}

WitnessResult<MarkovPolicy> find_markov_witness(const VmdpModel& model, Epoch t, StateIndex s,
                                                const RewardVector& target, WitnessOptions options) {
    require_valid(model);
    if (t < 1 || t > model.horizon())
        throw std::invalid_argument("find_markov_witness: epoch out of range");
    if (s >= model.state_count())
        throw std::invalid_argument("find_markov_witness: state out of range");
    MarkovPolicyEnumerator policies(model, options.cap);
    WitnessResult<MarkovPolicy> out;
    MarkovValue value;
    do {
        evaluate_markov_into(model, policies.current(), value);
        ++out.searched;
        if (matches(value.at(t, s), target, options.round_places)) {
            out.policy = policies.current();
            return out;
        }
    } while (policies.next());
    out.exhaustive = true;
    return out;
}

WitnessResult<HistoryPolicy> find_history_witness(const VmdpModel& model, const History& h,
                                                  const RewardVector& target, WitnessOptions options) {
    require_valid(model);
    const Epoch t = h.length();
    if (t < 1 || t > model.horizon())
        throw std::invalid_argument("find_history_witness: history length out of range");
    const std::size_t idx = history_index(h, model.state_count());
    HistoryPolicyEnumerator policies(model, options.cap);
    WitnessResult<HistoryPolicy> out;
    HistoryValue value;
    do {
        evaluate_history_into(model, policies.current(), value);
        ++out.searched;
        if (matches(value.at(t, idx), target, options.round_places)) {
            out.policy = policies.current();
            return out;
        }
    } while (policies.next());
    out.exhaustive = true;
    return out;
}

} // namespace vmdp
