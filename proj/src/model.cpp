#include "vmdp/model.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace vmdp {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

PolicyCount saturating_mul(PolicyCount a, PolicyCount b) {
    if (a.value == 0 || b.value == 0)
        return {0, false};
    if (a.saturated || b.saturated || a.value > kMax / b.value)
        return {kMax, true};
    return {a.value * b.value, false};
}

PolicyCount saturating_pow(PolicyCount base, std::uint64_t exponent) {
    PolicyCount result{1, false};
    while (exponent > 0) {
        if (exponent & 1U)
            result = saturating_mul(result, base);
        exponent >>= 1U;
        if (exponent > 0)
            base = saturating_mul(base, base);
    }
    return result;
}

PolicyCount rule_count(const VmdpModel& model) {
    PolicyCount per_rule{1, false};
    for (StateIndex s = 0; s < model.state_count(); ++s)
        per_rule = saturating_mul(per_rule, {model.action_count(s), false});
    return per_rule;
}

std::string where(const VmdpModel& model, Epoch t, StateIndex s, ActionIndex a) {
    return "(t=" + std::to_string(t) + ",s=" + model.state_name(s) + ",a=" + model.action_name(s, a) + ")";
}

} // namespace

VmdpModel::VmdpModel(std::size_t objectives, int horizon, std::vector<std::string> states,
                     std::vector<std::vector<std::string>> actions)
    : objectives_(objectives), horizon_(horizon), states_(std::move(states)), actions_(std::move(actions)) {
    if (horizon_ < 1)
        throw std::invalid_argument("horizon must be positive");
    if (actions_.size() != states_.size())
        throw std::invalid_argument("action lists must be given for every state");
    const auto epochs = static_cast<std::size_t>(horizon_ - 1);
    rewards_.resize(epochs);
    transitions_.resize(epochs);
    for (std::size_t t = 0; t < epochs; ++t) {
        rewards_[t].resize(states_.size());
        transitions_[t].resize(states_.size());
        for (std::size_t s = 0; s < states_.size(); ++s) {
            rewards_[t][s].resize(actions_[s].size());
            transitions_[t][s].resize(actions_[s].size());
        }
    }
    terminal_.resize(states_.size());
}

std::optional<StateIndex> VmdpModel::find_state(std::string_view name) const {
    const auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end())
        return std::nullopt;
    return static_cast<StateIndex>(it - states_.begin());
}

std::optional<ActionIndex> VmdpModel::find_action(StateIndex s, std::string_view name) const {
    const auto& list = actions_.at(s);
    const auto it = std::find(list.begin(), list.end(), name);
    if (it == list.end())
        return std::nullopt;
    return static_cast<ActionIndex>(it - list.begin());
}

void VmdpModel::check_index(Epoch t, StateIndex s, ActionIndex a) const {
    if (t < 1 || t >= horizon_)
        throw ModelError("epoch " + std::to_string(t) + " is not a decision epoch (1.." +
                         std::to_string(horizon_ - 1) + ")");
    if (s >= states_.size())
        throw ModelError("state index " + std::to_string(s) + " out of range");
    if (a >= actions_[s].size())
        throw ModelError("action index " + std::to_string(a) + " out of range for state " + states_[s]);
}

bool VmdpModel::has_reward(Epoch t, StateIndex s, ActionIndex a) const {
    check_index(t, s, a);
    return rewards_[static_cast<std::size_t>(t - 1)][s][a].has_value();
}

bool VmdpModel::has_transition(Epoch t, StateIndex s, ActionIndex a) const {
    check_index(t, s, a);
    return transitions_[static_cast<std::size_t>(t - 1)][s][a].has_value();
}

bool VmdpModel::has_terminal(StateIndex s) const { return terminal_.at(s).has_value(); }

const RewardVector& VmdpModel::reward(Epoch t, StateIndex s, ActionIndex a) const {
    check_index(t, s, a);
    const auto& entry = rewards_[static_cast<std::size_t>(t - 1)][s][a];
    if (!entry)
        throw ModelError("missing reward " + where(*this, t, s, a));
    return *entry;
}

const std::vector<Rational>& VmdpModel::transition(Epoch t, StateIndex s, ActionIndex a) const {
    check_index(t, s, a);
    const auto& entry = transitions_[static_cast<std::size_t>(t - 1)][s][a];
    if (!entry)
        throw ModelError("missing transition row " + where(*this, t, s, a));
    return *entry;
}

const RewardVector& VmdpModel::terminal(StateIndex s) const {
    const auto& entry = terminal_.at(s);
    if (!entry)
        throw ModelError("missing terminal reward for state " + states_[s]);
    return *entry;
}

void VmdpModel::set_reward(Epoch t, StateIndex s, ActionIndex a, RewardVector r) {
    check_index(t, s, a);
    rewards_[static_cast<std::size_t>(t - 1)][s][a] = std::move(r);
}

void VmdpModel::set_transition(Epoch t, StateIndex s, ActionIndex a, std::vector<Rational> row) {
    check_index(t, s, a);
    transitions_[static_cast<std::size_t>(t - 1)][s][a] = std::move(row);
}

void VmdpModel::set_terminal(StateIndex s, RewardVector r) { terminal_.at(s) = std::move(r); }

void VmdpModel::set_reward_all_epochs(StateIndex s, ActionIndex a, const RewardVector& r) {
    for (Epoch t = 1; t < horizon_; ++t)
        set_reward(t, s, a, r);
}

void VmdpModel::set_transition_all_epochs(StateIndex s, ActionIndex a, const std::vector<Rational>& row) {
    for (Epoch t = 1; t < horizon_; ++t)
        set_transition(t, s, a, row);
}

ValidationReport validate_model(const VmdpModel& model) {
    ValidationReport report;
    auto& out = report.violations;
    const std::size_t m = model.objectives();
    const std::size_t n_states = model.state_count();

    if (model.horizon() < 2)
        out.push_back("horizon N=" + std::to_string(model.horizon()) + " is less than 2");
    if (m == 0)
        out.push_back("objective count m must be at least 1");
    if (n_states == 0)
        out.push_back("model has no states");

    std::set<std::string> seen;
    for (const auto& name : model.states())
        if (!seen.insert(name).second)
            out.push_back("duplicate state \"" + name + "\"");

    for (StateIndex s = 0; s < n_states; ++s) {
        if (model.action_count(s) == 0)
            out.push_back("state " + model.state_name(s) + " has no actions");
        std::set<std::string> seen_actions;
        for (const auto& name : model.actions(s))
            if (!seen_actions.insert(name).second)
                out.push_back("duplicate action \"" + name + "\" in state " + model.state_name(s));
    }

    for (Epoch t = 1; t < model.horizon(); ++t) {
        for (StateIndex s = 0; s < n_states; ++s) {
            for (ActionIndex a = 0; a < model.action_count(s); ++a) {
                const std::string at = where(model, t, s, a);
                if (!model.has_reward(t, s, a)) {
                    out.push_back("missing reward " + at);
                } else if (const auto& r = model.reward(t, s, a); r.size() != m) {
                    out.push_back("dimension mismatch: reward " + at + " has " + std::to_string(r.size()) +
                                  " components, expected " + std::to_string(m));
                }
                if (!model.has_transition(t, s, a)) {
                    out.push_back("missing transition row " + at);
                    continue;
                }
                const auto& row = model.transition(t, s, a);
                if (row.size() != n_states) {
                    out.push_back("transition row " + at + " has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(n_states));
                    continue;
                }
                Rational total;
                for (StateIndex j = 0; j < n_states; ++j) {
                    if (row[j].is_negative() || row[j] > Rational(1))
                        out.push_back("transition probability p(" + model.state_name(j) + "|" + at + ") = " +
                                      row[j].to_string() + " outside [0,1]");
                    total += row[j];
                }
                if (total != Rational(1))
                    out.push_back("transition row " + at + " sums to " + total.to_string() + " ≠ 1");
            }
        }
    }

    for (StateIndex s = 0; s < n_states; ++s) {
        if (!model.has_terminal(s))
            out.push_back("missing terminal reward for state " + model.state_name(s));
        else if (model.terminal(s).size() != m)
            out.push_back("dimension mismatch: terminal reward for state " + model.state_name(s) + " has " +
                          std::to_string(model.terminal(s).size()) + " components, expected " +
                          std::to_string(m));
    }
    return report;
}

void require_valid(const VmdpModel& model) {
    const auto report = validate_model(model);
    if (report.ok())
        return;
    std::ostringstream msg;
    msg << "invalid model:";
    for (const auto& v : report.violations)
        msg << "\n  " << v;
    throw ModelError(msg.str());
}

std::string PolicyCount::to_string() const {
    return saturated ? ">" + std::to_string(kMax) : std::to_string(value);
}

PolicyCount markov_policy_count(const VmdpModel& model) {
    return saturating_pow(rule_count(model), static_cast<std::uint64_t>(model.horizon() - 1));
}

PolicyCount history_policy_count(const VmdpModel& model) {
    // Histories of length t ending in s number |S|^(t-1), so each epoch contributes
    // (prod_s |A_s|)^(|S|^(t-1)).
    const PolicyCount per_rule = rule_count(model);
    PolicyCount total{1, false};
    PolicyCount histories_per_state{1, false};
    for (Epoch t = 1; t < model.horizon(); ++t) {
        if (histories_per_state.saturated)
            return per_rule.value <= 1 ? PolicyCount{per_rule.value, false} : PolicyCount{kMax, true};
        total = saturating_mul(total, saturating_pow(per_rule, histories_per_state.value));
        histories_per_state = saturating_mul(histories_per_state, {model.state_count(), false});
    }
    return total;
}

ModelProperties analyze_model(const VmdpModel& model) {
    require_valid(model);
    ModelProperties props;
    props.is_stationary = true;
    props.is_deterministic = true;
    for (Epoch t = 1; t < model.horizon(); ++t) {
        for (StateIndex s = 0; s < model.state_count(); ++s) {
            for (ActionIndex a = 0; a < model.action_count(s); ++a) {
                const auto& row = model.transition(t, s, a);
                // rows are valid distributions here, so one-hot is equivalent to containing a 1
                if (std::none_of(row.begin(), row.end(), [](const Rational& p) { return p == Rational(1); }))
                    props.is_deterministic = false;
                if (t > 1 && (row != model.transition(1, s, a) || model.reward(t, s, a) != model.reward(1, s, a)))
                    props.is_stationary = false;
            }
        }
    }
    props.markov_policy_count = markov_policy_count(model);
    props.history_policy_count = history_policy_count(model);
    return props;
}

namespace {

VmdpModel counterexample_skeleton() {
    VmdpModel model(2, 4, {"s1", "s2"}, {{"a1", "a2"}, {"a1", "a2"}});
    model.set_reward_all_epochs(0, 0, {11, -5});
    model.set_reward_all_epochs(0, 1, {9, 5});
    model.set_reward_all_epochs(1, 0, {5, 5});
    model.set_reward_all_epochs(1, 1, {5, -10});
    model.set_terminal(0, {1, 0});
    model.set_terminal(1, {0, 1});
    return model;
}

} // namespace

VmdpModel builtin_counterexample() {
    VmdpModel model = counterexample_skeleton();
    const Rational half(1, 2);
    model.set_transition_all_epochs(0, 0, {Rational(3, 4), Rational(1, 4)});
    model.set_transition_all_epochs(0, 1, {half, half});
    model.set_transition_all_epochs(1, 0, {half, half});
    model.set_transition_all_epochs(1, 1, {half, half});
    return model;
}

VmdpModel builtin_deterministic_variant() {
    VmdpModel model = counterexample_skeleton();
    const std::vector<Rational> to_s1{1, 0};
    const std::vector<Rational> to_s2{0, 1};
    for (StateIndex s = 0; s < 2; ++s) {
        model.set_transition_all_epochs(s, 0, to_s1);
        model.set_transition_all_epochs(s, 1, to_s2);
    }
    return model;
}

} // namespace vmdp
