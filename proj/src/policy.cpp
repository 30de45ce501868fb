#include "vmdp/policy.hpp"

#include <limits>

namespace vmdp {

History History::extended(StateIndex j) const {
    History h = *this;
    h.states.push_back(j);
    return h;
}

std::size_t history_index(const History& h, std::size_t state_count) {
    std::size_t idx = 0;
    for (StateIndex s : h.states) {
        if (s >= state_count)
            throw std::invalid_argument("history contains state index " + std::to_string(s) + " out of range");
        idx = idx * state_count + s;
    }
    return idx;
}

History history_from_index(std::size_t index, Epoch length, std::size_t state_count) {
    History h;
    h.states.assign(static_cast<std::size_t>(length), 0);
    for (Epoch i = length - 1; i >= 0; --i) {
        h.states[static_cast<std::size_t>(i)] = index % state_count;
        index /= state_count;
    }
    return h;
}

std::size_t history_count(std::size_t state_count, Epoch length) {
    std::size_t count = 1;
    for (Epoch i = 0; i < length; ++i) {
        if (state_count != 0 && count > std::numeric_limits<std::size_t>::max() / state_count)
            throw std::overflow_error("history space too large");
        count *= state_count;
    }
    return count;
}

CapExceeded::CapExceeded(const std::string& space, PolicyCount required, std::uint64_t cap)
    : std::runtime_error(space + " policy space has " + required.to_string() + " policies, cap is " +
                         std::to_string(cap)),
      required_(required), cap_(cap) {}

void check_policy(const VmdpModel& model, const MarkovPolicy& policy) {
    if (policy.rules.size() != static_cast<std::size_t>(model.horizon() - 1))
        throw std::invalid_argument("invalid policy shape: expected " + std::to_string(model.horizon() - 1) +
                                    " decision rules");
    for (const auto& rule : policy.rules) {
        if (rule.size() != model.state_count())
            throw std::invalid_argument("invalid policy shape: decision rule does not cover every state");
        for (StateIndex s = 0; s < rule.size(); ++s)
            if (rule[s] >= model.action_count(s))
                throw std::invalid_argument("invalid policy shape: action index out of range for state " +
                                            model.state_name(s));
    }
}

void check_policy(const VmdpModel& model, const HistoryPolicy& policy) {
    const std::size_t n = model.state_count();
    if (policy.rules.size() != static_cast<std::size_t>(model.horizon() - 1))
        throw std::invalid_argument("invalid policy shape: expected " + std::to_string(model.horizon() - 1) +
                                    " decision rules");
    for (std::size_t t = 0; t < policy.rules.size(); ++t) {
        const auto& rule = policy.rules[t];
        if (rule.size() != history_count(n, static_cast<Epoch>(t + 1)))
            throw std::invalid_argument("invalid policy shape: rule " + std::to_string(t + 1) +
                                        " does not cover every history");
        for (std::size_t h = 0; h < rule.size(); ++h)
            if (rule[h] >= model.action_count(h % n))
                throw std::invalid_argument("invalid policy shape: action index out of range");
    }
}

MarkovPolicy first_action_markov_policy(const VmdpModel& model) {
    MarkovPolicy p;
    p.rules.assign(static_cast<std::size_t>(model.horizon() - 1), std::vector<ActionIndex>(model.state_count(), 0));
    return p;
}

HistoryPolicy first_action_history_policy(const VmdpModel& model) {
    HistoryPolicy p;
    for (Epoch t = 1; t < model.horizon(); ++t)
        p.rules.emplace_back(history_count(model.state_count(), t), 0);
    return p;
}

namespace {

// Runs before the first policy is allocated, which may itself be huge.
const VmdpModel& within_cap(const VmdpModel& model, const char* space, PolicyCount count, std::uint64_t cap) {
    if (count.exceeds(cap))
        throw CapExceeded(space, count, cap);
    return model;
}

} // namespace

MarkovPolicyEnumerator::MarkovPolicyEnumerator(const VmdpModel& model, std::uint64_t cap)
    : current_(first_action_markov_policy(within_cap(model, "Markov", markov_policy_count(model), cap))),
      total_(markov_policy_count(model).value) {
    for (StateIndex s = 0; s < model.state_count(); ++s)
        radix_.push_back(model.action_count(s));
}

bool MarkovPolicyEnumerator::next() {
    for (auto t = current_.rules.size(); t-- > 0;) {
        auto& rule = current_.rules[t];
        for (auto s = rule.size(); s-- > 0;) {
            if (++rule[s] < radix_[s])
                return true;
            rule[s] = 0;
        }
    }
    return false;
}

HistoryPolicyEnumerator::HistoryPolicyEnumerator(const VmdpModel& model, std::uint64_t cap)
    : current_(first_action_history_policy(
          within_cap(model, "history-dependent", history_policy_count(model), cap))),
      total_(history_policy_count(model).value) {
    const std::size_t n = model.state_count();
    for (const auto& rule : current_.rules) {
        std::vector<std::size_t> r(rule.size());
        for (std::size_t h = 0; h < rule.size(); ++h)
            r[h] = model.action_count(h % n);
        radix_.push_back(std::move(r));
    }
}

bool HistoryPolicyEnumerator::next() {
    for (auto t = current_.rules.size(); t-- > 0;) {
        auto& rule = current_.rules[t];
        const auto& radix = radix_[t];
        for (auto h = rule.size(); h-- > 0;) {
            if (++rule[h] < radix[h])
                return true;
            rule[h] = 0;
        }
    }
    return false;
}

} // namespace vmdp
