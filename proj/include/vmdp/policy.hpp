#pragma once

#include "vmdp/model.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vmdp {

/// Sequence of decision rules d_1..d_{N-1}, each mapping a state to an action index.
struct MarkovPolicy {
    /// [t-1][s]
    std::vector<std::vector<ActionIndex>> rules;

    ActionIndex action(Epoch t, StateIndex s) const { return rules.at(static_cast<std::size_t>(t - 1)).at(s); }

    friend bool operator==(const MarkovPolicy&, const MarkovPolicy&) = default;
};

/// State trajectory (s_1, ..., s_t). Length t equals the epoch it was observed at.
struct History {
    std::vector<StateIndex> states;

    Epoch length() const { return static_cast<Epoch>(states.size()); }
    StateIndex last() const { return states.back(); }
    History extended(StateIndex j) const;

    friend bool operator==(const History&, const History&) = default;
};

/**
 * Histories of length t are numbered 0..|S|^t - 1 with s_1 as the most
 * significant base-|S| digit, so the last state is `index % |S|` and the
 * extension (h, j) is `index * |S| + j`.
 */
std::size_t history_index(const History& h, std::size_t state_count);
History history_from_index(std::size_t index, Epoch length, std::size_t state_count);
/// |S|^t; throws std::overflow_error when it does not fit in size_t.
std::size_t history_count(std::size_t state_count, Epoch length);

/// Sequence of t-decision rules, rule t mapping every history in S^t to an action.
struct HistoryPolicy {
    /// [t-1][history_index]
    std::vector<std::vector<ActionIndex>> rules;

    ActionIndex action(Epoch t, std::size_t history_idx) const {
        return rules.at(static_cast<std::size_t>(t - 1)).at(history_idx);
    }
    ActionIndex action(Epoch t, const History& h, std::size_t state_count) const {
        return action(t, history_index(h, state_count));
    }

    friend bool operator==(const HistoryPolicy&, const HistoryPolicy&) = default;
};

/// Enumeration refused because the policy space is larger than the configured cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& space, PolicyCount required, std::uint64_t cap);

    PolicyCount required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

private:
    PolicyCount required_;
    std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultPolicyCap = 1'000'000;

/// Throws std::invalid_argument unless every rule entry names an action of the right state.
void check_policy(const VmdpModel& model, const MarkovPolicy& policy);
void check_policy(const VmdpModel& model, const HistoryPolicy& policy);

/// Every rule picks the first action of the relevant state.
MarkovPolicy first_action_markov_policy(const VmdpModel& model);
HistoryPolicy first_action_history_policy(const VmdpModel& model);

/**
 * Mixed-radix counter over all Markov policies. Starts at the all-first-action
 * policy; the last state of the last epoch is the fastest digit.
 *
 *     MarkovPolicyEnumerator e(model, cap);
 *     do { use(e.current()); } while (e.next());
 */
class MarkovPolicyEnumerator {
public:
    /// Throws CapExceeded when the policy count exceeds `cap`.
    MarkovPolicyEnumerator(const VmdpModel& model, std::uint64_t cap = kDefaultPolicyCap);

    const MarkovPolicy& current() const { return current_; }
    /// Advances; false once every policy has been produced.
    bool next();
    std::uint64_t total() const { return total_; }

private:
    std::vector<std::size_t> radix_; // per (t, s) digit
    MarkovPolicy current_;
    std::uint64_t total_;
};

/// Same counter over history-dependent policies, one digit per (t, h_t).
class HistoryPolicyEnumerator {
public:
    HistoryPolicyEnumerator(const VmdpModel& model, std::uint64_t cap = kDefaultPolicyCap);

    const HistoryPolicy& current() const { return current_; }
    bool next();
    std::uint64_t total() const { return total_; }

private:
    std::vector<std::vector<std::size_t>> radix_; // [t-1][h]
    HistoryPolicy current_;
    std::uint64_t total_;
};

} // namespace vmdp
