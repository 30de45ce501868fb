#pragma once

#include "vmdp/rational.hpp"
#include "vmdp/reward_vector.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vmdp {

using StateIndex = std::size_t;
/// Index into the action list of one particular state.
using ActionIndex = std::size_t;
/// Decision epoch, 1-based. Decisions at 1..N-1, terminal reward at N.
using Epoch = int;

/// Raised when a model is used in a way its contents cannot support.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Finite-horizon vector-valued MDP.
 *
 * Tables are dense over (epoch, state, action) and may be partially filled
 * while a model is being assembled or loaded; validate_model() reports what
 * is missing or inconsistent. Every algorithm takes a model that validated OK
 * and treats it as immutable.
 */
class VmdpModel {
public:
    VmdpModel(std::size_t objectives, int horizon, std::vector<std::string> states,
              std::vector<std::vector<std::string>> actions);

    std::size_t objectives() const { return objectives_; }
    int horizon() const { return horizon_; }
    std::size_t state_count() const { return states_.size(); }
    const std::vector<std::string>& states() const { return states_; }
    const std::string& state_name(StateIndex s) const { return states_.at(s); }
    std::size_t action_count(StateIndex s) const { return actions_.at(s).size(); }
    const std::vector<std::string>& actions(StateIndex s) const { return actions_.at(s); }
    const std::string& action_name(StateIndex s, ActionIndex a) const { return actions_.at(s).at(a); }

    std::optional<StateIndex> find_state(std::string_view name) const;
    std::optional<ActionIndex> find_action(StateIndex s, std::string_view name) const;

    bool has_reward(Epoch t, StateIndex s, ActionIndex a) const;
    bool has_transition(Epoch t, StateIndex s, ActionIndex a) const;
    bool has_terminal(StateIndex s) const;

    /// Throw ModelError when the entry has not been set.
    const RewardVector& reward(Epoch t, StateIndex s, ActionIndex a) const;
    const std::vector<Rational>& transition(Epoch t, StateIndex s, ActionIndex a) const;
    const RewardVector& terminal(StateIndex s) const;

    void set_reward(Epoch t, StateIndex s, ActionIndex a, RewardVector r);
    void set_transition(Epoch t, StateIndex s, ActionIndex a, std::vector<Rational> row);
    void set_terminal(StateIndex s, RewardVector r);

    /// Fill every decision epoch with the same entry.
    void set_reward_all_epochs(StateIndex s, ActionIndex a, const RewardVector& r);
    void set_transition_all_epochs(StateIndex s, ActionIndex a, const std::vector<Rational>& row);

private:
    void check_index(Epoch t, StateIndex s, ActionIndex a) const;

    std::size_t objectives_;
    int horizon_;
    std::vector<std::string> states_;
    std::vector<std::vector<std::string>> actions_;
    // [t-1][s][a]
    std::vector<std::vector<std::vector<std::optional<RewardVector>>>> rewards_;
    std::vector<std::vector<std::vector<std::optional<std::vector<Rational>>>>> transitions_;
    std::vector<std::optional<RewardVector>> terminal_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Never throws on a bad model; every problem becomes a report entry.
ValidationReport validate_model(const VmdpModel& model);

/// Throws ModelError listing the violations when the model does not validate.
void require_valid(const VmdpModel& model);

/// Policy counts grow doubly exponentially; values past 2^64-1 saturate.
struct PolicyCount {
    std::uint64_t value = 0;
    bool saturated = false;

    bool exceeds(std::uint64_t cap) const { return saturated || value > cap; }
    std::string to_string() const;

    friend bool operator==(const PolicyCount&, const PolicyCount&) = default;
};

struct ModelProperties {
    bool is_stationary = false;
    bool is_deterministic = false;
    PolicyCount markov_policy_count;
    PolicyCount history_policy_count;
};

/// Requires a valid model (throws ModelError otherwise).
ModelProperties analyze_model(const VmdpModel& model);

PolicyCount markov_policy_count(const VmdpModel& model);
PolicyCount history_policy_count(const VmdpModel& model);

/// Stationary N = 4 two-state model on which the set-valued recursion overshoots the Markov front.
VmdpModel builtin_counterexample();

/// Same rewards with one-hot transitions: a1 leads to s1, a2 leads to s2, from either state.
VmdpModel builtin_deterministic_variant();

} // namespace vmdp
