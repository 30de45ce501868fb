#pragma once

#include "vmdp/model.hpp"
#include "vmdp/pareto.hpp"
#include "vmdp/policy.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace vmdp {

/// u_t^pi(s) for t = 1..N.
struct MarkovValue {
    /// [t-1][s]
    std::vector<std::vector<RewardVector>> values;

    const RewardVector& at(Epoch t, StateIndex s) const { return values.at(static_cast<std::size_t>(t - 1)).at(s); }
};

/// u_t^pi(h_t) for t = 1..N and every h_t in S^t.
struct HistoryValue {
    /// [t-1][history_index]
    std::vector<std::vector<RewardVector>> values;

    const RewardVector& at(Epoch t, std::size_t history_idx) const {
        return values.at(static_cast<std::size_t>(t - 1)).at(history_idx);
    }
};

/// Policy returns over P_W: V_t(s) for t = 1..N.
struct MarkovVSets {
    std::vector<std::vector<VectorSet>> sets; // [t-1][s]
    std::uint64_t policies = 0;

    const VectorSet& at(Epoch t, StateIndex s) const { return sets.at(static_cast<std::size_t>(t - 1)).at(s); }
};

/// Policy returns over P: V'_t(h_t) for t = 1..N.
struct HistoryVSets {
    std::vector<std::vector<VectorSet>> sets; // [t-1][history_index]
    std::uint64_t policies = 0;

    const VectorSet& at(Epoch t, std::size_t history_idx) const {
        return sets.at(static_cast<std::size_t>(t - 1)).at(history_idx);
    }
};

struct OracleOptions {
    std::uint64_t cap = kDefaultPolicyCap;
};

/// Exact backward evaluation of a Markov policy. Throws std::invalid_argument for a malformed policy.
MarkovValue evaluate_markov(const VmdpModel& model, const MarkovPolicy& policy);

/// Exact backward evaluation over the history tree.
HistoryValue evaluate_history(const VmdpModel& model, const HistoryPolicy& policy);

/// Enumerates every Markov policy and collects V_t(s). Throws CapExceeded.
MarkovVSets v_sets_markov(const VmdpModel& model, OracleOptions options = {});

/// Enumerates every history-dependent policy and collects V'_t(h_t). Throws CapExceeded.
HistoryVSets v_sets_history(const VmdpModel& model, OracleOptions options = {});

/// The history policy whose every rule ignores all but the last state.
HistoryPolicy embed(const VmdpModel& model, const MarkovPolicy& policy);

struct StitchResult {
    HistoryPolicy policy;
    /// R_t(s_t, a) + sum_j p_t(j|s_t,a) u_{t+1}^{pi_j}(h_t, j)
    RewardVector target;
};

/**
 * Policy that takes `action` at history `h` (epoch t = h.length()) and, for
 * each successor j, follows `continuations[j]` on every history extending
 * (h, j). All other rule entries take the first action of the last state.
 *
 * A continuation is needed for every successor with positive probability.
 * Throws std::invalid_argument for a non-decision epoch, an invalid action or
 * a missing continuation.
 */
StitchResult stitch(const VmdpModel& model, const History& h, ActionIndex action,
                    const std::map<StateIndex, HistoryPolicy>& continuations);

struct WitnessOptions {
    std::uint64_t cap = kDefaultPolicyCap;
    /// Match after rounding both sides half away from zero, for targets copied from rounded tables.
    std::optional<int> round_places;
};

template <typename Policy>
struct WitnessResult {
    std::optional<Policy> policy;
    std::uint64_t searched = 0;
    /// Every policy was examined; with no policy found this proves infeasibility.
    bool exhaustive = false;
};

/// First Markov policy with u_t^pi(s) equal to `target`. Throws CapExceeded.
WitnessResult<MarkovPolicy> find_markov_witness(const VmdpModel& model, Epoch t, StateIndex s,
                                                const RewardVector& target, WitnessOptions options = {});

/// First history policy with u_t^pi(h) equal to `target`, t = h.length(). Throws CapExceeded.
WitnessResult<HistoryPolicy> find_history_witness(const VmdpModel& model, const History& h,
                                                  const RewardVector& target, WitnessOptions options = {});

} // namespace vmdp
