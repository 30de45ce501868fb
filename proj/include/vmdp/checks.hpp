#pragma once

#include "vmdp/model.hpp"
#include "vmdp/oracle.hpp"
#include "vmdp/pareto.hpp"
#include "vmdp/policy.hpp"
#include "vmdp/recursion.hpp"

#include <cstdint>
#include <vector>

namespace vmdp {

/// A member of F_t (state- or history-indexed) that no policy attains.
struct InfeasibleVector {
    Epoch t;
    /// Length 1 for state-indexed checks.
    History where;
    RewardVector vector;
    Generator generator;
};

/// Outcome of testing F_t(.) against the attainable set V_t(.) at every decision epoch.
struct FeasibilityReport {
    bool holds = true;
    std::vector<InfeasibleVector> violations;
    std::size_t vectors_checked = 0;
    std::uint64_t policies = 0;
};

/// F_t(s) subset of V_t(s) for all t < N and s, with V over Markov policies.
FeasibilityReport check_property_P(const VmdpModel& model, OracleOptions options = {});

/// F'_t(h) subset of V'_t(h) for all t < N and h in S^t, with V' over history-dependent policies.
FeasibilityReport check_property_P_prime(const VmdpModel& model, OracleOptions options = {});

/// The recursion evaluated literally over histories: U'_N(h) = {R_N(s_N)}, U'_t(h) = e(F'_t(h)).
struct HistoryValueTable {
    std::vector<std::vector<ParetoSet>> fronts; // [t-1][history_index]
    std::vector<std::vector<FSet>> f_sets;      // [t-1][history_index], t < N

    const ParetoSet& at(Epoch t, std::size_t history_idx) const {
        return fronts.at(static_cast<std::size_t>(t - 1)).at(history_idx);
    }
};

HistoryValueTable history_white_recursion(const VmdpModel& model);

struct FrontMismatch {
    Epoch t;
    History where;
    ParetoSet expected;
    ParetoSet actual;
};

struct ConsistencyReport {
    bool holds = true;
    std::vector<FrontMismatch> mismatches;
    std::size_t fronts_compared = 0;
    std::uint64_t policies = 0;
};

/// U_t(s) (expected) against e(V_t(s)) over Markov policies (actual), all t <= N and s.
ConsistencyReport compare_recursion_with_markov_oracle(const VmdpModel& model, OracleOptions options = {});

/// U_t(s_t) (expected) against e(V'_t(h_t)) (actual) for every history h_t, all t <= N.
ConsistencyReport compare_recursion_with_history_oracle(const VmdpModel& model, OracleOptions options = {});

/// e(V'_t(h)) depends on h only through its last state: each front is compared with that of (s_t).
ConsistencyReport check_history_fronts_depend_on_last_state(const VmdpModel& model, OracleOptions options = {});

} // namespace vmdp
