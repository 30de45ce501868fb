#pragma once

#include "vmdp/model.hpp"
#include "vmdp/pareto.hpp"

#include <optional>
#include <span>
#include <vector>

namespace vmdp {

/// The successor value chosen for state `state` when forming one member of an F set.
struct SuccessorChoice {
    StateIndex state;
    RewardVector value;

    friend bool operator==(const SuccessorChoice&, const SuccessorChoice&) = default;
};

/// How a member of F_t(s) was produced: R_t(s, action) + sum_j p_j * choices_j.value.
struct Generator {
    ActionIndex action;
    /// Only successors with positive probability, in state order.
    std::vector<SuccessorChoice> choices;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/**
 * Pre-filter set of the recursion at (t, s):
 * union over actions of {R_t(s,a)} (+) sum_j p_t(j|s,a) * next(j).
 *
 * `generators[i]` explains `vectors[i]`. When several choices produce the same
 * vector the first one (action order, then successor choices in canonical
 * order) is kept.
 */
struct FSet {
    Epoch t = 0;
    StateIndex s = 0;
    VectorSet vectors;
    std::vector<Generator> generators;

    /// nullptr when x is not a member.
    const Generator* generator_of(const RewardVector& x) const;
};

/**
 * Builds F_t(s) from the (t+1) layer `next`, indexed by state.
 *
 * Successors with zero probability are skipped entirely: they add nothing to
 * the sum and do not multiply the number of choices. Throws
 * std::invalid_argument when t is not a decision epoch or when `next` does not
 * supply a nonempty set for every state.
 */
FSet f_set(const VmdpModel& model, Epoch t, StateIndex s, std::span<const ParetoSet> next);

struct RecursionOptions {
    /// Retain every F_t(s) with generators, for feasibility audits.
    bool keep_f_sets = false;
};

/// U_t(s) for t = 1..N with per-vector provenance.
class ValueTable {
public:
    int horizon() const { return static_cast<int>(entries_.size()); }
    std::size_t state_count() const { return entries_.empty() ? 0 : entries_.front().size(); }

    const ParetoSet& at(Epoch t, StateIndex s) const;
    /// Generator of a member of U_t(s); nullptr at t = N or for non-members.
    const Generator* provenance(Epoch t, StateIndex s, const RewardVector& x) const;
    /// nullptr unless the recursion ran with keep_f_sets.
    const FSet* f_set_at(Epoch t, StateIndex s) const;
    bool has_f_sets() const { return !f_sets_.empty(); }

private:
    friend ValueTable white_recursion(const VmdpModel& model, RecursionOptions options);

    // [t-1][s]
    std::vector<std::vector<ParetoSet>> entries_;
    std::vector<std::vector<std::vector<Generator>>> provenance_;
    std::vector<std::vector<FSet>> f_sets_;
};

/**
 * Set-valued backward induction: U_N(s) = {R_N(s)} and
 * U_t(s) = e(F_t(s)) for t = N-1 down to 1. Throws ModelError for an invalid model.
 */
ValueTable white_recursion(const VmdpModel& model, RecursionOptions options = {});

/**
 * Scalar backward induction for m = 1: u_N(s) = R_N(s),
 * u_t(s) = max_a R_t(s,a) + sum_j p_t(j|s,a) u_{t+1}(j).
 * Result is indexed [t-1][s] for t = 1..N. Throws std::invalid_argument when m != 1.
 */
std::vector<std::vector<Rational>> scalar_bellman(const VmdpModel& model);

} // namespace vmdp
