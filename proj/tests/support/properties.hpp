#pragma once

#include "vmdp/model.hpp"
#include "vmdp/policy.hpp"

#include <optional>
#include <random>
#include <string>

namespace vmdp::fixtures {

/// Each case draws one random instance, checks one property exhaustively and
/// returns a description of the first failure, or nullopt when it holds.
using CaseResult = std::optional<std::string>;

HistoryPolicy random_history_policy(std::mt19937_64& rng, const VmdpModel& model);
MarkovPolicy random_markov_policy(std::mt19937_64& rng, const VmdpModel& model);

/// N in {2,3}, m <= 3, |S|,|A| <= 3: (P) holds and U_1 = e(V_1).
CaseResult short_horizon_case(std::mt19937_64& rng);

/// Deterministic dynamics, N <= 5: U_t(s) = e(V_t(s)) for every t and s.
CaseResult deterministic_case(std::mt19937_64& rng);

/// Evaluating a stitched policy at its root history returns the promised vector.
CaseResult stitch_case(std::mt19937_64& rng);

/// e(X) subset of X, antichain, idempotent, kernel, equal to the definition, max for m = 1.
CaseResult pareto_laws_case(std::mt19937_64& rng);

/// For m = 1 the set recursion is the scalar Bellman recursion.
CaseResult scalar_case(std::mt19937_64& rng);

/// U_t(s_t) = e(V'_t(h_t)) and (P') holds, on models with a small history policy space.
CaseResult history_case(std::mt19937_64& rng);

} // namespace vmdp::fixtures
