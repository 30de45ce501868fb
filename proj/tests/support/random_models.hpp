#pragma once

#include "vmdp/model.hpp"
#include "vmdp/pareto.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace vmdp::fixtures {

struct RandomModelShape {
    int horizon = 3;
    std::size_t objectives = 2;
    std::size_t states = 2;
    /// Each state gets between 1 and max_actions actions.
    std::size_t max_actions = 2;
    bool deterministic = false;
    /// Rewards are drawn from {-range, ..., range} / 2.
    int reward_range = 6;
    bool stationary = false;
};

VmdpModel random_model(std::mt19937_64& rng, const RandomModelShape& shape);

/// Shape with horizon, objectives, states and actions drawn uniformly from the given ranges.
RandomModelShape random_shape(std::mt19937_64& rng, int min_horizon, int max_horizon, std::size_t max_objectives,
                              std::size_t max_states, std::size_t max_actions, bool deterministic);

/// Keeps only objective `component` of every reward.
VmdpModel project_objective(const VmdpModel& model, std::size_t component);

/// Random point set with small integer coordinates; duplicates likely.
std::vector<RewardVector> random_points(std::mt19937_64& rng, std::size_t count, std::size_t dimension, int range);

/// e(X) straight from the definition: x survives iff every y >= x equals x.
VectorSet brute_force_efficient(const std::vector<RewardVector>& points);

bool brute_force_geq(const RewardVector& y, const RewardVector& x);

} // namespace vmdp::fixtures
