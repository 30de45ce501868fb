#pragma once

#include "vmdp/pareto.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vmdp::cli {

class FrontFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One CSV row: a vector plus optional annotation columns.
struct FrontRow {
    RewardVector vector;
    std::string generator_action; // empty when not recorded
    std::optional<bool> efficient; // only for F-set files
};

/**
 * Writes `objective_k_exact,objective_k_rounded` for k = 1..m, followed by
 * `generator_action` and `efficient` when any row carries them. Rows are
 * written in the given order.
 */
void write_front_csv(const std::filesystem::path& path, const std::vector<FrontRow>& rows, std::size_t dimension,
                     int places);

/**
 * Reads the vectors of a front CSV. Each objective is taken from
 * `objective_k_exact` if present, else `objective_k`, else
 * `objective_k_rounded`. Throws FrontFormatError.
 */
std::vector<RewardVector> read_front_csv(const std::filesystem::path& path);

/// Set difference report between two fronts.
struct ComparisonReport {
    std::string left_label;
    std::string right_label;
    bool match = true;
    std::vector<RewardVector> only_left;
    std::vector<RewardVector> only_right;
    std::optional<int> rounding_places;
};

/// Compares as sets, after rounding both sides when `places` is given.
ComparisonReport compare_fronts(std::string left_label, const std::vector<RewardVector>& left,
                                std::string right_label, const std::vector<RewardVector>& right,
                                std::optional<int> places);

/// State name made safe for use inside a file name.
std::string file_component(const std::string& name);

} // namespace vmdp::cli
