#pragma once

#include "vmdp/model.hpp"

#include "json.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace vmdp {

/// Unreadable file or a document that does not have the model file layout.
class ModelFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Model file layout:
 *
 *   { "m": 2, "horizon": 4, "states": ["s1", "s2"],
 *     "actions": {"s1": ["a1", "a2"], ...}, "stationary": true,
 *     "rewards":     {"all": {"s1": {"a1": ["11", "-5"], ...}}},
 *     "transitions": {"all": {"s1": {"a1": ["3/4", "1/4"], ...}}},
 *     "terminal": {"s1": ["1", "0"], ...} }
 *
 * Table keys are "all" or a decision epoch ("1".."N-1"); epoch keys override
 * "all". Transition arrays follow the order of "states". Scalars may be JSON
 * integers, decimal strings ("0.75") or "p/q" strings, all parsed exactly.
 *
 * Structural problems throw ModelFormatError. Content problems (row sums,
 * dimensions, missing entries) load fine and surface in validate_model().
 */
VmdpModel model_from_json(const nlohmann::json& doc);
nlohmann::json model_to_json(const VmdpModel& model);

VmdpModel load_model(const std::filesystem::path& path);
void save_model(const VmdpModel& model, const std::filesystem::path& path);

/// SHA-256 of the canonical JSON serialization, hex encoded.
std::string model_digest(const VmdpModel& model);

} // namespace vmdp
