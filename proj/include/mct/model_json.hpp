#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mct/model.hpp"

namespace mct {

/// {"entries": {"a11": {...}, "a12": {...}, "a21": {...}, "a22": {...}}}
/// Throws Error(InvalidModel) naming the offending field.
MatrixModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const MatrixModel& m);

Distribution distribution_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json distribution_to_json(const Distribution& d);

MatrixModel load_model(const std::filesystem::path& path);

}  // namespace mct
