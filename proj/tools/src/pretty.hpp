#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace drazin::cli {

/// Indented "key: value" text with matrices drawn as aligned rows.
std::string render_pretty(const nlohmann::json& value);

}  // namespace drazin::cli
