#pragma once

#include <string>

#include <json.hpp>

namespace perihyp {

using Json = nlohmann::ordered_json;

/// Serializes with insertion-ordered keys and every floating-point number
/// printed at 17 significant digits, so identical inputs give byte-identical
/// reports.
std::string dump_deterministic(const Json& value, int indent = 2);

}  // namespace perihyp
