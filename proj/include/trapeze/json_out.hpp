#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace trapeze {

using Json = nlohmann::ordered_json;

// deterministic dump: keys in insertion order, doubles with 17 significant
// digits
std::string dump_json(const Json& j, int indent = 2);

}  // namespace trapeze
