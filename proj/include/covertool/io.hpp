#pragma once

#include <string>

#include <json.hpp>

#include "covertool/system.hpp"

namespace covertool {

// Text format: classes "a(n)" separated by commas and/or newlines, whitespace
// ignored. Structured format: {"classes": [{"a": int, "n": int}, ...],
// "distinguished": bool}. parse_system sniffs the format (leading '{' means
// JSON). Both reject n <= 0 with InvalidModulus.
System parse_system(const std::string& text);
System parse_system_text(const std::string& text);
System parse_system_json(const std::string& text);

std::string format_system(const System& system);  // canonical "a(n),a(n),..." text

nlohmann::json system_to_json(const System& system);
System system_from_json(const nlohmann::json& j);

}  // namespace covertool
