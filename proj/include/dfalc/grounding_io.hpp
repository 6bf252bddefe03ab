#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dfalc/grounding.hpp"

namespace dfalc {

/// `{"individuals":[...], "concepts":{"A":[...]}, "roles":{"r":[[...],...]}}`.
/// Concepts and roles are written in signature order.
nlohmann::ordered_json grounding_to_json(const Grounding& g);

/// Validates shapes and the [0,1] range; throws InvalidGrounding.
Grounding grounding_from_json(const nlohmann::ordered_json& j);

std::string dump_grounding(const Grounding& g);
Grounding load_grounding_file(const std::string& path);
void save_grounding_file(const Grounding& g, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dfalc
