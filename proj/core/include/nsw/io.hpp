#pragma once

#include <string>

#include "nsw/instance.hpp"

namespace nsw {

inline constexpr int kSchemaVersion = 1;

std::string instance_to_json(const Instance& inst);

// Parses and validates; throws std::runtime_error naming the offending
// field, or std::invalid_argument from validate_instance.
Instance instance_from_json(const std::string& text);

void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

}  // namespace nsw
