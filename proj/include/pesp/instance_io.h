#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pesp/model.h"

namespace pesp {

// JSON instance format:
//   { "period": T,
//     "events":     [ {"id", "kind": "arrival"|"departure", "line", "station",
//                      "brake_time"?, "accel_time"?} ... ],
//     "activities": [ {"id", "kind", "tail", "head", "lower", "upper",
//                      "weight": "<decimal string>"} ... ] }
// Throws ParseError on malformed text, unknown kinds or dangling event ids.
Instance ParseInstance(std::string_view text);
Instance LoadInstance(const std::filesystem::path& path);

// Canonical form: fixed key order, two-space indentation, trailing newline.
std::string SerializeInstance(const Instance& instance);
void SaveInstance(const Instance& instance, const std::filesystem::path& path);

}  // namespace pesp
