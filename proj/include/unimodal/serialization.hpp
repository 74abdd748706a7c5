#pragma once

#include <string>

#include <json.hpp>

#include "unimodal/sequences.hpp"

namespace unimodal {

// Canonical single-line records:
//   {"n": int, "parts": [int...]}
//   {"n": int, "parts": [int...], "marked": [bool...]}
nlohmann::json to_json(const UnimodalSequence& seq);
nlohmann::json to_json(const Overpartition& op);

UnimodalSequence sequence_from_json(const nlohmann::json& j);
Overpartition overpartition_from_json(const nlohmann::json& j);

std::string to_json_line(const UnimodalSequence& seq);
std::string to_json_line(const Overpartition& op);

} // namespace unimodal
