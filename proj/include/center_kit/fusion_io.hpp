#pragma once

#include <string>

#include "center_kit/fusion_category.hpp"
#include "json.hpp"

namespace ck {

// name is used when the document has no "name" field.
FusionCategory parse_fusion_data(const std::string& text, const std::string& name = "custom");
FusionCategory load_fusion_file(const std::string& path);
// Accepts a built-in name or a path to a fusion-data file.
FusionCategory load_category(const std::string& spec);

nlohmann::json to_json(const FusionCategory& C);
std::string serialize(const FusionCategory& C);
// SHA-256 of the serialized normal form, hex encoded.
std::string fingerprint(const FusionCategory& C);
std::string sha256_hex(const std::string& bytes);

}  // namespace ck
