#pragma once

// Group files: JSON objects
//
//   { "degree": 11,
//     "generators": ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"],
//     "label": "M11",
//     ... }
//
// Unknown keys (provenance notes and the like) are preserved by readers that
// care and ignored here.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "isg/stab_chain.hpp"

namespace isg {

GeneratedGroup group_from_json(const nlohmann::json& j);
nlohmann::ordered_json group_to_json(const GeneratedGroup& group);

/// Throws ParseError on unreadable or malformed files.
GeneratedGroup load_group_file(const std::filesystem::path& path);
nlohmann::json read_json_file(const std::filesystem::path& path);

std::vector<std::string> to_cycle_strings(const std::vector<Permutation>& perms);
std::vector<Permutation> parse_cycle_list(const nlohmann::json& list,
                                          std::size_t degree);

}  // namespace isg
