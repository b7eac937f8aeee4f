#pragma once

// Witness files describe one distance claim between two prime-order cyclic
// subgroups <g_a>, <g_b> of an ambient group, together with the maximal
// overgroups of each side:
//
//   { "name": "a13_distance4",
//     "degree": 13,
//     "ambient": { "kind": "alternating", "n": 13 }
//              | { "kind": "generators", "label": "...", "generators": [...] },
//     "pair": { "g_a": "(1,8,10,...)", "g_b": "(1,2,...,13)" },
//     "claimed_distance": 4,
//     "overgroups_a": [ { "label": "...", "generators": [...],
//                         "claimed_order": "5616",
//                         "completeness": "cited" | "computed" | "assumed",
//                         "provenance": "..." }, ... ],
//     "overgroups_b": [ ... ] }
//
// Permutations use 1-indexed cycle notation. claimed_order may be a JSON
// number or a decimal string (orders can exceed 64 bits).

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isg/order.hpp"
#include "isg/stab_chain.hpp"

namespace isg {

enum class Completeness { kCited, kComputed, kAssumed };

std::string to_string(Completeness c);

struct OvergroupSpec {
  std::string label;
  std::vector<Permutation> generators;
  std::optional<Order> claimed_order;
  Completeness completeness = Completeness::kAssumed;
  std::string provenance;
};

struct AmbientSpec {
  enum class Kind { kAlternating, kGenerators };
  Kind kind = Kind::kAlternating;
  /// The ambient group; for kAlternating this is alternating_group(degree).
  GeneratedGroup group;
};

struct WitnessCase {
  std::string name;
  std::size_t degree = 1;
  AmbientSpec ambient;
  Permutation g_a;
  Permutation g_b;
  /// One of 0, 2, 3, 4; absent means "report only".
  std::optional<int> claimed_distance;
  std::vector<OvergroupSpec> overgroups_a;
  std::vector<OvergroupSpec> overgroups_b;
  std::string notes;
};

/// Throws ParseError on structural problems or unparsable permutations.
WitnessCase witness_from_json(const nlohmann::json& j);
nlohmann::ordered_json witness_to_json(const WitnessCase& w);
WitnessCase load_witness_file(const std::filesystem::path& path);

/// The same witness with every permutation conjugated by s.
WitnessCase relabel(const WitnessCase& w, const Permutation& s);

}  // namespace isg
