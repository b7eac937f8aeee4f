#include "isg/witness.hpp"

#include "isg/catalog.hpp"
#include "isg/error.hpp"
#include "isg/group_io.hpp"

namespace isg {
namespace {

Completeness completeness_from(const std::string& s) {
  if (s == "cited") return Completeness::kCited;
  if (s == "computed") return Completeness::kComputed;
  if (s == "assumed") return Completeness::kAssumed;
  throw ParseError("completeness must be cited, computed or assumed, got '" + s + "'");
}

Order order_from(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Order(j.get<std::uint64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("claimed_order '" + s + "' is not a decimal integer");
    return Order(s);
  }
  throw ParseError("claimed_order must be a non-negative integer or decimal string");
}

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("witness is missing '") + key + "'");
  return j.at(key);
}

Permutation single_cycle_string(const nlohmann::json& j, const char* key, std::size_t degree) {
  const auto& v = require(j, key);
  if (!v.is_string()) throw ParseError(std::string("'") + key + "' must be a cycle string");
  return parse_cycles(v.get<std::string>(), degree);
}

std::vector<OvergroupSpec> overgroups_from(const nlohmann::json& list, std::size_t degree) {
  if (!list.is_array()) throw ParseError("overgroup lists must be arrays");
  std::vector<OvergroupSpec> out;
  for (const auto& item : list) {
    OvergroupSpec o;
    const auto& label = require(item, "label");
    if (!label.is_string()) throw ParseError("overgroup label must be a string");
    o.label = label.get<std::string>();
    o.generators = parse_cycle_list(require(item, "generators"), degree);
    if (item.contains("claimed_order")) o.claimed_order = order_from(item["claimed_order"]);
    o.completeness = completeness_from(item.value("completeness", std::string("assumed")));
    o.provenance = item.value("provenance", std::string{});
    out.push_back(std::move(o));
  }
  return out;
}

nlohmann::ordered_json overgroups_to(const std::vector<OvergroupSpec>& list) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& o : list) {
    nlohmann::ordered_json j;
    j["label"] = o.label;
    j["generators"] = to_cycle_strings(o.generators);
    if (o.claimed_order) j["claimed_order"] = o.claimed_order->str();
    j["completeness"] = to_string(o.completeness);
    j["provenance"] = o.provenance;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

std::string to_string(Completeness c) {
  switch (c) {
    case Completeness::kCited: return "cited";
    case Completeness::kComputed: return "computed";
    case Completeness::kAssumed: return "assumed";
  }
  return "assumed";
}

WitnessCase witness_from_json(const nlohmann::json& j) {
  WitnessCase w;
  try {
    w.name = require(j, "name").get<std::string>();
    w.degree = require(j, "degree").get<std::size_t>();
    if (w.degree == 0) throw ParseError("witness degree must be positive");

    const auto& ambient = require(j, "ambient");
    std::string kind = require(ambient, "kind").get<std::string>();
    if (kind == "alternating") {
      w.ambient.kind = AmbientSpec::Kind::kAlternating;
      auto n = require(ambient, "n").get<std::size_t>();
      if (n != w.degree) throw ParseError("alternating ambient must act on 'degree' points");
      w.ambient.group = alternating_group(n);
    } else if (kind == "generators") {
      w.ambient.kind = AmbientSpec::Kind::kGenerators;
      w.ambient.group = GeneratedGroup(
          w.degree, parse_cycle_list(require(ambient, "generators"), w.degree),
          ambient.value("label", std::string("ambient")));
    } else {
      throw ParseError("ambient kind must be 'alternating' or 'generators'");
    }

    const auto& pair = require(j, "pair");
    w.g_a = single_cycle_string(pair, "g_a", w.degree);
    w.g_b = single_cycle_string(pair, "g_b", w.degree);
    if (j.contains("claimed_distance")) {
      int d = j["claimed_distance"].get<int>();
      if (d != 0 && d != 2 && d != 3 && d != 4)
        throw ParseError("claimed_distance must be 0, 2, 3 or 4");
      w.claimed_distance = d;
    }
    w.overgroups_a = overgroups_from(require(j, "overgroups_a"), w.degree);
    w.overgroups_b = overgroups_from(require(j, "overgroups_b"), w.degree);
    w.notes = j.value("notes", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed witness: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed witness: ") + e.what());
  }
  return w;
}

nlohmann::ordered_json witness_to_json(const WitnessCase& w) {
  nlohmann::ordered_json j;
  j["name"] = w.name;
  j["degree"] = w.degree;
  nlohmann::ordered_json ambient;
  if (w.ambient.kind == AmbientSpec::Kind::kAlternating) {
    ambient["kind"] = "alternating";
    ambient["n"] = w.degree;
  } else {
    ambient["kind"] = "generators";
    ambient["label"] = w.ambient.group.label;
    ambient["generators"] = to_cycle_strings(w.ambient.group.generators);
  }
  j["ambient"] = std::move(ambient);
  j["pair"] = {{"g_a", w.g_a.to_cycles()}, {"g_b", w.g_b.to_cycles()}};
  if (w.claimed_distance) j["claimed_distance"] = *w.claimed_distance;
  j["overgroups_a"] = overgroups_to(w.overgroups_a);
  j["overgroups_b"] = overgroups_to(w.overgroups_b);
  if (!w.notes.empty()) j["notes"] = w.notes;
  return j;
}

WitnessCase load_witness_file(const std::filesystem::path& path) {
  return witness_from_json(read_json_file(path));
}

WitnessCase relabel(const WitnessCase& w, const Permutation& s) {
  auto conj_all = [&](const std::vector<Permutation>& perms) {
    std::vector<Permutation> out;
    for (const auto& p : perms) out.push_back(conjugate(p, s));
    return out;
  };
  WitnessCase r = w;
  r.g_a = conjugate(w.g_a, s);
  r.g_b = conjugate(w.g_b, s);
  if (r.ambient.kind == AmbientSpec::Kind::kGenerators)
    r.ambient.group.generators = conj_all(w.ambient.group.generators);
  for (auto& o : r.overgroups_a) o.generators = conj_all(o.generators);
  for (auto& o : r.overgroups_b) o.generators = conj_all(o.generators);
  return r;
}

}  // namespace isg
