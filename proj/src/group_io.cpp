#include "isg/group_io.hpp"

#include <fstream>

#include "isg/error.hpp"

namespace isg {

std::vector<Permutation> parse_cycle_list(const nlohmann::json& list,
                                          std::size_t degree) {
  if (!list.is_array()) throw ParseError("generators must be an array of cycle strings");
  std::vector<Permutation> out;
  for (const auto& item : list) {
    if (!item.is_string()) throw ParseError("generator entries must be strings");
    out.push_back(parse_cycles(item.get<std::string>(), degree));
  }
  return out;
}

std::vector<std::string> to_cycle_strings(const std::vector<Permutation>& perms) {
  std::vector<std::string> out;
  out.reserve(perms.size());
  for (const auto& p : perms) out.push_back(p.to_cycles());
  return out;
}

GeneratedGroup group_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("group must be a JSON object");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned())
    throw ParseError("group needs a positive integer 'degree'");
  auto degree = j["degree"].get<std::size_t>();
  if (degree == 0) throw ParseError("group degree must be positive");
  if (!j.contains("generators")) throw ParseError("group needs 'generators'");
  std::string label = j.value("label", std::string{});
  return GeneratedGroup(degree, parse_cycle_list(j["generators"], degree), label);
}

nlohmann::ordered_json group_to_json(const GeneratedGroup& group) {
  nlohmann::ordered_json j;
  j["label"] = group.label;
  j["degree"] = group.degree;
  j["generators"] = to_cycle_strings(group.generators);
  return j;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

GeneratedGroup load_group_file(const std::filesystem::path& path) {
  GeneratedGroup g = group_from_json(read_json_file(path));
  if (g.label.empty()) g.label = path.stem().string();
  return g;
}

}  // namespace isg
