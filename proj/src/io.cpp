#include "hurwitz/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hurwitz {

namespace {

nlohmann::json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

} // namespace

GroupFileData read_group_file(const std::string &path) {
  nlohmann::json j = read_json_file(path);
  GroupFileData d;
  try {
    d.degree = j.at("degree").get<unsigned>();
    for (const auto &g : j.at("generators"))
      d.generators.push_back(g.get<std::string>());
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(path + ": " + e.what());
  }
  return d;
}

std::shared_ptr<PermGroup> load_group(const std::string &path, BaseRule rule) {
  GroupFileData d = read_group_file(path);
  std::vector<Perm> gens;
  for (const std::string &s : d.generators)
    gens.push_back(parse_cycles(s, d.degree));
  return std::make_shared<PermGroup>(d.degree, std::move(gens), rule);
}

Component load_component(const std::string &path, std::uint64_t orbit_cap) {
  nlohmann::json j = read_json_file(path);
  unsigned points = 0;
  std::vector<Perm> entries;
  try {
    points = j.at("points").get<unsigned>();
    for (const auto &e : j.at("entries"))
      entries.push_back(parse_cycles(e.get<std::string>(), points));
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(path + ": " + e.what());
  }
  return component_of(GTuple(points, std::move(entries)), orbit_cap);
}

std::string component_to_json(const Component &x) {
  nlohmann::ordered_json j;
  j["points"] = x.points();
  j["degree"] = x.degree();
  std::vector<std::string> entries;
  for (const Perm &e : x.canonical().entries())
    entries.push_back(cycle_string(e));
  j["entries"] = entries;
  j["orbit_size"] = x.orbit_size();
  j["monodromy_order"] = x.monodromy().order();
  return j.dump();
}

std::vector<Perm> parse_class_spec(const PermGroup &g, const std::string &spec,
                                   std::uint64_t element_cap) {
  std::vector<Perm> out;
  if (spec == "nonidentity" || spec == "all") {
    for (const Perm &e : g.elements(element_cap))
      if (spec == "all" || !e.is_identity())
        out.push_back(e);
  } else if (spec == "transpositions") {
    for (const Perm &e : g.elements(element_cap)) {
      auto ct = e.cycle_type();
      if (ct.size() == 1 && ct[0] == 2)
        out.push_back(e);
    }
  } else if (spec == "involutions") {
    for (const Perm &e : g.elements(element_cap))
      if (!e.is_identity() && element_order(e) == 2)
        out.push_back(e);
  } else {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';'))
      if (!item.empty())
        out.push_back(parse_cycles(item, g.degree()));
    if (out.empty())
      throw ParseError("empty class spec");
  }
  return out;
}

std::string fnv1a_hex(const std::string &data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char *digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

} // namespace hurwitz
