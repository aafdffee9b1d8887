#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "paratop/kripke.hpp"
#include "paratop/maps.hpp"
#include "paratop/model.hpp"

namespace paratop {

using Json = nlohmann::json;

inline Json to_json(PointSet s) {
  Json arr = Json::array();
  for (int m : s.members()) arr.push_back(m);
  return arr;
}

inline PointSet point_set_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected an array of point ids");
  std::vector<int> members;
  for (const auto& x : j) {
    int v = x.get<int>();
    if (v < 0 || v >= kMaxPoints) throw Error("point id out of range: " + std::to_string(v));
    members.push_back(v);
  }
  return PointSet::from_members(members);
}

inline Mode mode_from_string(const std::string& s) {
  if (s == "classical") return Mode::Classical;
  if (s == "paraconsistent") return Mode::Paraconsistent;
  if (s == "paracomplete") return Mode::Paracomplete;
  throw Error("unknown mode '" + s + "'");
}

inline Json model_to_json(const TopoModel& m) {
  Json j;
  j["points"] = m.point_count();
  Json opens = Json::array();
  for (PointSet o : m.space().opens()) opens.push_back(to_json(o));
  j["opens"] = std::move(opens);
  j["mode"] = to_string(m.mode());
  Json val = Json::object();
  for (const auto& [name, set] : m.valuation()) val[name] = to_json(set);
  j["valuation"] = std::move(val);
  return j;
}

inline TopoModel model_from_json(const Json& j) {
  int n = j.at("points").get<int>();
  std::vector<PointSet> opens;
  for (const auto& o : j.at("opens")) opens.push_back(point_set_from_json(o));
  FiniteTopology space = FiniteTopology::from_opens(n, std::move(opens));
  Mode mode = mode_from_string(j.at("mode").get<std::string>());
  std::map<std::string, PointSet> valuation;
  if (j.contains("valuation"))
    for (const auto& [name, set] : j.at("valuation").items())
      valuation[name] = point_set_from_json(set);
  return TopoModel(std::move(space), mode, std::move(valuation));
}

inline Json kripke_to_json(const KripkeModel& k) {
  Json j;
  j["worlds"] = k.world_count();
  Json edges = Json::array();
  for (auto [a, b] : k.edges()) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  Json val = Json::object();
  for (const auto& [name, set] : k.valuation()) val[name] = to_json(set);
  j["valuation"] = std::move(val);
  return j;
}

inline KripkeModel kripke_from_json(const Json& j) {
  int n = j.at("worlds").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::map<std::string, PointSet> valuation;
  if (j.contains("valuation"))
    for (const auto& [name, set] : j.at("valuation").items())
      valuation[name] = point_set_from_json(set);
  return KripkeModel(n, edges, std::move(valuation));
}

inline Json map_to_json(const PointMap& f) {
  Json j;
  j["map"] = f.image_table();
  return j;
}

inline PointMap map_from_json(const Json& j, int codomain_size) {
  std::vector<int> image;
  for (const auto& x : j.at("map")) image.push_back(x.get<int>());
  const int domain_size = int(image.size());
  return PointMap(domain_size, codomain_size, std::move(image));
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace paratop
