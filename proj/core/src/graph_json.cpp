#include "trivis/graph_json.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace trivis {

using nlohmann::ordered_json;

PlaneTriangulation read_graph_json(std::istream& in) {
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw GraphError(GraphErrorCode::BadInput, std::string("json parse: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("outer") || !j.contains("rotation"))
    throw GraphError(GraphErrorCode::BadInput, "expected object with n, outer, rotation");
  try {
    const int n = j.at("n").get<int>();
    auto outer_vec = j.at("outer").get<std::vector<int>>();
    if (outer_vec.size() != 3) throw GraphError(GraphErrorCode::BadInput, "outer must have 3 nodes");
    auto rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
    return PlaneTriangulation::from_rotation_system(n, rotation,
                                                    {outer_vec[0], outer_vec[1], outer_vec[2]});
  } catch (const GraphError&) {
    throw;
  } catch (const std::exception& e) {
    throw GraphError(GraphErrorCode::BadInput, std::string("json shape: ") + e.what());
  }
}

PlaneTriangulation read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(GraphErrorCode::BadInput, "cannot open " + path);
  return read_graph_json(in);
}

std::string graph_to_json(const PlaneTriangulation& g) {
  ordered_json j;
  j["n"] = g.node_count();
  j["outer"] = g.outer();
  ordered_json rot = ordered_json::array();
  for (int v = 0; v < g.node_count(); ++v) {
    auto r = g.rotation(v);
    rot.push_back(std::vector<int>(r.begin(), r.end()));
  }
  j["rotation"] = std::move(rot);
  return j.dump();
}

void write_graph_file(const std::string& path, const PlaneTriangulation& g) {
  std::ofstream out(path);
  if (!out) throw GraphError(GraphErrorCode::BadInput, "cannot open " + path + " for writing");
  out << graph_to_json(g) << "\n";
}

} // namespace trivis
