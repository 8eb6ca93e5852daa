#pragma once

#include <iosfwd>
#include <string>

#include "trivis/plane_graph.hpp"

namespace trivis {

/// Graph file format: {"n": int, "outer": [a,b,c], "rotation": [[...], ...]}
/// with rotation[v] in counterclockwise order.
PlaneTriangulation read_graph_json(std::istream& in);
PlaneTriangulation read_graph_file(const std::string& path);

std::string graph_to_json(const PlaneTriangulation& g);
void write_graph_file(const std::string& path, const PlaneTriangulation& g);

} // namespace trivis
