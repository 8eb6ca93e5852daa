#pragma once

#include <cstdint>
#include <string>

#include "trivis/plane_graph.hpp"

namespace trivis {

enum class GenKind {
  Triangle,
  K4,
  Octahedron,
  Icosahedron,
  Stacked,
  Random,
  LowerBound,
};

bool parse_gen_kind(const std::string& name, GenKind& out);
const char* to_string(GenKind kind);

struct GenSpec {
  GenKind kind = GenKind::Random;
  int n = 0;               // target size (fixed kinds ignore 0 and use their own)
  std::uint64_t seed = 0;
  long flips = -1;         // random only; -1 = default (3n)
};

class BadSpec : public std::runtime_error {
public:
  explicit BadSpec(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic instance factory.  `random` is stacking (a node into a
/// uniformly random internal face) followed by random diagonal flips that
/// keep the graph simple; rejected flips still consume randomness.
PlaneTriangulation generate(const GenSpec& spec);

PlaneTriangulation make_triangle();
PlaneTriangulation make_k4();
PlaneTriangulation make_octahedron();
PlaneTriangulation make_icosahedron();

/// The hard family for the width analysis: a triangle (n=3), then repeatedly
/// wrapped in a new outer triangle whose three nodes triangulate the annulus
/// with six edges.  Every n >= 3 is reachable from the bases n = 3, 4, 5.
PlaneTriangulation lower_bound_family(int n);

} // namespace trivis
