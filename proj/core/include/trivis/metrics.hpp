#pragma once

#include <array>
#include <string>
#include <vector>

#include "trivis/plane_graph.hpp"
#include "trivis/realizer.hpp"

namespace trivis {

/// Per-node and per-tree score/leaf statistics of a realizer, plus the
/// cyclic-face census.  Degree splits are taken against the three orderings
/// derived from the realizer; scores only exist for internal nodes.
struct RealizerMetrics {
  int n = 0;
  int cyclic_face_count = 0;                     // c
  std::vector<std::array<int, 3>> deg_minus;     // lower-labeled neighbors, per tree
  std::vector<std::array<int, 3>> deg_plus;      // higher-labeled neighbors, per tree
  std::vector<std::array<int, 3>> score;         // f_i(v) = min(deg-, deg+), internal only
  std::vector<int> score_total;                  // f(v), internal only
  std::vector<int> lambda;                       // #{trees in which v is internal}
  std::array<std::vector<int>, 3> leaves;        // leaf sets L_i (internal node ids, sorted)
  std::array<long long, 3> score_sum{};          // S_i
  std::vector<std::array<int, 3>> cyclic_faces;  // faces meeting all three trees
  std::vector<int> b_nodes;                      // B = {v internal: lambda=2, deg=5}, sorted
  int b_component_count = 0;                     // components of G[B]
};

RealizerMetrics compute_metrics(const PlaneTriangulation& g, const Realizer& r);

struct IdentityCheck {
  std::string name;
  std::string relation; // "==", ">="  (lhs relation rhs)
  long long lhs = 0;
  long long rhs = 0;
  bool applicable = true; // profile-conditional checks may not apply
  bool pass = true;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass = true; // over applicable checks
};

/// Machine-checkable identities and inequalities tying scores, leaves, the
/// cyclic-face count and the set B together.  Failures indicate realizer or
/// metric bugs, never bad input.  Needs n >= 4.
IdentityReport verify_identities(const PlaneTriangulation& g, const Realizer& r,
                                 const RealizerMetrics& m);

/// For every tree i and leaf v of that tree, the face spanned by v and its
/// two parents in the other trees.  Injective; its image is exactly the set
/// of acyclic internal faces of size 2n-c-5.
struct LeafFaceEntry {
  int tree = 0;
  int leaf = 0;
  std::array<int, 3> face{};
  int face_index = 0; // into faces(g).faces
};

std::vector<LeafFaceEntry> acyclic_face_map(const PlaneTriangulation& g, const Realizer& r);

} // namespace trivis
