#include "trivis/plane_graph.hpp"

#include <algorithm>
#include <cstdint>

namespace trivis {

const char* to_string(GraphErrorCode code) {
  switch (code) {
    case GraphErrorCode::BadInput: return "BadInput";
    case GraphErrorCode::NotSimple: return "NotSimple";
    case GraphErrorCode::EdgeCountMismatch: return "EdgeCountMismatch";
    case GraphErrorCode::Disconnected: return "Disconnected";
    case GraphErrorCode::NotTriangulated: return "NotTriangulated";
    case GraphErrorCode::OuterNotAFace: return "OuterNotAFace";
    case GraphErrorCode::TooSmall: return "TooSmall";
  }
  return "UnknownGraphError";
}

GraphError::GraphError(GraphErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace {

// Dart = directed edge (source, index in the source's rotation), id = CSR slot.
// Face tracing: the dart after (u,v) is (v,w) with w the predecessor of u in
// the counterclockwise cycle of v, i.e. the next edge clockwise after the
// reverse edge.
struct DartIndex {
  std::vector<int> offsets; // per node, first dart id
  std::vector<int> source;  // per dart
  std::vector<int> target;
  std::vector<int> twin;

  explicit DartIndex(const PlaneTriangulation& g) {
    const int n = g.node_count();
    offsets.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + g.degree(v);
    const int dart_count = offsets[n];
    source.resize(dart_count);
    target.resize(dart_count);
    twin.assign(dart_count, -1);

    std::vector<std::pair<int, int>> sorted(dart_count); // (neighbor, dart id) per node
    for (int v = 0; v < n; ++v) {
      auto rot = g.rotation(v);
      for (int i = 0; i < (int)rot.size(); ++i) {
        const int d = offsets[v] + i;
        source[d] = v;
        target[d] = rot[i];
        sorted[d] = {rot[i], d};
      }
      std::sort(sorted.begin() + offsets[v], sorted.begin() + offsets[v + 1]);
    }
    for (int d = 0; d < dart_count; ++d) {
      const int u = target[d];
      auto first = sorted.begin() + offsets[u];
      auto last = sorted.begin() + offsets[u + 1];
      twin[d] = std::lower_bound(first, last, std::make_pair(source[d], -1))->second;
    }
  }

  int count() const { return (int)source.size(); }

  int next_in_face(int d) const {
    const int t = twin[d];
    const int v = source[t];
    const int base = offsets[v];
    const int deg = offsets[v + 1] - base;
    return base + (t - base + deg - 1) % deg; // predecessor in ccw order
  }

  int dart(const PlaneTriangulation& g, int u, int v) const {
    const int i = g.rotation_index(u, v);
    return i < 0 ? -1 : offsets[u] + i;
  }
};

} // namespace

bool PlaneTriangulation::adjacent(int u, int v) const {
  auto rot = rotation(u);
  return std::find(rot.begin(), rot.end(), v) != rot.end();
}

int PlaneTriangulation::rotation_index(int v, int u) const {
  auto rot = rotation(v);
  auto it = std::find(rot.begin(), rot.end(), u);
  return it == rot.end() ? -1 : int(it - rot.begin());
}

class TriangulationBuilder {
public:
  static PlaneTriangulation build(int n, const std::vector<std::vector<int>>& rotation,
                                  std::array<int, 3> outer) {
    if (n < 3) throw GraphError(GraphErrorCode::BadInput, "need at least 3 nodes");
    if ((int)rotation.size() != n)
      throw GraphError(GraphErrorCode::BadInput, "rotation table size != n");
    for (int v : outer)
      if (v < 0 || v >= n) throw GraphError(GraphErrorCode::BadInput, "outer node out of range");
    if (outer[0] == outer[1] || outer[1] == outer[2] || outer[0] == outer[2])
      throw GraphError(GraphErrorCode::BadInput, "outer nodes not distinct");

    PlaneTriangulation g;
    g.n_ = n;
    g.outer_ = outer;
    g.offsets_.assign(n + 1, 0);
    std::size_t total = 0;
    for (int v = 0; v < n; ++v) {
      total += rotation[v].size();
      g.offsets_[v + 1] = (int)total;
    }
    g.neighbors_.reserve(total);
    for (int v = 0; v < n; ++v)
      g.neighbors_.insert(g.neighbors_.end(), rotation[v].begin(), rotation[v].end());

    validate(g);
    return g;
  }

  static void validate(PlaneTriangulation& g) {
    const int n = g.n_;

    // Simplicity: ids in range, no loops, no repeated neighbors, symmetric lists.
    std::vector<std::vector<int>> sorted(n);
    std::size_t degree_sum = 0;
    for (int v = 0; v < n; ++v) {
      auto rot = g.rotation(v);
      degree_sum += rot.size();
      for (int u : rot)
        if (u < 0 || u >= n) throw GraphError(GraphErrorCode::BadInput, "neighbor id out of range");
      sorted[v].assign(rot.begin(), rot.end());
      std::sort(sorted[v].begin(), sorted[v].end());
      if (std::find(rot.begin(), rot.end(), v) != rot.end())
        throw GraphError(GraphErrorCode::NotSimple, "self loop at node " + std::to_string(v));
      if (std::adjacent_find(sorted[v].begin(), sorted[v].end()) != sorted[v].end())
        throw GraphError(GraphErrorCode::NotSimple, "repeated neighbor at node " + std::to_string(v));
    }
    for (int v = 0; v < n; ++v)
      for (int u : g.rotation(v))
        if (!std::binary_search(sorted[u].begin(), sorted[u].end(), v))
          throw GraphError(GraphErrorCode::NotSimple, "asymmetric adjacency " + std::to_string(v) +
                                                          "-" + std::to_string(u));

    if (degree_sum % 2 != 0) throw GraphError(GraphErrorCode::NotSimple, "odd degree sum");
    g.m_ = (int)(degree_sum / 2);
    if (g.m_ != 3 * n - 6)
      throw GraphError(GraphErrorCode::EdgeCountMismatch,
                       "m=" + std::to_string(g.m_) + ", expected " + std::to_string(3 * n - 6));

    // Connectivity.
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.rotation(v))
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached != n) throw GraphError(GraphErrorCode::Disconnected, "graph not connected");

    // Face census: every face a triangle, 2n-4 of them.  Together with
    // m = 3n-6 this pins Euler characteristic 2, so a non-planar rotation
    // system cannot slip through.
    DartIndex darts(g);
    std::vector<char> traced(darts.count(), 0);
    int face_count = 0;
    for (int d0 = 0; d0 < darts.count(); ++d0) {
      if (traced[d0]) continue;
      int len = 0;
      int d = d0;
      do {
        traced[d] = 1;
        d = darts.next_in_face(d);
        ++len;
        if (len > 3) throw GraphError(GraphErrorCode::NotTriangulated, "face with more than 3 edges");
      } while (d != d0);
      if (len != 3) throw GraphError(GraphErrorCode::NotTriangulated, "face with fewer than 3 edges");
      ++face_count;
    }
    if (face_count != 2 * n - 4)
      throw GraphError(GraphErrorCode::NotTriangulated,
                       "face count " + std::to_string(face_count) + ", expected " +
                           std::to_string(2 * n - 4));

    // The outer triple, counterclockwise in the plane, is traced reversed.
    const auto& o = g.outer_;
    const int d = darts.dart(g, o[1], o[0]);
    if (d < 0) throw GraphError(GraphErrorCode::OuterNotAFace, "outer nodes not adjacent");
    const int d2 = darts.next_in_face(d);
    const int d3 = darts.next_in_face(d2);
    if (darts.target[d2] != o[2] || darts.target[d3] != o[1] || darts.next_in_face(d3) != d)
      throw GraphError(GraphErrorCode::OuterNotAFace, "outer triple does not bound a face");
  }
};

PlaneTriangulation PlaneTriangulation::from_rotation_system(
    int n, const std::vector<std::vector<int>>& rotation, std::array<int, 3> outer) {
  return TriangulationBuilder::build(n, rotation, outer);
}

FaceList faces(const PlaneTriangulation& g) {
  DartIndex darts(g);
  std::vector<char> traced(darts.count(), 0);

  // The external face is the one traced from the dart outer[1] -> outer[0].
  const auto& o = g.outer();
  const int external_start = darts.dart(g, o[1], o[0]);

  FaceList out;
  out.faces.reserve(2 * g.node_count() - 4);
  for (int d0 = 0; d0 < darts.count(); ++d0) {
    if (traced[d0]) continue;
    Face f;
    int d = d0;
    for (int i = 0; i < 3; ++i) {
      traced[d] = 1;
      if (d == external_start) f.external = true;
      f.v[i] = darts.target[d];
      d = darts.next_in_face(d);
    }
    out.faces.push_back(f);
  }
  for (const Face& f : out.faces)
    if (!f.external) ++out.internal_count;
  return out;
}

bool is_four_connected(const PlaneTriangulation& g) {
  if (g.node_count() < 5)
    throw GraphError(GraphErrorCode::TooSmall, "four-connectivity needs n >= 5");

  // Third node of the face on the left of dart (u,v).
  auto third = [&](int u, int v) {
    auto rot = g.rotation(v);
    const int i = g.rotation_index(v, u);
    return rot[(i + rot.size() - 1) % rot.size()];
  };

  const int n = g.node_count();
  std::vector<std::vector<int>> sorted(n);
  for (int v = 0; v < n; ++v) {
    auto rot = g.rotation(v);
    sorted[v].assign(rot.begin(), rot.end());
    std::sort(sorted[v].begin(), sorted[v].end());
  }

  for (int u = 0; u < n; ++u) {
    for (int v : sorted[u]) {
      if (v <= u) continue;
      const auto& a = sorted[u];
      const auto& b = sorted[v];
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else {
          const int w = a[i]; // triangle (u,v,w)
          if (w != third(u, v) && w != third(v, u)) return false; // separating
          ++i;
          ++j;
        }
      }
    }
  }
  return true;
}

DegreeProfile internal_degree_profile(const PlaneTriangulation& g) {
  DegreeProfile p;
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.is_external(v)) continue;
    if (g.degree(v) == 3) p.has_internal_deg3 = true;
    if (g.degree(v) == 5) p.has_internal_deg5 = true;
  }
  return p;
}

} // namespace trivis
