#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trivis {

enum class GraphErrorCode {
  BadInput,
  NotSimple,
  EdgeCountMismatch,
  Disconnected,
  NotTriangulated,
  OuterNotAFace,
  TooSmall,
};

const char* to_string(GraphErrorCode code);

class GraphError : public std::runtime_error {
public:
  GraphError(GraphErrorCode code, const std::string& what);
  GraphErrorCode code() const { return code_; }

private:
  GraphErrorCode code_;
};

/// Combinatorially embedded maximal planar graph.  Stores, for every node,
/// the counterclockwise cyclic sequence of its neighbors plus the outer
/// triangle (counterclockwise on the outer face).  Immutable once built; all
/// structural invariants (simplicity, 3n-6 edges, all faces triangles, outer
/// triple is a face) are verified by the factory.
class PlaneTriangulation {
public:
  /// Builds and fully validates a triangulation from a rotation system.
  /// Throws GraphError on any violated invariant.
  static PlaneTriangulation from_rotation_system(int n,
                                                 const std::vector<std::vector<int>>& rotation,
                                                 std::array<int, 3> outer);

  int node_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::array<int, 3>& outer() const { return outer_; }

  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Counterclockwise neighbor cycle of v.
  std::span<const int> rotation(int v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  bool is_external(int v) const {
    return v == outer_[0] || v == outer_[1] || v == outer_[2];
  }
  int internal_count() const { return n_ - 3; }

  /// Linear scan; cheap for the small degrees typical here.
  bool adjacent(int u, int v) const;

  /// Index of u within rotation(v), or -1.
  int rotation_index(int v, int u) const;

private:
  PlaneTriangulation() = default;

  int n_ = 0;
  int m_ = 0;
  std::array<int, 3> outer_{};
  std::vector<int> offsets_;   // n+1 prefix offsets into neighbors_
  std::vector<int> neighbors_; // concatenated rotation cycles

  friend class TriangulationBuilder;
};

struct Face {
  std::array<int, 3> v; // traced orientation: counterclockwise seen from the face
  bool external = false;
};

struct FaceList {
  std::vector<Face> faces;
  int internal_count = 0;
};

/// Complete face census from the rotation system.  Internal faces come out
/// counterclockwise in the plane; the external face in its traced (reversed)
/// orientation.
FaceList faces(const PlaneTriangulation& g);

/// True iff g has no separating triangle (a 3-cycle that is not a face).
/// Throws GraphError{TooSmall} for n < 5.
bool is_four_connected(const PlaneTriangulation& g);

struct DegreeProfile {
  bool has_internal_deg3 = false;
  bool has_internal_deg5 = false;
};

DegreeProfile internal_degree_profile(const PlaneTriangulation& g);

} // namespace trivis
