#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "trivis/plane_graph.hpp"
#include "trivis/realizer.hpp"

namespace trivis {

struct Segment {
  int v = 0;
  int y = 0;
  int x1 = 0;
  int x2 = 0; // inclusive; x1 == x2 is a single grid point
};

struct VisibilityDrawing {
  std::vector<Segment> segments; // one per node, ordered by node id in draw() output
  int width = 0;                 // max x - min x
  int height = 0;                // max y - min y
};

/// Thrown when the incremental construction loses a required invariant;
/// never expected on a valid canonical ordering.
class InternalInvariantBroken : public std::logic_error {
public:
  explicit InternalInvariantBroken(const std::string& what) : std::logic_error(what) {}
};

/// Incremental visibility drawing: nodes enter by canonical order, each new
/// segment spanning from the rightmost visible column of its leftmost earlier
/// neighbor to the leftmost visible column of its rightmost one; neighbors
/// with no visible column first get a fresh column inserted at a boundary no
/// other segment covers.  Rows follow the ordering (y = label - 1).
/// With debug enabled the partial drawing is re-validated every iteration.
VisibilityDrawing draw(const PlaneTriangulation& g, const CanonicalOrdering& ordering,
                       bool debug = false);

struct BestOfThree {
  VisibilityDrawing drawing;
  int chosen_tree = 0; // 0..2
  std::array<int, 3> widths{};
};

/// Minimum-width drawing over the three realizer-derived orderings.
BestOfThree best_of_three(const PlaneTriangulation& g, bool debug = false);

/// Smallest width guarantee applicable to the instance (n >= 4).
int theoretical_width_bound(int n, DegreeProfile profile, bool four_connected);

enum class DrawingErrorCode { Ok, Overlap, EdgeNotVisible, TooTall };

const char* to_string(DrawingErrorCode code);

struct DrawingReport {
  DrawingErrorCode code = DrawingErrorCode::Ok;
  int u = -1;
  int v = -1;
  std::string detail;
  bool ok() const { return code == DrawingErrorCode::Ok; }
};

/// Independent plane-sweep validator: same-row segments must be disjoint,
/// every edge needs a shared column with no segment on a row strictly
/// between its endpoints covering it, and the height may not exceed n-1.
/// Sight lines between non-adjacent segments are allowed.
DrawingReport validate_drawing(const PlaneTriangulation& g, const VisibilityDrawing& d);

/// Witnessing column per edge, -1 where none exists.  Keyed by (min node id,
/// max node id) pairs in lexicographic order.
struct EdgeWitness {
  int u = 0;
  int v = 0;
  int column = -1;
};

std::vector<EdgeWitness> edge_witnesses(const PlaneTriangulation& g, const VisibilityDrawing& d);

/// Optional post-pass: drop every segment to one row above the highest
/// segment overlapping its span.  Keeps validity, never increases height.
VisibilityDrawing compact_rows(const VisibilityDrawing& d);

/// Drawing file format:
/// {"width": W, "height": H, "segments": [{"v":id,"y":row,"x1":left,"x2":right}]}
std::string drawing_to_json(const VisibilityDrawing& d);
VisibilityDrawing drawing_from_json(std::istream& in);
VisibilityDrawing read_drawing_file(const std::string& path);

/// Fixed-style SVG: one rectangle per node segment, one vertical line per
/// edge at its witnessing column.
std::string emit_svg(const PlaneTriangulation& g, const VisibilityDrawing& d);

} // namespace trivis
