#pragma once

#include <vector>

#include "trivis/layout.hpp"
#include "trivis/plane_graph.hpp"
#include "trivis/realizer.hpp"

namespace trivis::oracles {

/// Every labeling that passes validate_canonical_ordering, by filtering all
/// n! permutations.  Only sensible for n <= 6.
std::vector<CanonicalOrdering> orderings_by_permutation_filter(const PlaneTriangulation& g);

/// Every realizer, by backtracking over per-node parent placements that
/// respect the local counterclockwise block pattern, then filtering through
/// validate_realizer.  Trees are rooted at outer[0..2] as everywhere else.
std::vector<Realizer> enumerate_realizers(const PlaneTriangulation& g);

bool same_realizer(const Realizer& a, const Realizer& b);

/// All plane triangulations with n nodes and a fixed outer triangle, up to
/// rooted-map isomorphism: closure of every stacking sequence under diagonal
/// flips, deduplicated by a canonical breadth-first relabeling.
std::vector<PlaneTriangulation> exhaustive_triangulations(int n);

/// Quadratic-time weak-visibility check used to cross-validate the sweep
/// validator on small drawings.
DrawingReport naive_validate_drawing(const PlaneTriangulation& g, const VisibilityDrawing& d);

/// True iff no vertex cut of size < k disconnects g (brute force over all
/// subsets; n <= 12 or so).
bool vertex_connectivity_at_least(const PlaneTriangulation& g, int k);

} // namespace trivis::oracles
