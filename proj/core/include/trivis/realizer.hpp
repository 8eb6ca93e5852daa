#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "trivis/plane_graph.hpp"

namespace trivis {

/// Partition of the internal edges into three trees, one rooted at each
/// external node.  parent[i][v] is v's parent in tree i, -1 for the three
/// external nodes.  roots[i] = outer()[i]; tree 0 is rooted at the node that
/// is added last by the peeling that builds the realizer, tree 1 collects the
/// leftmost-neighbor edges and tree 2 the rightmost-neighbor edges.
struct Realizer {
  std::array<int, 3> roots{};
  std::array<std::vector<int>, 3> parent;
};

enum class RealizerErrorCode {
  Ok,
  NotSpanning,
  NotDisjoint,
  BlockOrderViolated,
  CycleInTree,
};

const char* to_string(RealizerErrorCode code);

struct RealizerReport {
  RealizerErrorCode code = RealizerErrorCode::Ok;
  int node = -1;
  std::string detail;
  bool ok() const { return code == RealizerErrorCode::Ok; }
};

/// Linear-time realizer via canonical peeling: repeatedly remove a free outer
/// node (exactly two outer neighbors, no chord, lowest id among candidates),
/// assigning the leftmost/rightmost neighbor edges of each removed node to
/// trees 1/2 and the covered interior nodes' up-edges to tree 0.
Realizer compute_realizer(const PlaneTriangulation& g);

/// Checks every realizer invariant: parents present exactly for internal
/// nodes, edge sets pairwise disjoint and covering all internal edges, the
/// six-block counterclockwise order around every internal node, and each tree
/// acyclic reaching its root.  Reports the first violation.
RealizerReport validate_realizer(const PlaneTriangulation& g, const Realizer& r);

/// Node labeling 1..n.  tree_index records which tree produced it (0 when
/// enumerated or handmade).
struct CanonicalOrdering {
  std::vector<int> label;
  int tree_index = 0;
};

/// The ordering derived from tree i: counterclockwise preorder of tree i
/// extended by the two external edges at its root.  The root gets label 1,
/// the next external counterclockwise on the outer face gets 2 and the
/// remaining one gets n.
CanonicalOrdering canonical_ordering(const PlaneTriangulation& g, const Realizer& r, int tree_index);

enum class OrderingErrorCode {
  Ok,
  BadLabels,
  NotBiconnected,
  NotOnOuterCycle,
  IntervalViolated,
};

const char* to_string(OrderingErrorCode code);

struct OrderingReport {
  OrderingErrorCode code = OrderingErrorCode::Ok;
  int k = -1;
  std::string detail;
  bool ok() const { return code == OrderingErrorCode::Ok; }
};

/// Brute-force verification, O(n^2)-ish: for every prefix, biconnectivity,
/// the new node on the outer cycle, and its earlier neighbors forming a
/// contiguous interval of >= 2 nodes on the outer path.
OrderingReport validate_canonical_ordering(const PlaneTriangulation& g,
                                           const CanonicalOrdering& ordering);

struct OrderingEnumeration {
  std::vector<CanonicalOrdering> orderings;
  bool truncated = false; // cap reached
};

/// All canonical orderings by reverse peeling (each valid last node chosen
/// recursively), deterministic order.  Exponential; meant for small n.
OrderingEnumeration enumerate_canonical_orderings(const PlaneTriangulation& g, std::size_t cap);

} // namespace trivis
