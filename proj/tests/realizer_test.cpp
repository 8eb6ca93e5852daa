#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "trivis/generators.hpp"
#include "trivis/realizer.hpp"

using namespace trivis;

TEST_CASE("k4 has the unique realizer with all parents at the roots") {
  const PlaneTriangulation g = make_k4();
  const Realizer r = compute_realizer(g);
  CHECK(validate_realizer(g, r).ok());
  const int x = 3; // internal node
  CHECK(r.parent[0][x] == g.outer()[0]);
  CHECK(r.parent[1][x] == g.outer()[1]);
  CHECK(r.parent[2][x] == g.outer()[2]);

  const auto all = oracles::enumerate_realizers(g);
  REQUIRE(all.size() == 1);
  CHECK(oracles::same_realizer(all[0], r));
}

TEST_CASE("octahedron realizer: three parents each, three child edges total") {
  const PlaneTriangulation g = make_octahedron();
  const Realizer r = compute_realizer(g);
  REQUIRE(validate_realizer(g, r).ok());
  int child_edges_to_internal = 0;
  for (int t = 0; t < 3; ++t)
    for (int v = 0; v < 6; ++v)
      if (r.parent[t][v] >= 0 && !g.is_external(r.parent[t][v])) ++child_edges_to_internal;
  CHECK(child_edges_to_internal == 3);

  const auto all = oracles::enumerate_realizers(g);
  CHECK(!all.empty());
  bool contained = false;
  for (const Realizer& cand : all) contained |= oracles::same_realizer(cand, r);
  CHECK(contained);
}

TEST_CASE("stacked k4 realizer is among the brute-force set") {
  const PlaneTriangulation g = lower_bound_family(5);
  const Realizer r = compute_realizer(g);
  CHECK(validate_realizer(g, r).ok());
  const auto all = oracles::enumerate_realizers(g);
  CHECK(!all.empty());
  bool contained = false;
  for (const Realizer& cand : all) contained |= oracles::same_realizer(cand, r);
  CHECK(contained);
}

TEST_CASE("validate_realizer reports NotDisjoint for a duplicated edge") {
  const PlaneTriangulation g = make_k4();
  Realizer r = compute_realizer(g);
  r.parent[1][3] = r.parent[0][3]; // same edge in trees 0 and 1
  const RealizerReport rep = validate_realizer(g, r);
  CHECK(rep.code == RealizerErrorCode::NotDisjoint);
}

TEST_CASE("validate_realizer reports BlockOrderViolated for swapped parents") {
  const PlaneTriangulation g = make_octahedron();
  Realizer r = compute_realizer(g);
  // Swap two parent pointers between trees at one internal node.
  bool found_swap = false;
  for (int v = 0; v < 6 && !found_swap; ++v) {
    if (g.is_external(v)) continue;
    for (int a = 0; a < 3 && !found_swap; ++a)
      for (int b = a + 1; b < 3 && !found_swap; ++b) {
        Realizer tampered = r;
        std::swap(tampered.parent[a][v], tampered.parent[b][v]);
        const RealizerReport rep = validate_realizer(g, tampered);
        CHECK_FALSE(rep.ok());
        if (rep.code == RealizerErrorCode::BlockOrderViolated) found_swap = true;
      }
  }
  CHECK(found_swap);
}

TEST_CASE("all three orderings of a realizer are canonical") {
  for (int seed = 0; seed < 8; ++seed) {
    const PlaneTriangulation g =
        generate({GenKind::Random, 10 + 7 * seed, (std::uint64_t)(100 + seed), 90});
    const Realizer r = compute_realizer(g);
    REQUIRE(validate_realizer(g, r).ok());
    for (int t = 0; t < 3; ++t) {
      const CanonicalOrdering ord = canonical_ordering(g, r, t);
      CHECK(ord.tree_index == t);
      const OrderingReport rep = validate_canonical_ordering(g, ord);
      INFO("seed ", seed, " tree ", t, " code ", to_string(rep.code), " k=", rep.k);
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("k4 ordering from tree 0 labels externals 1,2,4 and the center 3") {
  const PlaneTriangulation g = make_k4();
  const CanonicalOrdering ord = canonical_ordering(g, compute_realizer(g), 0);
  CHECK(ord.label[3] == 3);
  CHECK(validate_canonical_ordering(g, ord).ok());
  for (int v : g.outer()) CHECK((ord.label[v] == 1 || ord.label[v] == 2 || ord.label[v] == 4));
}

TEST_CASE("triangle: empty realizer, outer nodes labeled 1,2,3") {
  const PlaneTriangulation g = make_triangle();
  const Realizer r = compute_realizer(g);
  CHECK(validate_realizer(g, r).ok());
  for (int t = 0; t < 3; ++t) {
    const CanonicalOrdering ord = canonical_ordering(g, r, t);
    CHECK(validate_canonical_ordering(g, ord).ok());
    CHECK(ord.label[r.roots[t]] == 1);
  }
}

TEST_CASE("ordering validation rejects an internal node labeled n") {
  const PlaneTriangulation g = make_k4();
  CanonicalOrdering bad;
  bad.label = {1, 2, 3, 4}; // node 3, the center, takes label n
  const OrderingReport rep = validate_canonical_ordering(g, bad);
  CHECK(rep.code == OrderingErrorCode::BadLabels);
}

TEST_CASE("a label swap on the octahedron breaks the interval condition") {
  const PlaneTriangulation g = make_octahedron();
  const CanonicalOrdering good = canonical_ordering(g, compute_realizer(g), 0);
  bool found = false;
  for (int a = 0; a < 6 && !found; ++a)
    for (int b = a + 1; b < 6 && !found; ++b) {
      if (g.is_external(a) || g.is_external(b)) continue;
      CanonicalOrdering bad = good;
      std::swap(bad.label[a], bad.label[b]);
      if (validate_canonical_ordering(g, bad).code == OrderingErrorCode::IntervalViolated)
        found = true;
    }
  CHECK(found);
}

TEST_CASE("enumeration: triangle has 6 orderings, k4 matches the permutation filter") {
  const auto tri = enumerate_canonical_orderings(make_triangle(), 100);
  CHECK_FALSE(tri.truncated);
  CHECK(tri.orderings.size() == 6);

  const PlaneTriangulation k4 = make_k4();
  const auto enumerated = enumerate_canonical_orderings(k4, 1000);
  CHECK_FALSE(enumerated.truncated);
  const auto filtered = oracles::orderings_by_permutation_filter(k4);
  CHECK(enumerated.orderings.size() == filtered.size());
  CHECK(enumerated.orderings.size() == 6);
  for (const CanonicalOrdering& ord : enumerated.orderings)
    CHECK(validate_canonical_ordering(k4, ord).ok());
}

TEST_CASE("enumeration respects the cap") {
  const auto capped = enumerate_canonical_orderings(make_octahedron(), 3);
  CHECK(capped.truncated);
  CHECK(capped.orderings.size() == 3);
  const auto full = enumerate_canonical_orderings(make_octahedron(), 100000);
  CHECK_FALSE(full.truncated);
  CHECK(full.orderings.size() > 3);
  for (const CanonicalOrdering& ord : full.orderings)
    CHECK(validate_canonical_ordering(make_octahedron(), ord).ok());
}

TEST_CASE("determinism: same input gives byte-identical realizer and orderings") {
  const PlaneTriangulation g = generate({GenKind::Random, 60, 42, 200});
  const Realizer r1 = compute_realizer(g);
  const Realizer r2 = compute_realizer(g);
  CHECK(oracles::same_realizer(r1, r2));
  for (int t = 0; t < 3; ++t)
    CHECK(canonical_ordering(g, r1, t).label == canonical_ordering(g, r2, t).label);
}

TEST_CASE("tree sizes: every tree spans the internal nodes plus its root") {
  const PlaneTriangulation g = generate({GenKind::Random, 40, 5, 100});
  const Realizer r = compute_realizer(g);
  REQUIRE(validate_realizer(g, r).ok());
  for (int t = 0; t < 3; ++t) {
    int members = 1; // the root
    for (int v = 0; v < g.node_count(); ++v)
      if (r.parent[t][v] >= 0) ++members;
    CHECK(members == g.node_count() - 2);
  }
}
