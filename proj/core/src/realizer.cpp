#include "trivis/realizer.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace trivis {

const char* to_string(RealizerErrorCode code) {
  switch (code) {
    case RealizerErrorCode::Ok: return "Ok";
    case RealizerErrorCode::NotSpanning: return "NotSpanning";
    case RealizerErrorCode::NotDisjoint: return "NotDisjoint";
    case RealizerErrorCode::BlockOrderViolated: return "BlockOrderViolated";
    case RealizerErrorCode::CycleInTree: return "CycleInTree";
  }
  return "?";
}

const char* to_string(OrderingErrorCode code) {
  switch (code) {
    case OrderingErrorCode::Ok: return "Ok";
    case OrderingErrorCode::BadLabels: return "BadLabels";
    case OrderingErrorCode::NotBiconnected: return "NotBiconnected";
    case OrderingErrorCode::NotOnOuterCycle: return "NotOnOuterCycle";
    case OrderingErrorCode::IntervalViolated: return "IntervalViolated";
  }
  return "?";
}

namespace {

struct PeelRecord {
  int v;
  int wp, wq;                // leftmost / rightmost earlier neighbor on the contour
  std::vector<int> interior; // strictly between them, left to right
};

/// Reverse canonical peeling.  The ring holds the outer cycle of the current
/// graph, linked in the counterclockwise order of the outer triple; the
/// contour (left to right from outer[1] to outer[2]) runs against the links.
/// Records come back in removal order, i.e. labels n, n-1, ..., 3.
std::vector<PeelRecord> peel(const PlaneTriangulation& g) {
  const int n = g.node_count();
  const auto& o = g.outer();
  const int u1 = o[1], u2 = o[2]; // base edge; o[0] is removable first

  std::vector<char> on_cycle(n, 0), removed(n, 0), joined(n, 0);
  std::vector<int> ring_prev(n, -1), ring_next(n, -1), chords(n, 0);
  std::priority_queue<int, std::vector<int>, std::greater<int>> free_heap;

  ring_next[o[0]] = o[1];
  ring_next[o[1]] = o[2];
  ring_next[o[2]] = o[0];
  ring_prev[o[1]] = o[0];
  ring_prev[o[2]] = o[1];
  ring_prev[o[0]] = o[2];
  on_cycle[o[0]] = on_cycle[o[1]] = on_cycle[o[2]] = 1;
  free_heap.push(o[0]);

  auto is_free = [&](int v) {
    return v != u1 && v != u2 && on_cycle[v] && !removed[v] && chords[v] == 0;
  };
  auto push_if_free = [&](int v) {
    if (is_free(v)) free_heap.push(v);
  };

  std::vector<PeelRecord> records;
  records.reserve(n - 2);

  for (int remaining = n; remaining > 2; --remaining) {
    int v = -1;
    while (!free_heap.empty()) {
      const int cand = free_heap.top();
      free_heap.pop();
      if (is_free(cand)) {
        v = cand;
        break;
      }
    }
    if (v < 0)
      throw GraphError(GraphErrorCode::BadInput, "canonical peeling found no free node");

    const int a = ring_prev[v], b = ring_next[v];

    // Neighbors still interior sit on the ccw arc of v's rotation from b to
    // a (exclusive); already removed ones fill the other arc.
    auto rot = g.rotation(v);
    const int deg = (int)rot.size();
    const int bi = g.rotation_index(v, b);
    std::vector<int> arc;
    for (int s = 1; s < deg; ++s) {
      const int u = rot[(bi + s) % deg];
      if (u == a) break;
      if (on_cycle[u] || removed[u])
        throw GraphError(GraphErrorCode::BadInput, "peeling arc hit an exposed node");
      arc.push_back(u);
    }

    on_cycle[v] = 0;
    removed[v] = 1;

    if (arc.empty()) {
      ring_next[a] = b;
      ring_prev[b] = a;
      if (ring_next[b] != a) { // (a,b) was a chord, now a ring edge
        --chords[a];
        --chords[b];
        push_if_free(a);
        push_if_free(b);
      }
    } else {
      int prev = a;
      for (auto it = arc.rbegin(); it != arc.rend(); ++it) {
        ring_next[prev] = *it;
        ring_prev[*it] = prev;
        prev = *it;
      }
      ring_next[prev] = b;
      ring_prev[b] = prev;
      for (int x : arc) {
        on_cycle[x] = 1;
        joined[x] = 1;
      }
      for (int x : arc) {
        for (int y : g.rotation(x)) {
          if (!on_cycle[y] || removed[y]) continue;
          if (y == ring_prev[x] || y == ring_next[x]) continue;
          ++chords[x];
          if (!joined[y]) ++chords[y]; // joined-joined chords count themselves
        }
      }
      for (int x : arc) joined[x] = 0;
      for (int x : arc) push_if_free(x);
    }

    records.push_back({v, b, a, std::move(arc)});
  }
  return records;
}

} // namespace

Realizer compute_realizer(const PlaneTriangulation& g) {
  Realizer r;
  r.roots = g.outer();
  for (auto& p : r.parent) p.assign(g.node_count(), -1);

  for (const PeelRecord& rec : peel(g)) {
    if (!g.is_external(rec.v)) {
      r.parent[1][rec.v] = rec.wp;
      r.parent[2][rec.v] = rec.wq;
    }
    for (int x : rec.interior) r.parent[0][x] = rec.v;
  }
  return r;
}

RealizerReport validate_realizer(const PlaneTriangulation& g, const Realizer& r) {
  const int n = g.node_count();
  auto fail = [](RealizerErrorCode code, int node, std::string detail) {
    return RealizerReport{code, node, std::move(detail)};
  };

  // Shape: roots are the distinct externals, parents exist exactly for
  // internal nodes and point at neighbors inside the right tree.
  for (int t = 0; t < 3; ++t) {
    if ((int)r.parent[t].size() != n)
      return fail(RealizerErrorCode::NotSpanning, -1, "parent table size mismatch");
    if (!g.is_external(r.roots[t]))
      return fail(RealizerErrorCode::NotSpanning, r.roots[t], "root is not external");
  }
  if (r.roots[0] == r.roots[1] || r.roots[1] == r.roots[2] || r.roots[0] == r.roots[2])
    return fail(RealizerErrorCode::NotSpanning, -1, "roots not distinct");
  for (int v = 0; v < n; ++v) {
    for (int t = 0; t < 3; ++t) {
      const int p = r.parent[t][v];
      if (g.is_external(v)) {
        if (p != -1) return fail(RealizerErrorCode::NotSpanning, v, "external node has a parent");
        continue;
      }
      if (p < 0) return fail(RealizerErrorCode::NotSpanning, v, "internal node missing a parent");
      if (p >= n || !g.adjacent(v, p))
        return fail(RealizerErrorCode::NotSpanning, v, "parent is not a neighbor");
    }
  }

  // Edge-disjointness.  3(n-3) parent edges with no duplicates necessarily
  // cover the 3n-9 internal edges.
  {
    std::vector<std::vector<std::pair<int, int>>> used(n); // per min endpoint: (max, tree)
    for (int t = 0; t < 3; ++t)
      for (int v = 0; v < n; ++v) {
        if (r.parent[t][v] < 0) continue;
        int a = v, b = r.parent[t][v];
        if (a > b) std::swap(a, b);
        for (auto& [other, tree] : used[a])
          if (other == b)
            return fail(RealizerErrorCode::NotDisjoint, v,
                        "edge assigned to trees " + std::to_string(tree) + " and " +
                            std::to_string(t));
        used[a].push_back({b, t});
      }
  }

  // Local six-block condition: counterclockwise around every internal node
  // the neighbors read parent0, children2, parent1, children0, parent2,
  // children1 (child runs possibly empty).
  for (int v = 0; v < n; ++v) {
    if (g.is_external(v)) continue;
    auto rot = g.rotation(v);
    const int deg = (int)rot.size();
    // tag 0..2 = parent in tree t, 3..5 = child in tree t
    std::vector<int> tag(deg, -1);
    for (int i = 0; i < deg; ++i) {
      const int u = rot[i];
      for (int t = 0; t < 3; ++t) {
        if (r.parent[t][v] == u) tag[i] = t;
        else if (!g.is_external(u) && r.parent[t][u] == v) tag[i] = 3 + t;
      }
      if (tag[i] < 0)
        return fail(RealizerErrorCode::NotDisjoint, v, "edge not covered by any tree");
    }
    const int start = g.rotation_index(v, r.parent[0][v]);
    static const int expected_parent[3] = {0, 1, 2};
    static const int expected_children[3] = {5, 3, 4}; // after parent t: children of t+2 mod 3
    int i = 0;
    bool ok = true;
    for (int block = 0; block < 3 && ok; ++block) {
      if (tag[(start + i) % deg] != expected_parent[block]) {
        ok = false;
        break;
      }
      ++i;
      while (i < deg && tag[(start + i) % deg] == expected_children[block]) ++i;
    }
    if (!ok || i != deg)
      return fail(RealizerErrorCode::BlockOrderViolated, v, "neighbor blocks out of order");
  }

  // Acyclicity, then root reachability per tree.  A chain ending at the
  // wrong external means the tree does not span its intended root.
  for (int t = 0; t < 3; ++t) {
    std::vector<int> state(n, 0); // 0 unseen, 1 on current chain, 2 done
    for (int v0 = 0; v0 < n; ++v0) {
      if (g.is_external(v0) || state[v0] == 2) continue;
      std::vector<int> chain;
      int v = v0;
      while (true) {
        if (v == r.roots[t]) break;
        if (g.is_external(v))
          return fail(RealizerErrorCode::NotSpanning, v,
                      "parent chain of tree " + std::to_string(t) + " ends at a foreign root");
        if (state[v] == 1)
          return fail(RealizerErrorCode::CycleInTree, v,
                      "parent chain loops in tree " + std::to_string(t));
        if (state[v] == 2) break;
        state[v] = 1;
        chain.push_back(v);
        v = r.parent[t][v];
      }
      for (int u : chain) state[u] = 2;
    }
  }

  return {};
}

CanonicalOrdering canonical_ordering(const PlaneTriangulation& g, const Realizer& r, int tree) {
  const int n = g.node_count();
  const int root = r.roots[tree];
  const int second = r.roots[(tree + 1) % 3];

  // Children in rotation order: for the root, the scan begins at the next
  // external counterclockwise on the outer face (so it gets label 2 and the
  // remaining external label n); for internal nodes just after the parent.
  std::vector<std::vector<int>> kids(n);
  for (int v = 0; v < n; ++v) {
    if (g.is_external(v) && v != root) continue;
    auto rot = g.rotation(v);
    const int deg = (int)rot.size();
    // The root's scan starts at `second` and covers all slots; an internal
    // node's scan starts just after its parent slot.
    const int pivot =
        v == root ? g.rotation_index(v, second) : g.rotation_index(v, r.parent[tree][v]);
    const int from = v == root ? 0 : 1;
    const int count = v == root ? deg : deg - 1;
    for (int s = 0; s < count; ++s) {
      const int w = rot[(pivot + from + s) % deg];
      if (v == root && g.is_external(w)) kids[v].push_back(w);
      else if (!g.is_external(w) && r.parent[tree][w] == v) kids[v].push_back(w);
    }
  }

  CanonicalOrdering out;
  out.tree_index = tree;
  out.label.assign(n, 0);
  int next_label = 1;
  std::vector<int> stack = {root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    out.label[v] = next_label++;
    for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

namespace {

bool biconnected_subgraph(const PlaneTriangulation& g, const std::vector<char>& alive, int size) {
  if (size < 3) return size == 2;
  int root = -1;
  const int n = g.node_count();
  for (int v = 0; v < n && root < 0; ++v)
    if (alive[v]) root = v;

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
  std::vector<std::pair<int, int>> stack; // (node, next rotation position)
  int timer = 0, visited = 0;
  stack.push_back({root, 0});
  disc[root] = low[root] = timer++;
  ++visited;
  bool ok = true;
  while (!stack.empty() && ok) {
    const int v = stack.back().first;
    const int i = stack.back().second;
    auto rot = g.rotation(v);
    if (i < (int)rot.size()) {
      stack.back().second = i + 1;
      const int u = rot[i];
      if (!alive[u]) continue;
      if (disc[u] < 0) {
        parent[u] = v;
        ++child_count[v];
        disc[u] = low[u] = timer++;
        ++visited;
        stack.push_back({u, 0});
      } else if (u != parent[v]) {
        low[v] = std::min(low[v], disc[u]);
      }
    } else {
      stack.pop_back();
      const int p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) ok = false; // articulation point
      }
    }
  }
  if (child_count[root] > 1) ok = false;
  return ok && visited == size;
}

/// Boundary of the unbounded face of the alive-induced subgraph, starting
/// from the directed base edge that lies on the full graph's external face.
/// Returns node sequence from label-1 node to label-2 node (the outer path),
/// or empty on a malformed boundary.
std::vector<int> outer_path(const PlaneTriangulation& g, const std::vector<char>& alive, int u1,
                            int u2, int size) {
  // On the full graph's external face the outer triple is traced reversed,
  // so the dart (x -> y) with y the counterclockwise successor of x on the
  // outer triple... the external trace runs o1->o0, o0->o2, o2->o1.
  const auto& o = g.outer();
  int s = -1, t = -1;
  const std::array<std::pair<int, int>, 3> ext_darts = {
      std::make_pair(o[1], o[0]), std::make_pair(o[0], o[2]), std::make_pair(o[2], o[1])};
  for (auto [a, b] : ext_darts) {
    if (a == u1 && b == u2) s = u1, t = u2;
    if (a == u2 && b == u1) s = u2, t = u1;
  }
  if (s < 0) return {};

  std::vector<int> walk;
  int from = s, to = t;
  const int limit = 2 * size + 4;
  do {
    walk.push_back(to);
    if ((int)walk.size() > limit) return {};
    // predecessor of `from` around `to`, skipping dead nodes
    auto rot = g.rotation(to);
    const int deg = (int)rot.size();
    const int i = g.rotation_index(to, from);
    int next = -1;
    for (int step = 1; step <= deg; ++step) {
      const int cand = rot[(i + deg - step) % deg];
      if (alive[cand]) {
        next = cand;
        break;
      }
    }
    if (next < 0) return {};
    from = to;
    to = next;
  } while (!(from == s && to == t));

  // walk runs from t around the boundary to s; normalize to u1 .. u2.
  if (s == u1) std::reverse(walk.begin(), walk.end());
  return walk;
}

} // namespace

OrderingReport validate_canonical_ordering(const PlaneTriangulation& g,
                                           const CanonicalOrdering& ordering) {
  const int n = g.node_count();
  auto fail = [](OrderingErrorCode code, int k, std::string detail) {
    return OrderingReport{code, k, std::move(detail)};
  };

  if ((int)ordering.label.size() != n)
    return fail(OrderingErrorCode::BadLabels, -1, "label table size mismatch");
  std::vector<int> by_label(n + 1, -1);
  for (int v = 0; v < n; ++v) {
    const int l = ordering.label[v];
    if (l < 1 || l > n || by_label[l] != -1)
      return fail(OrderingErrorCode::BadLabels, -1, "labels are not a bijection onto 1..n");
    by_label[l] = v;
  }
  const int u1 = by_label[1], u2 = by_label[2], vn = by_label[n];
  if (!g.is_external(u1) || !g.is_external(u2) || !g.is_external(vn))
    return fail(OrderingErrorCode::BadLabels, -1, "labels 1, 2, n must sit on the externals");

  std::vector<char> alive(n, 0);
  alive[u1] = alive[u2] = 1;
  std::vector<int> pos(n, -1); // positions on the current outer path
  pos[u1] = 0;
  pos[u2] = 1;

  for (int k = 3; k <= n; ++k) {
    const int vk = by_label[k];
    alive[vk] = 1;

    // Interval of earlier neighbors on the previous outer path.
    int lo = n, hi = -1, count = 0;
    for (int u : g.rotation(vk)) {
      if (!alive[u]) continue;
      if (pos[u] < 0)
        return fail(OrderingErrorCode::IntervalViolated, k,
                    "earlier neighbor not on the outer path");
      lo = std::min(lo, pos[u]);
      hi = std::max(hi, pos[u]);
      ++count;
    }
    if (count < 2 || hi - lo + 1 != count)
      return fail(OrderingErrorCode::IntervalViolated, k,
                  "earlier neighbors not a contiguous interval of >= 2");

    if (!biconnected_subgraph(g, alive, k))
      return fail(OrderingErrorCode::NotBiconnected, k, "prefix graph not biconnected");

    const auto path = outer_path(g, alive, u1, u2, k);
    if (path.empty())
      return fail(OrderingErrorCode::NotOnOuterCycle, k, "outer boundary is not a simple cycle");
    std::fill(pos.begin(), pos.end(), -1);
    bool on_cycle = false;
    for (int i = 0; i < (int)path.size(); ++i) {
      if (pos[path[i]] != -1)
        return fail(OrderingErrorCode::NotOnOuterCycle, k, "outer boundary revisits a node");
      pos[path[i]] = i;
      on_cycle |= path[i] == vk;
    }
    if (!on_cycle)
      return fail(OrderingErrorCode::NotOnOuterCycle, k, "new node not on the outer cycle");
  }
  return {};
}

OrderingEnumeration enumerate_canonical_orderings(const PlaneTriangulation& g, std::size_t cap) {
  const int n = g.node_count();
  OrderingEnumeration out;

  std::vector<char> alive(n, 1);
  std::vector<int> label(n, 0);

  // Candidates to peel: on the outer cycle of the alive subgraph, not an
  // endpoint of the base edge, exactly two alive neighbors on that cycle.
  std::function<void(int, int, int)> recurse = [&](int u1, int u2, int k) {
    if (out.truncated) return;
    if (k == 2) {
      label[u1] = 1;
      label[u2] = 2;
      if (out.orderings.size() == cap) {
        out.truncated = true;
        return;
      }
      CanonicalOrdering ord;
      ord.label = label;
      ord.tree_index = -1;
      out.orderings.push_back(std::move(ord));
      return;
    }
    const auto path = outer_path(g, alive, u1, u2, k);
    if (path.empty()) return;
    std::vector<char> on_cycle(n, 0);
    for (int v : path) on_cycle[v] = 1;
    std::vector<int> candidates;
    for (int v : path) {
      if (v == u1 || v == u2) continue;
      int cycle_neighbors = 0;
      for (int u : g.rotation(v))
        if (alive[u] && on_cycle[u]) ++cycle_neighbors;
      if (cycle_neighbors == 2) candidates.push_back(v);
    }
    std::sort(candidates.begin(), candidates.end());
    for (int v : candidates) {
      alive[v] = 0;
      label[v] = k;
      recurse(u1, u2, k - 1);
      alive[v] = 1;
      if (out.truncated) return;
    }
  };

  // Six starts: the non-base external is forced to take label n, so looping
  // over the ordered base pairs covers every choice of (u1, u2, vn).
  const auto& o = g.outer();
  for (int i = 0; i < 3 && !out.truncated; ++i) {
    const int p = o[(i + 1) % 3], q = o[(i + 2) % 3];
    for (auto [u1, u2] : {std::make_pair(p, q), std::make_pair(q, p)}) {
      label.assign(n, 0);
      recurse(u1, u2, n);
      if (out.truncated) break;
    }
  }
  return out;
}

} // namespace trivis
