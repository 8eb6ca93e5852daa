#include "trivis/metrics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace trivis {

namespace {

int find_root(std::vector<int>& up, int x) {
  while (up[x] != x) {
    up[x] = up[up[x]];
    x = up[x];
  }
  return x;
}

/// Tree index of each edge, -1 for the three external edges.  Keyed by the
/// smaller endpoint; values (larger endpoint, tree).
std::vector<std::vector<std::pair<int, int>>> edge_tree_map(const PlaneTriangulation& g,
                                                            const Realizer& r) {
  std::vector<std::vector<std::pair<int, int>>> out(g.node_count());
  for (int t = 0; t < 3; ++t)
    for (int v = 0; v < g.node_count(); ++v) {
      if (r.parent[t][v] < 0) continue;
      int a = v, b = r.parent[t][v];
      if (a > b) std::swap(a, b);
      out[a].push_back({b, t});
    }
  return out;
}

int edge_tree(const std::vector<std::vector<std::pair<int, int>>>& map, int a, int b) {
  if (a > b) std::swap(a, b);
  for (auto [other, t] : map[a])
    if (other == b) return t;
  return -1;
}

} // namespace

RealizerMetrics compute_metrics(const PlaneTriangulation& g, const Realizer& r) {
  const int n = g.node_count();
  RealizerMetrics m;
  m.n = n;
  m.deg_minus.assign(n, {0, 0, 0});
  m.deg_plus.assign(n, {0, 0, 0});
  m.score.assign(n, {0, 0, 0});
  m.score_total.assign(n, 0);
  m.lambda.assign(n, 0);

  for (int t = 0; t < 3; ++t) {
    const CanonicalOrdering ord = canonical_ordering(g, r, t);
    for (int v = 0; v < n; ++v) {
      for (int u : g.rotation(v)) {
        if (ord.label[u] < ord.label[v]) ++m.deg_minus[v][t];
        else ++m.deg_plus[v][t];
      }
      if (!g.is_external(v)) {
        m.score[v][t] = std::min(m.deg_minus[v][t], m.deg_plus[v][t]);
        m.score_sum[t] += m.score[v][t];
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (!g.is_external(v))
      m.score_total[v] = m.score[v][0] + m.score[v][1] + m.score[v][2];

  // Leaves: tree members are the internal nodes plus the root; a node is
  // internal to a tree iff it has a child there.
  std::vector<std::array<char, 3>> has_child(n, {0, 0, 0});
  for (int t = 0; t < 3; ++t)
    for (int v = 0; v < n; ++v)
      if (r.parent[t][v] >= 0) has_child[r.parent[t][v]][t] = 1;
  for (int v = 0; v < n; ++v) {
    if (g.is_external(v)) continue;
    for (int t = 0; t < 3; ++t) {
      if (has_child[v][t]) ++m.lambda[v];
      else m.leaves[t].push_back(v);
    }
  }

  // Cyclic faces: internal faces whose three edges lie in three trees.
  const auto trees = edge_tree_map(g, r);
  for (const Face& f : faces(g).faces) {
    if (f.external) continue;
    const int t0 = edge_tree(trees, f.v[0], f.v[1]);
    const int t1 = edge_tree(trees, f.v[1], f.v[2]);
    const int t2 = edge_tree(trees, f.v[2], f.v[0]);
    if (t0 < 0 || t1 < 0 || t2 < 0) continue; // touches an external edge
    if (t0 != t1 && t1 != t2 && t0 != t2) m.cyclic_faces.push_back(f.v);
  }
  m.cyclic_face_count = (int)m.cyclic_faces.size();

  // B and the component count of G[B].
  std::vector<char> in_b(n, 0);
  for (int v = 0; v < n; ++v)
    if (!g.is_external(v) && m.lambda[v] == 2 && g.degree(v) == 5) {
      in_b[v] = 1;
      m.b_nodes.push_back(v);
    }
  std::vector<int> up(n);
  std::iota(up.begin(), up.end(), 0);
  for (int v : m.b_nodes)
    for (int u : g.rotation(v))
      if (in_b[u]) up[find_root(up, u)] = find_root(up, v);
  int components = 0;
  for (int v : m.b_nodes)
    if (find_root(up, v) == v) ++components;
  m.b_component_count = components;

  return m;
}

IdentityReport verify_identities(const PlaneTriangulation& g, const Realizer& r,
                                 const RealizerMetrics& m) {
  (void)r;
  const long long n = g.node_count();
  if (n < 4) throw std::invalid_argument("identities need n >= 4");

  IdentityReport report;
  auto add = [&](std::string name, std::string rel, long long lhs, long long rhs,
                 bool applicable) {
    IdentityCheck c;
    c.name = std::move(name);
    c.relation = std::move(rel);
    c.lhs = lhs;
    c.rhs = rhs;
    c.applicable = applicable;
    c.pass = !applicable || (c.relation == "==" ? lhs == rhs : lhs >= rhs);
    if (applicable && !c.pass) report.all_pass = false;
    report.checks.push_back(std::move(c));
  };

  const long long c = m.cyclic_face_count;
  long long lambda_sum = 0;
  for (int v = 0; v < n; ++v) lambda_sum += m.lambda[v];
  add("lambda_sum", "==", lambda_sum, n + c - 4, true);

  const long long leaf_sum =
      (long long)m.leaves[0].size() + m.leaves[1].size() + m.leaves[2].size();
  add("leaf_sum", "==", leaf_sum, 2 * n - c - 5, true);

  // Per-node bound, reported as the worst margin.
  long long min_margin = std::numeric_limits<long long>::max();
  std::vector<char> in_b(n, 0);
  for (int v : m.b_nodes) in_b[v] = 1;
  for (int v = 0; v < n; ++v) {
    if (g.is_external(v)) continue;
    const long long bound = 3 + 2LL * m.lambda[v] - (in_b[v] ? 1 : 0);
    min_margin = std::min(min_margin, m.score_total[v] - bound);
  }
  if (min_margin == std::numeric_limits<long long>::max()) min_margin = 0; // no internals
  add("score_per_node", ">=", min_margin, 0, true);

  const long long total = m.score_sum[0] + m.score_sum[1] + m.score_sum[2];
  const DegreeProfile profile = internal_degree_profile(g);
  add("score_sum_no_deg3", ">=", total, 5 * n - 15, !profile.has_internal_deg3);
  add("score_sum_no_deg5", ">=", total, 5 * n - 17, !profile.has_internal_deg5);
  add("score_sum_unrestricted", ">=", 5 * total, 23 * n - 80, true);

  const long long k = m.b_component_count;
  add("b_components", ">=", 2 * n - 5, 5 * k, true);
  add("b_forest", ">=", 2 * c, (long long)m.b_nodes.size() - k, true);

  return report;
}

std::vector<LeafFaceEntry> acyclic_face_map(const PlaneTriangulation& g, const Realizer& r) {
  const FaceList fl = faces(g);
  std::map<std::array<int, 3>, int> by_key;
  for (int i = 0; i < (int)fl.faces.size(); ++i) {
    std::array<int, 3> key = fl.faces[i].v;
    std::sort(key.begin(), key.end());
    by_key[key] = i;
  }

  std::vector<std::array<char, 3>> has_child(g.node_count(), {0, 0, 0});
  for (int t = 0; t < 3; ++t)
    for (int v = 0; v < g.node_count(); ++v)
      if (r.parent[t][v] >= 0) has_child[r.parent[t][v]][t] = 1;

  std::vector<LeafFaceEntry> out;
  for (int t = 0; t < 3; ++t) {
    const int j = (t + 1) % 3, k = (t + 2) % 3;
    for (int v = 0; v < g.node_count(); ++v) {
      if (g.is_external(v) || has_child[v][t]) continue; // not a leaf of tree t
      LeafFaceEntry e;
      e.tree = t;
      e.leaf = v;
      e.face = {v, r.parent[j][v], r.parent[k][v]};
      std::array<int, 3> key = e.face;
      std::sort(key.begin(), key.end());
      auto it = by_key.find(key);
      if (it == by_key.end())
        throw std::logic_error("leaf face is not a face of the triangulation");
      e.face_index = it->second;
      out.push_back(e);
    }
  }
  return out;
}

} // namespace trivis
