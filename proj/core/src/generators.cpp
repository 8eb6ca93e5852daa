#include "trivis/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_set>

namespace trivis {

namespace {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, bound), unbiased and stable across platforms.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % bound;
  }

private:
  std::mt19937_64 gen_;
};

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t(u) << 32) | std::uint64_t(v);
}

/// Half-edge store for building triangulations by stacking and flipping.
/// Darts are directed edges; each node's outgoing darts form a circular
/// doubly linked list in counterclockwise order.
struct HalfEdgeMesh {
  std::vector<int> target, src, nxt, prv, twin;
  std::vector<int> any_dart; // one outgoing dart per node
  std::unordered_set<std::uint64_t> edges;
  int n = 0;

  struct FaceRec {
    int dxy, dyz, dzx; // darts x->y, y->z, z->x of a ccw internal face
  };
  std::vector<FaceRec> faces; // internal faces, only maintained while stacking

  int new_node() {
    any_dart.push_back(-1);
    return n++;
  }

  int new_dart(int from, int to) {
    const int d = (int)target.size();
    src.push_back(from);
    target.push_back(to);
    nxt.push_back(d);
    prv.push_back(d);
    twin.push_back(-1);
    return d;
  }

  std::pair<int, int> new_edge(int u, int v) {
    const int d = new_dart(u, v);
    const int t = new_dart(v, u);
    twin[d] = t;
    twin[t] = d;
    edges.insert(edge_key(u, v));
    return {d, t};
  }

  void link_after(int d0, int d) { // insert d after d0 in the ring of src[d0]
    nxt[d] = nxt[d0];
    prv[d] = d0;
    prv[nxt[d0]] = d;
    nxt[d0] = d;
  }

  void unlink(int d) {
    nxt[prv[d]] = nxt[d];
    prv[nxt[d]] = prv[d];
    if (any_dart[src[d]] == d) any_dart[src[d]] = nxt[d] == d ? -1 : nxt[d];
    nxt[d] = prv[d] = d;
  }

  void init_triangle() {
    new_node();
    new_node();
    new_node();
    auto [d01, d10] = new_edge(0, 1);
    auto [d12, d21] = new_edge(1, 2);
    auto [d20, d02] = new_edge(2, 0);
    // rot[0] = [1,2], rot[1] = [2,0], rot[2] = [0,1]
    link_after(d01, d02);
    link_after(d12, d10);
    link_after(d20, d21);
    any_dart[0] = d01;
    any_dart[1] = d12;
    any_dart[2] = d20;
    faces.push_back({d01, d12, d20});
  }

  /// Insert a new node into internal face #fi, replacing it by three faces.
  void stack(std::size_t fi) {
    const FaceRec f = faces[fi];
    const int x = src[f.dxy], y = src[f.dyz], z = src[f.dzx];
    const int w = new_node();
    auto [dwx, dxw] = new_edge(w, x);
    auto [dwy, dyw] = new_edge(w, y);
    auto [dwz, dzw] = new_edge(w, z);
    // rot[w] = [x, y, z]; at x the new neighbor sits right after y, etc.
    link_after(dwx, dwy);
    link_after(dwy, dwz);
    any_dart[w] = dwx;
    link_after(f.dxy, dxw);
    link_after(f.dyz, dyw);
    link_after(f.dzx, dzw);
    faces[fi] = {f.dxy, dyw, dwx};
    faces.push_back({f.dyz, dzw, dwy});
    faces.push_back({f.dzx, dxw, dwz});
  }

  /// Replace edge (u,v) by the diagonal (x,y) of the quad formed by its two
  /// adjacent faces, if that keeps the graph simple.  Returns false when
  /// rejected.  A degree-3 endpoint always gets rejected because x and y are
  /// already adjacent then.
  bool flip(int d) {
    const int t = twin[d];
    const int u = src[d], v = src[t];
    const int dvx = prv[t]; // v -> x, x = predecessor of u around v
    const int duy = prv[d]; // u -> y
    const int dux = nxt[d]; // u -> x
    const int dvy = nxt[t]; // v -> y
    const int x = target[dvx], y = target[duy];
    if (x == y || edges.count(edge_key(x, y))) return false;

    edges.erase(edge_key(u, v));
    unlink(d);
    unlink(t);
    src[d] = x;
    target[d] = y;
    src[t] = y;
    target[t] = x;
    link_after(twin[dux], d); // rot[x]: y right after u
    link_after(twin[dvy], t); // rot[y]: x right after v
    edges.insert(edge_key(x, y));
    return true;
  }

  std::vector<std::vector<int>> rotations() const {
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
      const int d0 = any_dart[v];
      int d = d0;
      do {
        rot[v].push_back(target[d]);
        d = nxt[d];
      } while (d != d0);
    }
    return rot;
  }
};

PlaneTriangulation stacked_random(int n, std::uint64_t seed, long flips) {
  if (n < 3) throw BadSpec("need n >= 3");
  HalfEdgeMesh mesh;
  mesh.init_triangle();
  Rng rng(seed);
  for (int v = 3; v < n; ++v) mesh.stack(rng.below(mesh.faces.size()));

  if (flips > 0 && n > 3) {
    std::vector<int> internal_darts;
    for (int d = 0; d < (int)mesh.target.size(); ++d) {
      const int a = mesh.src[d], b = mesh.target[d];
      if (a > b) continue;
      if (a <= 2 && b <= 2) continue; // outer edge
      internal_darts.push_back(d);
    }
    for (long i = 0; i < flips; ++i)
      mesh.flip(internal_darts[rng.below(internal_darts.size())]);
  }
  return PlaneTriangulation::from_rotation_system(n, mesh.rotations(), {0, 1, 2});
}

} // namespace

bool parse_gen_kind(const std::string& name, GenKind& out) {
  if (name == "triangle") out = GenKind::Triangle;
  else if (name == "k4") out = GenKind::K4;
  else if (name == "octahedron") out = GenKind::Octahedron;
  else if (name == "icosahedron") out = GenKind::Icosahedron;
  else if (name == "stacked") out = GenKind::Stacked;
  else if (name == "random") out = GenKind::Random;
  else if (name == "lower_bound") out = GenKind::LowerBound;
  else return false;
  return true;
}

const char* to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Triangle: return "triangle";
    case GenKind::K4: return "k4";
    case GenKind::Octahedron: return "octahedron";
    case GenKind::Icosahedron: return "icosahedron";
    case GenKind::Stacked: return "stacked";
    case GenKind::Random: return "random";
    case GenKind::LowerBound: return "lower_bound";
  }
  return "?";
}

PlaneTriangulation make_triangle() {
  return PlaneTriangulation::from_rotation_system(3, {{1, 2}, {2, 0}, {0, 1}}, {0, 1, 2});
}

PlaneTriangulation make_k4() {
  return PlaneTriangulation::from_rotation_system(
      4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}, {0, 1, 2});
}

PlaneTriangulation make_octahedron() {
  return PlaneTriangulation::from_rotation_system(6,
                                                  {
                                                      {1, 5, 4, 2},
                                                      {2, 3, 5, 0},
                                                      {0, 4, 3, 1},
                                                      {1, 2, 4, 5},
                                                      {0, 5, 3, 2},
                                                      {0, 1, 3, 4},
                                                  },
                                                  {0, 1, 2});
}

PlaneTriangulation make_icosahedron() {
  // Fixed rotation table; nodes 0 and 11 are the poles, 1-5 and 6-10 the two
  // pentagons.  Outer face (0,2,1).
  return PlaneTriangulation::from_rotation_system(12,
                                                  {
                                                      {1, 2, 3, 4, 5},
                                                      {0, 5, 6, 7, 2},
                                                      {0, 1, 7, 8, 3},
                                                      {0, 2, 8, 9, 4},
                                                      {0, 3, 9, 10, 5},
                                                      {0, 4, 10, 6, 1},
                                                      {7, 1, 5, 10, 11},
                                                      {8, 2, 1, 6, 11},
                                                      {9, 3, 2, 7, 11},
                                                      {10, 4, 3, 8, 11},
                                                      {6, 5, 4, 9, 11},
                                                      {10, 9, 8, 7, 6},
                                                  },
                                                  {0, 2, 1});
}

PlaneTriangulation lower_bound_family(int n) {
  if (n < 3) throw BadSpec("lower_bound needs n >= 3");

  std::vector<std::vector<int>> rot;
  std::array<int, 3> outer{};
  if (n % 3 == 0) {
    rot = {{1, 2}, {2, 0}, {0, 1}};
    outer = {0, 1, 2};
  } else if (n % 3 == 1) {
    rot = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
    outer = {0, 1, 2};
  } else {
    // K4 with one face stacked
    rot = {{1, 4, 3, 2}, {2, 3, 4, 0}, {0, 3, 1}, {0, 4, 1, 2}, {0, 1, 3}};
    outer = {0, 1, 2};
  }

  auto insert_after = [](std::vector<int>& cycle, int anchor, std::initializer_list<int> items) {
    auto it = std::find(cycle.begin(), cycle.end(), anchor);
    cycle.insert(it + 1, items);
  };

  while ((int)rot.size() < n) {
    const int k = (int)rot.size();
    const int u1 = outer[0], u2 = outer[1], u3 = outer[2];
    const int a = k, b = k + 1, c = k + 2;
    rot.push_back({b, u2, u1, c});
    rot.push_back({c, u3, u2, a});
    rot.push_back({a, u1, u3, b});
    insert_after(rot[u1], u3, {c, a});
    insert_after(rot[u2], u1, {a, b});
    insert_after(rot[u3], u2, {b, c});
    outer = {a, b, c};
  }
  return PlaneTriangulation::from_rotation_system(n, rot, outer);
}

PlaneTriangulation generate(const GenSpec& spec) {
  auto expect_n = [&](int fixed) {
    if (spec.n != 0 && spec.n != fixed)
      throw BadSpec(std::string(to_string(spec.kind)) + " has exactly " + std::to_string(fixed) +
                    " nodes");
  };
  switch (spec.kind) {
    case GenKind::Triangle: expect_n(3); return make_triangle();
    case GenKind::K4: expect_n(4); return make_k4();
    case GenKind::Octahedron: expect_n(6); return make_octahedron();
    case GenKind::Icosahedron: expect_n(12); return make_icosahedron();
    case GenKind::Stacked:
      if (spec.n < 3) throw BadSpec("stacked needs n >= 3");
      return stacked_random(spec.n, spec.seed, 0);
    case GenKind::Random: {
      if (spec.n < 3) throw BadSpec("random needs n >= 3");
      const long flips = spec.flips < 0 ? 3L * spec.n : spec.flips;
      return stacked_random(spec.n, spec.seed, flips);
    }
    case GenKind::LowerBound: return lower_bound_family(spec.n == 0 ? 3 : spec.n);
  }
  throw BadSpec("unknown kind");
}

} // namespace trivis
