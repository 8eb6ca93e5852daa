#include "trivis/layout.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace trivis {

const char* to_string(DrawingErrorCode code) {
  switch (code) {
    case DrawingErrorCode::Ok: return "Ok";
    case DrawingErrorCode::Overlap: return "Overlap";
    case DrawingErrorCode::EdgeNotVisible: return "EdgeNotVisible";
    case DrawingErrorCode::TooTall: return "TooTall";
  }
  return "?";
}

namespace {

/// Doubly linked list of grid columns over an index arena; final x
/// coordinates come from one left-to-right scan at the end.
struct Columns {
  std::vector<int> prev, next;
  int head = -1, tail = -1;

  explicit Columns(int reserve_hint) {
    prev.reserve(reserve_hint);
    next.reserve(reserve_hint);
  }

  int make() {
    prev.push_back(-1);
    next.push_back(-1);
    return (int)prev.size() - 1;
  }

  int push_back_col() {
    const int c = make();
    if (tail < 0) head = tail = c;
    else {
      next[tail] = c;
      prev[c] = tail;
      tail = c;
    }
    return c;
  }

  int insert_after(int h) {
    const int c = make();
    next[c] = next[h];
    prev[c] = h;
    if (next[h] >= 0) prev[next[h]] = c;
    else tail = c;
    next[h] = c;
    return c;
  }

  int insert_before(int h) {
    if (prev[h] >= 0) return insert_after(prev[h]);
    const int c = make();
    next[c] = h;
    prev[h] = c;
    head = c;
    return c;
  }

  int count() const { return (int)prev.size(); }
};

struct ContourNode {
  int left = -1, right = -1;  // contour neighbors (node ids)
  int seg_l = -1, seg_r = -1; // span column handles
  int vis_lo = -1, vis_hi = -1;
  bool visible = false;
  bool on_contour = false;
  int gap_col = -1;    // insertion point once the visible interval is empty
  bool gap_before = false;
};

struct SweepOutcome {
  DrawingReport report;
  // visibility witnesses: key (below node, above node) -> column
  std::unordered_map<std::uint64_t, int> pairs;
};

std::uint64_t pair_key(int below, int above) {
  return (std::uint64_t(std::uint32_t(below)) << 32) | std::uint32_t(above);
}

/// Bottom-to-top sweep.  Maintains, per column, the topmost segment seen so
/// far; a segment entering on a higher row sees exactly the owners that are
/// visible to it from below.
SweepOutcome sweep_segments(const std::vector<Segment>& segments) {
  SweepOutcome out;

  std::vector<int> order(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (segments[a].y != segments[b].y) return segments[a].y < segments[b].y;
    return segments[a].x1 < segments[b].x1;
  });

  // Same-row disjointness.
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const Segment& a = segments[order[i]];
    const Segment& b = segments[order[i + 1]];
    if (a.y == b.y && b.x1 <= a.x2) {
      out.report = {DrawingErrorCode::Overlap, a.v, b.v,
                    "segments share row " + std::to_string(a.y)};
      return out;
    }
  }

  std::map<int, int> prof{{std::numeric_limits<int>::min(), -1}};
  auto split = [&](int x) {
    auto it = prof.upper_bound(x);
    --it;
    if (it->first != x) prof.emplace(x, it->second);
  };

  for (std::size_t gi = 0; gi < order.size();) {
    std::size_t ge = gi;
    while (ge < order.size() && segments[order[ge]].y == segments[order[gi]].y) ++ge;
    // Query the whole row group before assigning any of it.
    for (std::size_t i = gi; i < ge; ++i) {
      const Segment& s = segments[order[i]];
      split(s.x1);
      split(s.x2 + 1);
      for (auto it = prof.find(s.x1); it != prof.end() && it->first <= s.x2; ++it) {
        if (it->second < 0) continue;
        out.pairs.emplace(pair_key(it->second, s.v), std::max(it->first, s.x1));
      }
    }
    for (std::size_t i = gi; i < ge; ++i) {
      const Segment& s = segments[order[i]];
      for (auto it = prof.find(s.x1); it != prof.end() && it->first <= s.x2;)
        it = prof.erase(it);
      prof[s.x1] = s.v;
      // boundary at x2+1 already exists via split above
    }
    gi = ge;
  }
  return out;
}

DrawingReport check_edges(const PlaneTriangulation& g, const VisibilityDrawing& d,
                          const std::vector<char>* node_filter, SweepOutcome& sweep,
                          std::vector<EdgeWitness>* witnesses) {
  const int n = g.node_count();
  std::vector<int> seg_of(n, -1);
  for (std::size_t i = 0; i < d.segments.size(); ++i) {
    const int v = d.segments[i].v;
    if (v >= 0 && v < n) seg_of[v] = (int)i;
  }

  for (int u = 0; u < n; ++u) {
    if (node_filter && !(*node_filter)[u]) continue;
    for (int v : g.rotation(u)) {
      if (v < u) continue;
      if (node_filter && !(*node_filter)[v]) continue;
      int column = -1;
      if (seg_of[u] >= 0 && seg_of[v] >= 0) {
        const Segment& su = d.segments[seg_of[u]];
        const Segment& sv = d.segments[seg_of[v]];
        if (su.y != sv.y) {
          const int below = su.y < sv.y ? u : v;
          const int above = su.y < sv.y ? v : u;
          auto it = sweep.pairs.find(pair_key(below, above));
          if (it != sweep.pairs.end()) column = it->second;
        }
      }
      if (column < 0 && !witnesses)
        return {DrawingErrorCode::EdgeNotVisible, u, v, "no unobstructed shared column"};
      if (witnesses) witnesses->push_back({u, v, column});
    }
  }
  return {};
}

} // namespace

DrawingReport validate_drawing(const PlaneTriangulation& g, const VisibilityDrawing& d) {
  if (!d.segments.empty()) {
    int min_y = std::numeric_limits<int>::max(), max_y = std::numeric_limits<int>::min();
    for (const Segment& s : d.segments) {
      min_y = std::min(min_y, s.y);
      max_y = std::max(max_y, s.y);
    }
    if (max_y - min_y > g.node_count() - 1)
      return {DrawingErrorCode::TooTall, -1, -1,
              "height " + std::to_string(max_y - min_y) + " exceeds n-1"};
  }
  SweepOutcome sweep = sweep_segments(d.segments);
  if (!sweep.report.ok()) return sweep.report;
  return check_edges(g, d, nullptr, sweep, nullptr);
}

std::vector<EdgeWitness> edge_witnesses(const PlaneTriangulation& g, const VisibilityDrawing& d) {
  SweepOutcome sweep = sweep_segments(d.segments);
  std::vector<EdgeWitness> out;
  if (!sweep.report.ok()) return out;
  check_edges(g, d, nullptr, sweep, &out);
  return out;
}

VisibilityDrawing draw(const PlaneTriangulation& g, const CanonicalOrdering& ordering,
                       bool debug) {
  const int n = g.node_count();
  if ((int)ordering.label.size() != n)
    throw InternalInvariantBroken("ordering size does not match the graph");
  if (debug) {
    const OrderingReport rep = validate_canonical_ordering(g, ordering);
    if (!rep.ok())
      throw InternalInvariantBroken(std::string("ordering invalid: ") + to_string(rep.code) +
                                    " at k=" + std::to_string(rep.k));
  }

  std::vector<int> by_label(n + 1, -1);
  for (int v = 0; v < n; ++v) {
    const int l = ordering.label[v];
    if (l < 1 || l > n || by_label[l] != -1)
      throw InternalInvariantBroken("labels are not a bijection");
    by_label[l] = v;
  }

  Columns cols(3 * n);
  std::vector<ContourNode> ct(n);
  const int v1 = by_label[1], v2 = by_label[2], v3 = by_label[3];

  const int c0 = cols.push_back_col();
  const int c1 = cols.push_back_col();
  const int c2 = cols.push_back_col();

  // Initial three-node layout: v1 spans all three columns on row 0 but is
  // fully covered and regains columns at the far left on demand; v2 keeps
  // the rightmost column visible, v3 the left two.
  ct[v1].seg_l = c0;
  ct[v1].seg_r = c2;
  ct[v1].visible = false;
  ct[v1].gap_col = c0;
  ct[v1].gap_before = true;
  ct[v2].seg_l = c1;
  ct[v2].seg_r = c2;
  ct[v2].vis_lo = ct[v2].vis_hi = c2;
  ct[v2].visible = true;
  ct[v3].seg_l = c0;
  ct[v3].seg_r = c1;
  ct[v3].vis_lo = c0;
  ct[v3].vis_hi = c1;
  ct[v3].visible = true;
  ct[v1].right = v3;
  ct[v3].left = v1;
  ct[v3].right = v2;
  ct[v2].left = v3;
  ct[v1].on_contour = ct[v2].on_contour = ct[v3].on_contour = true;

  auto expose = [&](int w) {
    if (ct[w].gap_col < 0) throw InternalInvariantBroken("no recorded insertion point");
    const int h =
        ct[w].gap_before ? cols.insert_before(ct[w].gap_col) : cols.insert_after(ct[w].gap_col);
    if (ct[w].gap_before && ct[w].gap_col == ct[w].seg_l) ct[w].seg_l = h;
    else if (!ct[w].gap_before && ct[w].gap_col == ct[w].seg_r) ct[w].seg_r = h;
    ct[w].vis_lo = ct[w].vis_hi = h;
    ct[w].visible = true;
    ct[w].gap_col = -1;
  };

  // The placed node starts at w's rightmost visible column and runs right.
  auto consume_hi = [&](int w) {
    const int c = ct[w].vis_hi;
    if (ct[w].vis_lo == c) {
      ct[w].visible = false;
      ct[w].gap_col = c;
      ct[w].gap_before = true;
    } else {
      ct[w].vis_hi = cols.prev[c];
    }
  };
  // The placed node ends at w's leftmost visible column, coming from the left.
  auto consume_lo = [&](int w) {
    const int c = ct[w].vis_lo;
    if (ct[w].vis_hi == c) {
      ct[w].visible = false;
      ct[w].gap_col = c;
      ct[w].gap_before = false;
    } else {
      ct[w].vis_lo = cols.next[c];
    }
  };

  std::vector<int> mark(n, 0);
  int stamp = 0;

  for (int k = 4; k <= n; ++k) {
    const int v = by_label[k];
    ++stamp;
    int anchor = -1, marked = 0;
    for (int u : g.rotation(v)) {
      if (ordering.label[u] < k) {
        mark[u] = stamp;
        ++marked;
        if (anchor < 0) anchor = u;
      }
    }
    if (anchor < 0 || !ct[anchor].on_contour)
      throw InternalInvariantBroken("new node has no earlier neighbor on the contour");

    int wp = anchor, wq = anchor;
    while (ct[wp].left >= 0 && mark[ct[wp].left] == stamp) wp = ct[wp].left;
    while (ct[wq].right >= 0 && mark[ct[wq].right] == stamp) wq = ct[wq].right;

    int span_nodes = 1;
    for (int w = wp; w != wq; w = ct[w].right) ++span_nodes;
    if (span_nodes != marked || wp == wq)
      throw InternalInvariantBroken("earlier neighbors are not a contour interval");

    for (int w = wp;; w = ct[w].right) {
      if (!ct[w].visible) expose(w);
      if (w == wq) break;
    }

    const int x1 = ct[wp].vis_hi;
    const int x2 = ct[wq].vis_lo;
    consume_hi(wp);
    consume_lo(wq);

    for (int w = ct[wp].right; w != wq;) {
      const int next = ct[w].right;
      ct[w].on_contour = false;
      ct[w].left = ct[w].right = -1;
      w = next;
    }

    ct[v].seg_l = x1;
    ct[v].seg_r = x2;
    ct[v].vis_lo = x1;
    ct[v].vis_hi = x2;
    ct[v].visible = true;
    ct[v].on_contour = true;
    ct[v].gap_col = -1;
    ct[wp].right = v;
    ct[v].left = wp;
    ct[v].right = wq;
    ct[wq].left = v;

    if (debug) {
      // Partial drawing of the first k nodes must already be a valid
      // visibility representation, and stalled contour nodes must keep an
      // insertion point for later exposure.
      std::vector<int> x(cols.count(), 0);
      int xi = 0;
      for (int c = cols.head; c >= 0; c = cols.next[c]) x[c] = xi++;
      VisibilityDrawing partial;
      std::vector<char> alive(n, 0);
      for (int l = 1; l <= k; ++l) {
        const int u = by_label[l];
        alive[u] = 1;
        partial.segments.push_back({u, l - 1, x[ct[u].seg_l], x[ct[u].seg_r]});
      }
      SweepOutcome sw = sweep_segments(partial.segments);
      DrawingReport rep = sw.report;
      if (rep.ok()) rep = check_edges(g, partial, &alive, sw, nullptr);
      if (!rep.ok())
        throw InternalInvariantBroken(std::string("partial drawing invalid at k=") +
                                      std::to_string(k) + ": " + to_string(rep.code));
      for (int w = v1; w >= 0; w = ct[w].right)
        if (!ct[w].visible && ct[w].gap_col < 0)
          throw InternalInvariantBroken("contour node lost its insertion point");
    }
  }

  std::vector<int> x(cols.count(), 0);
  int xi = 0;
  for (int c = cols.head; c >= 0; c = cols.next[c]) x[c] = xi++;

  VisibilityDrawing out;
  out.segments.reserve(n);
  for (int v = 0; v < n; ++v)
    out.segments.push_back({v, ordering.label[v] - 1, x[ct[v].seg_l], x[ct[v].seg_r]});
  out.width = xi - 1;
  out.height = n - 1;
  return out;
}

BestOfThree best_of_three(const PlaneTriangulation& g, bool debug) {
  const Realizer r = compute_realizer(g);
  BestOfThree best;
  for (int t = 0; t < 3; ++t) {
    VisibilityDrawing d = draw(g, canonical_ordering(g, r, t), debug);
    best.widths[t] = d.width;
    if (t == 0 || d.width < best.drawing.width) {
      best.drawing = std::move(d);
      best.chosen_tree = t;
    }
  }
  return best;
}

int theoretical_width_bound(int n, DegreeProfile profile, bool four_connected) {
  if (n < 4) throw std::invalid_argument("width bound needs n >= 4");
  int best = (22 * n - 40) / 15;
  if (!profile.has_internal_deg3) best = std::min(best, (4 * n - 9) / 3);
  if (!profile.has_internal_deg5) best = std::min(best, (4 * n - 7) / 3);
  if (four_connected) best = std::min(best, n - 1);
  return best;
}

VisibilityDrawing compact_rows(const VisibilityDrawing& d) {
  VisibilityDrawing out = d;
  if (d.segments.empty()) return out;

  int min_x = std::numeric_limits<int>::max(), max_x = std::numeric_limits<int>::min();
  for (const Segment& s : d.segments) {
    min_x = std::min(min_x, s.x1);
    max_x = std::max(max_x, s.x2);
  }

  std::vector<int> order(d.segments.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d.segments[a].y < d.segments[b].y; });

  std::vector<int> top(max_x - min_x + 1, -1);
  int max_y = 0;
  for (int i : order) {
    const Segment& s = d.segments[i];
    int y = 0;
    for (int xcol = s.x1; xcol <= s.x2; ++xcol) y = std::max(y, top[xcol - min_x] + 1);
    for (int xcol = s.x1; xcol <= s.x2; ++xcol) top[xcol - min_x] = y;
    out.segments[i].y = y;
    max_y = std::max(max_y, y);
  }
  out.height = max_y;
  return out;
}

using nlohmann::ordered_json;

std::string drawing_to_json(const VisibilityDrawing& d) {
  ordered_json j;
  j["width"] = d.width;
  j["height"] = d.height;
  ordered_json segs = ordered_json::array();
  for (const Segment& s : d.segments)
    segs.push_back(ordered_json{{"v", s.v}, {"y", s.y}, {"x1", s.x1}, {"x2", s.x2}});
  j["segments"] = std::move(segs);
  return j.dump();
}

VisibilityDrawing drawing_from_json(std::istream& in) {
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw GraphError(GraphErrorCode::BadInput, std::string("json parse: ") + e.what());
  }
  VisibilityDrawing d;
  try {
    d.width = j.at("width").get<int>();
    d.height = j.at("height").get<int>();
    for (const auto& js : j.at("segments")) {
      Segment s;
      s.v = js.at("v").get<int>();
      s.y = js.at("y").get<int>();
      s.x1 = js.at("x1").get<int>();
      s.x2 = js.at("x2").get<int>();
      if (s.x1 > s.x2) throw GraphError(GraphErrorCode::BadInput, "segment with x1 > x2");
      d.segments.push_back(s);
    }
  } catch (const GraphError&) {
    throw;
  } catch (const std::exception& e) {
    throw GraphError(GraphErrorCode::BadInput, std::string("drawing shape: ") + e.what());
  }
  return d;
}

VisibilityDrawing read_drawing_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(GraphErrorCode::BadInput, "cannot open " + path);
  return drawing_from_json(in);
}

std::string emit_svg(const PlaneTriangulation& g, const VisibilityDrawing& d) {
  const int cell = 10, rowstep = 14, margin = 10, bar = 4;
  int max_y = 0;
  for (const Segment& s : d.segments) max_y = std::max(max_y, s.y);

  auto xpix = [&](int col) { return margin + col * cell; };
  auto ypix = [&](int row) { return margin + (max_y - row) * rowstep; };

  std::ostringstream svg;
  const int w = margin * 2 + (d.width + 1) * cell;
  const int h = margin * 2 + max_y * rowstep + bar;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  svg << "<style>rect{fill:#333}line{stroke:#999;stroke-width:1}</style>\n";

  std::vector<EdgeWitness> witnesses = edge_witnesses(g, d);
  std::vector<int> row_of(g.node_count(), 0);
  for (const Segment& s : d.segments)
    if (s.v >= 0 && s.v < g.node_count()) row_of[s.v] = s.y;
  std::sort(witnesses.begin(), witnesses.end(), [](const EdgeWitness& a, const EdgeWitness& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const EdgeWitness& e : witnesses) {
    if (e.column < 0) continue;
    const int lo = std::min(row_of[e.u], row_of[e.v]);
    const int hi = std::max(row_of[e.u], row_of[e.v]);
    const int x = xpix(e.column) + cell / 2;
    svg << "<line x1=\"" << x << "\" y1=\"" << ypix(lo) << "\" x2=\"" << x << "\" y2=\""
        << ypix(hi) + bar << "\"/>\n";
  }
  for (const Segment& s : d.segments) {
    svg << "<rect x=\"" << xpix(s.x1) << "\" y=\"" << ypix(s.y) << "\" width=\""
        << (s.x2 - s.x1) * cell + cell << "\" height=\"" << bar << "\"><title>" << s.v
        << "</title></rect>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace trivis
