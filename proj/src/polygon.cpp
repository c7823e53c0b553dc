#include "ppoly/polygon.h"

#include <algorithm>
#include <cstdlib>

namespace ppoly {

int normalize(const PolygonCtx& ctx, long long v) {
  long long m = ((v - 1) % ctx.n + ctx.n) % ctx.n;
  return static_cast<int>(m + 1);
}

static void check_vertex(const PolygonCtx& ctx, int v) {
  if (v < 1 || v > ctx.n)
    throw std::invalid_argument("vertex out of range");
}

TaggedEdge make_side(const PolygonCtx& ctx, int a1) {
  check_vertex(ctx, a1);
  return TaggedEdge{EdgeKind::Side, a1, normalize(ctx, a1 + 1)};
}

TaggedEdge make_arc(const PolygonCtx& ctx, int a1, int a2) {
  check_vertex(ctx, a1);
  check_vertex(ctx, a2);
  if (a2 == a1 || a2 == normalize(ctx, a1 + 1))
    throw std::invalid_argument("arc endpoints must not be equal or adjacent "
                                "in the counter-clockwise direction");
  return TaggedEdge{EdgeKind::Arc, a1, a2};
}

TaggedEdge make_plain(const PolygonCtx& ctx, int a1) {
  check_vertex(ctx, a1);
  return TaggedEdge{EdgeKind::Plain, a1, a1};
}

TaggedEdge make_notched(const PolygonCtx& ctx, int a1) {
  check_vertex(ctx, a1);
  return TaggedEdge{EdgeKind::Notched, a1, a1};
}

bool is_puncture_incident(const TaggedEdge& e) {
  return e.kind == EdgeKind::Plain || e.kind == EdgeKind::Notched;
}

int cyclic_distance(const PolygonCtx& ctx, int r, int s) {
  check_vertex(ctx, r);
  check_vertex(ctx, s);
  return s >= r ? s - r : s - r + ctx.n;
}

bool interval_contains(const PolygonCtx& ctx, IntervalKind kind, int r, int s,
                       int x) {
  check_vertex(ctx, r);
  check_vertex(ctx, s);
  check_vertex(ctx, x);
  switch (kind) {
  case IntervalKind::Closed:
    return cyclic_distance(ctx, r, x) <= cyclic_distance(ctx, r, s);
  case IntervalKind::RightOpen: // [r,s] minus {s}
    return cyclic_distance(ctx, r, x) < cyclic_distance(ctx, r, s);
  case IntervalKind::LeftOpen: // [r,s] minus {r}
    return x != r &&
           cyclic_distance(ctx, r, x) <= cyclic_distance(ctx, r, s);
  case IntervalKind::Open: // [1,n] minus [s,r]
    return !interval_contains(ctx, IntervalKind::Closed, s, r, x);
  }
  return false;
}

int theta_length(const PolygonCtx& ctx, const TaggedEdge& a,
                 const TaggedEdge& b) {
  int d1 = cyclic_distance(ctx, a.a1, b.a1);
  int d2 = cyclic_distance(ctx, a.a2, b.a2);
  int da = interval_contains(ctx, IntervalKind::Open, b.a1, a.a2, a.a1) ? 1 : 0;
  int db = interval_contains(ctx, IntervalKind::Open, b.a1, a.a2, b.a2) ? 1 : 0;
  return d1 + d2 + ctx.n * std::abs(da - db);
}

int theta_defect(const PolygonCtx& ctx, const TaggedEdge& a,
                 const TaggedEdge& b, const TaggedEdge& c) {
  int s = theta_length(ctx, a, b) + theta_length(ctx, b, c) -
          theta_length(ctx, a, c);
  return s / (2 * ctx.n);
}

int angle_index_twice(const PolygonCtx& ctx, const TaggedEdge& a) {
  // 2(a1 + a2) + n + 2n * [a1 >= a2], in units of pi/(2n); only
  // differences mod 4n are meaningful.
  return 2 * (a.a1 + a.a2) + ctx.n + (a.a1 >= a.a2 ? 2 * ctx.n : 0);
}

bool vdash(const PolygonCtx& ctx, const TaggedEdge& a, const TaggedEdge& b) {
  if (is_puncture_incident(a) || is_puncture_incident(b))
    throw std::invalid_argument("vdash is only defined away from the puncture");
  return interval_contains(ctx, IntervalKind::Open, b.a2, a.a1, a.a2) ||
         interval_contains(ctx, IntervalKind::Open, b.a2, a.a1, b.a1);
}

// Lift of a winding arc to the universal cover: a chord from a1 to
// a1 + d(a1, a2) on the integer line, translated by multiples of n.
static int chord_span(const PolygonCtx& ctx, const TaggedEdge& a) {
  return cyclic_distance(ctx, a.a1, a.a2);
}

int crossing_number(const PolygonCtx& ctx, const TaggedEdge& a,
                    const TaggedEdge& b) {
  if (a.kind == EdgeKind::Side || b.kind == EdgeKind::Side)
    throw std::invalid_argument("crossing_number expects tagged arcs");
  bool pa = is_puncture_incident(a), pb = is_puncture_incident(b);
  if (pa && pb) {
    if (a.kind == b.kind)
      return 0;
    return a.a1 == b.a1 ? 0 : 1; // opposite tags cross once by convention
  }
  if (pa || pb) {
    // A ray from the base vertex to the puncture crosses a winding arc
    // once iff the base vertex is strictly inside the arc's span.
    const TaggedEdge& ray = pa ? a : b;
    const TaggedEdge& arc = pa ? b : a;
    return interval_contains(ctx, IntervalKind::Open, arc.a1, arc.a2, ray.a1)
               ? 1
               : 0;
  }
  // Two chords in the cover cross iff their endpoints strictly interleave.
  int x1 = a.a1, x2 = a.a1 + chord_span(ctx, a);
  int count = 0;
  for (int k = -1; k <= 1; k++) {
    int y1 = b.a1 + k * ctx.n, y2 = y1 + chord_span(ctx, b);
    if ((x1 < y1 && y1 < x2 && x2 < y2) || (y1 < x1 && x1 < y2 && y2 < x2))
      count++;
  }
  return count;
}

bool is_compatible(const PolygonCtx& ctx, const TaggedEdge& a,
                   const TaggedEdge& b) {
  if (a.kind == EdgeKind::Side || b.kind == EdgeKind::Side)
    return true;
  return crossing_number(ctx, a, b) == 0;
}

std::vector<TaggedEdge> all_edges(const PolygonCtx& ctx) {
  std::vector<TaggedEdge> out;
  out.reserve(static_cast<size_t>(ctx.n) * (ctx.n + 1));
  for (int i = 1; i <= ctx.n; i++)
    out.push_back(make_side(ctx, i));
  for (int i = 1; i <= ctx.n; i++)
    for (int d = 2; d <= ctx.n - 1; d++)
      out.push_back(make_arc(ctx, i, normalize(ctx, i + d)));
  for (int i = 1; i <= ctx.n; i++)
    out.push_back(make_plain(ctx, i));
  for (int i = 1; i <= ctx.n; i++)
    out.push_back(make_notched(ctx, i));
  return out;
}

std::vector<TaggedEdge> all_arcs(const PolygonCtx& ctx) {
  std::vector<TaggedEdge> out;
  for (const TaggedEdge& e : all_edges(ctx))
    if (e.kind != EdgeKind::Side)
      out.push_back(e);
  return out;
}

std::string edge_to_string(const TaggedEdge& e) {
  switch (e.kind) {
  case EdgeKind::Side:
    return "side(" + std::to_string(e.a1) + ")";
  case EdgeKind::Arc:
    return "arc(" + std::to_string(e.a1) + "," + std::to_string(e.a2) + ")";
  case EdgeKind::Plain:
    return "plain(" + std::to_string(e.a1) + ")";
  case EdgeKind::Notched:
    return "notched(" + std::to_string(e.a1) + ")";
  }
  return "?";
}

} // namespace ppoly
