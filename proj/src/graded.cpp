#include "ppoly/graded.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ppoly {

GradedIndec make_garc(const PolygonCtx& ctx, int i, int j) {
  if (j - i <= 0 || j - i >= ctx.n)
    throw std::invalid_argument("graded arc needs 0 < j - i < n");
  return {GKind::Arc, i, j};
}

GradedIndec make_gstar(const PolygonCtx& ctx, int i) {
  return {GKind::Star, i, i + ctx.n};
}

GradedIndec make_gnotch(const PolygonCtx& ctx, int i) {
  return {GKind::Notch, i, i + ctx.n};
}

std::string gindec_to_string(const GradedIndec& x) {
  switch (x.kind) {
  case GKind::Arc:
    return "(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
  case GKind::Star:
    return "(" + std::to_string(x.i) + ",*)";
  default:
    return "(" + std::to_string(x.i) + ",bowtie)";
  }
}

bool is_gprojective(const GradedIndec& x) {
  return x.kind == GKind::Arc && x.j == x.i + 1;
}

GradedIndec shift(const PolygonCtx& ctx, const GradedIndec& x, int k) {
  return {x.kind, x.i + k * ctx.n, x.j + k * ctx.n};
}

TaggedEdge forget(const PolygonCtx& ctx, const GradedIndec& x) {
  int a1 = normalize(ctx, x.i);
  switch (x.kind) {
  case GKind::Star:
    return make_plain(ctx, a1);
  case GKind::Notch:
    return make_notched(ctx, a1);
  default:
    if (x.j == x.i + 1)
      return make_side(ctx, a1);
    return make_arc(ctx, a1, normalize(ctx, x.j));
  }
}

namespace {

GradedIndec translate(const GradedIndec& x, int by, bool swap_tag) {
  GKind k = x.kind;
  if (swap_tag && k == GKind::Star)
    k = GKind::Notch;
  else if (swap_tag && k == GKind::Notch)
    k = GKind::Star;
  return {k, x.i + by, x.j + by};
}

} // namespace

GradedIndec omega_z(const PolygonCtx& ctx, const GradedIndec& x) {
  return translate(x, 1 - ctx.n, true);
}

GradedIndec omega_z_pow(const PolygonCtx& ctx, const GradedIndec& x, int k) {
  return translate(x, k * (1 - ctx.n), (k % 2) != 0);
}

GradedIndec nu_z(const PolygonCtx& ctx, const GradedIndec& x) {
  return translate(x, ctx.n - 2, false);
}

GradedIndec tau_z(const PolygonCtx& ctx, const GradedIndec& x) {
  if (is_gprojective(x))
    throw std::invalid_argument("projectives have no translate");
  (void)ctx;
  return translate(x, -1, true);
}

GradedIndec tau_z_inv(const PolygonCtx& ctx, const GradedIndec& x) {
  GradedIndec y = translate(x, 1, true);
  if (is_gprojective(y))
    throw std::invalid_argument("projectives have no inverse translate");
  (void)ctx;
  return y;
}

int graded_ext1_dim(const PolygonCtx& ctx, const GradedIndec& x,
                    const GradedIndec& y) {
  int n = ctx.n;
  bool xray = x.kind != GKind::Arc, yray = y.kind != GKind::Arc;
  if (!xray && !yray) {
    int i = x.i, j = x.j, k = y.i;
    // at y.j = i + n the middle (i, i+n) is the split pair of puncture
    // objects; the sequence is still a non-split extension
    if (i < k && k < j && j < y.j && y.j <= i + n)
      return 1;
    int l = y.j - n;
    if (i < l && l < j && j <= k && k < i + n)
      return 1;
    if (i < l && l < k && k < j && j < i + n)
      return 2;
    return 0;
  }
  if (!xray) // quotient is a puncture object
    return (x.i < y.i && y.i < x.j) ? 1 : 0;
  if (!yray) {
    int l = y.j - n, k = y.i;
    return (x.i < l && l < k && k < x.i + n) ? 1 : 0;
  }
  if (x.kind == y.kind)
    return 0;
  return (x.i < y.i && y.i < x.i + n) ? 1 : 0;
}

namespace {

int delta(const GradedIndec& x) { return x.i + x.j; }

// knits dim Hom(x, -) over the AR quiver up to the target index sum;
// with stable set, maps through projectives are clipped to zero
int knit(const PolygonCtx& ctx, const GradedIndec& x, const GradedIndec& y,
         bool stable) {
  int n = ctx.n;
  if (y == x)
    return (stable && is_gprojective(x)) ? 0 : 1;
  // morphisms go in the increasing direction of both indices
  if (y.i < x.i || y.j < x.j || delta(y) <= delta(x))
    return 0;
  std::map<GradedIndec, int> h;
  auto get = [&](const GradedIndec& z) {
    if (z == x)
      return (stable && is_gprojective(x)) ? 0 : 1;
    auto it = h.find(z);
    return it == h.end() ? 0 : it->second;
  };
  for (int d = delta(x) + 1; d <= delta(y); d++) {
    // vertices with index sum d: one arc per span with matching parity,
    // plus the two puncture objects when d - n is even
    std::vector<GradedIndec> verts;
    for (int m = 1; m < n; m++)
      if ((d - m) % 2 == 0)
        verts.push_back({GKind::Arc, (d - m) / 2, (d + m) / 2});
    if ((d - n) % 2 == 0) {
      verts.push_back({GKind::Star, (d - n) / 2, (d + n) / 2});
      verts.push_back({GKind::Notch, (d - n) / 2, (d + n) / 2});
    }
    for (const GradedIndec& z : verts) {
      int val;
      if (is_gprojective(z)) {
        // the unique irreducible map into (i, i+1) comes from its
        // radical (i-1, i+1)
        val = stable ? 0 : get({GKind::Arc, z.i - 1, z.j});
      } else {
        int mids = 0;
        if (z.kind != GKind::Arc) {
          mids = get({GKind::Arc, z.i, z.j - 1});
        } else {
          mids += get({GKind::Arc, z.i, z.j - 1});
          if (z.j - (z.i - 1) == n) {
            mids += get({GKind::Star, z.i - 1, z.j});
            mids += get({GKind::Notch, z.i - 1, z.j});
          } else {
            mids += get({GKind::Arc, z.i - 1, z.j});
          }
        }
        val = std::max(0, mids - get(tau_z(ctx, z)));
      }
      if (val != 0)
        h[z] = val;
    }
  }
  return get(y);
}

void check_window(const PolygonCtx& ctx, const GradedIndec& x,
                  const GradedIndec& y, int window) {
  if (y.i - x.i > window * ctx.n || x.i - y.i > window * ctx.n)
    throw std::length_error("index window exceeded");
}

} // namespace

int graded_hom_dim(const PolygonCtx& ctx, const GradedIndec& x,
                   const GradedIndec& y, int window) {
  check_window(ctx, x, y, window);
  return knit(ctx, x, y, false);
}

int stable_graded_hom_dim_knit(const PolygonCtx& ctx, const GradedIndec& x,
                               const GradedIndec& y, int window) {
  check_window(ctx, x, y, window);
  if (is_gprojective(x) || is_gprojective(y))
    return 0;
  return knit(ctx, x, y, true);
}

int stable_graded_hom_dim(const PolygonCtx& ctx, const GradedIndec& x,
                          const GradedIndec& y) {
  if (is_gprojective(x) || is_gprojective(y))
    return 0;
  // AR duality: stable Hom(x, y) is dual to Ext^1(y, tau x)
  return graded_ext1_dim(ctx, tau_z(ctx, x), y);
}

GradedCover graded_projective_cover(const PolygonCtx& ctx,
                                    const GradedIndec& x) {
  int n = ctx.n;
  GradedCover c;
  if (x.kind == GKind::Arc) {
    c.tops.push_back({GKind::Arc, x.i, x.i + 1});
    c.tops.push_back({GKind::Arc, x.j - n, x.j - n + 1});
    c.kernel = {GKind::Arc, x.i + 1 - n, x.j + 1 - n};
  } else {
    c.tops.push_back({GKind::Arc, x.i, x.i + 1});
    c.kernel = omega_z(ctx, x);
  }
  return c;
}

std::vector<GradedIndec> lift_triangulation(const TaggedTriangulation& tri,
                                            int i0) {
  const PolygonCtx& ctx = tri.ctx;
  bool all_punc = true;
  for (const TaggedEdge& a : tri.arcs)
    all_punc = all_punc && is_puncture_incident(a);
  std::vector<GradedIndec> out;
  if (all_punc) {
    // all rays carry the same tag; lift them to one period
    GKind k = tri.arcs[0].kind == EdgeKind::Plain ? GKind::Star : GKind::Notch;
    for (int i = 1; i <= ctx.n; i++)
      out.push_back({k, i, i + ctx.n});
    return out;
  }
  if (i0 < 1 || i0 > ctx.n)
    throw std::invalid_argument("base vertex out of range");
  for (const TaggedEdge& a : tri.arcs)
    if (a.a1 == i0 || a.a2 == i0)
      throw std::invalid_argument("base vertex carries an arc");
  for (const TaggedEdge& a : tri.arcs) {
    int A1 = i0 + cyclic_distance(ctx, i0, a.a1);
    if (a.kind == EdgeKind::Plain)
      out.push_back(make_gstar(ctx, A1));
    else if (a.kind == EdgeKind::Notched)
      out.push_back(make_gnotch(ctx, A1));
    else
      out.push_back(make_garc(ctx, A1,
                              A1 + cyclic_distance(ctx, a.a1, a.a2)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_tilting_window(const PolygonCtx& ctx,
                       const std::vector<GradedIndec>& set, int kmin,
                       int kmax) {
  for (int k = kmin; k <= kmax; k++) {
    if (k == 0)
      continue;
    for (const GradedIndec& a : set)
      for (const GradedIndec& b : set)
        if (stable_graded_hom_dim(ctx, a, omega_z_pow(ctx, b, k)) != 0)
          return false;
  }
  return true;
}

} // namespace ppoly
