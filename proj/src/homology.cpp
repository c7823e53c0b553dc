#include "ppoly/homology.h"

#include <algorithm>
#include <stdexcept>

namespace ppoly {

namespace {

bool in_open(const PolygonCtx& ctx, int r, int s, int x) {
  return interval_contains(ctx, IntervalKind::Open, r, s, x);
}

TaggedEdge shifted(const PolygonCtx& ctx, const TaggedEdge& a, int by) {
  int a1 = normalize(ctx, a.a1 + by);
  switch (a.kind) {
  case EdgeKind::Side:
    return make_side(ctx, a1);
  case EdgeKind::Arc:
    return make_arc(ctx, a1, normalize(ctx, a.a2 + by));
  case EdgeKind::Plain:
    return make_plain(ctx, a1);
  default:
    return make_notched(ctx, a1);
  }
}

TaggedEdge tag_swapped(const PolygonCtx& ctx, const TaggedEdge& a) {
  if (a.kind == EdgeKind::Plain)
    return make_notched(ctx, a.a1);
  if (a.kind == EdgeKind::Notched)
    return make_plain(ctx, a.a1);
  return a;
}

// indecomposable summands of the formal edge (r, s): puncture arcs of
// both tags when r = s, a side when s = r + 1, otherwise a winding arc
void push_expanded(const PolygonCtx& ctx, std::vector<TaggedEdge>& out,
                   int r, int s) {
  r = normalize(ctx, r);
  s = normalize(ctx, s);
  if (r == s) {
    out.push_back(make_plain(ctx, r));
    out.push_back(make_notched(ctx, r));
  } else if (s == normalize(ctx, r + 1)) {
    out.push_back(make_side(ctx, r));
  } else {
    out.push_back(make_arc(ctx, r, s));
  }
}

TaggedEdge make_ray(const PolygonCtx& ctx, int at, EdgeKind tag) {
  return tag == EdgeKind::Plain ? make_plain(ctx, at) : make_notched(ctx, at);
}

} // namespace

SubmoduleDescriptor hom_module(const PolygonCtx& ctx, const TaggedEdge& a,
                               const TaggedEdge& b) {
  SubmoduleDescriptor expected = descriptor_for(ctx, a, b);
  // a Lambda-morphism is a tuple of R'-morphisms between the side rows
  SubmoduleDescriptor acc =
      hom_descriptor(ctx, descriptor_for(ctx, make_side(ctx, 1), a),
                     descriptor_for(ctx, make_side(ctx, 1), b));
  for (int i = 2; i <= ctx.n; i++) {
    TaggedEdge s = make_side(ctx, i);
    acc = descriptor_intersect(
        ctx, acc,
        hom_descriptor(ctx, descriptor_for(ctx, s, a),
                       descriptor_for(ctx, s, b)));
  }
  if (!(acc == expected))
    throw std::logic_error("hom intersection disagrees with the formula");
  return expected;
}

StableHom stable_hom(const PolygonCtx& ctx, const TaggedEdge& a,
                     const TaggedEdge& b) {
  int l = theta_length(ctx, a, b);
  bool pa = is_puncture_incident(a), pb = is_puncture_incident(b);
  if (pa && pb && a.kind != b.kind)
    return {l, 0};
  int p1 = in_open(ctx, b.a1, b.a2, normalize(ctx, a.a1 - 1)) &&
                   in_open(ctx, a.a1, a.a2, normalize(ctx, b.a2 + 1))
               ? 1
               : 0;
  int p2 = in_open(ctx, b.a1, b.a2, normalize(ctx, a.a2 - 1)) &&
                   in_open(ctx, a.a1, a.a2, normalize(ctx, b.a1 + 1))
               ? 1
               : 0;
  if (!pa && !pb)
    return {l, p1 + p2};
  // with a puncture arc on either end the two products coincide
  if (p1 != p2)
    throw std::logic_error("stable hom products disagree");
  return {l, p1};
}

TaggedEdge tau(const PolygonCtx& ctx, const TaggedEdge& a) {
  if (a.kind == EdgeKind::Side)
    throw std::invalid_argument("sides are projective-injective");
  return tag_swapped(ctx, shifted(ctx, a, -1));
}

TaggedEdge tau_inv(const PolygonCtx& ctx, const TaggedEdge& a) {
  if (a.kind == EdgeKind::Side)
    throw std::invalid_argument("sides are projective-injective");
  return tag_swapped(ctx, shifted(ctx, a, 1));
}

TaggedEdge nu(const PolygonCtx& ctx, const TaggedEdge& a) {
  return shifted(ctx, a, -2);
}

TaggedEdge omega(const PolygonCtx& ctx, const TaggedEdge& a) {
  if (a.kind == EdgeKind::Side)
    throw std::invalid_argument("sides are projective-injective");
  return tag_swapped(ctx, shifted(ctx, a, 1));
}

namespace {

// the explicit case table for dim Ext^1(M_a, M_b)
int ext1_table(const PolygonCtx& ctx, const TaggedEdge& a,
               const TaggedEdge& b) {
  if (a.kind == EdgeKind::Side || b.kind == EdgeKind::Side)
    return 0;
  bool pa = is_puncture_incident(a), pb = is_puncture_incident(b);
  if (pa && pb)
    return (a.kind != b.kind && a.a1 != b.a1) ? 1 : 0;
  if (pa)
    return in_open(ctx, b.a1, b.a2, a.a1) ? 1 : 0;
  if (pb)
    return in_open(ctx, a.a1, a.a2, b.a1) ? 1 : 0;
  int t1 = (in_open(ctx, a.a1, a.a2, b.a1) && in_open(ctx, b.a1, b.a2, a.a2))
               ? 1
               : 0;
  int t2 = (in_open(ctx, a.a1, a.a2, b.a2) && in_open(ctx, b.a1, b.a2, a.a1))
               ? 1
               : 0;
  return t1 + t2;
}

} // namespace

int ext1_dim(const PolygonCtx& ctx, const TaggedEdge& a, const TaggedEdge& b) {
  int table = ext1_table(ctx, a, b);
  if (a.kind == EdgeKind::Side || b.kind == EdgeKind::Side)
    return table;
  // AR duality: Ext^1(M_a, M_b) is dual to the stable Hom(M_b, tau M_a)
  int dual = stable_hom(ctx, b, tau(ctx, a)).epsilon;
  if (dual != table)
    throw std::logic_error("AR duality disagrees with the Ext table");
  return table;
}

ARSequence ar_sequence(const PolygonCtx& ctx, const TaggedEdge& a) {
  if (a.kind == EdgeKind::Side)
    throw std::invalid_argument("sides are projective-injective");
  ARSequence seq;
  seq.left = a;
  if (a.kind == EdgeKind::Arc) {
    push_expanded(ctx, seq.middle, a.a1 + 1, a.a2);
    push_expanded(ctx, seq.middle, a.a1, a.a2 + 1);
  } else {
    seq.middle.push_back(make_arc(ctx, normalize(ctx, a.a1 + 1), a.a1));
  }
  seq.right = tau_inv(ctx, a);
  std::sort(seq.middle.begin(), seq.middle.end());
  return seq;
}

std::vector<std::vector<TaggedEdge>>
extension_list(const PolygonCtx& ctx, const TaggedEdge& a,
               const TaggedEdge& b) {
  std::vector<std::vector<TaggedEdge>> out;
  if (a.kind == EdgeKind::Side || b.kind == EdgeKind::Side)
    return out;
  bool pa = is_puncture_incident(a), pb = is_puncture_incident(b);
  auto push = [&](std::vector<TaggedEdge> mid) {
    std::sort(mid.begin(), mid.end());
    out.push_back(std::move(mid));
  };
  if (pa && pb) {
    if (a.kind != b.kind && a.a1 != b.a1) {
      std::vector<TaggedEdge> mid;
      push_expanded(ctx, mid, a.a1, b.a1);
      push(std::move(mid));
    }
  } else if (pa) {
    // 0 -> (i,j) -> (k,j) + ray(i) -> ray(k) -> 0 when k lies inside
    if (in_open(ctx, b.a1, b.a2, a.a1)) {
      std::vector<TaggedEdge> mid;
      push_expanded(ctx, mid, a.a1, b.a2);
      mid.push_back(make_ray(ctx, b.a1, a.kind));
      push(std::move(mid));
    }
  } else if (pb) {
    // 0 -> ray(i) -> (k,i) + ray(l) -> (k,l) -> 0 when i lies inside
    if (in_open(ctx, a.a1, a.a2, b.a1)) {
      std::vector<TaggedEdge> mid;
      push_expanded(ctx, mid, a.a1, b.a1);
      mid.push_back(make_ray(ctx, a.a2, b.kind));
      push(std::move(mid));
    }
  } else {
    int k = a.a1, l = a.a2, i = b.a1, j = b.a2;
    auto d = [&](int r, int s) { return cyclic_distance(ctx, r, s); };
    // cyclic order l <= i < k < j: one sequence through (i,l) and (k,j)
    if (d(l, i) < d(l, k) && d(l, k) < d(l, j)) {
      std::vector<TaggedEdge> mid;
      push_expanded(ctx, mid, i, l);
      push_expanded(ctx, mid, k, j);
      push(std::move(mid));
    }
    // cyclic order i < l < j <= k: one sequence through (k,i) and (l,j)
    if (0 < d(i, l) && d(i, l) < d(i, j) && d(i, j) <= d(i, k)) {
      std::vector<TaggedEdge> mid;
      push_expanded(ctx, mid, k, i);
      push_expanded(ctx, mid, l, j);
      push(std::move(mid));
    }
    // cyclic order i < l < k < j: two independent sequences
    if (0 < d(i, l) && d(i, l) < d(i, k) && d(i, k) < d(i, j)) {
      std::vector<TaggedEdge> mid1;
      push_expanded(ctx, mid1, k, i);
      push_expanded(ctx, mid1, l, j);
      push(std::move(mid1));
      std::vector<TaggedEdge> mid2;
      push_expanded(ctx, mid2, l, i);
      push_expanded(ctx, mid2, k, j);
      push(std::move(mid2));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace ppoly
