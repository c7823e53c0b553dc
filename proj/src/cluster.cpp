#include "ppoly/cluster.h"

#include "ppoly/homology.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace ppoly {

namespace {

bool rigid_against(const PolygonCtx& ctx, const std::vector<TaggedEdge>& set,
                   const TaggedEdge& e) {
  for (const TaggedEdge& a : set)
    if (ext1_dim(ctx, a, e) != 0 || ext1_dim(ctx, e, a) != 0)
      return false;
  return true;
}

} // namespace

bool is_cluster_tilting(const PolygonCtx& ctx, const TiltingCandidate& cand) {
  std::set<TaggedEdge> seen(cand.edges.begin(), cand.edges.end());
  if (seen.size() != cand.edges.size())
    throw std::invalid_argument("candidate edges must be distinct");
  for (const TaggedEdge& a : cand.edges)
    for (const TaggedEdge& b : cand.edges)
      if (ext1_dim(ctx, a, b) != 0)
        return false;
  // maximality: sides are implicit members and never obstruct
  for (const TaggedEdge& e : all_arcs(ctx))
    if (!seen.count(e) && rigid_against(ctx, cand.edges, e))
      return false;
  return true;
}

std::vector<std::vector<TaggedEdge>> maximal_rigid_sets(const PolygonCtx& ctx,
                                                        int bound) {
  if (ctx.n > bound)
    throw std::length_error("polygon too large for exhaustive search");
  std::vector<TaggedEdge> arcs = all_arcs(ctx);
  std::vector<std::vector<TaggedEdge>> out;
  std::vector<TaggedEdge> cur;
  auto rec = [&](auto&& self, size_t from) -> void {
    bool extended = false;
    for (size_t i = from; i < arcs.size(); i++)
      if (rigid_against(ctx, cur, arcs[i])) {
        extended = true;
        cur.push_back(arcs[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    if (!extended) {
      // maximal within the suffix; keep only globally maximal sets
      for (const TaggedEdge& e : arcs)
        if (std::find(cur.begin(), cur.end(), e) == cur.end() &&
            rigid_against(ctx, cur, e))
          return;
      out.push_back(cur);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool endo_degree_check(const TaggedTriangulation& tri) {
  return endo_degree_check(tri, build_ice_qp(tri));
}

bool endo_degree_check(const TaggedTriangulation& tri,
                       const IceQuiverWithPotential& qp) {
  const PolygonCtx& ctx = tri.ctx;
  int nv = static_cast<int>(qp.vertices.size());
  for (int i = 0; i < nv; i++)
    for (int j = 0; j < nv; j++) {
      const TaggedEdge& a = qp.vertices[i];
      const TaggedEdge& b = qp.vertices[j];
      SubmoduleDescriptor h = descriptor_for(ctx, a, b);
      auto d = min_path_theta(qp, i, j);
      if (!d)
        return false;
      // Hom between oppositely tagged puncture arcs vanishes; the
      // quiver still connects them, but only from degree 2n up
      int want = h.shape == Shape::Zero ? 2 * ctx.n : h.degree;
      if (*d != want)
        return false;
    }
  return true;
}

bool exchange_vs_mutation(const PolygonCtx& ctx, int samples, unsigned seed) {
  std::vector<TaggedTriangulation> tris = enumerate_all(ctx);
  std::vector<TaggedEdge> arcs = all_arcs(ctx);

  auto check_move = [&](const TaggedTriangulation& tri,
                        const TaggedEdge& arc) -> bool {
    TaggedEdge replacement = flip(tri, arc).second;
    std::vector<TaggedEdge> rest;
    for (const TaggedEdge& a : tri.arcs)
      if (!(a == arc))
        rest.push_back(a);
    for (const TaggedEdge& e : arcs) {
      if (e == arc || std::find(rest.begin(), rest.end(), e) != rest.end())
        continue;
      TiltingCandidate cand{rest};
      cand.edges.push_back(e);
      if (is_cluster_tilting(ctx, cand) != (e == replacement))
        return false;
    }
    return true;
  };

  if (samples < 0) {
    for (const TaggedTriangulation& tri : tris)
      for (const TaggedEdge& arc : tri.arcs)
        if (!check_move(tri, arc))
          return false;
    return true;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick_tri(0, tris.size() - 1);
  std::uniform_int_distribution<size_t> pick_arc(0, ctx.n - 1);
  for (int s = 0; s < samples; s++) {
    const TaggedTriangulation& tri = tris[pick_tri(rng)];
    if (!check_move(tri, tri.arcs[pick_arc(rng)]))
      return false;
  }
  return true;
}

} // namespace ppoly
