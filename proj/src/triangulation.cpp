#include "ppoly/triangulation.h"

#include <algorithm>
#include <map>
#include <set>

namespace ppoly {

static std::vector<TaggedEdge> canonical_sort(const PolygonCtx& ctx,
                                              std::vector<TaggedEdge> arcs) {
  // Sort by position in the canonical all_arcs order.
  std::vector<TaggedEdge> order = all_arcs(ctx);
  std::map<TaggedEdge, int> pos;
  for (size_t i = 0; i < order.size(); i++)
    pos[order[i]] = static_cast<int>(i);
  std::sort(arcs.begin(), arcs.end(),
            [&](const TaggedEdge& a, const TaggedEdge& b) {
              return pos.at(a) < pos.at(b);
            });
  return arcs;
}

TaggedTriangulation validate(const PolygonCtx& ctx,
                             std::vector<TaggedEdge> arcs) {
  for (const TaggedEdge& a : arcs)
    if (a.kind == EdgeKind::Side)
      throw std::invalid_argument("sides are implicit, pass tagged arcs only");
  arcs = canonical_sort(ctx, arcs);
  for (size_t i = 0; i + 1 < arcs.size(); i++)
    if (arcs[i] == arcs[i + 1])
      throw std::invalid_argument("duplicate arc " + edge_to_string(arcs[i]));
  for (size_t i = 0; i < arcs.size(); i++)
    for (size_t j = i + 1; j < arcs.size(); j++)
      if (!is_compatible(ctx, arcs[i], arcs[j]))
        throw std::invalid_argument("incompatible pair " +
                                    edge_to_string(arcs[i]) + ", " +
                                    edge_to_string(arcs[j]));
  for (const TaggedEdge& cand : all_arcs(ctx)) {
    if (std::find(arcs.begin(), arcs.end(), cand) != arcs.end())
      continue;
    bool ok = true;
    for (const TaggedEdge& a : arcs)
      if (!is_compatible(ctx, cand, a)) {
        ok = false;
        break;
      }
    if (ok)
      throw std::invalid_argument("not maximal, missing e.g. " +
                                  edge_to_string(cand));
  }
  return TaggedTriangulation{ctx, std::move(arcs)};
}

std::vector<TaggedTriangulation> enumerate_all(const PolygonCtx& ctx,
                                               int bound) {
  if (ctx.n > bound)
    throw std::length_error("enumeration bound exceeded");
  std::vector<TaggedEdge> arcs = all_arcs(ctx);
  std::vector<TaggedTriangulation> out;
  std::vector<TaggedEdge> stack;

  // Backtracking in canonical order; a complete set is kept iff no
  // arc outside it (in any position) is compatible with all of it.
  auto maximal = [&]() {
    for (const TaggedEdge& cand : arcs) {
      if (std::find(stack.begin(), stack.end(), cand) != stack.end())
        continue;
      bool ok = true;
      for (const TaggedEdge& a : stack)
        if (!is_compatible(ctx, cand, a)) {
          ok = false;
          break;
        }
      if (ok)
        return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, size_t from) -> void {
    if (maximal()) {
      out.push_back(TaggedTriangulation{ctx, stack});
      return;
    }
    for (size_t i = from; i < arcs.size(); i++) {
      bool ok = true;
      for (const TaggedEdge& a : stack)
        if (!is_compatible(ctx, arcs[i], a)) {
          ok = false;
          break;
        }
      if (!ok)
        continue;
      stack.push_back(arcs[i]);
      self(self, i + 1);
      stack.pop_back();
    }
  };
  rec(rec, 0);

  // Backtracking can reach the same maximal set only once (sets are
  // produced in canonical order), but a non-maximal prefix bails out
  // through the maximality test, so no deduplication is needed.
  return out;
}

std::pair<TaggedTriangulation, TaggedEdge> flip(const TaggedTriangulation& tri,
                                                const TaggedEdge& arc) {
  const PolygonCtx& ctx = tri.ctx;
  auto it = std::find(tri.arcs.begin(), tri.arcs.end(), arc);
  if (it == tri.arcs.end())
    throw std::invalid_argument("arc not in triangulation");
  std::vector<TaggedEdge> rest;
  for (const TaggedEdge& a : tri.arcs)
    if (!(a == arc))
      rest.push_back(a);
  std::vector<TaggedEdge> completions;
  for (const TaggedEdge& cand : all_arcs(ctx)) {
    if (cand == arc ||
        std::find(rest.begin(), rest.end(), cand) != rest.end())
      continue;
    bool ok = true;
    for (const TaggedEdge& a : rest)
      if (!is_compatible(ctx, cand, a)) {
        ok = false;
        break;
      }
    if (ok)
      completions.push_back(cand);
  }
  if (completions.empty())
    throw std::logic_error("flip found no replacement arc");
  if (completions.size() > 1)
    throw std::logic_error("flip found several replacement arcs");
  rest.push_back(completions[0]);
  return {validate(ctx, std::move(rest)), completions[0]};
}

ExchangeGraph exchange_graph(const PolygonCtx& ctx, int bound) {
  ExchangeGraph g;
  g.vertices = enumerate_all(ctx, bound);
  std::map<std::vector<TaggedEdge>, int> index;
  for (size_t i = 0; i < g.vertices.size(); i++)
    index[g.vertices[i].arcs] = static_cast<int>(i);
  std::set<std::pair<int, int>> edges;
  for (size_t i = 0; i < g.vertices.size(); i++)
    for (const TaggedEdge& a : g.vertices[i].arcs) {
      auto [other, repl] = flip(g.vertices[i], a);
      (void)repl;
      int j = index.at(other.arcs);
      int lo = static_cast<int>(i) < j ? static_cast<int>(i) : j;
      int hi = static_cast<int>(i) < j ? j : static_cast<int>(i);
      edges.insert({lo, hi});
    }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

bool is_connected(const ExchangeGraph& g) {
  if (g.vertices.empty())
    return true;
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<bool> seen(g.vertices.size(), false);
  std::vector<int> todo{0};
  seen[0] = true;
  size_t count = 1;
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        count++;
        todo.push_back(w);
      }
  }
  return count == g.vertices.size();
}

} // namespace ppoly
