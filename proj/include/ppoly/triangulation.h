#ifndef PPOLY_TRIANGULATION_H
#define PPOLY_TRIANGULATION_H

/**
 * Tagged triangulations of the once-punctured polygon: validation,
 * exhaustive enumeration, flips and the exchange graph.
 *
 * A triangulation stores only its n tagged arcs in canonical order;
 * the polygon sides are implicit members of every triangulation.
 */

#include "ppoly/polygon.h"

#include <utility>

namespace ppoly {

struct TaggedTriangulation {
  PolygonCtx ctx;
  std::vector<TaggedEdge> arcs; // canonical order, no sides

  bool operator==(const TaggedTriangulation& o) const {
    return ctx.n == o.ctx.n && arcs == o.arcs;
  }
};

// Checks pairwise compatibility and maximality and returns the
// canonicalized triangulation. Throws std::invalid_argument with a
// message naming the offending pair / witness arc / duplicate.
TaggedTriangulation validate(const PolygonCtx& ctx,
                             std::vector<TaggedEdge> arcs);

// All tagged triangulations in a deterministic order.
// Throws std::length_error beyond the bound.
std::vector<TaggedTriangulation> enumerate_all(const PolygonCtx& ctx,
                                               int bound = 8);

// Replaces one arc by the unique other arc completing a triangulation.
// Returns the new triangulation together with the replacement arc.
std::pair<TaggedTriangulation, TaggedEdge> flip(const TaggedTriangulation& tri,
                                                const TaggedEdge& arc);

struct ExchangeGraph {
  std::vector<TaggedTriangulation> vertices;
  std::vector<std::pair<int, int>> edges; // index pairs, i < j
};

ExchangeGraph exchange_graph(const PolygonCtx& ctx, int bound = 8);

bool is_connected(const ExchangeGraph& g);

} // namespace ppoly

#endif
