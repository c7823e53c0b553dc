#ifndef PPOLY_CLUSTER_H
#define PPOLY_CLUSTER_H

/**
 * Cluster-tilting recognition for sums of the modules M_a, consistency
 * of the endomorphism degrees with the ice quiver, and reconciliation
 * of the flip graph with summand mutation.
 */

#include "ppoly/quiver.h"
#include "ppoly/triangulation.h"

namespace ppoly {

struct TiltingCandidate {
  std::vector<TaggedEdge> edges; // sides are implicit members
};

// True iff the candidate is rigid (all pairwise Ext^1 vanish) and no
// arc outside the set can be added keeping rigidity. Duplicates are
// rejected with std::invalid_argument.
bool is_cluster_tilting(const PolygonCtx& ctx, const TiltingCandidate& cand);

// All maximal rigid arc sets, found by backtracking over the canonical
// arc order with Ext^1 pruning; canonical order within and across sets.
std::vector<std::vector<TaggedEdge>> maximal_rigid_sets(const PolygonCtx& ctx,
                                                        int bound = 8);

// Checks, for every ordered pair of summands of T_sigma (sides
// included), that the minimal path degree in the ice quiver equals the
// degree of the Hom module; pairs with vanishing Hom must instead
// realize their first nonzero degree 2n.
bool endo_degree_check(const TaggedTriangulation& tri);
bool endo_degree_check(const TaggedTriangulation& tri,
                       const IceQuiverWithPotential& qp);

// For every triangulation and every arc, the flip replacement is the
// unique other arc that keeps the set cluster-tilting. Exhaustive when
// samples < 0, otherwise that many seeded random (triangulation, arc)
// moves.
bool exchange_vs_mutation(const PolygonCtx& ctx, int samples = -1,
                          unsigned seed = 0);

} // namespace ppoly

#endif
