#ifndef PPOLY_HOMOLOGY_H
#define PPOLY_HOMOLOGY_H

/**
 * Closed-form homological data of Cohen-Macaulay modules over the
 * order Lambda, indexed by tagged edges: Hom, stable Hom, Ext^1, the
 * Auslander-Reiten translation and sequences, and the functors nu and
 * Omega reduced modulo n.
 */

#include "ppoly/order.h"

namespace ppoly {

// A_{a,b} recomputed as the intersection over all sides i of
// Hom_{R'}(A_{i,a}, A_{i,b}) and asserted equal to the direct formula.
SubmoduleDescriptor hom_module(const PolygonCtx& ctx, const TaggedEdge& a,
                               const TaggedEdge& b);

struct StableHom {
  int degree;  // theta-length of a, b
  int epsilon; // number of copies of u^degree R'/(X,Y)

  bool operator==(const StableHom&) const = default;
};

// Stable Hom(M_a, M_b) = u^l (R'/(X,Y))^epsilon.
StableHom stable_hom(const PolygonCtx& ctx, const TaggedEdge& a,
                     const TaggedEdge& b);

// AR translation on non-projectives: (i,j) -> (i-1,j-1), swapping the
// puncture tags. Sides are projective-injective and rejected.
TaggedEdge tau(const PolygonCtx& ctx, const TaggedEdge& a);
TaggedEdge tau_inv(const PolygonCtx& ctx, const TaggedEdge& a);

// nu shifts every index by -2 keeping the kind; defined on all edges.
TaggedEdge nu(const PolygonCtx& ctx, const TaggedEdge& a);

// Omega on non-projectives: (i,j) -> (i+1,j+1), swapping tags on
// puncture arcs; tau = Omega composed with nu.
TaggedEdge omega(const PolygonCtx& ctx, const TaggedEdge& a);

// dim Ext^1(M_a, M_b), computed by AR duality as the stable epsilon of
// (b, tau a) and cross-checked against the explicit case table.
int ext1_dim(const PolygonCtx& ctx, const TaggedEdge& a, const TaggedEdge& b);

struct ARSequence {
  TaggedEdge left;
  std::vector<TaggedEdge> middle; // canonical order, forks expanded
  TaggedEdge right;
};

// The AR sequence ending... starting at a non-projective left term a.
ARSequence ar_sequence(const PolygonCtx& ctx, const TaggedEdge& a);

// Middle-term multisets of a basis of Ext^1(M_a, M_b); the list length
// equals ext1_dim(a, b). The sequences run 0 -> b -> middle -> a -> 0.
std::vector<std::vector<TaggedEdge>>
extension_list(const PolygonCtx& ctx, const TaggedEdge& a,
               const TaggedEdge& b);

} // namespace ppoly

#endif
