#ifndef PPOLY_ORACLE_H
#define PPOLY_ORACLE_H

/**
 * Independent brute-force verifiers for the closed formulas: graded
 * Hom / stable Hom / Ext^1 dimensions recomputed by plain linear
 * algebra over a prime field on truncated modules, syzygies from
 * explicit projective covers, crossing counts in the universal cover,
 * and an exhaustive maximal-compatible-set search.
 */

#include "ppoly/order.h"

#include <map>

namespace ppoly {

// R' truncated at X^t: basis X^m and X^m Y for m < t, with Y^2 = X Y
// and X^t = 0. Elements are coefficient vectors of length 2t over F_p
// (X^m at slot m, X^m Y at slot t + m).
struct TruncatedRing {
  int t;
  long long p;

  TruncatedRing(int t_, long long p_);

  std::vector<long long> zero() const;
  std::vector<long long> x_power(int m) const; // X^m, the zero element for m >= t
  std::vector<long long> y() const;            // X^0 Y
  std::vector<long long> mul(const std::vector<long long>& f,
                             const std::vector<long long>& g) const;

  // Exhaustive associativity and commutativity check on the basis.
  bool check_structure() const;
};

// A graded module over the order held degree by degree. Component i
// (1-based) maps a degree e to a list of basis rows; each row lives in
// an ambient space of `blocks` monomial planes, where plane coordinates
// (c_u, c_v) stand for c_u u^e + c_v u^{e-1} v in the big Laurent ring.
struct TruncatedModule {
  int n = 0;
  long long p = 0;
  int blocks = 1;
  int max_degree = 0;
  std::vector<std::map<int, std::vector<std::vector<long long>>>> comps;
};

// The column module M_a filled up to degree 2nt.
TruncatedModule truncated_column(const PolygonCtx& ctx, const TaggedEdge& a,
                                 int t, long long p = 32003);

// Checks the generator relations on the module within the safety
// margin: the n-step alpha cycle acts as X, the n-step beta cycle as
// Y^{n-1} (multiplied out in the truncated ring), and both mixed
// two-step composites as Y.
bool module_relations_hold(const PolygonCtx& ctx, const TruncatedModule& m,
                           const TruncatedRing& ring);

// Dimensions of degree-d module maps M_a -> M_b for 0 <= d <= deg_bound,
// found by solving the commutation constraints with the alpha and beta
// actions. Only nonzero dimensions are present in the map. Requires
// deg_bound < 2n(t-2) to stay clear of truncation artifacts.
std::map<int, int> oracle_hom_graded(const PolygonCtx& ctx,
                                     const TaggedEdge& a, const TaggedEdge& b,
                                     int t, int deg_bound,
                                     long long p = 32003);

struct StableExtResult {
  std::map<int, int> stable; // degree -> dimension after quotienting by
                             // maps through projectives; zeros omitted
  int ext1 = 0;              // total dimension of Ext^1(M_a, M_b)
};

// Stable Hom via the span of all composites through the projective
// columns, and Ext^1 as the cokernel of Hom(P, M_b) -> Hom(K, M_b) for
// the computed projective cover 0 -> K -> P -> M_a -> 0.
StableExtResult oracle_stable_and_ext(const PolygonCtx& ctx,
                                      const TaggedEdge& a, const TaggedEdge& b,
                                      int t, long long p = 32003);

// Computes the projective cover kernel of M_a numerically and compares
// its per-component graded dimensions with the column of the syzygy
// edge, up to one uniform degree offset.
bool oracle_syzygy_matches(const PolygonCtx& ctx, const TaggedEdge& a, int t,
                           long long p = 32003);

// Minimal intersection number counted in the universal cover: winding
// arcs lift to the chords (a1 + kn, a1 + kn + d(a1,a2)), puncture arcs
// to rays at a1 + kn, and crossings are strict interleavings over
// k in {-1, 0, 1}. Opposite tags at distinct vertices cross once.
int cover_crossing(const PolygonCtx& ctx, const TaggedEdge& a,
                   const TaggedEdge& b);

// Number of maximal pairwise-compatible arc sets, found by a direct
// clique search over the cover_crossing compatibility graph. n <= 6.
long long oracle_enumerate_maximal_compatible(const PolygonCtx& ctx);

} // namespace ppoly

#endif
