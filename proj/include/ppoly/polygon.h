#ifndef PPOLY_POLYGON_H
#define PPOLY_POLYGON_H

/**
 * Cyclic combinatorics of the once-punctured n-gon: vertices, cyclic
 * intervals, tagged edges, theta-lengths, compatibility and crossing
 * numbers.
 *
 * Vertices are 1-based integers modulo n, always stored in [1, n].
 * Edges are sides (P_i, P_{i+1}), winding arcs (P_r, P_s) going
 * counter-clockwise around the puncture, and puncture arcs (P_r, *)
 * plain or (P_r, bowtie) notched. Puncture arcs store a2 = a1.
 */

#include <stdexcept>
#include <string>
#include <vector>

namespace ppoly {

struct PolygonCtx {
  int n;

  explicit PolygonCtx(int n_) : n(n_) {
    if (n < 3)
      throw std::invalid_argument("polygon needs n >= 3");
  }
};

enum class EdgeKind { Side, Arc, Plain, Notched };

struct TaggedEdge {
  EdgeKind kind;
  int a1;
  int a2; // a1 + 1 mod n for sides, second endpoint for arcs, a1 otherwise

  bool operator==(const TaggedEdge&) const = default;
  auto operator<=>(const TaggedEdge&) const = default;
};

// Maps any integer to its representative in [1, n].
int normalize(const PolygonCtx& ctx, long long v);

TaggedEdge make_side(const PolygonCtx& ctx, int a1);
TaggedEdge make_arc(const PolygonCtx& ctx, int a1, int a2);
TaggedEdge make_plain(const PolygonCtx& ctx, int a1);
TaggedEdge make_notched(const PolygonCtx& ctx, int a1);

bool is_puncture_incident(const TaggedEdge& e);

// d(r, s) = s - r if s >= r, else s - r + n.
int cyclic_distance(const PolygonCtx& ctx, int r, int s);

enum class IntervalKind { Closed, Open, LeftOpen, RightOpen };

// Membership in the cyclic intervals [r,s], ]r,s[, ]r,s], [r,s[ where
// ]r,s[ = [1,n] minus [s,r]; in particular ]r,r[ is everything but r,
// [r,r] = {r}, and ]r,r] = [r,r[ = the empty set.
bool interval_contains(const PolygonCtx& ctx, IntervalKind kind, int r, int s,
                       int x);

// The integer length l^theta_{a,b}; tags do not matter.
int theta_length(const PolygonCtx& ctx, const TaggedEdge& a,
                 const TaggedEdge& b);

// (l_{a,b} + l_{b,c} - l_{a,c}) / (2n), always a non-negative integer.
int theta_defect(const PolygonCtx& ctx, const TaggedEdge& a,
                 const TaggedEdge& b, const TaggedEdge& c);

// Angle index of the vector of edge a, in units of pi/n modulo 2n:
// a1 + a2 + n/2-ish offsets folded into an integer that is only ever
// used through differences mod 2n.
int angle_index_twice(const PolygonCtx& ctx, const TaggedEdge& a);

// The relation a |- b for edges not incident to the puncture.
bool vdash(const PolygonCtx& ctx, const TaggedEdge& a, const TaggedEdge& b);

// Minimal geometric intersection number of two tagged arcs (not sides).
// Plain(i) and Notched(j) cross once for i != j by convention.
int crossing_number(const PolygonCtx& ctx, const TaggedEdge& a,
                    const TaggedEdge& b);

// Sides are compatible with everything; two tagged arcs are compatible
// iff they do not cross.
bool is_compatible(const PolygonCtx& ctx, const TaggedEdge& a,
                   const TaggedEdge& b);

// Canonical order: sides by a1, winding arcs by (a1, d(a1,a2)),
// then Plain(1..n), then Notched(1..n). Count is n^2 + n.
std::vector<TaggedEdge> all_edges(const PolygonCtx& ctx);

// Winding and puncture arcs only (the edges eligible for triangulations).
std::vector<TaggedEdge> all_arcs(const PolygonCtx& ctx);

std::string edge_to_string(const TaggedEdge& e);

} // namespace ppoly

#endif
