#ifndef PPOLY_QUIVER_H
#define PPOLY_QUIVER_H

/**
 * Ice quivers with potential attached to a tagged triangulation.
 *
 * Vertices are the edges of the triangulation (arcs plus all sides,
 * sides frozen). Internal arrows connect edges that are angularly
 * consecutive around a common endpoint, external arrows close the fan
 * of edges around each polygon vertex. The potential is the signed sum
 * of clockwise triangle cycles, anticlockwise external cycles and the
 * anticlockwise cycle around the puncture, with the special rules for
 * the configuration where the puncture is enclosed by a digon carrying
 * one plain and one notched arc.
 */

#include "ppoly/triangulation.h"

#include <optional>

namespace ppoly {

struct Arrow {
  int source; // vertex index
  int target; // vertex index
  bool external;
  int theta;  // theta-length of the arrow
  int at;     // polygon vertex the arrow winds around, 0 for the puncture

  bool operator==(const Arrow&) const = default;
};

struct PotentialTerm {
  int sign;                // +1 or -1
  std::vector<int> arrows; // arrow indices forming a cycle, in order
};

struct IceQuiverWithPotential {
  PolygonCtx ctx;
  std::vector<TaggedEdge> vertices; // sides first, then the arcs
  std::vector<Arrow> arrows;
  std::vector<PotentialTerm> potential;
  std::vector<int> frozen; // indices of the side vertices

  int vertex_index(const TaggedEdge& e) const;
};

// Q'_sigma with W'_sigma: every external cycle present.
IceQuiverWithPotential build_full_qp(const TaggedTriangulation& tri);

// Q_sigma with W_sigma: external arrows at polygon vertices with no
// incident tagged arc are removed, together with the potential terms
// that used them.
IceQuiverWithPotential build_ice_qp(const TaggedTriangulation& tri);

// True iff every potential term has total theta-length exactly 2n.
bool check_potential_homogeneous(const IceQuiverWithPotential& qp);

// Minimal total theta-length over directed paths a -> b, nullopt if
// unreachable.
std::optional<int> min_path_theta(const IceQuiverWithPotential& qp, int a,
                                  int b);

} // namespace ppoly

#endif
