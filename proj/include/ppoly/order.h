#ifndef PPOLY_ORDER_H
#define PPOLY_ORDER_H

/**
 * Symbolic arithmetic of graded R'-submodules of the big Laurent ring
 * K[u^{+-1}, v]/(vu - v^2), where R' = K[X,Y]/(YX - Y^2) sits inside
 * via X = u^{2n} and Y = u^{2n-1}v.
 *
 * Every submodule this library needs has one of five shapes:
 *   U(k)  = u^k R'                      (free of rank one)
 *   V(k)  = u^{k-1} v R'
 *   W(k)  = u^{k-1} (u - v) R'
 *   UV(k) = u^k R' + v^k R'
 *   Zero
 * The order Lambda, the modules M_a and all Hom-modules A_{a,b} are
 * expressed in these terms.
 */

#include "ppoly/polygon.h"

namespace ppoly {

enum class Shape { Zero, U, V, W, UV };

struct SubmoduleDescriptor {
  Shape shape;
  int degree; // always 0 for Zero

  bool operator==(const SubmoduleDescriptor&) const = default;
};

SubmoduleDescriptor make_desc(Shape s, int degree);
SubmoduleDescriptor desc_zero();
std::string desc_to_string(const SubmoduleDescriptor& d);

// A_{a,b}: Zero if both ends are puncture arcs with different tags,
// V / W if a plain / notched tag is involved, UV if both untagged and
// a |- b, else U; the degree is the theta-length.
SubmoduleDescriptor descriptor_for(const PolygonCtx& ctx, const TaggedEdge& a,
                                   const TaggedEdge& b);

// Hom_{R'}(src, dst) as a descriptor.
SubmoduleDescriptor hom_descriptor(const PolygonCtx& ctx,
                                   const SubmoduleDescriptor& src,
                                   const SubmoduleDescriptor& dst);

// Product submodule; shapes multiply via the monomial relations
// (v u = v^2, v(u - v) = 0) and degrees add.
SubmoduleDescriptor descriptor_mul(const SubmoduleDescriptor& f,
                                   const SubmoduleDescriptor& g);

// Dimension of the homogeneous component in the given degree.
int graded_dim(const PolygonCtx& ctx, const SubmoduleDescriptor& d, int deg);

// Set containment small <= big, decided degreewise.
bool descriptor_contains(const PolygonCtx& ctx,
                         const SubmoduleDescriptor& big,
                         const SubmoduleDescriptor& small);

// Intersection, recognized back into one of the five shapes.
SubmoduleDescriptor descriptor_intersect(const PolygonCtx& ctx,
                                         const SubmoduleDescriptor& a,
                                         const SubmoduleDescriptor& b);

struct OrderMatrix {
  int n;
  std::vector<SubmoduleDescriptor> entries; // row major

  SubmoduleDescriptor& at(int i, int j) { return entries[(i - 1) * n + j - 1]; }
  const SubmoduleDescriptor& at(int i, int j) const {
    return entries[(i - 1) * n + j - 1];
  }
  bool operator==(const OrderMatrix&) const = default;
};

// Lambda in theta-coordinates: diagonal U(0), entry (i, i-1) is
// UV(2(n-1)), every other entry U(2d(i,j)).
OrderMatrix lambda_matrix(const PolygonCtx& ctx);

// Lambda in X-coordinates: entry (i,j) = U(2n delta_{i>j}), turning
// into UV on the cyclic subdiagonal j = i-1 mod n. Related to the
// theta form by conjugation with diag(u^{2d(1,i)}).
OrderMatrix lambda_matrix_x(const PolygonCtx& ctx);

struct ModuleColumn {
  TaggedEdge edge;
  std::vector<SubmoduleDescriptor> entries; // entry i-1 is A_{side_i, edge}
};

ModuleColumn module_column(const PolygonCtx& ctx, const TaggedEdge& a);

struct SBracketResult {
  OrderMatrix matrix; // the conjugated matrix B S^[n] B^{-1}
  bool certificate;   // equals both Lambda presentations
};

// Builds the matrix ring of the Z/nZ-graded algebra K[x,y]/(x^{n-1}y -
// y^2) from its graded pieces, conjugates by diag(x^i), and certifies
// entrywise equality with Lambda in both coordinate systems. Tampering
// perturbs one graded piece to exercise the detector.
SBracketResult s_bracket_n(const PolygonCtx& ctx, bool tamper = false);

} // namespace ppoly

#endif
