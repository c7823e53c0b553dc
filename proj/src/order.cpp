#include "ppoly/order.h"

#include <algorithm>
#include <stdexcept>

namespace ppoly {

SubmoduleDescriptor make_desc(Shape s, int degree) {
  if (s == Shape::Zero)
    return {Shape::Zero, 0};
  return {s, degree};
}

SubmoduleDescriptor desc_zero() { return {Shape::Zero, 0}; }

std::string desc_to_string(const SubmoduleDescriptor& d) {
  switch (d.shape) {
  case Shape::Zero:
    return "0";
  case Shape::U:
    return "U(" + std::to_string(d.degree) + ")";
  case Shape::V:
    return "V(" + std::to_string(d.degree) + ")";
  case Shape::W:
    return "W(" + std::to_string(d.degree) + ")";
  default:
    return "UV(" + std::to_string(d.degree) + ")";
  }
}

SubmoduleDescriptor descriptor_for(const PolygonCtx& ctx, const TaggedEdge& a,
                                   const TaggedEdge& b) {
  int l = theta_length(ctx, a, b);
  bool pa = is_puncture_incident(a), pb = is_puncture_incident(b);
  if (pa && pb && a.kind != b.kind)
    return desc_zero();
  if ((pa && a.kind == EdgeKind::Plain) || (pb && b.kind == EdgeKind::Plain))
    return make_desc(Shape::V, l);
  if ((pa && a.kind == EdgeKind::Notched) ||
      (pb && b.kind == EdgeKind::Notched))
    return make_desc(Shape::W, l);
  if (vdash(ctx, a, b))
    return make_desc(Shape::UV, l);
  return make_desc(Shape::U, l);
}

SubmoduleDescriptor hom_descriptor(const PolygonCtx& ctx,
                                   const SubmoduleDescriptor& src,
                                   const SubmoduleDescriptor& dst) {
  if (src.shape == Shape::Zero || dst.shape == Shape::Zero)
    return desc_zero();
  int d = dst.degree - src.degree;
  int n2 = 2 * ctx.n;
  switch (src.shape) {
  case Shape::U:
    return make_desc(dst.shape, d);
  case Shape::V:
    switch (dst.shape) {
    case Shape::V:
    case Shape::UV:
      return make_desc(Shape::V, d);
    case Shape::W:
      return desc_zero();
    default: // U
      return make_desc(Shape::V, d + n2);
    }
  case Shape::W:
    switch (dst.shape) {
    case Shape::W:
    case Shape::UV:
      return make_desc(Shape::W, d);
    case Shape::V:
      return desc_zero();
    default: // U
      return make_desc(Shape::W, d + n2);
    }
  default: // UV
    switch (dst.shape) {
    case Shape::U:
      return make_desc(Shape::UV, d + n2);
    case Shape::V:
      return make_desc(Shape::V, d);
    case Shape::W:
      return make_desc(Shape::W, d);
    default: // UV
      return make_desc(Shape::UV, d);
    }
  }
}

SubmoduleDescriptor descriptor_mul(const SubmoduleDescriptor& f,
                                   const SubmoduleDescriptor& g) {
  if (f.shape == Shape::Zero || g.shape == Shape::Zero)
    return desc_zero();
  int d = f.degree + g.degree;
  auto shape_mul = [](Shape a, Shape b) -> Shape {
    if (a == Shape::U)
      return b;
    if (b == Shape::U)
      return a;
    if (a == Shape::UV)
      return b; // UV * UV = UV, UV * V = V, UV * W = W
    if (b == Shape::UV)
      return a;
    if (a == b)
      return a; // V * V = V, W * W = W
    return Shape::Zero; // V * W: v(u - v) = 0
  };
  return make_desc(shape_mul(f.shape, g.shape), d);
}

namespace {

// per-degree homogeneous component of a descriptor inside the
// two-dimensional space spanned by u^d and u^{d-1}v
enum class Comp { N, Uonly, Vline, Wline, Full };

Comp comp_at(int n, const SubmoduleDescriptor& d, int deg) {
  if (d.shape == Shape::Zero)
    return Comp::N;
  int n2 = 2 * n;
  int diff = deg - d.degree;
  if (diff < 0 || diff % n2 != 0)
    return Comp::N;
  switch (d.shape) {
  case Shape::U:
    return diff == 0 ? Comp::Uonly : Comp::Full;
  case Shape::V:
    return Comp::Vline;
  case Shape::W:
    return Comp::Wline;
  default: // UV
    return Comp::Full;
  }
}

int comp_dim(Comp c) {
  if (c == Comp::N)
    return 0;
  return c == Comp::Full ? 2 : 1;
}

bool comp_contains(Comp big, Comp small) {
  if (small == Comp::N || big == Comp::Full)
    return true;
  return big == small;
}

Comp comp_intersect(Comp a, Comp b) {
  if (a == Comp::Full)
    return b;
  if (b == Comp::Full)
    return a;
  if (a == b)
    return a;
  return Comp::N; // distinct lines or something with N
}

} // namespace

int graded_dim(const PolygonCtx& ctx, const SubmoduleDescriptor& d, int deg) {
  return comp_dim(comp_at(ctx.n, d, deg));
}

bool descriptor_contains(const PolygonCtx& ctx,
                         const SubmoduleDescriptor& big,
                         const SubmoduleDescriptor& small) {
  if (small.shape == Shape::Zero)
    return true;
  if (big.shape == Shape::Zero)
    return false;
  // both component patterns are periodic once past both starting
  // degrees, so a window of two extra periods decides containment
  int lo = std::min(big.degree, small.degree);
  int hi = std::max(big.degree, small.degree) + 4 * ctx.n;
  for (int deg = lo; deg <= hi; deg++)
    if (!comp_contains(comp_at(ctx.n, big, deg), comp_at(ctx.n, small, deg)))
      return false;
  return true;
}

SubmoduleDescriptor descriptor_intersect(const PolygonCtx& ctx,
                                         const SubmoduleDescriptor& a,
                                         const SubmoduleDescriptor& b) {
  if (a.shape == Shape::Zero || b.shape == Shape::Zero)
    return desc_zero();
  int n2 = 2 * ctx.n;
  int lo = std::min(a.degree, b.degree);
  int hi = std::max(a.degree, b.degree) + 6 * ctx.n;
  int first = hi + 1;
  Comp first_comp = Comp::N;
  for (int deg = lo; deg <= hi; deg++) {
    Comp c = comp_intersect(comp_at(ctx.n, a, deg), comp_at(ctx.n, b, deg));
    if (c != Comp::N) {
      first = deg;
      first_comp = c;
      break;
    }
  }
  if (first > hi)
    return desc_zero();
  SubmoduleDescriptor result;
  switch (first_comp) {
  case Comp::Vline:
    result = make_desc(Shape::V, first);
    break;
  case Comp::Wline:
    result = make_desc(Shape::W, first);
    break;
  case Comp::Full:
    result = make_desc(Shape::UV, first);
    break;
  default: // Uonly
    result = make_desc(Shape::U, first);
    break;
  }
  // the pattern of an intersection of two periodic patterns is itself
  // one of the five shapes; verify over the stabilized window
  for (int deg = lo; deg <= hi + n2; deg++) {
    Comp c = comp_intersect(comp_at(ctx.n, a, deg), comp_at(ctx.n, b, deg));
    if (c != comp_at(ctx.n, result, deg))
      throw std::logic_error("intersection does not fit the shape table");
  }
  return result;
}

OrderMatrix lambda_matrix(const PolygonCtx& ctx) {
  int n = ctx.n;
  OrderMatrix m{n, std::vector<SubmoduleDescriptor>(n * n)};
  for (int i = 1; i <= n; i++)
    for (int j = 1; j <= n; j++) {
      int d = 2 * cyclic_distance(ctx, i, j);
      bool sub = (j == normalize(ctx, i - 1));
      m.at(i, j) = make_desc(sub ? Shape::UV : Shape::U, d);
    }
  return m;
}

OrderMatrix lambda_matrix_x(const PolygonCtx& ctx) {
  int n = ctx.n;
  OrderMatrix m{n, std::vector<SubmoduleDescriptor>(n * n)};
  for (int i = 1; i <= n; i++)
    for (int j = 1; j <= n; j++) {
      int d = i > j ? 2 * n : 0;
      bool sub = (j == normalize(ctx, i - 1));
      m.at(i, j) = make_desc(sub ? Shape::UV : Shape::U, d);
    }
  return m;
}

ModuleColumn module_column(const PolygonCtx& ctx, const TaggedEdge& a) {
  ModuleColumn col{a, {}};
  for (int i = 1; i <= ctx.n; i++)
    col.entries.push_back(descriptor_for(ctx, make_side(ctx, i), a));
  return col;
}

SBracketResult s_bracket_n(const PolygonCtx& ctx, bool tamper) {
  int n = ctx.n;
  // graded pieces of K[x,y]/(x^{n-1}y - y^2) over R', with x = u^2 and
  // y = u^{2n-3}v: piece i is R'x^i for i <= n-2 and (1, X^{-1}Y)x^{n-1}
  // for i = n-1
  std::vector<SubmoduleDescriptor> piece(n);
  for (int i = 0; i <= n - 2; i++)
    piece[i] = make_desc(Shape::U, 2 * i);
  piece[n - 1] = make_desc(Shape::UV, 2 * (n - 1));
  if (tamper)
    piece[1].degree += 2;

  OrderMatrix m{n, std::vector<SubmoduleDescriptor>(n * n)};
  for (int i = 1; i <= n; i++)
    for (int j = 1; j <= n; j++) {
      SubmoduleDescriptor e = piece[((j - i) % n + n) % n];
      // conjugation by B = diag(x^0, ..., x^{n-1})
      if (e.shape != Shape::Zero)
        e.degree += 2 * ((i - 1) - (j - 1));
      m.at(i, j) = e;
    }

  bool cert = (m == lambda_matrix_x(ctx));
  // the theta form agrees after conjugation by diag(u^{2d(1,i)})
  OrderMatrix theta = lambda_matrix(ctx);
  for (int i = 1; i <= n; i++)
    for (int j = 1; j <= n; j++) {
      SubmoduleDescriptor e = theta.at(i, j);
      if (e.shape != Shape::Zero)
        e.degree += 2 * (cyclic_distance(ctx, 1, i) -
                         cyclic_distance(ctx, 1, j));
      if (!(e == m.at(i, j)))
        cert = false;
    }
  return {std::move(m), cert};
}

} // namespace ppoly
