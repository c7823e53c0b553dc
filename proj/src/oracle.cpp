#include "ppoly/oracle.h"

#include "ppoly/homology.h"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <stdexcept>
#include <utility>

namespace ppoly {

namespace {

long long md(long long v, long long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

long long pw(long long b, long long e, long long p) {
  long long r = 1;
  b = md(b, p);
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long long inv_mod(long long a, long long p) { return pw(a, p - 2, p); }

// row-reduce in place, returning the pivot columns
std::vector<int> rref(std::vector<std::vector<long long>>& rows, int cols,
                      long long p) {
  std::vector<int> pivcol;
  size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); c++) {
    size_t sel = rows.size();
    for (size_t x = r; x < rows.size(); x++)
      if (rows[x][c] % p != 0) {
        sel = x;
        break;
      }
    if (sel == rows.size())
      continue;
    std::swap(rows[r], rows[sel]);
    long long f = inv_mod(rows[r][c], p);
    for (int j = 0; j < cols; j++)
      rows[r][j] = md(rows[r][j] * f, p);
    for (size_t x = 0; x < rows.size(); x++) {
      if (x == r || rows[x][c] % p == 0)
        continue;
      long long g = rows[x][c] % p;
      for (int j = 0; j < cols; j++)
        rows[x][j] = md(rows[x][j] - g * rows[r][j], p);
    }
    pivcol.push_back(c);
    r++;
  }
  return pivcol;
}

int rank_of(std::vector<std::vector<long long>> rows, int cols, long long p) {
  return static_cast<int>(rref(rows, cols, p).size());
}

std::vector<std::vector<long long>>
nullspace(std::vector<std::vector<long long>> rows, int cols, long long p) {
  std::vector<int> pivcol = rref(rows, cols, p);
  std::vector<bool> is_piv(cols, false);
  for (int c : pivcol)
    is_piv[c] = true;
  std::vector<std::vector<long long>> out;
  for (int c = 0; c < cols; c++) {
    if (is_piv[c])
      continue;
    std::vector<long long> v(cols, 0);
    v[c] = 1;
    for (size_t r = 0; r < pivcol.size(); r++)
      v[pivcol[r]] = md(-rows[r][c], p);
    out.push_back(std::move(v));
  }
  return out;
}

// echelon span of a list of vectors that can express further vectors
// in terms of the original ones
struct Span {
  long long p = 0;
  int m = 0;
  int k = 0;
  std::vector<std::vector<long long>> rows;
  std::vector<int> piv;

  void init(const std::vector<std::vector<long long>>& basis, int m_,
            long long p_) {
    p = p_;
    m = m_;
    k = static_cast<int>(basis.size());
    rows.clear();
    piv.clear();
    for (int b = 0; b < k; b++) {
      std::vector<long long> v(m + k, 0);
      for (int j = 0; j < m; j++)
        v[j] = md(basis[b][j], p);
      v[m + b] = 1;
      insert(std::move(v));
    }
  }

  void insert(std::vector<long long> v) {
    for (size_t r = 0; r < rows.size(); r++) {
      long long f = v[piv[r]] % p;
      if (f == 0)
        continue;
      for (int j = 0; j < m + k; j++)
        v[j] = md(v[j] - f * rows[r][j], p);
    }
    int c = -1;
    for (int j = 0; j < m; j++)
      if (v[j] % p != 0) {
        c = j;
        break;
      }
    if (c < 0)
      return; // dependent on earlier rows
    long long f = inv_mod(v[c], p);
    for (int j = 0; j < m + k; j++)
      v[j] = md(v[j] * f, p);
    rows.push_back(std::move(v));
    piv.push_back(c);
  }

  // coefficients over the original vectors, or false if w is outside
  bool coords(const std::vector<long long>& w,
              std::vector<long long>& out) const {
    std::vector<long long> v(m + k, 0);
    for (int j = 0; j < m; j++)
      v[j] = md(w[j], p);
    for (size_t r = 0; r < rows.size(); r++) {
      long long f = v[piv[r]] % p;
      if (f == 0)
        continue;
      for (int j = 0; j < m + k; j++)
        v[j] = md(v[j] - f * rows[r][j], p);
    }
    for (int j = 0; j < m; j++)
      if (v[j] % p != 0)
        return false;
    out.assign(k, 0);
    for (int j = 0; j < k; j++)
      out[j] = md(-v[m + j], p);
    return true;
  }
};

bool all_zero(const std::vector<long long>& v, long long p) {
  for (long long x : v)
    if (x % p != 0)
      return false;
  return true;
}

// product of two monomial-plane elements of the Laurent ring:
// (c_u u^e + c_v u^{e-1} v)(m_u u^f + m_v u^{f-1} v)
std::array<long long, 2> plane_mul(long long cu, long long cv, long long mu,
                                   long long mv, long long p) {
  return {md(cu * mu, p), md(cu * mv + cv * mu + cv * mv, p)};
}

// alpha multiplies by u^2 and keeps plane coordinates; beta multiplies
// by u^{2n-3} v and folds both coordinates into the v slot
std::vector<long long> act_gen(const std::vector<long long>& w, bool beta,
                               long long p) {
  if (!beta)
    return w;
  std::vector<long long> out(w.size(), 0);
  for (size_t b = 0; b + 1 < w.size(); b += 2)
    out[b + 1] = md(w[b] + w[b + 1], p);
  return out;
}

const std::vector<std::vector<long long>> kNoRows;

const std::vector<std::vector<long long>>&
rows_at(const TruncatedModule& m, int comp, int deg) {
  if (comp < 1 || comp > m.n || deg < 0)
    return kNoRows;
  auto it = m.comps[comp - 1].find(deg);
  return it == m.comps[comp - 1].end() ? kNoRows : it->second;
}

TruncatedModule make_column(const PolygonCtx& ctx, const TaggedEdge& a,
                            int cap, long long p) {
  int n = ctx.n;
  TruncatedModule m;
  m.n = n;
  m.p = p;
  m.blocks = 1;
  m.max_degree = cap;
  m.comps.resize(n);
  for (int i = 1; i <= n; i++) {
    SubmoduleDescriptor d = descriptor_for(ctx, make_side(ctx, i), a);
    if (d.shape == Shape::Zero)
      continue;
    for (int e = d.degree; e <= cap; e += 2 * n) {
      std::vector<std::vector<long long>> rows;
      switch (d.shape) {
      case Shape::U:
        rows.push_back({1, 0});
        if (e != d.degree)
          rows.push_back({0, 1});
        break;
      case Shape::V:
        rows.push_back({0, 1});
        break;
      case Shape::W:
        rows.push_back({1, p - 1});
        break;
      default: // UV
        rows.push_back({1, 0});
        rows.push_back({0, 1});
        break;
      }
      m.comps[i - 1][e] = std::move(rows);
    }
  }
  return m;
}

struct HomBlock {
  int i;
  int e;
  int sa;
  int sb;
  int offset;
};

struct HomSpace {
  int d = 0;
  int total = 0;
  int dim = 0;
  std::vector<HomBlock> blocks;
  std::map<std::pair<int, int>, int> index;
  std::vector<std::vector<long long>> sol; // nullspace basis when requested
};

// degree-d maps A -> B commuting with every alpha and beta action
HomSpace build_hom(const TruncatedModule& A, const TruncatedModule& B, int d,
                   bool want_basis) {
  if (A.n != B.n || A.p != B.p)
    throw std::logic_error("hom solver needs matching modules");
  if (d > 0 && B.max_degree < A.max_degree + d)
    throw std::logic_error("target module window too small");
  int n = A.n;
  long long p = A.p;
  HomSpace hs;
  hs.d = d;
  for (int i = 1; i <= n; i++)
    for (const auto& [e, rows] : A.comps[i - 1]) {
      if (rows.empty())
        continue;
      HomBlock blk{i, e, static_cast<int>(rows.size()),
                   static_cast<int>(rows_at(B, i, e + d).size()), hs.total};
      hs.index[{i, e}] = static_cast<int>(hs.blocks.size());
      hs.total += blk.sa * blk.sb;
      hs.blocks.push_back(blk);
    }
  if (hs.total == 0)
    return hs;

  auto unknown = [&](int i, int e, int r, int c) {
    auto it = hs.index.find({i, e});
    if (it == hs.index.end())
      return -1;
    const HomBlock& blk = hs.blocks[it->second];
    if (blk.sb == 0)
      return -1;
    return blk.offset + r * blk.sb + c;
  };

  std::map<std::pair<int, int>, Span> spanA;
  auto span_of = [&](int i, int e) -> Span& {
    auto it = spanA.find({i, e});
    if (it == spanA.end()) {
      Span s;
      s.init(rows_at(A, i, e), 2 * A.blocks, p);
      it = spanA.emplace(std::pair<int, int>{i, e}, std::move(s)).first;
    }
    return it->second;
  };

  std::vector<std::vector<long long>> eqs;
  for (int gen = 0; gen < 2; gen++) {
    bool beta = gen == 1;
    int s = beta ? 2 * n - 2 : 2;
    for (int j = 1; j <= n; j++) {
      int jt = beta ? (j == n ? 1 : j + 1) : (j == 1 ? n : j - 1);
      for (const auto& [e, rowsA] : A.comps[j - 1]) {
        if (e + s > A.max_degree)
          continue;
        const auto& tgtB = rows_at(B, jt, e + s + d);
        const auto& srcB = rows_at(B, j, e + d);
        for (size_t r = 0; r < rowsA.size(); r++) {
          std::vector<long long> y = act_gen(rowsA[r], beta, p);
          std::vector<long long> gamma;
          if (!all_zero(y, p)) {
            if (!span_of(jt, e + s).coords(y, gamma))
              throw std::logic_error(
                  "module is not closed under the generator actions");
          }
          std::vector<std::vector<long long>> eq(
              2 * B.blocks, std::vector<long long>(hs.total, 0));
          bool touched = false;
          for (size_t q = 0; q < gamma.size(); q++) {
            if (gamma[q] % p == 0)
              continue;
            for (size_t c = 0; c < tgtB.size(); c++) {
              int u = unknown(jt, e + s, static_cast<int>(q),
                              static_cast<int>(c));
              if (u < 0)
                continue;
              for (int x = 0; x < 2 * B.blocks; x++)
                eq[x][u] = md(eq[x][u] + gamma[q] * tgtB[c][x], p);
              touched = true;
            }
          }
          for (size_t c = 0; c < srcB.size(); c++) {
            int u = unknown(j, e, static_cast<int>(r), static_cast<int>(c));
            if (u < 0)
              continue;
            std::vector<long long> img = act_gen(srcB[c], beta, p);
            for (int x = 0; x < 2 * B.blocks; x++)
              eq[x][u] = md(eq[x][u] - img[x], p);
            touched = true;
          }
          if (!touched)
            continue;
          for (auto& row : eq)
            if (!all_zero(row, p))
              eqs.push_back(std::move(row));
        }
      }
    }
  }

  if (want_basis) {
    hs.sol = nullspace(std::move(eqs), hs.total, p);
    hs.dim = static_cast<int>(hs.sol.size());
  } else {
    hs.dim = hs.total - rank_of(std::move(eqs), hs.total, p);
  }
  return hs;
}

using Images = std::map<std::pair<int, int>, std::vector<std::vector<long long>>>;

// turn a solution vector into explicit per-block image matrices
Images materialize(const HomSpace& hs, const TruncatedModule& B,
                   const std::vector<long long>& v, long long p) {
  Images out;
  for (const HomBlock& blk : hs.blocks) {
    const auto& tgt = rows_at(B, blk.i, blk.e + hs.d);
    std::vector<std::vector<long long>> img(
        blk.sa, std::vector<long long>(2 * B.blocks, 0));
    for (int r = 0; r < blk.sa; r++)
      for (int c = 0; c < blk.sb; c++) {
        long long f = v[blk.offset + r * blk.sb + c] % p;
        if (f == 0)
          continue;
        for (int x = 0; x < 2 * B.blocks; x++)
          img[r][x] = md(img[r][x] + f * tgt[c][x], p);
      }
    out[{blk.i, blk.e}] = std::move(img);
  }
  return out;
}

// express explicit images in the unknown coordinates of a hom space
std::vector<long long> flatten(const HomSpace& hs, const TruncatedModule& B,
                               const Images& imgs, long long p) {
  std::vector<long long> v(hs.total, 0);
  for (const HomBlock& blk : hs.blocks) {
    auto it = imgs.find({blk.i, blk.e});
    if (it == imgs.end())
      continue;
    Span sp;
    sp.init(rows_at(B, blk.i, blk.e + hs.d), 2 * B.blocks, p);
    for (int r = 0; r < blk.sa; r++) {
      if (all_zero(it->second[r], p))
        continue;
      std::vector<long long> coords;
      if (!sp.coords(it->second[r], coords))
        throw std::logic_error("image falls outside the target module");
      for (int c = 0; c < blk.sb; c++)
        v[blk.offset + r * blk.sb + c] = coords[c];
    }
  }
  return v;
}

// g after f, where f : A -> P in degree d1 and g : P -> B in degree d2
Images compose(const TruncatedModule& A, const TruncatedModule& P,
               const TruncatedModule& B, const Images& f, int d1,
               const Images& g, long long p) {
  Images out;
  for (const auto& [key, fimg] : f) {
    auto [i, e] = key;
    std::vector<std::vector<long long>> rows(
        fimg.size(), std::vector<long long>(2 * B.blocks, 0));
    Span sp;
    bool have_span = false;
    for (size_t r = 0; r < fimg.size(); r++) {
      if (all_zero(fimg[r], p))
        continue;
      if (!have_span) {
        sp.init(rows_at(P, i, e + d1), 2 * P.blocks, p);
        have_span = true;
      }
      std::vector<long long> coords;
      if (!sp.coords(fimg[r], coords))
        throw std::logic_error("composite leaves the middle module");
      auto git = g.find({i, e + d1});
      if (git == g.end())
        continue;
      for (size_t q = 0; q < coords.size(); q++) {
        if (coords[q] % p == 0)
          continue;
        for (int x = 0; x < 2 * B.blocks; x++)
          rows[r][x] = md(rows[r][x] + coords[q] * git->second[q][x], p);
      }
    }
    out[key] = std::move(rows);
  }
  (void)A;
  return out;
}

struct Cover {
  TruncatedModule p0;
  std::vector<int> top_comp;
  std::vector<int> top_deg;
  std::vector<std::array<long long, 2>> top_vec;
  TruncatedModule kernel;
};

// projective cover of a column module, with the kernel extracted
// degree by degree from the explicit cover map
Cover build_cover(const PolygonCtx& ctx, const TruncatedModule& M,
                  const std::vector<TruncatedModule>& side_cols, long long p) {
  int n = ctx.n;
  int top_bound = 4 * n;
  Cover cv;
  for (int e = 0; e <= M.max_degree; e++)
    for (int i = 1; i <= n; i++) {
      const auto& here = rows_at(M, i, e);
      if (here.empty())
        continue;
      std::vector<std::vector<long long>> rad;
      int ip = i == n ? 1 : i + 1; // alpha arrives from component i+1
      for (const auto& r : rows_at(M, ip, e - 2))
        rad.push_back(act_gen(r, false, p));
      int im = i == 1 ? n : i - 1; // beta arrives from component i-1
      for (const auto& r : rows_at(M, im, e - (2 * n - 2)))
        rad.push_back(act_gen(r, true, p));
      Span sp;
      sp.init(rad, 2, p);
      for (const auto& r : here) {
        std::vector<long long> c;
        if (sp.coords(r, c))
          continue;
        if (e > top_bound)
          throw std::logic_error("generator found above the expected range");
        cv.top_comp.push_back(i);
        cv.top_deg.push_back(e);
        cv.top_vec.push_back({md(r[0], p), md(r[1], p)});
        rad.push_back(r);
        sp.init(rad, 2, p);
      }
    }

  int s = static_cast<int>(cv.top_comp.size());
  cv.p0.n = n;
  cv.p0.p = p;
  cv.p0.blocks = s;
  cv.p0.max_degree = M.max_degree;
  cv.p0.comps.resize(n);
  cv.kernel = cv.p0;
  for (int i = 1; i <= n; i++)
    for (int e = 0; e <= M.max_degree; e++) {
      std::vector<std::vector<long long>> rows;
      for (int r = 0; r < s; r++) {
        const auto& sub = rows_at(side_cols[cv.top_comp[r] - 1], i,
                                  e - cv.top_deg[r]);
        for (const auto& x : sub) {
          std::vector<long long> v(2 * s, 0);
          v[2 * r] = x[0];
          v[2 * r + 1] = x[1];
          rows.push_back(std::move(v));
        }
      }
      if (rows.empty())
        continue;
      // kernel of the cover map on this bidegree
      std::vector<std::vector<long long>> sys(2,
                                              std::vector<long long>(rows.size(), 0));
      for (size_t b = 0; b < rows.size(); b++) {
        std::array<long long, 2> img = {0, 0};
        for (int r = 0; r < s; r++) {
          auto pr = plane_mul(rows[b][2 * r], rows[b][2 * r + 1],
                              cv.top_vec[r][0], cv.top_vec[r][1], p);
          img[0] = md(img[0] + pr[0], p);
          img[1] = md(img[1] + pr[1], p);
        }
        sys[0][b] = img[0];
        sys[1][b] = img[1];
      }
      std::vector<std::vector<long long>> lam =
          nullspace(sys, static_cast<int>(rows.size()), p);
      std::vector<std::vector<long long>> ker;
      for (const auto& l : lam) {
        std::vector<long long> v(2 * s, 0);
        for (size_t b = 0; b < rows.size(); b++) {
          if (l[b] % p == 0)
            continue;
          for (int x = 0; x < 2 * s; x++)
            v[x] = md(v[x] + l[b] * rows[b][x], p);
        }
        ker.push_back(std::move(v));
      }
      cv.p0.comps[i - 1][e] = std::move(rows);
      if (!ker.empty())
        cv.kernel.comps[i - 1][e] = std::move(ker);
    }
  return cv;
}

} // namespace

TruncatedRing::TruncatedRing(int t_, long long p_) : t(t_), p(p_) {
  if (t < 3)
    throw std::invalid_argument("truncation order must be at least 3");
  if (p < 2)
    throw std::invalid_argument("modulus must be a prime");
}

std::vector<long long> TruncatedRing::zero() const {
  return std::vector<long long>(2 * t, 0);
}

std::vector<long long> TruncatedRing::x_power(int m) const {
  std::vector<long long> v = zero();
  if (m < t)
    v[m] = 1;
  return v;
}

std::vector<long long> TruncatedRing::y() const {
  std::vector<long long> v = zero();
  v[t] = 1;
  return v;
}

std::vector<long long> TruncatedRing::mul(const std::vector<long long>& f,
                                          const std::vector<long long>& g) const {
  std::vector<long long> v = zero();
  for (int a = 0; a < t; a++) {
    if (f[a] % p == 0 && f[t + a] % p == 0)
      continue;
    for (int b = 0; b < t; b++) {
      // X^a X^b, X^a (X^b Y), and (X^a Y)(X^b Y) = X^{a+b+1} Y
      if (a + b < t) {
        v[a + b] = md(v[a + b] + f[a] * g[b], p);
        v[t + a + b] = md(v[t + a + b] + f[a] * g[t + b] + f[t + a] * g[b], p);
      }
      if (a + b + 1 < t)
        v[t + a + b + 1] = md(v[t + a + b + 1] + f[t + a] * g[t + b], p);
    }
  }
  return v;
}

bool TruncatedRing::check_structure() const {
  std::vector<std::vector<long long>> basis;
  for (int k = 0; k < 2 * t; k++) {
    std::vector<long long> v = zero();
    v[k] = 1;
    basis.push_back(std::move(v));
  }
  for (int a = 0; a < 2 * t; a++)
    for (int b = 0; b < 2 * t; b++) {
      if (mul(basis[a], basis[b]) != mul(basis[b], basis[a]))
        return false;
      for (int c = 0; c < 2 * t; c++)
        if (mul(mul(basis[a], basis[b]), basis[c]) !=
            mul(basis[a], mul(basis[b], basis[c])))
          return false;
    }
  // the defining relation Y Y = X Y and the truncation X^t = 0
  if (mul(y(), y()) != mul(x_power(1), y()))
    return false;
  std::vector<long long> top = x_power(t - 1);
  if (mul(top, x_power(1)) != zero())
    return false;
  return true;
}

TruncatedModule truncated_column(const PolygonCtx& ctx, const TaggedEdge& a,
                                 int t, long long p) {
  return make_column(ctx, a, 2 * ctx.n * t, p);
}

bool module_relations_hold(const PolygonCtx& ctx, const TruncatedModule& m,
                           const TruncatedRing& ring) {
  int n = ctx.n;
  long long p = m.p;

  // walk a basis vector through a chain of generator actions, checking
  // at each step that the image stays inside the stored module
  auto chain = [&](int i, int e, std::vector<long long> w,
                   const std::vector<bool>& steps, int* comp_out,
                   int* deg_out) -> std::vector<long long> {
    for (bool beta : steps) {
      int jt = beta ? (i == n ? 1 : i + 1) : (i == 1 ? n : i - 1);
      e += beta ? 2 * n - 2 : 2;
      w = act_gen(w, beta, p);
      Span sp;
      sp.init(rows_at(m, jt, e), 2 * m.blocks, p);
      std::vector<long long> c;
      if (!all_zero(w, p) && !sp.coords(w, c))
        return {};
      i = jt;
    }
    *comp_out = i;
    *deg_out = e;
    return w;
  };

  // Y^{n-1} multiplied out in the truncated ring
  std::vector<long long> yn1 = ring.y();
  for (int k = 2; k <= n - 1; k++)
    yn1 = ring.mul(yn1, ring.y());
  std::vector<long long> expect = ring.zero();
  if (n - 2 < ring.t)
    expect[ring.t + n - 2] = 1;
  if (yn1 != expect)
    return false;

  auto fold = [&](const std::vector<long long>& w) {
    std::vector<long long> out(w.size(), 0);
    for (size_t b = 0; b + 1 < w.size(); b += 2)
      out[b + 1] = md(w[b] + w[b + 1], p);
    return out;
  };

  int checked = 0;
  for (int i = 1; i <= n; i++)
    for (const auto& [e, rows] : m.comps[i - 1]) {
      if (e + 2 * n * (n - 1) > m.max_degree)
        continue;
      for (const auto& x : rows) {
        int ci, ce;
        // n alpha steps act as X
        std::vector<long long> w =
            chain(i, e, x, std::vector<bool>(n, false), &ci, &ce);
        if (ci != i || ce != e + 2 * n || w != x)
          return false;
        // n beta steps act as Y^{n-1}
        w = chain(i, e, x, std::vector<bool>(n, true), &ci, &ce);
        if (ci != i || ce != e + 2 * n * (n - 1) || w != fold(x))
          return false;
        // both mixed composites act as Y
        w = chain(i, e, x, {true, false}, &ci, &ce);
        if (ci != i || ce != e + 2 * n || w != fold(x))
          return false;
        w = chain(i, e, x, {false, true}, &ci, &ce);
        if (ci != i || ce != e + 2 * n || w != fold(x))
          return false;
        checked++;
      }
    }
  return checked > 0;
}

std::map<int, int> oracle_hom_graded(const PolygonCtx& ctx,
                                     const TaggedEdge& a, const TaggedEdge& b,
                                     int t, int deg_bound, long long p) {
  int n = ctx.n;
  if (deg_bound < 0 || deg_bound >= 2 * n * (t - 2))
    throw std::invalid_argument("degree bound too large for the truncation");
  TruncatedModule A = make_column(ctx, a, 2 * n * t, p);
  TruncatedModule B = make_column(ctx, b, 2 * n * t + deg_bound + 2 * n, p);
  std::map<int, int> out;
  for (int d = 0; d <= deg_bound; d++) {
    int dim = build_hom(A, B, d, false).dim;
    if (dim != 0)
      out[d] = dim;
  }
  return out;
}

StableExtResult oracle_stable_and_ext(const PolygonCtx& ctx,
                                      const TaggedEdge& a, const TaggedEdge& b,
                                      int t, long long p) {
  int n = ctx.n;
  int cap_a = 2 * n * t;
  int cap_p = cap_a + 6 * n;
  int cap_b = cap_a + 12 * n;
  int dmax = 4 * n;
  TruncatedModule A = make_column(ctx, a, cap_a, p);
  TruncatedModule B = make_column(ctx, b, cap_b, p);
  std::vector<TruncatedModule> proj, side_small;
  for (int j = 1; j <= n; j++) {
    proj.push_back(make_column(ctx, make_side(ctx, j), cap_p, p));
    side_small.push_back(make_column(ctx, make_side(ctx, j), cap_a, p));
  }

  StableExtResult res;

  // stable Hom: mod out every composite through a projective column
  std::map<std::pair<int, int>, std::vector<Images>> fcache, gcache;
  auto hom_images = [&](const TruncatedModule& S, const TruncatedModule& T,
                        int d) {
    std::vector<Images> out;
    HomSpace hs = build_hom(S, T, d, true);
    for (const auto& v : hs.sol)
      out.push_back(materialize(hs, T, v, p));
    return out;
  };
  for (int d = 0; d <= dmax; d++) {
    HomSpace hs = build_hom(A, B, d, false);
    if (hs.dim == 0)
      continue;
    std::vector<std::vector<long long>> through;
    for (int j = 1; j <= n; j++)
      for (int d1 = 0; d1 <= d; d1++) {
        auto fit = fcache.find({j, d1});
        if (fit == fcache.end())
          fit = fcache.emplace(std::pair<int, int>{j, d1},
                               hom_images(A, proj[j - 1], d1))
                    .first;
        if (fit->second.empty())
          continue;
        auto git = gcache.find({j, d - d1});
        if (git == gcache.end())
          git = gcache.emplace(std::pair<int, int>{j, d - d1},
                               hom_images(proj[j - 1], B, d - d1))
                    .first;
        for (const Images& f : fit->second)
          for (const Images& g : git->second)
            through.push_back(
                flatten(hs, B, compose(A, proj[j - 1], B, f, d1, g, p), p));
      }
    int st = hs.dim - rank_of(std::move(through), hs.total, p);
    if (st != 0)
      res.stable[d] = st;
  }

  // Ext^1 as the cokernel of restriction along the cover kernel
  Cover cv = build_cover(ctx, A, side_small, p);
  for (int d = -dmax; d <= dmax; d++) {
    HomSpace hk = build_hom(cv.kernel, B, d, false);
    if (hk.dim == 0)
      continue;
    HomSpace hp = build_hom(cv.p0, B, d, true);
    std::vector<std::vector<long long>> restricted;
    for (const auto& v : hp.sol) {
      Images imgs = materialize(hp, B, v, p);
      Images onk;
      for (int i = 1; i <= n; i++)
        for (const auto& [e, krows] : cv.kernel.comps[i - 1]) {
          Span sp;
          sp.init(rows_at(cv.p0, i, e), 2 * cv.p0.blocks, p);
          std::vector<std::vector<long long>> rows;
          for (const auto& w : krows) {
            std::vector<long long> coords;
            if (!sp.coords(w, coords))
              throw std::logic_error("kernel vector outside the cover");
            std::vector<long long> img(2 * B.blocks, 0);
            auto iit = imgs.find({i, e});
            if (iit != imgs.end())
              for (size_t q = 0; q < coords.size(); q++) {
                if (coords[q] % p == 0)
                  continue;
                for (int x = 0; x < 2 * B.blocks; x++)
                  img[x] = md(img[x] + coords[q] * iit->second[q][x], p);
              }
            rows.push_back(std::move(img));
          }
          onk[{i, e}] = std::move(rows);
        }
      restricted.push_back(flatten(hk, B, onk, p));
    }
    res.ext1 += hk.dim - rank_of(std::move(restricted), hk.total, p);
  }
  return res;
}

bool oracle_syzygy_matches(const PolygonCtx& ctx, const TaggedEdge& a, int t,
                           long long p) {
  int n = ctx.n;
  int cap = 2 * n * t;
  TruncatedModule M = make_column(ctx, a, cap, p);
  std::vector<TruncatedModule> side_cols;
  for (int j = 1; j <= n; j++)
    side_cols.push_back(make_column(ctx, make_side(ctx, j), cap, p));
  Cover cv = build_cover(ctx, M, side_cols, p);

  auto ker_dim = [&](int i, int e) {
    return static_cast<int>(rows_at(cv.kernel, i, e).size());
  };
  if (a.kind == EdgeKind::Side) {
    for (int i = 1; i <= n; i++)
      if (!cv.kernel.comps[i - 1].empty())
        return false;
    return true;
  }

  TruncatedModule W = make_column(ctx, omega(ctx, a), cap, p);
  // one uniform degree offset must align every component
  int g = 0;
  bool have_g = false;
  for (int i = 1; i <= n; i++) {
    if (cv.kernel.comps[i - 1].empty() || W.comps[i - 1].empty())
      return false;
    int gk = cv.kernel.comps[i - 1].begin()->first;
    int gw = W.comps[i - 1].begin()->first;
    if (!have_g) {
      g = gk - gw;
      have_g = true;
    } else if (gk - gw != g) {
      return false;
    }
  }
  if (g < -3 * n || g > 3 * n)
    return false;
  int e_hi = cap - 2 * n - std::abs(g);
  for (int i = 1; i <= n; i++)
    for (int e = 0; e <= e_hi; e++) {
      int want = e - g < 0
                     ? 0
                     : static_cast<int>(rows_at(W, i, e - g).size());
      if (ker_dim(i, e) != want)
        return false;
    }
  return true;
}

int cover_crossing(const PolygonCtx& ctx, const TaggedEdge& a,
                   const TaggedEdge& b) {
  if (a.kind == EdgeKind::Side || b.kind == EdgeKind::Side)
    throw std::invalid_argument("cover_crossing expects tagged arcs");
  int n = ctx.n;
  bool pa = is_puncture_incident(a), pb = is_puncture_incident(b);
  if (pa && pb)
    return (a.kind != b.kind && a.a1 != b.a1) ? 1 : 0;
  if (pa || pb) {
    const TaggedEdge& ray = pa ? a : b;
    const TaggedEdge& arc = pa ? b : a;
    int r = arc.a1, m = cyclic_distance(ctx, arc.a1, arc.a2);
    int count = 0;
    for (int k = -1; k <= 1; k++) {
      int x = ray.a1 + k * n;
      if (r < x && x < r + m)
        count++;
    }
    return count;
  }
  int p1 = a.a1, p2 = a.a1 + cyclic_distance(ctx, a.a1, a.a2);
  int m = cyclic_distance(ctx, b.a1, b.a2);
  int count = 0;
  for (int k = -1; k <= 1; k++) {
    int q1 = b.a1 + k * n, q2 = q1 + m;
    if ((p1 < q1 && q1 < p2 && p2 < q2) || (q1 < p1 && p1 < q2 && q2 < p2))
      count++;
  }
  return count;
}

long long oracle_enumerate_maximal_compatible(const PolygonCtx& ctx) {
  if (ctx.n > 6)
    throw std::invalid_argument("clique search is limited to n <= 6");
  std::vector<TaggedEdge> arcs = all_arcs(ctx);
  int m = static_cast<int>(arcs.size());
  std::vector<unsigned long long> adj(m, 0);
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++)
      if (i != j && cover_crossing(ctx, arcs[i], arcs[j]) == 0)
        adj[i] |= 1ULL << j;

  long long count = 0;
  std::function<void(unsigned long long, unsigned long long)> grow =
      [&](unsigned long long cand, unsigned long long excl) {
        if (cand == 0 && excl == 0) {
          count++;
          return;
        }
        unsigned long long rest = cand;
        while (rest) {
          int v = std::countr_zero(rest);
          unsigned long long bit = 1ULL << v;
          grow(cand & adj[v], excl & adj[v]);
          cand &= ~bit;
          excl |= bit;
          rest &= ~bit;
        }
      };
  grow((m == 64 ? ~0ULL : (1ULL << m) - 1), 0);
  return count;
}

} // namespace ppoly
