#include "ppoly/quiver.h"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

namespace ppoly {

int IceQuiverWithPotential::vertex_index(const TaggedEdge& e) const {
  for (size_t i = 0; i < vertices.size(); i++)
    if (vertices[i] == e)
      return static_cast<int>(i);
  throw std::invalid_argument("edge is not a vertex of the quiver");
}

namespace {

// A face of the lifted triangulation on the universal cover, identified
// by its corner coordinates. Finite corners are cover integers shifted
// so the smallest lies in [1, n]; the puncture corner is a flag.
struct FaceKey {
  std::vector<long long> corners; // sorted finite corners
  bool puncture = false;

  bool operator<(const FaceKey& o) const {
    return std::tie(corners, puncture) < std::tie(o.corners, o.puncture);
  }
};

FaceKey make_key(int n, std::vector<long long> finite, bool puncture) {
  long long m = *std::min_element(finite.begin(), finite.end());
  // translate by a multiple of n so the minimum lands in [1, n]
  long long t = (m - 1) / n;
  if (m - 1 < 0 && (m - 1) % n != 0)
    t--;
  for (long long& c : finite)
    c -= t * n;
  std::sort(finite.begin(), finite.end());
  return FaceKey{std::move(finite), puncture};
}

// Cover coordinate of the far endpoint of edge e seen from polygon
// vertex v placed at coordinate v; rays end at the puncture.
bool far_end(const PolygonCtx& ctx, const TaggedEdge& e, int v,
             long long& out) {
  switch (e.kind) {
  case EdgeKind::Side:
    out = (e.a1 == v) ? v + 1 : v - 1;
    return true;
  case EdgeKind::Arc:
    out = (e.a1 == v) ? v + cyclic_distance(ctx, v, e.a2)
                      : v - cyclic_distance(ctx, e.a1, v);
    return true;
  default:
    return false; // puncture arc
  }
}

void rotate_canonical(PotentialTerm& term) {
  auto it = std::min_element(term.arrows.begin(), term.arrows.end());
  std::rotate(term.arrows.begin(), it, term.arrows.end());
}

void validate_qp(const IceQuiverWithPotential& qp, int eta_arrow) {
  int n = qp.ctx.n;
  for (const Arrow& ar : qp.arrows) {
    if (ar.source == ar.target)
      throw std::logic_error("loop arrow in quiver");
    if (ar.theta < 1 || ar.theta >= 2 * n)
      throw std::logic_error("arrow theta out of range");
  }
  std::vector<std::vector<int>> signs(qp.arrows.size());
  for (const PotentialTerm& term : qp.potential) {
    for (size_t i = 0; i < term.arrows.size(); i++) {
      const Arrow& cur = qp.arrows[term.arrows[i]];
      const Arrow& nxt = qp.arrows[term.arrows[(i + 1) % term.arrows.size()]];
      if (cur.target != nxt.source)
        throw std::logic_error("potential term is not a closed path");
      signs[term.arrows[i]].push_back(term.sign);
    }
  }
  for (size_t i = 0; i < signs.size(); i++) {
    if (static_cast<int>(i) == eta_arrow) {
      // the digon's eta sits in both clockwise triangles and one
      // external cycle
      std::vector<int> s = signs[i];
      std::sort(s.begin(), s.end());
      if (s != std::vector<int>{-1, 1, 1})
        throw std::logic_error("digon eta has unexpected potential terms");
      continue;
    }
    if (signs[i].size() > 2)
      throw std::logic_error("arrow in more than two potential terms");
    if (signs[i].size() == 2 && signs[i][0] + signs[i][1] != 0)
      throw std::logic_error("arrow twice with equal signs in potential");
  }
}

IceQuiverWithPotential build_common(const TaggedTriangulation& tri) {
  const PolygonCtx& ctx = tri.ctx;
  int n = ctx.n;

  IceQuiverWithPotential qp{ctx, {}, {}, {}, {}};
  for (int i = 1; i <= n; i++) {
    qp.vertices.push_back(make_side(ctx, i));
    qp.frozen.push_back(i - 1);
  }
  for (const TaggedEdge& a : tri.arcs)
    qp.vertices.push_back(a);

  // digon configuration: exactly one plain and one notched ray
  int plain_idx = -1, notched_idx = -1, plain_count = 0, notched_count = 0;
  for (size_t i = 0; i < qp.vertices.size(); i++) {
    if (qp.vertices[i].kind == EdgeKind::Plain) {
      plain_count++;
      plain_idx = static_cast<int>(i);
    }
    if (qp.vertices[i].kind == EdgeKind::Notched) {
      notched_count++;
      notched_idx = static_cast<int>(i);
    }
  }
  bool digon = (plain_count == 1 && notched_count == 1);
  int digon_base = -1;
  if (digon) {
    if (qp.vertices[plain_idx].a1 != qp.vertices[notched_idx].a1)
      throw std::logic_error("mixed tags at distinct vertices");
    digon_base = qp.vertices[plain_idx].a1;
  }

  auto is_ray = [&](int idx) {
    return is_puncture_incident(qp.vertices[idx]);
  };

  // angular slot lists per polygon vertex, counter-clockwise from
  // side (v, v+1) to side (v-1, v)
  std::vector<std::vector<std::vector<int>>> slots(n + 1);
  for (int v = 1; v <= n; v++) {
    auto& sl = slots[v];
    sl.push_back({v - 1}); // side (v, v+1)
    std::vector<std::pair<int, int>> right, left; // (span, vertex index)
    std::vector<int> rays;
    for (size_t i = n; i < qp.vertices.size(); i++) {
      const TaggedEdge& e = qp.vertices[i];
      if (e.kind == EdgeKind::Arc) {
        if (e.a1 == v)
          right.push_back({cyclic_distance(ctx, v, e.a2), static_cast<int>(i)});
        if (e.a2 == v)
          left.push_back({cyclic_distance(ctx, e.a1, v), static_cast<int>(i)});
      } else if (e.a1 == v) {
        rays.push_back(static_cast<int>(i));
      }
    }
    std::sort(right.begin(), right.end());
    std::sort(left.begin(), left.end());
    for (auto [span, idx] : right)
      sl.push_back({idx});
    if (digon && v == digon_base) {
      sl.push_back({plain_idx, notched_idx});
    } else {
      for (int idx : rays)
        sl.push_back({idx});
    }
    for (auto it = left.rbegin(); it != left.rend(); ++it)
      sl.push_back({it->second});
    sl.push_back({normalize(ctx, v - 1) - 1}); // side (v-1, v)
  }

  std::map<FaceKey, std::vector<int>> faces;
  std::map<std::tuple<int, int, int>, int> arrow_at; // (src, tgt, v) -> index

  auto add_arrow = [&](int src, int tgt, bool external, int at) {
    Arrow ar{src, tgt, external,
             theta_length(ctx, qp.vertices[src], qp.vertices[tgt]), at};
    qp.arrows.push_back(ar);
    arrow_at[{src, tgt, at}] = static_cast<int>(qp.arrows.size()) - 1;
    return static_cast<int>(qp.arrows.size()) - 1;
  };

  // internal arrows between angularly consecutive edges
  for (int v = 1; v <= n; v++) {
    const auto& sl = slots[v];
    for (size_t s = 0; s + 1 < sl.size(); s++)
      for (int x : sl[s])
        for (int y : sl[s + 1]) {
          int idx = add_arrow(x, y, false, v);
          if (digon && (is_ray(x) || is_ray(y)))
            continue; // handled by the explicit digon terms
          long long fx, fy;
          bool okx = far_end(ctx, qp.vertices[x], v, fx);
          bool oky = far_end(ctx, qp.vertices[y], v, fy);
          std::vector<long long> finite{static_cast<long long>(v)};
          if (okx)
            finite.push_back(fx);
          if (oky)
            finite.push_back(fy);
          faces[make_key(n, std::move(finite), !okx || !oky)].push_back(idx);
        }
  }

  // external arrows
  std::vector<int> external_arrow(n + 1);
  for (int v = 1; v <= n; v++)
    external_arrow[v] =
        add_arrow(normalize(ctx, v - 1) - 1, v - 1, true, v);

  // arrows between consecutive rays around the puncture
  if (!digon) {
    std::vector<int> rays;
    for (size_t i = n; i < qp.vertices.size(); i++)
      if (is_ray(static_cast<int>(i)))
        rays.push_back(static_cast<int>(i));
    std::sort(rays.begin(), rays.end(), [&](int a, int b) {
      return qp.vertices[a].a1 < qp.vertices[b].a1;
    });
    int m = static_cast<int>(rays.size());
    for (int i = 0; i < m; i++) {
      int r = rays[i], s = rays[(i + 1) % m];
      int b1 = qp.vertices[r].a1;
      int d = cyclic_distance(ctx, b1, qp.vertices[s].a1);
      int idx = add_arrow(r, s, false, 0);
      faces[make_key(n, {b1, b1 + d}, true)].push_back(idx);
    }
  }

  int eta = -1;
  if (digon) {
    // locate the digon's boundary edges b (before the rays) and a
    // (after them) at the base vertex, and the arrow eta: a -> b at
    // the opposite corner of the digon
    const auto& sl = slots[digon_base];
    size_t ray_pos = 0;
    while (sl[ray_pos].size() != 2)
      ray_pos++;
    int b = sl[ray_pos - 1][0];
    int a = sl[ray_pos + 1][0];
    for (size_t i = 0; i < qp.arrows.size(); i++)
      if (qp.arrows[i].source == a && qp.arrows[i].target == b) {
        if (eta != -1)
          throw std::logic_error("several candidates for the digon eta");
        eta = static_cast<int>(i);
      }
    if (eta == -1)
      throw std::logic_error("digon eta arrow not found");
    // eta's wedge is the digon face itself, not a true triangle
    for (auto it = faces.begin(); it != faces.end();) {
      auto& group = it->second;
      auto pos = std::find(group.begin(), group.end(), eta);
      if (pos != group.end()) {
        if (group.size() != 1)
          throw std::logic_error("digon face has unexpected arrows");
        it = faces.erase(it);
      } else {
        ++it;
      }
    }
    int alpha = arrow_at.at({b, notched_idx, digon_base});
    int beta = arrow_at.at({notched_idx, a, digon_base});
    int gamma = arrow_at.at({b, plain_idx, digon_base});
    int delta = arrow_at.at({plain_idx, a, digon_base});
    qp.potential.push_back({1, {eta, alpha, beta}});
    qp.potential.push_back({1, {eta, gamma, delta}});
  }

  // clockwise triangles from the face groups
  std::vector<PotentialTerm> triangles;
  for (auto& [key, group] : faces) {
    if (group.size() != 3)
      throw std::logic_error("face group is not a triangle");
    int p = group[0];
    int q = (qp.arrows[group[1]].source == qp.arrows[p].target) ? group[1]
                                                                : group[2];
    int r = (q == group[1]) ? group[2] : group[1];
    if (qp.arrows[q].source != qp.arrows[p].target ||
        qp.arrows[r].source != qp.arrows[q].target ||
        qp.arrows[p].source != qp.arrows[r].target)
      throw std::logic_error("face group does not close into a cycle");
    triangles.push_back({1, {p, q, r}});
  }
  for (PotentialTerm& t : triangles)
    rotate_canonical(t);
  std::sort(triangles.begin(), triangles.end(),
            [](const PotentialTerm& x, const PotentialTerm& y) {
              return x.arrows < y.arrows;
            });
  for (PotentialTerm& t : triangles)
    qp.potential.push_back(std::move(t));

  // anticlockwise external cycles; at the digon base the cycle routes
  // through the plain ray
  for (int v = 1; v <= n; v++) {
    const auto& sl = slots[v];
    PotentialTerm term{-1, {}};
    for (size_t s = 0; s + 1 < sl.size(); s++) {
      int x = sl[s].size() == 2 ? plain_idx : sl[s][0];
      int y = sl[s + 1].size() == 2 ? plain_idx : sl[s + 1][0];
      term.arrows.push_back(arrow_at.at({x, y, v}));
    }
    term.arrows.push_back(external_arrow[v]);
    rotate_canonical(term);
    qp.potential.push_back(std::move(term));
  }

  // anticlockwise punctured cycle
  if (!digon) {
    PotentialTerm term{-1, {}};
    for (size_t i = 0; i < qp.arrows.size(); i++)
      if (qp.arrows[i].at == 0)
        term.arrows.push_back(static_cast<int>(i));
    rotate_canonical(term);
    qp.potential.push_back(std::move(term));
  }

  validate_qp(qp, eta);
  return qp;
}

} // namespace

IceQuiverWithPotential build_full_qp(const TaggedTriangulation& tri) {
  return build_common(tri);
}

IceQuiverWithPotential build_ice_qp(const TaggedTriangulation& tri) {
  IceQuiverWithPotential qp = build_common(tri);
  const PolygonCtx& ctx = tri.ctx;
  std::vector<bool> incident(ctx.n + 1, false);
  for (const TaggedEdge& a : tri.arcs) {
    incident[a.a1] = true;
    if (a.kind == EdgeKind::Arc)
      incident[a.a2] = true;
  }
  std::vector<bool> removed(qp.arrows.size(), false);
  for (size_t i = 0; i < qp.arrows.size(); i++)
    if (qp.arrows[i].external && !incident[qp.arrows[i].at])
      removed[i] = true;
  std::vector<int> remap(qp.arrows.size(), -1);
  std::vector<Arrow> arrows;
  for (size_t i = 0; i < qp.arrows.size(); i++)
    if (!removed[i]) {
      remap[i] = static_cast<int>(arrows.size());
      arrows.push_back(qp.arrows[i]);
    }
  std::vector<PotentialTerm> potential;
  for (PotentialTerm& term : qp.potential) {
    bool keep = true;
    for (int& a : term.arrows) {
      if (removed[a]) {
        keep = false;
        break;
      }
      a = remap[a];
    }
    if (keep)
      potential.push_back(std::move(term));
  }
  qp.arrows = std::move(arrows);
  qp.potential = std::move(potential);
  return qp;
}

bool check_potential_homogeneous(const IceQuiverWithPotential& qp) {
  for (const PotentialTerm& term : qp.potential) {
    int sum = 0;
    for (int a : term.arrows)
      sum += qp.arrows[a].theta;
    if (sum != 2 * qp.ctx.n)
      return false;
  }
  return true;
}

std::optional<int> min_path_theta(const IceQuiverWithPotential& qp, int a,
                                  int b) {
  size_t nv = qp.vertices.size();
  if (a < 0 || b < 0 || a >= static_cast<int>(nv) || b >= static_cast<int>(nv))
    throw std::invalid_argument("vertex index out of range");
  std::vector<std::vector<std::pair<int, int>>> adj(nv); // (target, theta)
  for (const Arrow& ar : qp.arrows)
    adj[ar.source].push_back({ar.target, ar.theta});
  std::vector<long long> dist(nv, -1);
  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.push({0, a});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (dist[v] != -1)
      continue;
    dist[v] = d;
    if (v == b)
      break;
    for (auto [w, t] : adj[v])
      if (dist[w] == -1)
        heap.push({d + t, w});
  }
  if (dist[b] == -1)
    return std::nullopt;
  return static_cast<int>(dist[b]);
}

} // namespace ppoly
