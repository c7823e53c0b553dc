#include <doctest.h>

#include "ppoly/quiver.h"

#include <algorithm>
#include <map>
#include <set>

using namespace ppoly;

TEST_SUITE("quiver") {

static TaggedTriangulation all_plain(const PolygonCtx& c) {
  std::vector<TaggedEdge> arcs;
  for (int i = 1; i <= c.n; i++)
    arcs.push_back(make_plain(c, i));
  return validate(c, arcs);
}

static TaggedTriangulation fan_both_tags(const PolygonCtx& c) {
  std::vector<TaggedEdge> arcs;
  for (int k = 3; k <= c.n; k++)
    arcs.push_back(make_arc(c, 1, k));
  arcs.push_back(make_plain(c, 1));
  arcs.push_back(make_notched(c, 1));
  return validate(c, arcs);
}

static int find_arrow(const IceQuiverWithPotential& qp, const TaggedEdge& s,
                      const TaggedEdge& t) {
  int si = qp.vertex_index(s), ti = qp.vertex_index(t);
  for (size_t i = 0; i < qp.arrows.size(); i++)
    if (qp.arrows[i].source == si && qp.arrows[i].target == ti)
      return static_cast<int>(i);
  return -1;
}

TEST_CASE("the all plain triangulation gives the wheel quiver") {
  for (int n = 3; n <= 6; n++) {
    PolygonCtx c(n);
    IceQuiverWithPotential qp = build_ice_qp(all_plain(c));
    CHECK(qp.arrows.size() == 4u * n);
    CHECK(qp.frozen.size() == static_cast<size_t>(n));
    for (int i = 1; i <= n; i++) {
      TaggedEdge pi = make_plain(c, i);
      TaggedEdge pj = make_plain(c, normalize(c, i + 1));
      TaggedEdge si = make_side(c, i);
      TaggedEdge sp = make_side(c, normalize(c, i - 1));
      int alpha = find_arrow(qp, pi, pj);
      int beta = find_arrow(qp, pj, si);
      int gamma = find_arrow(qp, si, pi);
      int ext = find_arrow(qp, sp, si);
      REQUIRE(alpha != -1);
      REQUIRE(beta != -1);
      REQUIRE(gamma != -1);
      REQUIRE(ext != -1);
      CHECK(qp.arrows[alpha].theta == 2);
      CHECK(qp.arrows[beta].theta == n - 1);
      CHECK(qp.arrows[gamma].theta == n - 1);
      CHECK(qp.arrows[ext].theta == 2);
      CHECK(qp.arrows[ext].external);
      CHECK(!qp.arrows[alpha].external);
    }
    // n triangles, n external cycles, one punctured cycle
    CHECK(qp.potential.size() == 2u * n + 1);
    int plus = 0, minus = 0;
    for (const PotentialTerm& t : qp.potential)
      (t.sign > 0 ? plus : minus)++;
    CHECK(plus == n);
    CHECK(minus == n + 1);
    CHECK(check_potential_homogeneous(qp));
    // every polygon vertex has an incident ray, so nothing is removed
    CHECK(build_full_qp(all_plain(c)).arrows.size() == qp.arrows.size());
  }
}

TEST_CASE("the n = 3 digon quiver matches the explicit arrow set") {
  PolygonCtx c(3);
  TaggedTriangulation tri =
      validate(c, {make_plain(c, 1), make_notched(c, 1), make_arc(c, 2, 1)});
  IceQuiverWithPotential qp = build_full_qp(tri);

  TaggedEdge a = make_arc(c, 2, 1);
  TaggedEdge b = make_side(c, 1);
  TaggedEdge p = make_plain(c, 1);
  TaggedEdge q = make_notched(c, 1);
  int eta = find_arrow(qp, a, b);
  int alpha = find_arrow(qp, b, q);
  int beta = find_arrow(qp, q, a);
  int gamma = find_arrow(qp, b, p);
  int delta = find_arrow(qp, p, a);
  REQUIRE(eta != -1);
  REQUIRE(alpha != -1);
  REQUIRE(beta != -1);
  REQUIRE(gamma != -1);
  REQUIRE(delta != -1);
  CHECK(qp.arrows[eta].theta == 3);
  CHECK(qp.arrows[alpha].theta == 2);
  CHECK(qp.arrows[beta].theta == 1);
  CHECK(qp.arrows[gamma].theta == 2);
  CHECK(qp.arrows[delta].theta == 1);

  // no arrows between the two rays, no arrows at the puncture
  CHECK(find_arrow(qp, p, q) == -1);
  CHECK(find_arrow(qp, q, p) == -1);
  for (const Arrow& ar : qp.arrows)
    CHECK(ar.at != 0);

  // two digon triangles, one ordinary triangle, three external cycles
  CHECK(qp.potential.size() == 6);
  int eta_terms = 0, eta_sign = 0;
  for (const PotentialTerm& t : qp.potential)
    if (std::find(t.arrows.begin(), t.arrows.end(), eta) != t.arrows.end()) {
      eta_terms++;
      eta_sign += t.sign;
    }
  CHECK(eta_terms == 3);
  CHECK(eta_sign == 1);
  CHECK(check_potential_homogeneous(qp));
}

TEST_CASE("potential homogeneity for every triangulation") {
  for (int n = 3; n <= 6; n++) {
    PolygonCtx c(n);
    for (const TaggedTriangulation& t : enumerate_all(c)) {
      IceQuiverWithPotential full = build_full_qp(t);
      CHECK(check_potential_homogeneous(full));
      CHECK(check_potential_homogeneous(build_ice_qp(t)));
      // triangle terms have three arrows, each summing to 2n
      for (const PotentialTerm& term : full.potential)
        if (term.sign > 0)
          CHECK(term.arrows.size() == 3);
      if (!full.arrows.empty()) {
        full.arrows[0].theta++;
        CHECK(!check_potential_homogeneous(full));
      }
    }
  }
}

TEST_CASE("removed external arrows match vertices without incident arcs") {
  for (int n = 3; n <= 5; n++) {
    PolygonCtx c(n);
    for (const TaggedTriangulation& t : enumerate_all(c)) {
      std::set<int> touched;
      for (const TaggedEdge& a : t.arcs) {
        touched.insert(a.a1);
        if (a.kind == EdgeKind::Arc)
          touched.insert(a.a2);
      }
      IceQuiverWithPotential full = build_full_qp(t);
      IceQuiverWithPotential ice = build_ice_qp(t);
      CHECK(full.arrows.size() - ice.arrows.size() == c.n - touched.size());
      for (const Arrow& ar : ice.arrows)
        if (ar.external)
          CHECK(touched.count(ar.at) == 1);
    }
  }
}

TEST_CASE("every quiver vertex touches an external cycle or the punctured "
          "cycle") {
  // the digon configuration is exempt: its notched ray only sits in a
  // clockwise triangle
  for (int n = 3; n <= 5; n++) {
    PolygonCtx c(n);
    for (const TaggedTriangulation& t : enumerate_all(c)) {
      int plain = 0, notched = 0;
      for (const TaggedEdge& a : t.arcs) {
        plain += a.kind == EdgeKind::Plain;
        notched += a.kind == EdgeKind::Notched;
      }
      if (plain == 1 && notched == 1)
        continue;
      IceQuiverWithPotential full = build_full_qp(t);
      std::set<int> covered;
      for (const PotentialTerm& term : full.potential)
        if (term.sign < 0)
          for (int a : term.arrows) {
            covered.insert(full.arrows[a].source);
            covered.insert(full.arrows[a].target);
          }
      CHECK(covered.size() == full.vertices.size());
    }
  }
}

TEST_CASE("minimal path lengths realize the theta length") {
  for (int n = 3; n <= 5; n++) {
    PolygonCtx c(n);
    for (const TaggedTriangulation& t : enumerate_all(c)) {
      IceQuiverWithPotential qp = build_ice_qp(t);
      for (size_t i = 0; i < qp.vertices.size(); i++)
        for (size_t j = 0; j < qp.vertices.size(); j++) {
          const TaggedEdge& a = qp.vertices[i];
          const TaggedEdge& b = qp.vertices[j];
          if (is_puncture_incident(a) && is_puncture_incident(b) &&
              a.kind != b.kind)
            continue;
          auto d = min_path_theta(qp, static_cast<int>(i),
                                  static_cast<int>(j));
          REQUIRE(d.has_value());
          CHECK(*d == theta_length(c, a, b));
        }
    }
  }
}

TEST_CASE("minimal path lengths are invariant under flips") {
  for (int n = 3; n <= 4; n++) {
    PolygonCtx c(n);
    for (const TaggedTriangulation& t : enumerate_all(c)) {
      IceQuiverWithPotential qp = build_ice_qp(t);
      for (const TaggedEdge& a : t.arcs) {
        auto [t2, repl] = flip(t, a);
        (void)repl;
        IceQuiverWithPotential qp2 = build_ice_qp(t2);
        for (size_t i = 0; i < qp.vertices.size(); i++)
          for (size_t j = 0; j < qp.vertices.size(); j++) {
            const TaggedEdge& x = qp.vertices[i];
            const TaggedEdge& y = qp.vertices[j];
            if (x == a || y == a)
              continue;
            if (std::find(t2.arcs.begin(), t2.arcs.end(), x) == t2.arcs.end()
                && x.kind != EdgeKind::Side)
              continue;
            if (std::find(t2.arcs.begin(), t2.arcs.end(), y) == t2.arcs.end()
                && y.kind != EdgeKind::Side)
              continue;
            if (is_puncture_incident(x) && is_puncture_incident(y) &&
                x.kind != y.kind)
              continue;
            auto d1 = min_path_theta(qp, static_cast<int>(i),
                                     static_cast<int>(j));
            auto d2 = min_path_theta(qp2, qp2.vertex_index(x),
                                     qp2.vertex_index(y));
            CHECK(d1 == d2);
          }
      }
    }
  }
}

TEST_CASE("path lengths are subadditive and zero on the diagonal") {
  PolygonCtx c(5);
  IceQuiverWithPotential qp = build_ice_qp(fan_both_tags(c));
  int nv = static_cast<int>(qp.vertices.size());
  for (int i = 0; i < nv; i++)
    CHECK(min_path_theta(qp, i, i) == 0);
  for (int i = 0; i < nv; i++)
    for (int j = 0; j < nv; j++)
      for (int k = 0; k < nv; k++) {
        auto ab = min_path_theta(qp, i, j);
        auto bc = min_path_theta(qp, j, k);
        auto ac = min_path_theta(qp, i, k);
        if (ab && bc && ac)
          CHECK(*ab + *bc >= *ac);
      }
}

TEST_CASE("the non frozen part of the tagged fan quiver has shape D_n") {
  for (int n = 3; n <= 6; n++) {
    PolygonCtx c(n);
    IceQuiverWithPotential qp = build_ice_qp(fan_both_tags(c));
    std::set<int> frozen(qp.frozen.begin(), qp.frozen.end());
    std::map<int, std::set<int>> adj;
    int edges = 0;
    for (size_t i = n; i < qp.vertices.size(); i++)
      adj[static_cast<int>(i)];
    for (const Arrow& ar : qp.arrows)
      if (!frozen.count(ar.source) && !frozen.count(ar.target)) {
        adj[ar.source].insert(ar.target);
        adj[ar.target].insert(ar.source);
        edges++;
      }
    CHECK(adj.size() == static_cast<size_t>(n));
    CHECK(edges == n - 1);
    int ray_neighbor = -1;
    for (auto& [v, nb] : adj) {
      if (is_puncture_incident(qp.vertices[v])) {
        CHECK(nb.size() == 1);
        if (ray_neighbor == -1)
          ray_neighbor = *nb.begin();
        else
          CHECK(ray_neighbor == *nb.begin());
      } else {
        CHECK(nb.size() <= 3);
      }
    }
  }
}

} // TEST_SUITE
