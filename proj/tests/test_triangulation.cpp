#include <doctest.h>

#include "ppoly/triangulation.h"

#include <algorithm>
#include <set>

using namespace ppoly;

TEST_SUITE("triangulation") {

static std::vector<TaggedEdge> fan_both_tags(const PolygonCtx& c) {
  std::vector<TaggedEdge> arcs;
  for (int k = 3; k <= c.n; k++)
    arcs.push_back(make_arc(c, 1, k));
  arcs.push_back(make_plain(c, 1));
  arcs.push_back(make_notched(c, 1));
  return arcs;
}

TEST_CASE("validate accepts the fan and rejects broken sets") {
  for (int n = 3; n <= 6; n++) {
    PolygonCtx c(n);
    std::vector<TaggedEdge> fan = fan_both_tags(c);
    TaggedTriangulation tri = validate(c, fan);
    CHECK(static_cast<int>(tri.arcs.size()) == n);

    std::vector<TaggedEdge> missing(fan.begin(), fan.end() - 1);
    CHECK_THROWS_WITH_AS(validate(c, missing),
                         doctest::Contains("not maximal"),
                         std::invalid_argument);

    std::vector<TaggedEdge> dup = fan;
    dup.push_back(fan.front());
    CHECK_THROWS_WITH_AS(validate(c, dup), doctest::Contains("duplicate"),
                         std::invalid_argument);
  }
  PolygonCtx c(5);
  std::vector<TaggedEdge> bad{make_plain(c, 1), make_notched(c, 3)};
  CHECK_THROWS_WITH_AS(validate(c, bad), doctest::Contains("incompatible"),
                       std::invalid_argument);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_all(PolygonCtx(3)).size() == 14);
  CHECK(enumerate_all(PolygonCtx(4)).size() == 50);
  CHECK(enumerate_all(PolygonCtx(5)).size() == 182);
  CHECK(enumerate_all(PolygonCtx(6)).size() == 672);
  CHECK_THROWS_AS(enumerate_all(PolygonCtx(9)), std::length_error);
}

TEST_CASE("every triangulation has n arcs and is duplicate free") {
  for (int n = 3; n <= 6; n++) {
    PolygonCtx c(n);
    std::vector<TaggedTriangulation> all = enumerate_all(c);
    std::set<std::vector<TaggedEdge>> seen;
    for (const TaggedTriangulation& t : all) {
      CHECK(static_cast<int>(t.arcs.size()) == n);
      CHECK(seen.insert(t.arcs).second);
    }
  }
}

TEST_CASE("puncture tag patterns inside triangulations") {
  for (int n = 3; n <= 6; n++) {
    PolygonCtx c(n);
    for (const TaggedTriangulation& t : enumerate_all(c)) {
      int plain = 0, notched = 0;
      std::set<int> plain_base, notched_base;
      for (const TaggedEdge& a : t.arcs) {
        if (a.kind == EdgeKind::Plain) {
          plain++;
          plain_base.insert(a.a1);
        }
        if (a.kind == EdgeKind::Notched) {
          notched++;
          notched_base.insert(a.a1);
        }
      }
      CHECK(plain + notched >= 2);
      // either all one tag, or exactly one of each at the same vertex
      bool uniform = (plain == 0 || notched == 0);
      bool digon = (plain == 1 && notched == 1 && plain_base == notched_base);
      CHECK((uniform || digon));
    }
  }
}

TEST_CASE("flip is a fixed point free involution") {
  for (int n = 3; n <= 5; n++) {
    PolygonCtx c(n);
    for (const TaggedTriangulation& t : enumerate_all(c))
      for (const TaggedEdge& a : t.arcs) {
        auto [t2, repl] = flip(t, a);
        CHECK(!(repl == a));
        CHECK(!(t2 == t));
        auto [t3, back] = flip(t2, repl);
        CHECK(t3 == t);
        CHECK(back == a);
      }
  }
}

TEST_CASE("the three flip shapes all occur for n = 4") {
  PolygonCtx c(4);
  // classify flips by puncture incidence of the removed / added arc
  std::set<std::pair<bool, bool>> shapes;
  for (const TaggedTriangulation& t : enumerate_all(c))
    for (const TaggedEdge& a : t.arcs) {
      auto [t2, repl] = flip(t, a);
      (void)t2;
      shapes.insert({is_puncture_incident(a), is_puncture_incident(repl)});
    }
  CHECK(shapes.count({false, false}) == 1);
  CHECK(shapes.count({true, true}) == 1);
  CHECK(shapes.count({true, false}) == 1);
  CHECK(shapes.count({false, true}) == 1);
}

TEST_CASE("exchange graph is connected and n regular") {
  for (int n = 3; n <= 6; n++) {
    PolygonCtx c(n);
    ExchangeGraph g = exchange_graph(c);
    CHECK(is_connected(g));
    std::vector<int> deg(g.vertices.size(), 0);
    for (auto [i, j] : g.edges) {
      deg[i]++;
      deg[j]++;
    }
    for (int d : deg)
      CHECK(d == n);
  }
}

} // TEST_SUITE
