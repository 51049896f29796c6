#include <doctest.h>

#include <algorithm>
#include <set>

#include "htg/detail/search.hpp"
#include "htg/graph.hpp"
#include "htg/oracle.hpp"

using namespace htg;

TEST_CASE("build counts for the figure instance") {
  HtgGraph g = build({4, 10, 2});
  CHECK(g.order() == 40);
  CHECK(g.size() == 60);
}

TEST_CASE("HTG(1,6,3) is K_{3,3}") {
  HtgGraph g = build({1, 6, 3});
  CHECK(g.order() == 6);
  CHECK(g.size() == 9);
  // every opposite-parity pair adjacent
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      if (a == b) continue;
      bool adjacent = g.edge_kind(a, b).has_value();
      CHECK(adjacent == ((a + b) % 2 == 1));
    }
  }
}

TEST_CASE("HTG(2,4,2) has the expected flat and jump edges") {
  HtgGraph g = build({2, 4, 2});
  CHECK(g.order() == 8);
  CHECK(classify_edge(g, {0, 1}, {1, 1}) == EdgeKind::Flat);
  CHECK(classify_edge(g, {0, 3}, {1, 3}) == EdgeKind::Flat);
  CHECK(classify_edge(g, {1, 0}, {0, 2}) == EdgeKind::Jump);
  CHECK(classify_edge(g, {1, 2}, {0, 0}) == EdgeKind::Jump);
  CHECK(classify_edge(g, {0, 0}, {0, 1}) == EdgeKind::Vertical);
  CHECK_THROWS_AS(classify_edge(g, {0, 0}, {1, 1}), HtgError);
  CHECK_THROWS_AS(classify_edge(g, {0, 0}, {0, 2}), HtgError);
}

namespace {

void check_build_invariants(const HtgParams& p) {
  CAPTURE(p.m);
  CAPTURE(p.n);
  CAPTURE(p.l);
  HtgGraph g = build(p);
  const int order = g.order();
  REQUIRE(order == p.m * p.n);
  REQUIRE(g.size() == 3LL * p.m * p.n / 2);

  long long degree_total = 0;
  std::set<std::pair<int, int>> edges;
  int part_counts[2] = {0, 0};
  for (int v = 0; v < order; ++v) {
    ++part_counts[g.part(v)];
    std::set<int> nbrs;
    for (const HalfEdge& e : g.neighbors(v)) {
      REQUIRE(e.to >= 0);
      REQUIRE(e.to < order);
      REQUIRE(e.to != v);         // no loops
      nbrs.insert(e.to);
      edges.insert({std::min(v, e.to), std::max(v, e.to)});
      // every edge joins opposite parities
      REQUIRE(g.part(v) != g.part(e.to));
      // adjacency is symmetric with matching kind
      auto back = g.edge_kind(e.to, v);
      REQUIRE(back.has_value());
      REQUIRE(*back == e.kind);
    }
    REQUIRE(nbrs.size() == 3);    // simple and trivalent
    ++degree_total;
  }
  REQUIRE(static_cast<long long>(edges.size()) == g.size());
  REQUIRE(part_counts[0] == p.m * p.n / 2);
  REQUIRE(part_counts[1] == p.m * p.n / 2);
  REQUIRE(detail::component_count(g.adjacency()) == 1);
}

}  // namespace

TEST_CASE("build invariants hold across a sweep") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 4; n <= 24; n += 2) {
      if (m * n > 72) continue;
      for (int l = 0; l < n; ++l) {
        if (!is_valid_params(m, n, l)) continue;
        check_build_invariants({m, n, l});
      }
    }
  }
}

TEST_CASE("normalize yields an isomorphic graph (small sweep)") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 4; n <= 24; n += 2) {
      if (m * n > 24) continue;
      for (int l = 0; l < n; ++l) {
        if (!is_valid_params(m, n, l)) continue;
        HtgParams p{m, n, l};
        HtgParams q = normalize(p);
        CAPTURE(p.m);
        CAPTURE(p.n);
        CAPTURE(p.l);
        CHECK(oracle::isomorphic(build(p), build(q)));
      }
    }
  }
}

TEST_CASE("classify_edge matches the construction rules") {
  HtgGraph g = build({3, 8, 1});
  CHECK(classify_edge(g, {0, 0}, {0, 1}) == EdgeKind::Vertical);
  CHECK(classify_edge(g, {0, 7}, {0, 0}) == EdgeKind::Vertical);
  CHECK(classify_edge(g, {0, 1}, {1, 1}) == EdgeKind::Flat);
  CHECK(classify_edge(g, {1, 2}, {2, 2}) == EdgeKind::Flat);
  CHECK(classify_edge(g, {2, 1}, {0, 2}) == EdgeKind::Jump);
}
