#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "htg/hamilton.hpp"
#include "htg/oracle.hpp"

using namespace htg;
using namespace htg::hamilton;

namespace {

// Independent cover/disjointness oracle for fill outputs.
void check_fill_cover(int n, const FillSpec& spec,
                      const std::vector<VertexSeq>& paths) {
  REQUIRE(paths.size() == spec.rows.size());
  std::set<std::pair<int, int>> seen;
  for (std::size_t a = 0; a < paths.size(); ++a) {
    const auto& vs = paths[a].vertices;
    REQUIRE(!vs.empty());
    CHECK(vs.front() == VertexId{spec.left_col, spec.rows[a]});
    CHECK(vs.back() == VertexId{spec.right_col, spec.rows[a]});
    for (const VertexId& v : vs) {
      bool fresh = seen.insert({v.i, v.j}).second;
      CHECK(fresh);  // pairwise vertex-disjoint
    }
    // consecutive fill vertices move by one row in a column or cross columns
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
      const VertexId &u = vs[k], &w = vs[k + 1];
      bool vertical = u.i == w.i && ((u.j - w.j + n) % n == 1 ||
                                     (w.j - u.j + n) % n == 1);
      bool cross = u.j == w.j && u.i != w.i;
      CHECK((vertical || cross));
    }
  }
  CHECK(seen.size() == 2 * static_cast<std::size_t>(n));  // exact cover
}

}  // namespace

TEST_CASE("vertical fill examples") {
  SUBCASE("two attachments split the columns") {
    FillSpec spec{1, 2, {1, 3}, FillDirection::Down};
    auto paths = vertical_fill(4, spec);
    check_fill_cover(4, spec, paths);
  }
  SUBCASE("a single attachment sweeps both columns") {
    FillSpec spec{1, 2, {1}, FillDirection::Down};
    auto paths = vertical_fill(4, spec);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].vertices.size() == 8);
    check_fill_cover(4, spec, paths);
  }
  SUBCASE("mixed larger instance") {
    FillSpec spec{1, 2, {1, 5, 7, 11}, FillDirection::Down};
    auto paths = vertical_fill(12, spec);
    check_fill_cover(12, spec, paths);
  }
}

TEST_CASE("vertical fill rejects bad rows") {
  CHECK_THROWS_AS(vertical_fill(4, {1, 2, {}, FillDirection::Down}), HtgError);
  CHECK_THROWS_AS(vertical_fill(4, {1, 2, {4}, FillDirection::Down}), HtgError);
  CHECK_THROWS_AS(vertical_fill(4, {1, 2, {-1}, FillDirection::Down}),
                  HtgError);
  CHECK_THROWS_AS(vertical_fill(4, {1, 2, {3, 1}, FillDirection::Down}),
                  HtgError);
  CHECK_THROWS_AS(vertical_fill(4, {1, 2, {1, 1}, FillDirection::Down}),
                  HtgError);
}

TEST_CASE("vertical fill cover property across directions and row sets") {
  // every attachment set of size <= 4, all even row counts up to 20
  for (int n = 4; n <= 20; n += 2) {
    for (int bits = 1; bits < (1 << n); ++bits) {
      if (std::popcount(static_cast<unsigned>(bits)) > 4) continue;
      std::vector<int> rows;
      for (int r = 0; r < n; ++r) {
        if (bits & (1 << r)) rows.push_back(r);
      }
      for (auto dir : {FillDirection::Down, FillDirection::Up}) {
        FillSpec spec{1, 2, rows, dir};
        check_fill_cover(n, spec, vertical_fill(n, spec));
      }
    }
  }
}

TEST_CASE("hamilton cycle examples") {
  SUBCASE("single column") {
    VertexSeq c = hamilton_cycle({1, 10, 3});
    REQUIRE(c.vertices.size() == 10);
    for (int j = 0; j < 10; ++j) CHECK(c.vertices[j] == VertexId{0, j});
    CHECK(is_hamilton_cycle(build({1, 10, 3}), c));
  }
  SUBCASE("two columns, pure weave") {
    VertexSeq c = hamilton_cycle({2, 4, 2});
    CHECK(c.vertices.size() == 8);
    CHECK(is_hamilton_cycle(build({2, 4, 2}), c));
    CHECK(c.vertices[0] == VertexId{0, 0});
  }
  SUBCASE("figure instance") {
    VertexSeq c = hamilton_cycle({4, 10, 2});
    CHECK(c.vertices.size() == 40);
    CHECK(is_hamilton_cycle(build({4, 10, 2}), c));
  }
}

TEST_CASE("hamilton cycle across a parameter sweep") {
  for (int m = 1; m <= 7; ++m) {
    for (int n = 4; n <= 14; n += 2) {
      for (int l = 0; l < n; ++l) {
        if (!is_valid_params(m, n, l)) continue;
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(l);
        REQUIRE(is_hamilton_cycle(build({m, n, l}), hamilton_cycle({m, n, l})));
      }
    }
  }
}

TEST_CASE("second hamilton cycle of the single-column graphs") {
  SUBCASE("forward weave example") {
    VertexSeq c = second_hamilton_cycle_htg1(10, 3);
    std::vector<int> rows;
    for (const VertexId& v : c.vertices) rows.push_back(v.j);
    CHECK(rows == std::vector<int>{0, 1, 4, 5, 8, 9, 2, 3, 6, 7});
  }
  SUBCASE("backward weave kicks in when the forward gcd fails") {
    REQUIRE(std::gcd(16, 3 + 1) != 2);
    REQUIRE(std::gcd(16, 3 - 1) == 2);
    VertexSeq c = second_hamilton_cycle_htg1(16, 3);
    CHECK(is_hamilton_cycle(build({1, 16, 3}), c));
  }
  SUBCASE("forward weave for (14,5)") {
    REQUIRE(std::gcd(14, 5 + 1) == 2);
    VertexSeq c = second_hamilton_cycle_htg1(14, 5);
    CHECK(is_hamilton_cycle(build({1, 14, 5}), c));
  }
  SUBCASE("search fallback when both weaves fail") {
    REQUIRE(std::gcd(12, 5 + 1) != 2);
    REQUIRE(std::gcd(12, 5 - 1) != 2);
    VertexSeq c = second_hamilton_cycle_htg1(12, 5);
    CHECK(is_hamilton_cycle(build({1, 12, 5}), c));
  }
}

TEST_CASE("second cycle differs from the column cycle and uses a jump") {
  for (int n = 6; n <= 20; n += 2) {
    for (int l : valid_jumps(1, n, false)) {
      CAPTURE(n);
      CAPTURE(l);
      HtgGraph g = build({1, n, l});
      VertexSeq c = second_hamilton_cycle_htg1(n, l);
      REQUIRE(is_hamilton_cycle(g, c));
      CHECK(count_edges_of_kind(g, c, EdgeKind::Jump) >= 1);
    }
  }
}

namespace {

VertexSeq find_base(const HtgParams& p, int j, bool for_retarget) {
  HtgGraph g = build(p);
  oracle::SearchBudget budget(oracle::kDefaultBudget);
  auto verdict = for_retarget
                     ? oracle::find_hamilton_path_for_retarget(
                           g, {0, 0}, {0, j}, budget)
                     : oracle::find_hamilton_path_using_jump(g, {0, 0}, {0, j},
                                                             budget);
  REQUIRE(verdict.kind == oracle::SearchVerdict::Kind::Found);
  return *verdict.witness;
}

}  // namespace

TEST_CASE("laceability lift examples") {
  HtgParams base_params{1, 6, 3};
  SUBCASE("plain lift keeps the column-0 terminal") {
    VertexSeq base = find_base(base_params, 1, false);
    VertexSeq lifted = lift_laceable_path(base_params, base, 3);
    CHECK(is_hamilton_path(build({3, 6, 3}), lifted, {0, 0}, {0, 1}));
  }
  SUBCASE("retarget moves the terminal to the last column") {
    VertexSeq base = find_base(base_params, 1, true);
    VertexSeq lifted = lift_laceable_path(base_params, base, 3, true);
    CHECK(is_hamilton_path(build({3, 6, 3}), lifted, {0, 0}, {2, 1}));
  }
  SUBCASE("a jump-free base is rejected") {
    VertexSeq column_path;
    for (int j = 0; j < 6; ++j) column_path.vertices.push_back({0, j});
    CHECK_THROWS_AS(lift_laceable_path(base_params, column_path, 3), HtgError);
    try {
      lift_laceable_path(base_params, column_path, 3);
    } catch (const HtgError& e) {
      CHECK(e.code() == Errc::NoJumpEdge);
    }
  }
  SUBCASE("bad endpoints are rejected") {
    VertexSeq base = find_base(base_params, 1, false);
    std::reverse(base.vertices.begin(), base.vertices.end());
    CHECK_THROWS_AS(lift_laceable_path(base_params, base, 3), HtgError);
  }
}

TEST_CASE("lift reaches larger odd column counts") {
  HtgParams base_params{1, 8, 3};
  for (int j : {1, 3, 5, 7}) {
    VertexSeq base = find_base(base_params, j, false);
    for (int m : {3, 5, 7}) {
      CAPTURE(j);
      CAPTURE(m);
      VertexSeq lifted = lift_laceable_path(base_params, base, m);
      CHECK(is_hamilton_path(build({m, 8, 3}), lifted, {0, 0}, {0, j}));
    }
    VertexSeq base2 = find_base(base_params, j, true);
    VertexSeq lifted = lift_laceable_path(base_params, base2, 5, true);
    CHECK(is_hamilton_path(build({5, 8, 3}), lifted, {0, 0}, {4, j}));
  }
}

TEST_CASE("the two explicit permutations of the three-column graphs") {
  SUBCASE("f shifts rows by two, so it has order n/2 on (3,6,3)") {
    Htg3Automorphisms maps = htg3_automorphisms(6, 3);
    std::vector<int> iterate(maps.f.size());
    std::iota(iterate.begin(), iterate.end(), 0);
    int order = 0;
    std::vector<int> current = iterate;
    do {
      std::vector<int> next(current.size());
      for (std::size_t v = 0; v < current.size(); ++v) {
        next[v] = maps.f[current[v]];
      }
      current = next;
      ++order;
    } while (current != iterate);
    CHECK(order == 3);
  }
  SUBCASE("g maps (0,0) to (1,1)") {
    Htg3Automorphisms maps = htg3_automorphisms(6, 3);
    HtgGraph g = build({3, 6, 3});
    CHECK(maps.g[g.id({0, 0})] == g.id({1, 1}));
  }
  SUBCASE("construction-time edge preservation across a sweep") {
    for (int n = 4; n <= 20; n += 2) {
      for (int l : valid_jumps(3, n, false)) {
        CHECK_NOTHROW(htg3_automorphisms(n, l));
      }
    }
  }
}

TEST_CASE("orbit of (0,0) under the two permutations covers its part") {
  for (int n : {6, 8, 10, 12}) {
    for (int l : valid_jumps(3, n, true)) {
      HtgGraph g = build({3, n, l});
      Htg3Automorphisms maps = htg3_automorphisms(n, l);
      std::set<int> orbit{g.id({0, 0})};
      std::vector<int> frontier{g.id({0, 0})};
      while (!frontier.empty()) {
        int v = frontier.back();
        frontier.pop_back();
        for (const auto& perm : {maps.f, maps.g}) {
          if (orbit.insert(perm[v]).second) frontier.push_back(perm[v]);
        }
      }
      CAPTURE(n);
      CAPTURE(l);
      CHECK(orbit.size() == static_cast<std::size_t>(3 * n / 2));
      for (int v : orbit) CHECK(g.part(v) == g.part(g.id({0, 0})));
    }
  }
}
