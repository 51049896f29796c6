#include <doctest.h>

#include <numeric>

#include "htg/detail/search.hpp"
#include "htg/dihedral.hpp"
#include "htg/oracle.hpp"

using namespace htg;

TEST_CASE("connectivity follows the gcd rule") {
  CHECK(dihedral_cayley({7, 1, 2}).connected);
  CHECK_FALSE(dihedral_cayley({6, 2, 4}).connected);
  CHECK_THROWS_AS(dihedral_cayley({6, 0, 2}), HtgError);
  CHECK_THROWS_AS(dihedral_cayley({6, 3, 3}), HtgError);
}

TEST_CASE("basic shape: order 2n, trivalent, bipartite") {
  DihedralCayley c = dihedral_cayley({5, 1, 2});
  CHECK(c.graph.order() == 10);
  CHECK(c.graph.size() == 15);
  for (const auto& nbrs : c.graph.nbr) CHECK(nbrs.size() == 3);
  CHECK_FALSE(detail::bipartition(c.graph).empty());
}

TEST_CASE("connectivity flag agrees with traversal for all small connections") {
  for (int n = 3; n <= 12; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        DihedralCayley c = dihedral_cayley({n, i, j});
        int components = detail::component_count(c.graph);
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(c.connected == (components == 1));
      }
    }
  }
}

TEST_CASE("Cay(D_5; t, rt, r^2 t) is a single-column graph on 10 vertices") {
  DihedralCayley c = dihedral_cayley({5, 1, 2});
  REQUIRE(c.connected);
  bool found = false;
  for (int l : valid_jumps(1, 10, true)) {
    if (oracle::isomorphic(c.graph, build({1, 10, l}).adjacency())) {
      found = true;
      break;
    }
  }
  CHECK(found);
}

TEST_CASE("every small connected three-reflection Cayley graph is an HTG") {
  for (int n = 3; n <= 12; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        DihedralCayley c = dihedral_cayley({n, i, j});
        if (!c.connected) continue;
        // the two reflections t, r^i t generate gcd(n,i) column cycles
        int m = std::gcd(n, i);
        int cols = 2 * n / m;
        bool found = false;
        if (cols >= 4) {
          for (int l : valid_jumps(m, cols, true)) {
            if (oracle::isomorphic(c.graph, build({m, cols, l}).adjacency())) {
              found = true;
              break;
            }
          }
        }
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("the subgraph on two reflections has gcd(n,i) cycles") {
  // Supporting fact for the column-count correspondence: with only t and
  // r^i t the graph splits into gcd(n,i) cycles of length 2n/gcd(n,i).
  for (int n = 4; n <= 10; ++n) {
    for (int i = 1; i < n; ++i) {
      AdjList sub;
      sub.nbr.assign(2 * n, {});
      for (int k = 0; k < n; ++k) {
        for (int a : {0, i}) {
          int w = n + (k + a) % n;
          sub.nbr[k].push_back(w);
          sub.nbr[w].push_back(k);
        }
      }
      CHECK(detail::component_count(sub) == std::gcd(n, i));
    }
  }
}
