#pragma once

#include "htg/graph.hpp"

namespace htg {

/// Connection set {t, r^i t, r^j t} of three reflections in the dihedral
/// group of degree n (rotation r, reflection t).
struct DihedralConnection {
  int n = 0;
  int i = 0;
  int j = 0;
};

struct DihedralCayley {
  int n = 0;
  AdjList graph;     // vertices 0..n-1 are r^k, n..2n-1 are r^k t
  bool connected = false;  // gcd(n, i, j) == 1
};

// Cayley graph on the dihedral group of order 2n with the given three
// reflections as connection set. Throws BadRange unless 0 < i < j < n.
DihedralCayley dihedral_cayley(const DihedralConnection& c);

}  // namespace htg
