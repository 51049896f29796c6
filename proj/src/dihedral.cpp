#include "htg/dihedral.hpp"

#include <numeric>

namespace htg {

DihedralCayley dihedral_cayley(const DihedralConnection& c) {
  if (!(0 < c.i && c.i < c.j && c.j < c.n)) {
    throw HtgError(Errc::BadRange, "need 0 < i < j < n");
  }
  DihedralCayley out;
  out.n = c.n;
  out.graph.nbr.assign(2 * static_cast<std::size_t>(c.n), {});
  // Rotations r^k are 0..n-1, reflections r^k t are n..2n-1. Right-multiplying
  // r^k by r^a t gives r^(k+a) t; multiplying r^k t by r^a t gives r^(k-a).
  for (int k = 0; k < c.n; ++k) {
    for (int a : {0, c.i, c.j}) {
      int w = c.n + (k + a) % c.n;
      out.graph.nbr[k].push_back(w);
      out.graph.nbr[w].push_back(k);
    }
  }
  out.connected = std::gcd(std::gcd(c.n, c.i), c.j) == 1;
  return out;
}

}  // namespace htg
