#pragma once

#include <vector>

#include "htg/graph.hpp"
#include "htg/vertex_seq.hpp"

namespace htg::hamilton {

enum class FillDirection { Down, Up };

/// Attachment data for a vertical fill between two adjacent columns.
struct FillSpec {
  int left_col = 0;
  int right_col = 0;
  std::vector<int> rows;  // strictly increasing, within [0, n)
  FillDirection direction = FillDirection::Down;
};

// One path per attachment row t_a, from (left_col, t_a) to (right_col, t_a).
// Going Down, path a sweeps rows t_a, t_a - 1, ..., 1 + t_{a-1} (cyclically)
// in the left column, crosses, and climbs back in the right column; Up is the
// mirror image. Together the k paths cover both columns exactly once.
std::vector<VertexSeq> vertical_fill(int n_rows, const FillSpec& spec);

// Constructive Hamilton cycle, defined for every valid parameter triple.
// m = 1 is the column cycle; m = 2 weaves 4-paths P_i joined by jump edges
// and reroutes through the column interiors when the weave is not spanning;
// m = 3 projects a jump-using Hamilton cycle of HTG(1,n,l) and fills the two
// added columns; m >= 4 subdivides the column-0/1 flat edges of the cycle of
// HTG(m-2,n,l) and fills.
VertexSeq hamilton_cycle(const HtgParams& p);

// A Hamilton cycle of HTG(1,n,l) distinct from the column cycle, hence using
// at least one jump edge. Tries the forward weave (needs gcd(n, l+1) == 2),
// then the backward weave (gcd(n, l-1) == 2), then exhaustive search through
// edge u_0 u_1, which must succeed because a trivalent graph has an even
// number of Hamilton cycles through every edge.
VertexSeq second_hamilton_cycle_htg1(int n, int l);

// Lifts a Hamilton path of HTG(1,n,l) from u_0 to u_j (j odd, >= 1 jump edge
// used) to a Hamilton path of HTG(m,n,l) for odd m >= 3 with endpoints
// (0,0) -> (0,j). With retarget, a flat edge is attached at the terminal row
// and the endpoints become (0,0) -> (m-1,j); this needs the base path to end
// on a vertical edge, since otherwise the terminal flat edge is already used
// by the jump projection (BadEndpoints).
VertexSeq lift_laceable_path(const HtgParams& base_params, const VertexSeq& base,
                             int m, bool retarget = false);

/// The two explicit automorphisms of HTG(3,n,l), as vertex permutations:
/// f shifts every row by 2; g maps (i,j) -> (i+1, j+1) for i in {0,1} and
/// (2,j) -> (0, 1+j+l).
struct Htg3Automorphisms {
  std::vector<int> f;
  std::vector<int> g;
};

// Both permutations are checked to preserve the edge set at construction.
Htg3Automorphisms htg3_automorphisms(int n, int l);

}  // namespace htg::hamilton
