#pragma once

#include <functional>
#include <vector>

#include "htg/graph.hpp"
#include "htg/oracle.hpp"

namespace htg::detail {

enum class Outcome { Found, NotFound, Budget };

// 2-coloring by BFS; empty when the graph contains an odd cycle.
std::vector<int> bipartition(const AdjList& g);

std::vector<int> bfs_distances(const AdjList& g, int src);

int component_count(const AdjList& g);

using WitnessPred = std::function<bool(const std::vector<int>&)>;

// Exhaustive DFS for a Hamilton path from s to t. Pruning keeps completeness:
// bipartite parity counts, connectivity of the unvisited region from the
// current vertex, and a degree bound on every unvisited vertex. An optional
// predicate filters acceptable witnesses (the search continues past complete
// paths that fail it).
Outcome hamilton_path_search(const AdjList& g, int s, int t,
                             oracle::SearchBudget& budget,
                             const WitnessPred& accept, std::vector<int>& out);

// Exhaustive search for a simple cycle of length exactly len. Roots the DFS
// at every vertex in increasing order, restricting the cycle's minimum vertex
// to the root, and prunes on exact reachability of the root through unvisited
// vertices within the remaining length.
Outcome cycle_of_length_search(const AdjList& g, int len,
                               oracle::SearchBudget& budget,
                               std::vector<int>* out);

}  // namespace htg::detail
