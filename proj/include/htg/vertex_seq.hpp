#pragma once

#include <vector>

#include "htg/graph.hpp"

namespace htg {

/// A walk through a graph stored as a vertex list. For cycles (closed = true)
/// the starting vertex is not repeated at the end.
struct VertexSeq {
  std::vector<VertexId> vertices;
  bool closed = false;
};

// Linear-time checks: consecutive vertices adjacent, closure edge present for
// cycles, no repeated vertex.
bool is_valid_seq(const HtgGraph& g, const VertexSeq& seq);

bool is_hamilton_cycle(const HtgGraph& g, const VertexSeq& seq);

bool is_hamilton_path(const HtgGraph& g, const VertexSeq& seq, VertexId s,
                      VertexId t);

// Number of edges of the given kind traversed by the sequence.
int count_edges_of_kind(const HtgGraph& g, const VertexSeq& seq, EdgeKind kind);

}  // namespace htg
