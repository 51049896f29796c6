#pragma once

#include <string>

#include "htg/graph.hpp"
#include "htg/vertex_seq.hpp"

namespace htg {

enum class ExportFormat { EdgeList, Dot, Json };

// One edge per line, "i1,j1 i2,j2 kind", sorted by (row-major id of the
// smaller endpoint, id of the larger).
std::string to_edge_list(const HtgGraph& g);

// Undirected DOT, nodes named u_i_j, one edge statement per edge with a
// kind attribute.
std::string to_dot(const HtgGraph& g);

// JSON object with params, order, size and per-vertex adjacency; see the
// schema notes in the README.
std::string to_json(const HtgGraph& g);

std::string export_graph(const HtgGraph& g, ExportFormat format);

// JSON array of [i, j] pairs.
std::string seq_to_json(const VertexSeq& seq);

}  // namespace htg
