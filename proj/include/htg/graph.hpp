#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "htg/params.hpp"

namespace htg {

/// Vertex u_{i,j}: column i in [0,m), row j in [0,n).
struct VertexId {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

enum class EdgeKind { Vertical, Flat, Jump };

const char* edge_kind_name(EdgeKind kind);

struct HalfEdge {
  int to = -1;
  EdgeKind kind = EdgeKind::Vertical;
};

/// Untyped adjacency lists, used for Cayley graphs and the generic
/// search/isomorphism machinery.
struct AdjList {
  std::vector<std::vector<int>> nbr;

  int order() const { return static_cast<int>(nbr.size()); }
  long long size() const;
};

/// Immutable trivalent graph built from an HtgParams triple. Vertices are
/// numbered row-major (id = i*n + j). Neighbor slots are ordered
/// deterministically: vertical down, vertical up, then the flat/jump edge.
class HtgGraph {
 public:
  explicit HtgGraph(const HtgParams& p);

  const HtgParams& params() const { return params_; }
  int order() const { return static_cast<int>(adj_.size()); }
  long long size() const { return 3LL * order() / 2; }

  int id(VertexId v) const { return v.i * params_.n + v.j; }
  VertexId vertex(int id) const { return {id / params_.n, id % params_.n}; }

  const std::array<HalfEdge, 3>& neighbors(int id) const { return adj_[id]; }

  // Bipartition class of a vertex: parity of i + j.
  int part(int id) const {
    VertexId v = vertex(id);
    return (v.i + v.j) & 1;
  }

  std::optional<EdgeKind> edge_kind(int a, int b) const;

  AdjList adjacency() const;

 private:
  HtgParams params_;
  std::vector<std::array<HalfEdge, 3>> adj_;
};

HtgGraph build(const HtgParams& p);

// Kind of the edge between two adjacent vertices; throws NotAnEdge otherwise.
EdgeKind classify_edge(const HtgGraph& g, VertexId a, VertexId b);

}  // namespace htg
