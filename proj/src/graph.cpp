#include "htg/graph.hpp"

#include <cassert>

namespace htg {

const char* edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Vertical: return "vertical";
    case EdgeKind::Flat: return "flat";
    case EdgeKind::Jump: return "jump";
  }
  return "?";
}

long long AdjList::size() const {
  long long deg = 0;
  for (const auto& v : nbr) deg += static_cast<long long>(v.size());
  return deg / 2;
}

HtgGraph::HtgGraph(const HtgParams& p)
    : params_(validate_params(p.m, p.n, p.l)) {
  const int m = params_.m, n = params_.n, l = params_.l;
  adj_.assign(static_cast<std::size_t>(m) * n, {});

  auto at = [&](int i, int j) -> std::array<HalfEdge, 3>& {
    return adj_[static_cast<std::size_t>(i) * n + j];
  };

  // Vertical edges close each column into an n-cycle.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      at(i, j)[0] = {i * n + (j - 1 + n) % n, EdgeKind::Vertical};
      at(i, j)[1] = {i * n + (j + 1) % n, EdgeKind::Vertical};
    }
  }
  // Flat edges between successive columns at rows of opposite parity.
  for (int i = 0; i + 1 < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((i + j) % 2 == 1) {
        at(i, j)[2] = {(i + 1) * n + j, EdgeKind::Flat};
        at(i + 1, j)[2] = {i * n + j, EdgeKind::Flat};
      }
    }
  }
  // Jump edges wrap from the last column back to column 0, shifting rows by l.
  for (int j = 0; j < n; ++j) {
    if (j % 2 == m % 2) {
      int k = (j + l) % n;
      at(m - 1, j)[2] = {0 * n + k, EdgeKind::Jump};
      at(0, k)[2] = {(m - 1) * n + j, EdgeKind::Jump};
    }
  }

  for (const auto& slots : adj_) {
    assert(slots[2].to >= 0);
    (void)slots;
  }
}

std::optional<EdgeKind> HtgGraph::edge_kind(int a, int b) const {
  for (const HalfEdge& e : adj_[a]) {
    if (e.to == b) return e.kind;
  }
  return std::nullopt;
}

AdjList HtgGraph::adjacency() const {
  AdjList out;
  out.nbr.resize(adj_.size());
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    for (const HalfEdge& e : adj_[v]) out.nbr[v].push_back(e.to);
  }
  return out;
}

HtgGraph build(const HtgParams& p) { return HtgGraph(p); }

EdgeKind classify_edge(const HtgGraph& g, VertexId a, VertexId b) {
  const HtgParams& p = g.params();
  if (a.i < 0 || a.i >= p.m || a.j < 0 || a.j >= p.n || b.i < 0 ||
      b.i >= p.m || b.j < 0 || b.j >= p.n) {
    throw HtgError(Errc::NotAnEdge, "vertex out of range");
  }
  auto kind = g.edge_kind(g.id(a), g.id(b));
  if (!kind) {
    throw HtgError(Errc::NotAnEdge, "vertices are not adjacent");
  }
  return *kind;
}

}  // namespace htg
