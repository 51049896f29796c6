#include "htg/vertex_seq.hpp"

#include <vector>

namespace htg {

bool is_valid_seq(const HtgGraph& g, const VertexSeq& seq) {
  const auto& vs = seq.vertices;
  if (vs.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (const VertexId& v : vs) {
    if (v.i < 0 || v.i >= g.params().m || v.j < 0 || v.j >= g.params().n) {
      return false;
    }
    int id = g.id(v);
    if (seen[id]) return false;
    seen[id] = 1;
  }
  for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
    if (!g.edge_kind(g.id(vs[k]), g.id(vs[k + 1]))) return false;
  }
  if (seq.closed) {
    if (vs.size() < 3) return false;
    if (!g.edge_kind(g.id(vs.back()), g.id(vs.front()))) return false;
  }
  return true;
}

bool is_hamilton_cycle(const HtgGraph& g, const VertexSeq& seq) {
  return seq.closed && static_cast<int>(seq.vertices.size()) == g.order() &&
         is_valid_seq(g, seq);
}

bool is_hamilton_path(const HtgGraph& g, const VertexSeq& seq, VertexId s,
                      VertexId t) {
  return !seq.closed && static_cast<int>(seq.vertices.size()) == g.order() &&
         seq.vertices.front() == s && seq.vertices.back() == t &&
         is_valid_seq(g, seq);
}

int count_edges_of_kind(const HtgGraph& g, const VertexSeq& seq,
                        EdgeKind kind) {
  const auto& vs = seq.vertices;
  int count = 0;
  auto step = [&](const VertexId& a, const VertexId& b) {
    auto k = g.edge_kind(g.id(a), g.id(b));
    if (k && *k == kind) ++count;
  };
  for (std::size_t k = 0; k + 1 < vs.size(); ++k) step(vs[k], vs[k + 1]);
  if (seq.closed && vs.size() >= 3) step(vs.back(), vs.front());
  return count;
}

}  // namespace htg
