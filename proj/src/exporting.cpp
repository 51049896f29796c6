#include "htg/exporting.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace htg {

namespace {

// Each edge once, keyed by (smaller id, larger id), in sorted order.
std::vector<std::tuple<int, int, EdgeKind>> sorted_edges(const HtgGraph& g) {
  std::vector<std::tuple<int, int, EdgeKind>> edges;
  edges.reserve(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.order(); ++v) {
    for (const HalfEdge& e : g.neighbors(v)) {
      if (v < e.to) edges.emplace_back(v, e.to, e.kind);
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) {
              return std::pair{std::get<0>(a), std::get<1>(a)} <
                     std::pair{std::get<0>(b), std::get<1>(b)};
            });
  return edges;
}

}  // namespace

std::string to_edge_list(const HtgGraph& g) {
  std::ostringstream out;
  for (const auto& [a, b, kind] : sorted_edges(g)) {
    VertexId va = g.vertex(a), vb = g.vertex(b);
    out << va.i << ',' << va.j << ' ' << vb.i << ',' << vb.j << ' '
        << edge_kind_name(kind) << '\n';
  }
  return out.str();
}

std::string to_dot(const HtgGraph& g) {
  std::ostringstream out;
  out << "graph htg {\n";
  for (const auto& [a, b, kind] : sorted_edges(g)) {
    VertexId va = g.vertex(a), vb = g.vertex(b);
    out << "  u_" << va.i << '_' << va.j << " -- u_" << vb.i << '_' << vb.j
        << " [kind=" << edge_kind_name(kind) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const HtgGraph& g) {
  nlohmann::json j;
  j["params"] = {{"m", g.params().m}, {"n", g.params().n}, {"l", g.params().l}};
  j["order"] = g.order();
  j["size"] = g.size();
  nlohmann::json adj = nlohmann::json::array();
  for (int v = 0; v < g.order(); ++v) {
    nlohmann::json row = nlohmann::json::array();
    for (const HalfEdge& e : g.neighbors(v)) {
      VertexId w = g.vertex(e.to);
      row.push_back({{"to", {w.i, w.j}}, {"kind", edge_kind_name(e.kind)}});
    }
    adj.push_back(std::move(row));
  }
  j["adjacency"] = std::move(adj);
  return j.dump(2) + "\n";
}

std::string export_graph(const HtgGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::EdgeList: return to_edge_list(g);
    case ExportFormat::Dot: return to_dot(g);
    case ExportFormat::Json: return to_json(g);
  }
  return {};
}

std::string seq_to_json(const VertexSeq& seq) {
  nlohmann::json j = nlohmann::json::array();
  for (const VertexId& v : seq.vertices) j.push_back({v.i, v.j});
  return j.dump() + "\n";
}

}  // namespace htg
