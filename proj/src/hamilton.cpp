#include "htg/hamilton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "htg/detail/search.hpp"
#include "htg/oracle.hpp"

namespace htg::hamilton {

namespace {

void check_rows(int n, const std::vector<int>& rows) {
  if (rows.empty()) {
    throw HtgError(Errc::BadRows, "need at least one attachment row");
  }
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a] < 0 || rows[a] >= n) {
      throw HtgError(Errc::BadRows, "attachment row out of range");
    }
    if (a > 0 && rows[a] <= rows[a - 1]) {
      throw HtgError(Errc::BadRows, "attachment rows must be strictly increasing");
    }
  }
}

// Hamilton cycle of the single-column graph together with the odd rows at
// which it uses jump edges. Not exposed: for l in {1, n-1} the jump edges
// coincide with vertical edges as vertex pairs, which is fine here because
// the weave tracks which steps are jumps, but such parameters are rejected
// by validation at the public surface.
struct AnnotatedCycle {
  VertexSeq seq;
  std::vector<char> jump_edge;  // one flag per edge k: vs[k] -> vs[k+1 mod N]
  std::vector<int> jump_rows;   // odd endpoints of the jump edges, sorted
};

AnnotatedCycle forward_weave(int n, int l) {
  // Vertical up then jump, advancing l+1 per block; spans iff gcd(n,l+1)=2.
  AnnotatedCycle out;
  out.seq.closed = true;
  int e = 0;
  do {
    out.seq.vertices.push_back({0, e});
    out.seq.vertices.push_back({0, (e + 1) % n});
    out.jump_edge.push_back(0);
    out.jump_edge.push_back(1);
    out.jump_rows.push_back((e + 1) % n);
    e = (e + l + 1) % n;
  } while (e != 0);
  return out;
}

AnnotatedCycle backward_weave(int n, int l) {
  // Jump taken in reverse then vertical up, advancing -(l-1) per block;
  // spans iff gcd(n,l-1)=2.
  AnnotatedCycle out;
  out.seq.closed = true;
  int v = 0;
  do {
    out.seq.vertices.push_back({0, v});
    int w = (v - l % n + n) % n;
    out.seq.vertices.push_back({0, w});
    out.jump_edge.push_back(1);
    out.jump_edge.push_back(0);
    out.jump_rows.push_back(w);
    v = (w + 1) % n;
  } while (v != 0);
  return out;
}

AnnotatedCycle htg1_second_cycle(int n, int l) {
  AnnotatedCycle out;
  if (std::gcd(n, l + 1) == 2) {
    out = forward_weave(n, l);
  } else if (std::gcd(n, l - 1) == 2) {
    out = backward_weave(n, l);
  } else {
    // Exhaustive search for a Hamilton cycle through the edge u_0 u_1 other
    // than the column cycle, i.e. a jump-using Hamilton path from u_0 to u_1
    // avoiding that edge. One exists: a trivalent graph has an even number
    // of Hamilton cycles through each edge, and the column cycle is one.
    HtgGraph g = build(validate_params(1, n, l));
    AdjList adj = g.adjacency();
    auto drop = [](std::vector<int>& lst, int v) {
      lst.erase(std::remove(lst.begin(), lst.end(), v), lst.end());
    };
    drop(adj.nbr[0], 1);
    drop(adj.nbr[1], 0);
    auto uses_jump = [&](const std::vector<int>& path) {
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        int d = (path[k + 1] - path[k] + n) % n;
        if (d != 1 && d != n - 1) return true;
      }
      return false;
    };
    oracle::SearchBudget budget(oracle::kUnlimitedBudget);
    std::vector<int> path;
    auto outcome =
        detail::hamilton_path_search(adj, 0, 1, budget, uses_jump, path);
    if (outcome != detail::Outcome::Found) {
      throw std::logic_error("second Hamilton cycle search failed");
    }
    out.seq.closed = true;
    for (int id : path) out.seq.vertices.push_back({0, id});
    for (std::size_t k = 0; k < path.size(); ++k) {
      int a = path[k], b = path[(k + 1) % path.size()];
      int d = (b - a + n) % n;
      bool jump = d != 1 && d != n - 1;
      out.jump_edge.push_back(jump);
      if (jump) out.jump_rows.push_back(a % 2 == 1 ? a : b);
    }
  }
  std::sort(out.jump_rows.begin(), out.jump_rows.end());
  return out;
}

VertexSeq column_cycle(int n) {
  VertexSeq c;
  c.closed = true;
  for (int j = 0; j < n; ++j) c.vertices.push_back({0, j});
  return c;
}

// Blocks of the two-column graph: climb column 0 through a run of g rows,
// cross on the top flat edge, descend column 1, jump to the next block. With
// g = gcd(n, l) the blocks tile both columns, so the cycle always spans.
// For gcd 2 the blocks are exactly the 4-paths P_i; larger gcds are the
// weave with each flat edge rerouted upward through the column interiors.
VertexSeq hamilton_cycle_m2(int n, int l) {
  int g = std::gcd(n, l);  // gcd(n, 0) == n covers the single-block case
  VertexSeq cycle;
  cycle.closed = true;
  int i = 0;
  do {
    for (int r = 0; r < g; ++r) cycle.vertices.push_back({0, (i + r) % n});
    for (int r = g - 1; r >= 0; --r) cycle.vertices.push_back({1, (i + r) % n});
    i = (i + l) % n;
  } while (i != 0);
  return cycle;
}

// Rewrites a cycle/path of the single-column graph as a spanning sequence of
// the three-column graph: vertical edges stay in column 0, each jump edge is
// expanded into flat + fill-through-columns-1-and-2 + jump, with the fills
// attached at the odd jump rows.
VertexSeq project_to_three_columns(const AnnotatedCycle& c, int n, int l,
                                   const std::vector<int>& attach_rows) {
  auto fills = vertical_fill(
      n, FillSpec{1, 2, attach_rows, FillDirection::Down});
  std::vector<int> fill_of_row(n, -1);
  for (std::size_t a = 0; a < attach_rows.size(); ++a) {
    fill_of_row[attach_rows[a]] = static_cast<int>(a);
  }

  const auto& vs = c.seq.vertices;
  VertexSeq out;
  out.closed = c.seq.closed;
  out.vertices.push_back({0, vs[0].j});
  std::size_t edges = vs.size() - (c.seq.closed ? 0 : 1);
  for (std::size_t k = 0; k < edges; ++k) {
    const VertexId& u = vs[k];
    const VertexId& v = vs[(k + 1) % vs.size()];
    bool last = c.seq.closed && k + 1 == vs.size();
    if (!c.jump_edge[k]) {
      if (!last) out.vertices.push_back({0, v.j});
      continue;
    }
    // Jump edge; the odd endpoint carries the flat edge and the fill.
    int a = (u.j % 2 == 1) ? u.j : v.j;
    const auto& fill = fills[fill_of_row[a]].vertices;
    if (u.j == a) {
      // forward traversal: (0,a) -flat- (1,a) -fill- (2,a) -jump- (0,a+l)
      for (const VertexId& w : fill) out.vertices.push_back(w);
      if (!last) out.vertices.push_back({0, v.j});
    } else {
      // reverse traversal: (0,a+l) -jump- (2,a) -fill- (1,a) -flat- (0,a)
      for (auto it = fill.rbegin(); it != fill.rend(); ++it) {
        out.vertices.push_back(*it);
      }
      if (!last) out.vertices.push_back({0, v.j});
    }
  }
  return out;
}

// m -> m+2 step: every flat edge the sequence uses between columns 0 and 1
// is subdivided through two fresh columns, reconnected by downward fills
// attached at those flat rows; every other vertex shifts right by two.
VertexSeq extend_by_two_columns(const HtgGraph& host, const VertexSeq& seq) {
  const int n = host.params().n;
  const auto& vs = seq.vertices;

  std::vector<int> rows;
  std::size_t edges = vs.size() - (seq.closed ? 0 : 1);
  auto is_col01_flat = [&](const VertexId& u, const VertexId& v) {
    if (std::min(u.i, v.i) != 0 || std::max(u.i, v.i) != 1) return false;
    return host.edge_kind(host.id(u), host.id(v)) == EdgeKind::Flat;
  };
  for (std::size_t k = 0; k < edges; ++k) {
    const VertexId& u = vs[k];
    const VertexId& v = vs[(k + 1) % vs.size()];
    if (is_col01_flat(u, v)) rows.push_back(u.j);
  }
  if (rows.empty()) {
    throw std::logic_error("spanning sequence uses no column-0/1 flat edge");
  }
  std::sort(rows.begin(), rows.end());

  auto fills = vertical_fill(n, FillSpec{1, 2, rows, FillDirection::Down});
  std::vector<int> fill_of_row(n, -1);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    fill_of_row[rows[a]] = static_cast<int>(a);
  }

  auto shift = [](const VertexId& v) -> VertexId {
    return v.i == 0 ? v : VertexId{v.i + 2, v.j};
  };

  VertexSeq out;
  out.closed = seq.closed;
  out.vertices.push_back(shift(vs[0]));
  for (std::size_t k = 0; k < edges; ++k) {
    const VertexId& u = vs[k];
    const VertexId& v = vs[(k + 1) % vs.size()];
    bool last = seq.closed && k + 1 == vs.size();
    if (is_col01_flat(u, v)) {
      const auto& fill = fills[fill_of_row[u.j]].vertices;
      if (u.i == 0) {
        for (const VertexId& w : fill) out.vertices.push_back(w);
      } else {
        for (auto it = fill.rbegin(); it != fill.rend(); ++it) {
          out.vertices.push_back(*it);
        }
      }
    }
    if (!last) out.vertices.push_back(shift(v));
  }
  return out;
}

}  // namespace

std::vector<VertexSeq> vertical_fill(int n_rows, const FillSpec& spec) {
  check_rows(n_rows, spec.rows);
  const int k = static_cast<int>(spec.rows.size());
  std::vector<VertexSeq> paths;
  paths.reserve(k);
  for (int a = 0; a < k; ++a) {
    int t = spec.rows[a];
    VertexSeq path;
    int r = t;
    if (spec.direction == FillDirection::Down) {
      int stop = (spec.rows[(a - 1 + k) % k] + 1) % n_rows;
      path.vertices.push_back({spec.left_col, r});
      while (r != stop) {
        r = (r - 1 + n_rows) % n_rows;
        path.vertices.push_back({spec.left_col, r});
      }
      path.vertices.push_back({spec.right_col, r});
      while (r != t) {
        r = (r + 1) % n_rows;
        path.vertices.push_back({spec.right_col, r});
      }
    } else {
      int stop = (spec.rows[(a + 1) % k] - 1 + n_rows) % n_rows;
      path.vertices.push_back({spec.left_col, r});
      while (r != stop) {
        r = (r + 1) % n_rows;
        path.vertices.push_back({spec.left_col, r});
      }
      path.vertices.push_back({spec.right_col, r});
      while (r != t) {
        r = (r - 1 + n_rows) % n_rows;
        path.vertices.push_back({spec.right_col, r});
      }
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

VertexSeq hamilton_cycle(const HtgParams& p0) {
  HtgParams p = validate_params(p0.m, p0.n, p0.l);
  if (p.m == 1) return column_cycle(p.n);
  if (p.m == 2) return hamilton_cycle_m2(p.n, p.l);
  if (p.m == 3) {
    AnnotatedCycle c = htg1_second_cycle(p.n, p.l);
    return project_to_three_columns(c, p.n, p.l, c.jump_rows);
  }
  VertexSeq smaller = hamilton_cycle(HtgParams{p.m - 2, p.n, p.l});
  HtgGraph host = build(HtgParams{p.m - 2, p.n, p.l});
  return extend_by_two_columns(host, smaller);
}

VertexSeq second_hamilton_cycle_htg1(int n, int l) {
  validate_params(1, n, l);
  return htg1_second_cycle(n, l).seq;
}

VertexSeq lift_laceable_path(const HtgParams& base_params, const VertexSeq& base,
                             int m, bool retarget) {
  HtgParams p1 = validate_params(base_params.m, base_params.n, base_params.l);
  if (p1.m != 1) {
    throw HtgError(Errc::BadEndpoints, "base path must live in a single-column graph");
  }
  if (m < 3 || m % 2 == 0) {
    throw HtgError(Errc::BadEndpoints, "lift target m must be odd and >= 3");
  }
  const int n = p1.n, l = p1.l;
  HtgGraph g1 = build(p1);
  if (base.closed || base.vertices.empty() ||
      !(base.vertices.front() == VertexId{0, 0})) {
    throw HtgError(Errc::BadEndpoints, "base must be a path starting at u_{0,0}");
  }
  int j = base.vertices.back().j;
  if (j % 2 != 1 ||
      !is_hamilton_path(g1, base, VertexId{0, 0}, VertexId{0, j})) {
    throw HtgError(Errc::BadEndpoints,
                   "base must be a Hamilton path from u_{0,0} to an odd row");
  }

  AnnotatedCycle annotated;
  annotated.seq = base;
  for (std::size_t k = 0; k + 1 < base.vertices.size(); ++k) {
    int a = base.vertices[k].j, b = base.vertices[k + 1].j;
    int d = (b - a + n) % n;
    bool jump = d != 1 && d != n - 1;
    annotated.jump_edge.push_back(jump);
    if (jump) annotated.jump_rows.push_back(a % 2 == 1 ? a : b);
  }
  if (annotated.jump_rows.empty()) {
    throw HtgError(Errc::NoJumpEdge, "base path uses no jump edge");
  }
  std::sort(annotated.jump_rows.begin(), annotated.jump_rows.end());

  std::vector<int> attach = annotated.jump_rows;
  if (retarget) {
    if (std::find(attach.begin(), attach.end(), j) != attach.end()) {
      throw HtgError(Errc::BadEndpoints,
                     "retarget needs the base to end on a vertical edge");
    }
    attach.push_back(j);
  }
  std::sort(attach.begin(), attach.end());

  VertexSeq lifted = project_to_three_columns(annotated, n, l, attach);
  if (retarget) {
    // Continue from the terminal (0,j) across the flat edge and through the
    // fill attached at row j, ending at (2,j).
    auto fills = vertical_fill(n, FillSpec{1, 2, attach, FillDirection::Down});
    std::size_t idx =
        std::find(attach.begin(), attach.end(), j) - attach.begin();
    for (const VertexId& w : fills[idx].vertices) lifted.vertices.push_back(w);
  }

  int cur_m = 3;
  while (cur_m < m) {
    HtgGraph host = build(HtgParams{cur_m, n, l});
    lifted = extend_by_two_columns(host, lifted);
    cur_m += 2;
  }
  return lifted;
}

Htg3Automorphisms htg3_automorphisms(int n, int l) {
  HtgParams p = validate_params(3, n, l);
  HtgGraph g = build(p);
  Htg3Automorphisms out;
  out.f.resize(g.order());
  out.g.resize(g.order());
  for (int id = 0; id < g.order(); ++id) {
    VertexId v = g.vertex(id);
    out.f[id] = g.id({v.i, (v.j + 2) % n});
    out.g[id] = v.i < 2 ? g.id({v.i + 1, (v.j + 1) % n})
                        : g.id({0, (1 + v.j + l) % n});
  }
  for (const auto& perm : {out.f, out.g}) {
    for (int id = 0; id < g.order(); ++id) {
      for (const HalfEdge& e : g.neighbors(id)) {
        if (!g.edge_kind(perm[id], perm[e.to])) {
          throw std::logic_error("permutation does not preserve the edge set");
        }
      }
    }
  }
  return out;
}

}  // namespace htg::hamilton
