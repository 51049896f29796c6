#include "htg/oracle.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "htg/detail/search.hpp"

namespace htg::oracle {

namespace {

VertexSeq ids_to_seq(const HtgGraph& g, const std::vector<int>& ids,
                     bool closed) {
  VertexSeq seq;
  seq.closed = closed;
  seq.vertices.reserve(ids.size());
  for (int id : ids) seq.vertices.push_back(g.vertex(id));
  return seq;
}

SearchVerdict run_path_search(const HtgGraph& g, VertexId s, VertexId t,
                              SearchBudget& budget,
                              const detail::WitnessPred& accept) {
  if (s == t) {
    throw HtgError(Errc::BadEndpoints, "endpoints must differ");
  }
  std::vector<int> ids;
  auto outcome =
      detail::hamilton_path_search(g.adjacency(), g.id(s), g.id(t), budget,
                                   accept, ids);
  SearchVerdict verdict;
  verdict.consumed = budget.consumed();
  switch (outcome) {
    case detail::Outcome::Found: {
      verdict.kind = SearchVerdict::Kind::Found;
      VertexSeq seq = ids_to_seq(g, ids, false);
      if (!is_hamilton_path(g, seq, s, t)) {
        throw std::logic_error("search produced an invalid witness");
      }
      verdict.witness = std::move(seq);
      break;
    }
    case detail::Outcome::NotFound:
      verdict.kind = SearchVerdict::Kind::NotFound;
      break;
    case detail::Outcome::Budget:
      verdict.kind = SearchVerdict::Kind::BudgetExceeded;
      break;
  }
  return verdict;
}

detail::WitnessPred jump_pred(const HtgGraph& g, bool vertical_tail) {
  return [&g, vertical_tail](const std::vector<int>& path) {
    bool has_jump = false;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      if (g.edge_kind(path[k], path[k + 1]) == EdgeKind::Jump) {
        has_jump = true;
        break;
      }
    }
    if (!has_jump) return false;
    if (vertical_tail) {
      std::size_t last = path.size() - 1;
      if (g.edge_kind(path[last - 1], path[last]) != EdgeKind::Vertical) {
        return false;
      }
    }
    return true;
  };
}

}  // namespace

SearchVerdict find_hamilton_path(const HtgGraph& g, VertexId s, VertexId t,
                                 SearchBudget& budget) {
  return run_path_search(g, s, t, budget, nullptr);
}

SearchVerdict find_hamilton_path_using_jump(const HtgGraph& g, VertexId s,
                                            VertexId t, SearchBudget& budget) {
  return run_path_search(g, s, t, budget, jump_pred(g, false));
}

SearchVerdict find_hamilton_path_for_retarget(const HtgGraph& g, VertexId s,
                                              VertexId t,
                                              SearchBudget& budget) {
  return run_path_search(g, s, t, budget, jump_pred(g, true));
}

LaceabilityVerdict is_hamilton_laceable(const HtgParams& p,
                                        std::uint64_t budget_per_pair,
                                        int jobs) {
  HtgGraph g = build(p);
  const VertexId source{0, 0};
  std::vector<VertexId> targets;
  for (int id = 0; id < g.order(); ++id) {
    if (g.part(id) != g.part(g.id(source))) targets.push_back(g.vertex(id));
  }

  std::vector<SearchVerdict::Kind> kinds(targets.size());
  std::vector<std::uint64_t> used(targets.size(), 0);
  auto work = [&](std::size_t k) {
    SearchBudget budget(budget_per_pair);
    SearchVerdict v = find_hamilton_path(g, source, targets[k], budget);
    kinds[k] = v.kind;
    used[k] = v.consumed;
  };
  if (jobs <= 1) {
    for (std::size_t k = 0; k < targets.size(); ++k) work(k);
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex mu;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t k;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next >= targets.size()) return;
            k = next++;
          }
          work(k);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  LaceabilityVerdict out;
  for (std::uint64_t u : used) out.consumed += u;
  bool inconclusive = false;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    if (kinds[k] == SearchVerdict::Kind::NotFound) {
      out.kind = LaceabilityVerdict::Kind::Counterexample;
      out.counterexample = {source, targets[k]};
      return out;
    }
    if (kinds[k] == SearchVerdict::Kind::BudgetExceeded) inconclusive = true;
  }
  out.kind = inconclusive ? LaceabilityVerdict::Kind::Inconclusive
                          : LaceabilityVerdict::Kind::Laceable;
  return out;
}

int girth(const AdjList& g) {
  const int n = g.order();
  int best = INT_MAX;
  std::vector<int> dist(n), parent(n);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) continue;  // cannot improve
      for (int w : g.nbr[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

int girth(const HtgGraph& g) { return girth(g.adjacency()); }

CycleSpectrum cycle_spectrum(const HtgGraph& g,
                             std::uint64_t budget_per_length) {
  CycleSpectrum spectrum;
  AdjList adj = g.adjacency();
  for (int len = 4; len <= g.order(); len += 2) {
    SearchBudget budget(budget_per_length);
    std::vector<int> witness;
    auto outcome = detail::cycle_of_length_search(adj, len, budget, &witness);
    spectrum.consumed += budget.consumed();
    if (outcome == detail::Outcome::Found) {
      VertexSeq cycle = ids_to_seq(g, witness, true);
      if (static_cast<int>(cycle.vertices.size()) != len ||
          !is_valid_seq(g, cycle)) {
        throw std::logic_error("cycle search produced an invalid witness");
      }
      spectrum.present.insert(len);
    } else if (outcome == detail::Outcome::Budget) {
      spectrum.inconclusive.insert(len);
    }
  }
  return spectrum;
}

DistanceTable distances(const HtgGraph& g, VertexId s) {
  DistanceTable table;
  table.source = s;
  table.dist = detail::bfs_distances(g.adjacency(), g.id(s));
  return table;
}

int diameter(const HtgGraph& g, bool single_source) {
  AdjList adj = g.adjacency();
  int sources = single_source ? 1 : g.order();
  int best = 0;
  for (int s = 0; s < sources; ++s) {
    for (int d : detail::bfs_distances(adj, s)) best = std::max(best, d);
  }
  return best;
}

namespace {

// Jump-edge traversal direction: true for the constructed orientation, i.e.
// from column m-1 back to column 0 (for the single-column graphs, from the
// odd row to the even row).
bool jump_forward(const HtgGraph& g, VertexId u, VertexId v) {
  if (g.params().m >= 2) return u.i == g.params().m - 1;
  return u.j % 2 == 1;
}

struct PathScanner {
  const HtgGraph& g;
  std::vector<LemmaViolation>* out;
  VertexId s, t;

  void scan(const std::vector<VertexId>& path) {
    bool fwd = false, bwd = false;
    int last_jump_index = -1;
    std::vector<int> prev_flat(g.params().m, -1);
    bool violation_a = false, violation_b = false;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      EdgeKind kind = *g.edge_kind(g.id(path[k]), g.id(path[k + 1]));
      int e = static_cast<int>(k);
      if (kind == EdgeKind::Jump) {
        (jump_forward(g, path[k], path[k + 1]) ? fwd : bwd) = true;
        last_jump_index = e;
      } else if (kind == EdgeKind::Flat) {
        int col = std::min(path[k].i, path[k + 1].i);
        if (prev_flat[col] >= 0 && last_jump_index < prev_flat[col]) {
          violation_b = true;
        }
        prev_flat[col] = e;
      }
    }
    violation_a = fwd && bwd;
    if (violation_a) {
      out->push_back({LemmaViolation::Lemma::JumpDirection, s, t, path});
    }
    if (violation_b) {
      out->push_back({LemmaViolation::Lemma::FlatSeparation, s, t, path});
    }
  }
};

}  // namespace

std::string verdict_json(const SearchVerdict& v) {
  nlohmann::json j;
  switch (v.kind) {
    case SearchVerdict::Kind::Found: j["verdict"] = "found"; break;
    case SearchVerdict::Kind::NotFound: j["verdict"] = "not-found"; break;
    case SearchVerdict::Kind::BudgetExceeded:
      j["verdict"] = "budget-exceeded";
      break;
  }
  j["consumed"] = v.consumed;
  if (v.witness) {
    nlohmann::json seq = nlohmann::json::array();
    for (const VertexId& u : v.witness->vertices) seq.push_back({u.i, u.j});
    j["witness"] = std::move(seq);
    j["closed"] = v.witness->closed;
  }
  return j.dump() + "\n";
}

std::string verdict_json(const LaceabilityVerdict& v) {
  nlohmann::json j;
  switch (v.kind) {
    case LaceabilityVerdict::Kind::Laceable: j["verdict"] = "laceable"; break;
    case LaceabilityVerdict::Kind::Counterexample:
      j["verdict"] = "counterexample";
      break;
    case LaceabilityVerdict::Kind::Inconclusive:
      j["verdict"] = "inconclusive";
      break;
  }
  j["consumed"] = v.consumed;
  if (v.counterexample) {
    j["pair"] = {{v.counterexample->first.i, v.counterexample->first.j},
                 {v.counterexample->second.i, v.counterexample->second.j}};
  }
  return j.dump() + "\n";
}

std::vector<LemmaViolation> shortest_path_lemma_audit(const HtgParams& p,
                                                      std::uint64_t path_cap) {
  HtgGraph g = build(p);
  AdjList adj = g.adjacency();
  const int n = g.order();
  std::vector<LemmaViolation> violations;

  std::vector<std::vector<int>> preds(n);
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist = detail::bfs_distances(adj, s);
    for (int v = 0; v < n; ++v) {
      preds[v].clear();
      for (int w : adj.nbr[v]) {
        if (dist[w] + 1 == dist[v]) preds[v].push_back(w);
      }
    }
    for (int t = 0; t < n; ++t) {
      if (t == s) continue;
      // Enumerate the shortest-path DAG backwards from t.
      std::uint64_t count = 0;
      std::vector<VertexId> stack_path;
      PathScanner scanner{g, &violations, g.vertex(s), g.vertex(t)};
      std::vector<int> walk;
      auto dfs = [&](auto&& self, int v) -> void {
        walk.push_back(v);
        if (v == s) {
          if (++count > path_cap) {
            throw HtgError(Errc::TooLarge, "shortest path enumeration cap hit");
          }
          std::vector<VertexId> path;
          path.reserve(walk.size());
          for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
            path.push_back(g.vertex(*it));
          }
          scanner.scan(path);
        } else {
          for (int w : preds[v]) self(self, w);
        }
        walk.pop_back();
      };
      dfs(dfs, t);
    }
  }
  return violations;
}

}  // namespace htg::oracle
