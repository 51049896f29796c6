#include <algorithm>
#include <deque>

#include "htg/detail/search.hpp"
#include "htg/oracle.hpp"

namespace htg::oracle {

namespace {

using detail::bfs_distances;

// Sorted distance vector per vertex; cheap isomorphism-invariant candidate
// filter (no discriminating power on vertex-transitive graphs, but it rejects
// cross-family pairings early).
std::vector<std::vector<int>> distance_profiles(const AdjList& g) {
  std::vector<std::vector<int>> profiles(g.order());
  for (int v = 0; v < g.order(); ++v) {
    profiles[v] = bfs_distances(g, v);
    std::sort(profiles[v].begin(), profiles[v].end());
  }
  return profiles;
}

std::vector<std::vector<char>> adjacency_matrix(const AdjList& g) {
  std::vector<std::vector<char>> mat(g.order(),
                                     std::vector<char>(g.order(), 0));
  for (int v = 0; v < g.order(); ++v) {
    for (int w : g.nbr[v]) mat[v][w] = 1;
  }
  return mat;
}

// Backtracking extension of partial vertex maps from a into b, assigning
// vertices of a in BFS order so every new vertex is pinned by a mapped
// neighbor. Runs in either counting or existence mode.
class IsoSearcher {
 public:
  IsoSearcher(const AdjList& a, const AdjList& b, SearchBudget& budget)
      : a_(a), b_(b), budget_(budget), n_(a.order()) {
    prof_a_ = distance_profiles(a_);
    prof_b_ = (&a_ == &b_) ? prof_a_ : distance_profiles(b_);
    amat_ = adjacency_matrix(a_);
    bmat_ = (&a_ == &b_) ? amat_ : adjacency_matrix(b_);
    // BFS order from vertex 0 with the first-discovered neighbor as parent.
    order_.reserve(n_);
    parent_.assign(n_, -1);
    std::vector<char> seen(n_, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      order_.push_back(u);
      for (int w : a_.nbr[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          parent_[w] = u;
          queue.push_back(w);
        }
      }
    }
    img_.assign(n_, -1);
    pre_.assign(b_.order(), -1);
  }

  bool spanning() const { return static_cast<int>(order_.size()) == n_; }

  // Counts complete extensions with 0 -> first_image fixed, or stops at the
  // first one in existence mode.
  std::uint64_t run(int first_image, bool count_all, bool* aborted,
                    std::vector<int>* found_map = nullptr) {
    count_ = 0;
    abort_ = false;
    count_all_ = count_all;
    found_map_ = found_map;
    if (candidate_ok(0, first_image)) {
      assign(0, first_image);
      dfs(1);
      unassign(0, first_image);
    }
    if (aborted) *aborted = abort_;
    return count_;
  }

 private:
  bool candidate_ok(int v, int w) {
    if (pre_[w] != -1) return false;
    if (a_.nbr[v].size() != b_.nbr[w].size()) return false;
    if (prof_a_[v] != prof_b_[w]) return false;
    for (int x : a_.nbr[v]) {
      if (img_[x] != -1 && !bmat_[img_[x]][w]) return false;
    }
    for (int y : b_.nbr[w]) {
      if (pre_[y] != -1 && !amat_[pre_[y]][v]) return false;
    }
    return true;
  }

  void assign(int v, int w) {
    img_[v] = w;
    pre_[w] = v;
  }
  void unassign(int v, int w) {
    img_[v] = -1;
    pre_[w] = -1;
  }

  // Returns true to stop the whole search (found in existence mode / abort).
  bool dfs(int k) {
    if (!budget_.tick()) {
      abort_ = true;
      return true;
    }
    if (k == n_) {
      ++count_;
      if (found_map_) *found_map_ = img_;
      return !count_all_;
    }
    int v = order_[k];
    int pv = parent_[v];
    // v is adjacent to its parent, so its image must neighbor img(parent).
    for (int w : b_.nbr[img_[pv]]) {
      if (!candidate_ok(v, w)) continue;
      assign(v, w);
      bool stop = dfs(k + 1);
      unassign(v, w);
      if (stop) return true;
    }
    return false;
  }

  const AdjList& a_;
  const AdjList& b_;
  SearchBudget& budget_;
  int n_;
  std::vector<std::vector<int>> prof_a_, prof_b_;
  std::vector<std::vector<char>> amat_, bmat_;
  std::vector<int> order_, parent_;
  std::vector<int> img_, pre_;
  std::uint64_t count_ = 0;
  bool count_all_ = false;
  bool abort_ = false;
  std::vector<int>* found_map_ = nullptr;
};

}  // namespace

AutCount automorphism_count(const AdjList& g, SearchBudget& budget) {
  AutCount result;
  if (g.order() == 0) {
    result.count = 1;
    result.complete = true;
    return result;
  }
  IsoSearcher searcher(g, g, budget);
  if (!searcher.spanning()) {
    // Disconnected graphs are outside this oracle's contract.
    result.complete = false;
    result.consumed = budget.consumed();
    return result;
  }
  // Orbit-stabilizer: |Aut| = |orbit(0)| * |maps fixing 0|, with the orbit
  // established by extension search for each candidate image.
  bool aborted = false;
  std::uint64_t stabilizer = searcher.run(0, /*count_all=*/true, &aborted);
  if (aborted) {
    result.consumed = budget.consumed();
    return result;
  }
  std::uint64_t orbit = 1;
  for (int w = 1; w < g.order(); ++w) {
    std::uint64_t hits = searcher.run(w, /*count_all=*/false, &aborted);
    if (aborted) {
      result.consumed = budget.consumed();
      return result;
    }
    if (hits > 0) ++orbit;
  }
  result.count = orbit * stabilizer;
  result.complete = true;
  result.consumed = budget.consumed();
  return result;
}

AutCount automorphism_count(const HtgGraph& g, SearchBudget& budget) {
  return automorphism_count(g.adjacency(), budget);
}

std::optional<std::vector<int>> find_isomorphism(const AdjList& a,
                                                 const AdjList& b,
                                                 SearchBudget& budget) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (a.order() == 0) return std::vector<int>{};
  IsoSearcher searcher(a, b, budget);
  if (!searcher.spanning()) return std::nullopt;  // a disconnected
  std::vector<int> map;
  for (int w = 0; w < b.order(); ++w) {
    bool aborted = false;
    if (searcher.run(w, /*count_all=*/false, &aborted, &map) > 0) return map;
    if (aborted) return std::nullopt;
  }
  return std::nullopt;
}

bool isomorphic(const AdjList& a, const AdjList& b) {
  SearchBudget budget(kUnlimitedBudget);
  return find_isomorphism(a, b, budget).has_value();
}

bool isomorphic(const HtgGraph& a, const HtgGraph& b) {
  return isomorphic(a.adjacency(), b.adjacency());
}

}  // namespace htg::oracle
