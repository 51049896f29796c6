#include "htg/detail/search.hpp"

#include <deque>

namespace htg::detail {

std::vector<int> bipartition(const AdjList& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.nbr[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return {};
        }
      }
    }
  }
  return color;
}

std::vector<int> bfs_distances(const AdjList& g, int src) {
  std::vector<int> dist(g.order(), -1);
  dist[src] = 0;
  std::deque<int> queue{src};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.nbr[u]) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int component_count(const AdjList& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  int components = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.nbr[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

namespace {

class HamPathSearcher {
 public:
  HamPathSearcher(const AdjList& g, oracle::SearchBudget& budget,
                  const WitnessPred& accept)
      : g_(g), budget_(budget), accept_(accept), n_(g.order()) {
    part_ = bipartition(g);
    visited_.assign(n_, 0);
    mark_.assign(n_, 0);
  }

  Outcome run(int s, int t, std::vector<int>& out) {
    s_ = s;
    t_ = t;
    ucnt_[0] = ucnt_[1] = 0;
    if (!part_.empty()) {
      for (int v = 0; v < n_; ++v) ++ucnt_[part_[v]];
      --ucnt_[part_[s]];
    }
    path_.clear();
    path_.reserve(n_);
    path_.push_back(s);
    visited_[s] = 1;
    bool found = dfs(s);
    if (found) {
      out = path_;
      return Outcome::Found;
    }
    return budget_.exhausted() ? Outcome::Budget : Outcome::NotFound;
  }

 private:
  bool dfs(int cur) {
    if (!budget_.tick()) return false;
    if (static_cast<int>(path_.size()) == n_) {
      return cur == t_ && (!accept_ || accept_(path_));
    }
    if (!feasible(cur)) return false;
    for (int nb : g_.nbr[cur]) {
      if (visited_[nb]) continue;
      if (nb == t_ && static_cast<int>(path_.size()) != n_ - 1) continue;
      visited_[nb] = 1;
      if (!part_.empty()) --ucnt_[part_[nb]];
      path_.push_back(nb);
      if (dfs(nb)) return true;
      path_.pop_back();
      if (!part_.empty()) ++ucnt_[part_[nb]];
      visited_[nb] = 0;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  bool feasible(int cur) {
    // An alternating sequence covering the rest must end at t.
    if (!part_.empty()) {
      int a = part_[cur];
      int diff = ucnt_[1 - a] - ucnt_[a];
      if (diff == 0) {
        if (part_[t_] != a) return false;
      } else if (diff == 1) {
        if (part_[t_] == a) return false;
      } else {
        return false;
      }
    }
    // Every unvisited vertex still needs two usable edges (one for t).
    for (int v = 0; v < n_; ++v) {
      if (visited_[v]) continue;
      int avail = 0;
      for (int nb : g_.nbr[v]) {
        if (!visited_[nb] || nb == cur) ++avail;
      }
      if (avail < (v == t_ ? 1 : 2)) return false;
    }
    // The unvisited region must be reachable from the current vertex.
    int unvisited = n_ - static_cast<int>(path_.size());
    ++gen_;
    stack_.clear();
    int reached = 0;
    for (int nb : g_.nbr[cur]) {
      if (!visited_[nb] && mark_[nb] != gen_) {
        mark_[nb] = gen_;
        stack_.push_back(nb);
        ++reached;
      }
    }
    while (!stack_.empty()) {
      int v = stack_.back();
      stack_.pop_back();
      for (int nb : g_.nbr[v]) {
        if (!visited_[nb] && mark_[nb] != gen_) {
          mark_[nb] = gen_;
          stack_.push_back(nb);
          ++reached;
        }
      }
    }
    return reached == unvisited;
  }

  const AdjList& g_;
  oracle::SearchBudget& budget_;
  const WitnessPred& accept_;
  int n_;
  int s_ = 0, t_ = 0;
  std::vector<int> part_;
  std::vector<char> visited_;
  std::vector<int> path_;
  std::vector<int> mark_;
  std::vector<int> stack_;
  int gen_ = 0;
  int ucnt_[2] = {0, 0};
};

class CycleSearcher {
 public:
  CycleSearcher(const AdjList& g, oracle::SearchBudget& budget)
      : g_(g), budget_(budget), n_(g.order()) {
    part_ = bipartition(g);
    visited_.assign(n_, 0);
    mark_c_.assign(n_, 0);
    mark_r_.assign(n_, 0);
    dist_c_.assign(n_, 0);
    dist_r_.assign(n_, 0);
  }

  Outcome run(int len, std::vector<int>* out) {
    len_ = len;
    for (int root = 0; root < n_; ++root) {
      root_ = root;
      path_.clear();
      path_.push_back(root);
      visited_[root] = 1;
      bool found = dfs(root);
      visited_[root] = 0;
      if (found) {
        if (out) *out = path_;
        return Outcome::Found;
      }
      if (budget_.exhausted()) return Outcome::Budget;
    }
    return Outcome::NotFound;
  }

 private:
  bool dfs(int cur) {
    if (!budget_.tick()) return false;
    int k = static_cast<int>(path_.size());
    if (k == len_) {
      // Close the cycle; the orientation with the smaller second vertex is
      // the canonical one.
      if (path_[1] > cur) return false;
      for (int nb : g_.nbr[cur]) {
        if (nb == root_) return true;
      }
      return false;
    }
    int order[3];
    int candidates = feasible(cur, len_ - k + 1, order);
    for (int idx = 0; idx < candidates; ++idx) {
      int nb = order[idx];
      visited_[nb] = 1;
      path_.push_back(nb);
      if (dfs(nb)) return true;
      path_.pop_back();
      visited_[nb] = 0;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  // The remaining walk must return to the root in exactly `remaining` more
  // edges through unvisited vertices above the root. Both-ends BFS over that
  // region: the current distance to the root must fit and have the right
  // parity, and the region of vertices with dist(cur,v) + dist(v,root) <=
  // remaining must hold enough vertices of each part to supply the
  // alternating interior. Returns the number of viable next steps, ordered
  // farthest-from-root first, or 0 when the state is infeasible.
  int feasible(int cur, int remaining, int* order) {
    // Reverse BFS from the root through unvisited vertices.
    ++gen_;
    stack_.clear();
    stack_.push_back(root_);
    mark_r_[root_] = gen_;
    dist_r_[root_] = 0;
    std::size_t head = 0;
    while (head < stack_.size()) {
      int v = stack_[head++];
      if (dist_r_[v] >= remaining) break;
      for (int nb : g_.nbr[v]) {
        if (nb < root_ || visited_[nb] || mark_r_[nb] == gen_) continue;
        mark_r_[nb] = gen_;
        dist_r_[nb] = dist_r_[v] + 1;
        stack_.push_back(nb);
      }
    }
    // cur is visited, so the reverse BFS stops short of it; its distance home
    // goes through one of its unvisited neighbors (or the root directly).
    int dist_home = -1;
    for (int nb : g_.nbr[cur]) {
      int via = -1;
      if (nb == root_) via = 1;
      else if (nb > root_ && !visited_[nb] && mark_r_[nb] == gen_) {
        via = dist_r_[nb] + 1;
      }
      if (via != -1 && (dist_home == -1 || via < dist_home)) dist_home = via;
    }
    if (dist_home == -1 || dist_home > remaining) return 0;
    if (!part_.empty() && (remaining - dist_home) % 2 != 0) return 0;

    // Forward BFS from cur over unvisited vertices, bounded by the remaining
    // length; count region vertices per part inside the ellipse.
    ++gen2_;
    stack2_.clear();
    stack2_.push_back(cur);
    mark_c_[cur] = gen2_;
    dist_c_[cur] = 0;
    // The interior of the closing walk has remaining-1 vertices alternating
    // parts, starting opposite cur.
    int need[2] = {0, 0};
    if (!part_.empty()) {
      int a = part_[cur];
      need[1 - a] = remaining / 2;
      need[a] = (remaining - 1) / 2;
    }
    int have[2] = {0, 0};
    head = 0;
    while (head < stack2_.size()) {
      int v = stack2_[head++];
      if (dist_c_[v] >= remaining - 1) continue;
      for (int nb : g_.nbr[v]) {
        if (nb <= root_ || visited_[nb] || mark_c_[nb] == gen2_) {
          continue;
        }
        mark_c_[nb] = gen2_;
        dist_c_[nb] = dist_c_[v] + 1;
        if (mark_r_[nb] == gen_ && dist_c_[nb] + dist_r_[nb] <= remaining) {
          if (!part_.empty()) ++have[part_[nb]];
          else ++have[0];
        }
        stack2_.push_back(nb);
      }
    }
    if (!part_.empty()) {
      if (have[0] < need[0] || have[1] < need[1]) return 0;
    } else if (have[0] < remaining - 1) {
      return 0;
    }

    // Viable continuations: unvisited neighbors inside the ellipse (or the
    // root itself exactly at the end). Farthest from the root first.
    int count = 0;
    for (int nb : g_.nbr[cur]) {
      if (nb <= root_ || visited_[nb]) continue;
      if (mark_r_[nb] != gen_) continue;
      if (1 + dist_r_[nb] > remaining) continue;
      order[count++] = nb;
    }
    for (int x = 1; x < count; ++x) {
      for (int y = x; y > 0; --y) {
        bool swap = dist_r_[order[y]] > dist_r_[order[y - 1]] ||
                    (dist_r_[order[y]] == dist_r_[order[y - 1]] &&
                     order[y] < order[y - 1]);
        if (swap) std::swap(order[y], order[y - 1]);
        else break;
      }
    }
    return count;
  }

  const AdjList& g_;
  oracle::SearchBudget& budget_;
  int n_;
  int len_ = 0;
  int root_ = 0;
  std::vector<int> part_;
  std::vector<char> visited_;
  std::vector<int> path_;
  std::vector<int> mark_c_, mark_r_;
  std::vector<int> dist_c_, dist_r_;
  std::vector<int> stack_, stack2_;
  int gen_ = 0, gen2_ = 0;
};

}  // namespace

Outcome hamilton_path_search(const AdjList& g, int s, int t,
                             oracle::SearchBudget& budget,
                             const WitnessPred& accept, std::vector<int>& out) {
  if (g.order() < 2 || s == t) return Outcome::NotFound;
  HamPathSearcher searcher(g, budget, accept);
  return searcher.run(s, t, out);
}

Outcome cycle_of_length_search(const AdjList& g, int len,
                               oracle::SearchBudget& budget,
                               std::vector<int>* out) {
  if (len < 3 || len > g.order()) return Outcome::NotFound;
  CycleSearcher searcher(g, budget);
  return searcher.run(len, out);
}

}  // namespace htg::detail
