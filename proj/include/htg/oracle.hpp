#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "htg/graph.hpp"
#include "htg/vertex_seq.hpp"

namespace htg::oracle {

/// Deterministic node-expansion cap for the exponential searches.
class SearchBudget {
 public:
  explicit SearchBudget(std::uint64_t max_expansions)
      : max_(max_expansions) {}

  // Counts one expansion; returns false once the cap is reached.
  bool tick() {
    ++consumed_;
    return consumed_ <= max_;
  }
  bool exhausted() const { return consumed_ > max_; }
  std::uint64_t consumed() const { return consumed_; }
  std::uint64_t max_expansions() const { return max_; }

 private:
  std::uint64_t max_ = 0;
  std::uint64_t consumed_ = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::uint64_t kUnlimitedBudget = ~std::uint64_t{0};

struct SearchVerdict {
  enum class Kind { Found, NotFound, BudgetExceeded };
  Kind kind = Kind::NotFound;
  std::optional<VertexSeq> witness;
  std::uint64_t consumed = 0;
};

// Exhaustive Hamilton path search between s and t with completeness-preserving
// pruning (bipartite parity feasibility, connectivity of the unvisited region,
// degree-1 forcing). Found witnesses are re-validated before being returned.
SearchVerdict find_hamilton_path(const HtgGraph& g, VertexId s, VertexId t,
                                 SearchBudget& budget);

// Same search, but only accepts witnesses that traverse at least one jump
// edge; used to produce bases for the laceability lift.
SearchVerdict find_hamilton_path_using_jump(const HtgGraph& g, VertexId s,
                                            VertexId t, SearchBudget& budget);

// As above, additionally requiring the edge at the t end to be vertical.
SearchVerdict find_hamilton_path_for_retarget(const HtgGraph& g, VertexId s,
                                              VertexId t, SearchBudget& budget);

struct LaceabilityVerdict {
  enum class Kind { Laceable, Counterexample, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<std::pair<VertexId, VertexId>> counterexample;
  std::uint64_t consumed = 0;  // summed over all pair searches
};

// Fixes s = u_{0,0} (the graphs are vertex-transitive) and sweeps every
// opposite-part target with a fresh budget per pair.
LaceabilityVerdict is_hamilton_laceable(const HtgParams& p,
                                        std::uint64_t budget_per_pair,
                                        int jobs = 1);

// Exact girth by per-vertex BFS shortest-cycle detection.
int girth(const HtgGraph& g);
int girth(const AdjList& g);

struct CycleSpectrum {
  std::set<int> present;
  std::set<int> inconclusive;  // lengths whose search ran out of budget
  std::uint64_t consumed = 0;  // summed over all length searches
};

// Exact set of achievable cycle lengths; only even lengths are searched
// (the graphs are bipartite). Each length gets its own budget.
CycleSpectrum cycle_spectrum(const HtgGraph& g, std::uint64_t budget_per_length);

struct DistanceTable {
  VertexId source;
  std::vector<int> dist;
};

DistanceTable distances(const HtgGraph& g, VertexId s);

// BFS-exact diameter over all sources; with single_source the eccentricity of
// u_{0,0} is returned instead (valid for vertex-transitive graphs).
int diameter(const HtgGraph& g, bool single_source = false);

struct AutCount {
  std::uint64_t count = 0;
  bool complete = false;
  std::uint64_t consumed = 0;
};

// Exact automorphism group order by backtracking extension of partial vertex
// maps. The count is assembled as |orbit of vertex 0| x |stabilizer of 0|,
// with the orbit established by search rather than by assumption.
AutCount automorphism_count(const AdjList& g, SearchBudget& budget);
AutCount automorphism_count(const HtgGraph& g, SearchBudget& budget);

// Explicit isomorphism between two graphs, if one exists (exhaustive
// backtracking with degree/distance-profile pruning; desk-scale only).
std::optional<std::vector<int>> find_isomorphism(const AdjList& a,
                                                 const AdjList& b,
                                                 SearchBudget& budget);

bool isomorphic(const AdjList& a, const AdjList& b);
bool isomorphic(const HtgGraph& a, const HtgGraph& b);

struct LemmaViolation {
  enum class Lemma { JumpDirection, FlatSeparation };
  Lemma lemma;
  VertexId s, t;
  std::vector<VertexId> path;
};

// Enumerates every shortest path between every ordered vertex pair and flags
// paths whose jump edges are traversed in both directions, or with two flat
// edges between the same column pair not separated by a jump edge. Throws
// TooLarge if a pair exceeds path_cap shortest paths.
std::vector<LemmaViolation> shortest_path_lemma_audit(
    const HtgParams& p, std::uint64_t path_cap = 1'000'000);

// JSON serializations with witness sequences inline.
std::string verdict_json(const SearchVerdict& v);
std::string verdict_json(const LaceabilityVerdict& v);

}  // namespace htg::oracle
