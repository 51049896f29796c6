#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "htg/params.hpp"

namespace htg::predict {

enum class Verdict { Match, Mismatch, NotCovered, Inconclusive };

const char* verdict_name(Verdict v);

/// Predicted-vs-observed record for one graph and one property.
struct PropertyReport {
  HtgParams params;
  std::string property;
  std::string predicted;  // empty when not covered
  std::string observed;
  Verdict verdict = Verdict::NotCovered;
  std::uint64_t budget_consumed = 0;
};

// Closed-form girth: 6 except for the known short-cycle families, which have
// girth 4. Requires normal form (l <= n/2), throws NotNormalForm otherwise.
int girth_formula(const HtgParams& p);

// Even cycle lengths in [4, mn] absent from the graph, transcribed from the
// published tables (rows matched first to last). nullopt means the tables do
// not settle the parameters. That happens for HTG(1, 2l+2, l) with l >= 9,
// where the 8-cycle question is left open, and for the families where
// exhaustive search refutes the printed claim outright: HTG(2, n, 2) for
// n >= 10 (printed as even pancyclic, but whole runs of multiples of 4 are
// absent) and HTG(2, n, 6) / HTG(2, n, n/2) outside the tabulated rows
// (printed default {4, 8}, but an 8-cycle exists). Requires normal form.
std::optional<std::set<int>> missing_cycle_lengths(const HtgParams& p);

// Tabulated diameters: the hexagonal family, HTG(m,2m,m), the rectangular
// l = 0 families (with the published m >= n-2 boundary corrected to m >= n,
// where BFS contradicts the printed split) and the l == n - m (mod n)
// family. nullopt when the tables do not cover the parameters. Accepts any
// valid triple (the value is isomorphism-invariant, so the mirror jump
// n - l is matched too).
std::optional<int> diameter_formula(const HtgParams& p);

// The stated closed form 2*floor(n/l) + 1 for the diameter of HTG(1,n,l)
// when l <= sqrt(n). Exists to be audited against BFS, not asserted; throws
// OutOfStatedRange when l^2 > n.
int htg1_diameter_conjecture(int n, int l);

struct GrrInput {
  int n = 0;  // even >= 4
  int l = 0;  // odd, 0 < l < n
};

// Whether HTG(1,n,l) is predicted to have automorphism group of order exactly
// n: requires n >= 18, l < n/2 and three quadratic non-congruences mod n/2.
// The girth-4 family l = (n-2)/2 is excluded outright: the congruences admit
// it when n = 4 (mod 8), but its automorphism groups are much larger than n.
bool is_grr_predicted(const GrrInput& in);

// Automorphism orders the closed forms pin down: the two published order-14
// values and |Aut| = n whenever the GRR predicate holds. nullopt otherwise.
std::optional<long long> predicted_automorphism_order(const HtgParams& p);

struct AuditOptions {
  std::uint64_t budget = 10'000'000;
  bool use_constructed_hamilton = true;
};

// Known property names: girth, spectrum, diameter, htg1-diameter, aut, grr,
// laceable, hamilton, lemmas.
const std::vector<std::string>& known_properties();

// Runs predicate and matching oracle for each requested property on the
// normalized parameters and reports predicted vs observed.
std::vector<PropertyReport> audit(const HtgParams& p,
                                  const std::vector<std::string>& properties,
                                  const AuditOptions& options = {});

std::string report_tsv_header();
std::string report_tsv_row(const PropertyReport& r);

// JSON form of a report batch: {"budget": N, "reports": [...]}.
std::string reports_json(const std::vector<PropertyReport>& reports,
                         std::uint64_t budget);

}  // namespace htg::predict
