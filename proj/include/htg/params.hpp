#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace htg {

enum class Errc {
  BadN,
  BadParity,
  BadRange,
  NotSimple,
  BadFamilyArgs,
  NotAnEdge,
  BadRows,
  NoJumpEdge,
  BadEndpoints,
  NotNormalForm,
  OutOfStatedRange,
  TooLarge,
};

const char* errc_name(Errc code);

class HtgError : public std::runtime_error {
 public:
  HtgError(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parameter triple for a honeycomb toroidal graph HTG(m, n, l):
/// m column cycles of length n, joined by flat edges at matching rows and
/// wrap-around jump edges that shift the row by l.
struct HtgParams {
  int m = 0;
  int n = 0;
  int l = 0;

  friend bool operator==(const HtgParams&, const HtgParams&) = default;
};

std::string to_string(const HtgParams& p);

// Checks m >= 1, n even >= 4, 0 <= l < n, l == m (mod 2), and rejects the
// m = 1 jumps l in {1, n-1} that would duplicate vertical edges.
HtgParams validate_params(long long m, long long n, long long l);

bool is_valid_params(long long m, long long n, long long l);

// Normal-form representative (m, n, min(l, n-l)); HTG(m,n,l) and
// HTG(m,n,n-l) are isomorphic.
HtgParams normalize(const HtgParams& p);

bool is_normal_form(const HtgParams& p);

// Named families.
HtgParams hexagonal_torus(int size);                 // (m, 6m, 3m)
HtgParams rectangular_torus(int m, int n);           // (m, n, 0), even m >= 2
HtgParams parallelogramic_torus(int m, int n);       // (m, n, m mod n), normalized

enum class Planarity { Planar, NonPlanar };

// Lookup classification: HTG(2,n,0) and HTG(2,4,2) are planar, all other
// members of the family are not. Input is normalized first.
Planarity planarity_class(const HtgParams& p);

// All valid jumps for the given (m, n), in increasing order. With
// normalized_only, restricts to l <= n/2.
std::vector<int> valid_jumps(int m, int n, bool normalized_only);

}  // namespace htg
