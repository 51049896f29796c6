#include "htg/params.hpp"

#include <algorithm>

namespace htg {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::BadN: return "BadN";
    case Errc::BadParity: return "BadParity";
    case Errc::BadRange: return "BadRange";
    case Errc::NotSimple: return "NotSimple";
    case Errc::BadFamilyArgs: return "BadFamilyArgs";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::BadRows: return "BadRows";
    case Errc::NoJumpEdge: return "NoJumpEdge";
    case Errc::BadEndpoints: return "BadEndpoints";
    case Errc::NotNormalForm: return "NotNormalForm";
    case Errc::OutOfStatedRange: return "OutOfStatedRange";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

std::string to_string(const HtgParams& p) {
  return "HTG(" + std::to_string(p.m) + "," + std::to_string(p.n) + "," +
         std::to_string(p.l) + ")";
}

HtgParams validate_params(long long m, long long n, long long l) {
  if (m < 1) {
    throw HtgError(Errc::BadRange, "m must be >= 1, got " + std::to_string(m));
  }
  if (n < 4 || n % 2 != 0) {
    throw HtgError(Errc::BadN, "n must be even and >= 4, got " + std::to_string(n));
  }
  if (l < 0 || l >= n) {
    throw HtgError(Errc::BadRange,
                   "l must satisfy 0 <= l < n, got l=" + std::to_string(l));
  }
  if ((l - m) % 2 != 0) {
    throw HtgError(Errc::BadParity, "l and m must have the same parity, got m=" +
                                        std::to_string(m) + " l=" + std::to_string(l));
  }
  if (m == 1 && (l == 1 || l == n - 1)) {
    throw HtgError(Errc::NotSimple,
                   "m=1 with l in {1, n-1} duplicates vertical edges");
  }
  return HtgParams{static_cast<int>(m), static_cast<int>(n), static_cast<int>(l)};
}

bool is_valid_params(long long m, long long n, long long l) {
  return m >= 1 && n >= 4 && n % 2 == 0 && l >= 0 && l < n &&
         (l - m) % 2 == 0 && !(m == 1 && (l == 1 || l == n - 1));
}

HtgParams normalize(const HtgParams& p) {
  return HtgParams{p.m, p.n, std::min(p.l, p.n - p.l)};
}

bool is_normal_form(const HtgParams& p) { return 2 * p.l <= p.n; }

HtgParams hexagonal_torus(int size) {
  if (size < 1) {
    throw HtgError(Errc::BadFamilyArgs, "hexagonal torus needs size >= 1");
  }
  return validate_params(size, 6LL * size, 3LL * size);
}

HtgParams rectangular_torus(int m, int n) {
  if (m < 2 || m % 2 != 0) {
    throw HtgError(Errc::BadFamilyArgs, "rectangular torus needs even m >= 2");
  }
  try {
    return validate_params(m, n, 0);
  } catch (const HtgError& e) {
    throw HtgError(Errc::BadFamilyArgs, e.what());
  }
}

HtgParams parallelogramic_torus(int m, int n) {
  if (m < 1 || n < 4 || n % 2 != 0) {
    throw HtgError(Errc::BadFamilyArgs,
                   "parallelogramic torus needs m >= 1 and even n >= 4");
  }
  int shift = ((m % n) + n) % n;
  try {
    return normalize(validate_params(m, n, shift));
  } catch (const HtgError& e) {
    throw HtgError(Errc::BadFamilyArgs, e.what());
  }
}

Planarity planarity_class(const HtgParams& p) {
  HtgParams q = normalize(p);
  if (q.m == 2 && q.l == 0) return Planarity::Planar;
  if (q.m == 2 && q.n == 4 && q.l == 2) return Planarity::Planar;
  return Planarity::NonPlanar;
}

std::vector<int> valid_jumps(int m, int n, bool normalized_only) {
  std::vector<int> out;
  int hi = normalized_only ? n / 2 : n - 1;
  for (int l = 0; l <= hi; ++l) {
    if (is_valid_params(m, n, l)) out.push_back(l);
  }
  return out;
}

}  // namespace htg
