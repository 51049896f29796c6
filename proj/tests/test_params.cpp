#include <doctest.h>

#include "htg/params.hpp"

using namespace htg;

namespace {

Errc code_of(long long m, long long n, long long l) {
  try {
    validate_params(m, n, l);
  } catch (const HtgError& e) {
    return e.code();
  }
  FAIL("expected validation to fail");
  return Errc::BadRange;
}

}  // namespace

TEST_CASE("validate_params accepts valid triples") {
  CHECK(validate_params(2, 4, 0) == HtgParams{2, 4, 0});
  CHECK(validate_params(1, 6, 3) == HtgParams{1, 6, 3});
  CHECK(validate_params(4, 10, 2) == HtgParams{4, 10, 2});
  CHECK(validate_params(3, 10, 7) == HtgParams{3, 10, 7});  // not normal form
}

TEST_CASE("validate_params rejects bad triples with the right code") {
  CHECK(code_of(1, 8, 2) == Errc::BadParity);
  CHECK(code_of(1, 8, 7) == Errc::NotSimple);
  CHECK(code_of(1, 8, 1) == Errc::NotSimple);
  CHECK(code_of(2, 5, 0) == Errc::BadN);
  CHECK(code_of(2, 2, 0) == Errc::BadN);
  CHECK(code_of(0, 8, 0) == Errc::BadRange);
  CHECK(code_of(2, 8, 8) == Errc::BadRange);
  CHECK(code_of(2, 8, -2) == Errc::BadRange);
  CHECK(code_of(2, 8, 3) == Errc::BadParity);
}

TEST_CASE("normalize folds the jump to at most n/2") {
  CHECK(normalize({1, 14, 9}) == HtgParams{1, 14, 5});
  CHECK(normalize({2, 8, 4}) == HtgParams{2, 8, 4});
  CHECK(normalize({3, 10, 7}) == HtgParams{3, 10, 3});
  CHECK(normalize({2, 8, 0}) == HtgParams{2, 8, 0});
}

TEST_CASE("normalize is idempotent and keeps validity") {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 4; n <= 16; n += 2) {
      for (int l = 0; l < n; ++l) {
        if (!is_valid_params(m, n, l)) continue;
        HtgParams p{m, n, l};
        HtgParams q = normalize(p);
        CHECK(is_valid_params(q.m, q.n, q.l));
        CHECK(normalize(q) == q);
        CHECK(2 * q.l <= q.n);
      }
    }
  }
}

TEST_CASE("named families") {
  CHECK(hexagonal_torus(1) == HtgParams{1, 6, 3});
  CHECK(hexagonal_torus(2) == HtgParams{2, 12, 6});
  CHECK(rectangular_torus(4, 10) == HtgParams{4, 10, 0});
  CHECK(parallelogramic_torus(3, 10) == HtgParams{3, 10, 3});
  CHECK(parallelogramic_torus(10, 6) == HtgParams{10, 6, 2});

  CHECK_THROWS_AS(hexagonal_torus(0), HtgError);
  CHECK_THROWS_AS(rectangular_torus(3, 10), HtgError);
  CHECK_THROWS_AS(rectangular_torus(4, 7), HtgError);
  // m=1 parallelogram would need jump 1, which duplicates a vertical edge
  CHECK_THROWS_AS(parallelogramic_torus(1, 6), HtgError);
  try {
    rectangular_torus(3, 10);
  } catch (const HtgError& e) {
    CHECK(e.code() == Errc::BadFamilyArgs);
  }
}

TEST_CASE("planarity classification") {
  CHECK(planarity_class({2, 8, 0}) == Planarity::Planar);
  CHECK(planarity_class({2, 4, 2}) == Planarity::Planar);
  CHECK(planarity_class({4, 10, 2}) == Planarity::NonPlanar);
  CHECK(planarity_class({1, 6, 3}) == Planarity::NonPlanar);
}

TEST_CASE("planarity normalizes first") {
  // (2,6,4) ~ (2,6,2): not planar; (2,4,2) fixed point: planar
  CHECK(planarity_class({2, 6, 4}) == Planarity::NonPlanar);
  CHECK(planarity_class({2, 6, 6 - 6}) == Planarity::Planar);
}

TEST_CASE("valid_jumps enumerates normalized jumps") {
  CHECK(valid_jumps(1, 6, true) == std::vector<int>{3});
  CHECK(valid_jumps(2, 8, true) == std::vector<int>{0, 2, 4});
  CHECK(valid_jumps(1, 4, true).empty());
  CHECK(valid_jumps(3, 4, true) == std::vector<int>{1});
}
