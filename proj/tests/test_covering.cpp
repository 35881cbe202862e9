#include <vector>

#include <doctest.h>

#include "boxdim/covering.hpp"
#include "boxdim/errors.hpp"
#include "boxdim/generators.hpp"
#include "boxdim/rng.hpp"
#include "oracles.hpp"

using boxdim::InputError;
using boxdim::IntervalCover;
using boxdim::PointSet;
using boxdim::Rational;

namespace {

PointSet set_of(std::initializer_list<Rational> values) {
  return boxdim::make_set(std::vector<Rational>(values));
}

Rational random_delta(boxdim::SplitMix64& rng) {
  // (0, 2] with denominator 1024
  return Rational(static_cast<long>(1 + rng.below(2048)), 1024UL);
}

}  // namespace

TEST_CASE("min_cover greedy anchors at uncovered points") {
  PointSet f = set_of({Rational(1, 3), Rational(1, 2), Rational(1)});
  IntervalCover cover = boxdim::min_cover(f, Rational(1, 6));
  REQUIRE(cover.count() == 2);
  CHECK(cover.lefts[0] == Rational(1, 3));  // closed [1/3, 1/2] takes both
  CHECK(cover.lefts[1] == Rational(1));
  CHECK(cover.covers(f));

  CHECK(boxdim::min_cover(set_of({Rational(0)}), Rational(1, 100)).count() == 1);

  IntervalCover three = boxdim::min_cover(boxdim::reciprocal_integers(6), Rational(1, 6));
  CHECK(three.count() == 3);
  CHECK(three.lefts[0] == Rational(1, 6));  // [1/6, 1/3] covers four points

  CHECK_THROWS_AS(boxdim::min_cover(f, Rational(0)), InputError);
  CHECK_THROWS_AS(boxdim::min_cover(f, Rational(-1, 2)), InputError);
}

TEST_CASE("covering_number basics") {
  PointSet pair = set_of({Rational(0), Rational(1)});
  CHECK(boxdim::covering_number(pair, Rational(1)) == 1);
  CHECK(boxdim::covering_number(pair, Rational(1, 2)) == 2);
  CHECK(boxdim::covering_number(boxdim::reciprocal_integers(6), Rational(1, 6)) == 3);
  CHECK(boxdim::covering_number(PointSet(), Rational(1)) == 0);
  CHECK_THROWS_AS(boxdim::covering_number(pair, Rational(0)), InputError);
}

TEST_CASE("reciprocal_integers(100) at delta 1/6 needs four intervals") {
  // The points below 1/6 drag the first interval down: {1/100..1/6} fits in
  // one interval, {1/5,1/4,1/3} in a second, then 1/2 and 1 are isolated.
  PointSet f = boxdim::reciprocal_integers(100);
  CHECK(boxdim::covering_number(f, Rational(1, 6)) == 4);
  // packing cross-check: 1/13, 1/4, 1/2, 1 are pairwise more than 1/6 apart
  CHECK(boxdim::packing_lower_bound(f, Rational(1, 6)) == 4);
}

TEST_CASE("brute-force oracle agrees with the greedy count") {
  PointSet f = set_of({Rational(1, 3), Rational(1, 2), Rational(1)});
  CHECK(boxdim::brute_force_covering_number(f, Rational(1, 6)) == 2);
  CHECK(boxdim::brute_force_covering_number(set_of({Rational(0)}), Rational(1, 100)) == 1);

  boxdim::SplitMix64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    PointSet s = boxdim::random_point_set(rng, 12);
    Rational delta = random_delta(rng);
    CAPTURE(i);
    CHECK(boxdim::covering_number(s, delta) == boxdim::brute_force_covering_number(s, delta));
  }
}

TEST_CASE("brute-force oracle rejects oversized instances") {
  PointSet big = boxdim::reciprocal_integers(16);
  CHECK_THROWS_AS(boxdim::brute_force_covering_number(big, Rational(1, 2)), InputError);
  // 15 points is still legal
  CHECK(boxdim::brute_force_covering_number(boxdim::reciprocal_integers(15), Rational(1)) == 1);
  // the empty set has an empty cover
  CHECK(boxdim::brute_force_covering_number(PointSet(), Rational(1, 2)) == 0);
}

TEST_CASE("packing examples") {
  PointSet f = set_of({Rational(1, 3), Rational(1, 2), Rational(1)});
  // 1/2 - 1/3 = 1/6 exactly is not a strict separation
  CHECK(boxdim::packing_lower_bound(f, Rational(1, 6)) == 2);

  PointSet heads = boxdim::reciprocal_integers(4);
  CHECK(boxdim::packing_lower_bound(heads, Rational(1, 20)) == 4);

  CHECK(boxdim::packing_lower_bound(set_of({Rational(9)}), Rational(1, 2)) == 1);
  CHECK(boxdim::packing_lower_bound(PointSet(), Rational(1)) == 0);
  CHECK_THROWS_AS(boxdim::packing_lower_bound(f, Rational(0)), InputError);
}

TEST_CASE("greedy packing matches subset enumeration") {
  boxdim::SplitMix64 rng(5150);
  for (int i = 0; i < 60; ++i) {
    PointSet s = boxdim::random_point_set(rng, 10);
    Rational delta = random_delta(rng);
    CHECK(boxdim::packing_lower_bound(s, delta) ==
          boxdim::testing::packing_by_enumeration(s, delta));
  }
}

TEST_CASE("packing never exceeds covering") {
  boxdim::SplitMix64 rng(31);
  for (int i = 0; i < 100; ++i) {
    PointSet s = boxdim::random_point_set(rng, 25);
    Rational delta = random_delta(rng);
    CHECK(boxdim::packing_lower_bound(s, delta) <= boxdim::covering_number(s, delta));
  }
}

TEST_CASE("separation bound: k reciprocal heads stay pairwise separated") {
  // For delta below 1/((k-1)k) the points 1, 1/2, ..., 1/k are pairwise more
  // than delta apart, so the packing is all k of them.
  for (std::uint64_t k = 2; k <= 40; ++k) {
    PointSet heads = boxdim::reciprocal_integers(k);
    Rational just_below(1, static_cast<unsigned long>((k - 1) * k + 1));
    Rational bracket_low(1, static_cast<unsigned long>(k * (k + 1)));
    CHECK(boxdim::packing_lower_bound(heads, just_below) == k);
    CHECK(boxdim::packing_lower_bound(heads, bracket_low) == k);
  }
}

TEST_CASE("covering number is antitone in delta and monotone in the set") {
  boxdim::SplitMix64 rng(77);
  for (int i = 0; i < 60; ++i) {
    PointSet f = boxdim::random_point_set(rng, 20);
    Rational d1 = random_delta(rng);
    Rational d2 = random_delta(rng);
    if (d2 < d1) std::swap(d1, d2);
    CHECK(boxdim::covering_number(f, d1) >= boxdim::covering_number(f, d2));

    // random subset
    std::vector<Rational> kept;
    for (const Rational& x : f.points()) {
      if (rng.below(2) == 0) kept.push_back(x);
    }
    PointSet e = boxdim::make_set(kept);
    CHECK(boxdim::covering_number(e, d1) <= boxdim::covering_number(f, d1));
  }
}

TEST_CASE("emitted covers are valid and non-redundant") {
  boxdim::SplitMix64 rng(123);
  for (int i = 0; i < 60; ++i) {
    PointSet f = boxdim::random_point_set(rng, 20);
    Rational delta = random_delta(rng);
    IntervalCover cover = boxdim::min_cover(f, delta);
    CHECK(cover.count() == boxdim::covering_number(f, delta));
    CHECK(cover.covers(f));
    for (std::size_t j = 0; j < cover.lefts.size(); ++j) {
      CHECK(f.contains(cover.lefts[j]));  // anchored at points of f
      if (j > 0) {
        // each anchor lies beyond the previous interval
        CHECK(cover.lefts[j] > cover.lefts[j - 1] + delta);
      }
    }
  }
}

TEST_CASE("product cover bound: worked example") {
  PointSet c = set_of({Rational(1, 2), Rational(1)});
  auto report = boxdim::product_cover_bound_check(c, c, Rational(1, 3));
  CHECK(report.radius == Rational(1));
  CHECK(report.lhs == 2);    // N({1/4,1/2,1}, 1/3)
  CHECK(report.rhs_c == 2);  // N({1/2,1}, 1/6)
  CHECK(report.rhs_d == 2);
  CHECK(report.holds);

  CHECK_THROWS_AS(boxdim::product_cover_bound_check(c, c, Rational(1, 2)), InputError);
  CHECK_THROWS_AS(boxdim::product_cover_bound_check(c, c, Rational(0)), InputError);
  CHECK_THROWS_AS(boxdim::product_cover_bound_check(PointSet(), c, Rational(1, 3)), InputError);
}

TEST_CASE("product cover bound with the identity factor") {
  PointSet one = set_of({Rational(1)});
  boxdim::SplitMix64 rng(4242);
  for (int i = 0; i < 20; ++i) {
    PointSet d = boxdim::random_point_set(rng, 15);
    auto report = boxdim::product_cover_bound_check(one, d, Rational(1, 3));
    CHECK(report.lhs == boxdim::covering_number(d, Rational(1, 3)));
    CHECK(report.rhs_c == 1);
    CHECK(report.holds);
  }
}

TEST_CASE("product cover bound on prime power truncations") {
  PointSet a2 = boxdim::prime_power_reciprocals(2, 8);
  PointSet a3 = boxdim::prime_power_reciprocals(3, 5);
  auto report = boxdim::product_cover_bound_check(a2, a3, Rational(1, 10));
  CHECK(report.holds);
}

TEST_CASE("product cover bound holds on random pairs") {
  boxdim::SplitMix64 rng(31337);
  std::vector<Rational> deltas{Rational(1, 3), Rational(1, 7), Rational(1, 64)};
  for (int i = 0; i < 30; ++i) {
    PointSet c = boxdim::random_point_set(rng, 15);
    PointSet d = boxdim::random_point_set(rng, 15);
    for (const Rational& delta : deltas) {
      CHECK(boxdim::product_cover_bound_check(c, d, delta).holds);
    }
  }
}

TEST_CASE("covering_counts kernels agree") {
  PointSet f = boxdim::reciprocal_integers(500);
  std::vector<Rational> deltas;
  Rational d(1, 4);
  for (int i = 0; i < 10; ++i) {
    deltas.push_back(d);
    d *= Rational(1, 2);
  }
  auto serial = boxdim::covering_counts(f, deltas, boxdim::Exec::serial);
  auto parallel = boxdim::covering_counts(f, deltas, boxdim::Exec::parallel);
  CHECK(serial == parallel);
}
