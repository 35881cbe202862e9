#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "boxdim/exec.hpp"
#include "boxdim/point_set.hpp"
#include "boxdim/rational.hpp"

namespace boxdim {

/// A concrete delta-cover: closed intervals [left, left + delta], each of
/// diameter exactly delta.
struct IntervalCover {
  Rational delta;
  std::vector<Rational> lefts;  // sorted

  std::size_t count() const { return lefts.size(); }

  /// Exact containment check: every point of f lies in some interval.
  bool covers(const PointSet& f) const;
};

/// Minimal delta-cover of f. Greedy left-to-right anchoring, which is
/// optimal for point sets on the line: the leftmost uncovered point must be
/// covered, and anchoring the interval at that point dominates every other
/// placement. Throws InputError for delta <= 0.
IntervalCover min_cover(const PointSet& f, const Rational& delta);

/// N(f, delta): the size of a minimal delta-cover; 0 for the empty set.
std::size_t covering_number(const PointSet& f, const Rational& delta);

/// Independent test oracle: exhaustive minimum over all covers whose
/// interval left endpoints sit at points of f. Sliding any interval of an
/// optimal cover left until it touches its leftmost covered point shows this
/// search space suffices. Guarded to |f| <= 15.
std::size_t brute_force_covering_number(const PointSet& f, const Rational& delta);

/// Maximum number of points of f with pairwise distances strictly greater
/// than delta. Greedy scan, optimal on the line. Never exceeds
/// covering_number(f, delta).
std::size_t packing_lower_bound(const PointSet& f, const Rational& delta);

struct ProductBoundReport {
  Rational delta;
  Rational radius;     // the R with C, D inside [-R, R]
  std::size_t lhs;     // N(CD, delta)
  std::size_t rhs_c;   // N(C, delta/(2R))
  std::size_t rhs_d;   // N(D, delta/(2R))
  bool holds;          // lhs <= rhs_c * rhs_d
};

/// Count-level product bound: N(CD, delta) <= N(C, delta/2R) * N(D, delta/2R).
/// Requires nonempty C, D and 0 < delta < 1/2. holds is true for every legal
/// input; a false report is an implementation bug, not a data property.
ProductBoundReport product_cover_bound_check(const PointSet& c, const PointSet& d,
                                             const Rational& delta);

/// Covering numbers of f at several scales. The parallel kernel evaluates
/// scales concurrently into preassigned slots, so both paths return the same
/// vector in the same order.
std::vector<std::size_t> covering_counts(const PointSet& f, std::span<const Rational> deltas,
                                         Exec exec = Exec::parallel);

}  // namespace boxdim
