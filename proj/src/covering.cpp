#include "boxdim/covering.hpp"

#include <algorithm>
#include <limits>

#include "boxdim/errors.hpp"

namespace boxdim {

namespace {

void require_positive_delta(const Rational& delta) {
  if (delta.sign() <= 0) {
    throw InputError("delta must be positive, got " + delta.str());
  }
}

// Exhaustive search over point-anchored covers for the first uncovered
// suffix. Deliberately enumerates every admissible anchor instead of using
// the greedy dominance argument; that is what makes it an independent check.
std::size_t brute_rec(const std::vector<Rational>& pts, std::size_t first,
                      const Rational& delta) {
  if (first == pts.size()) return 0;
  const Rational& x = pts[first];
  const Rational lowest = x - delta;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t j = first + 1; j-- > 0;) {
    if (pts[j] < lowest) break;
    Rational limit = pts[j] + delta;
    std::size_t next = first;
    while (next < pts.size() && pts[next] <= limit) ++next;
    best = std::min(best, 1 + brute_rec(pts, next, delta));
  }
  return best;
}

}  // namespace

bool IntervalCover::covers(const PointSet& f) const {
  std::size_t j = 0;
  for (const Rational& x : f.points()) {
    while (j < lefts.size() && lefts[j] + delta < x) ++j;
    if (j == lefts.size() || x < lefts[j]) return false;
  }
  return true;
}

IntervalCover min_cover(const PointSet& f, const Rational& delta) {
  require_positive_delta(delta);
  IntervalCover cover{delta, {}};
  const auto& pts = f.points();
  std::size_t i = 0;
  while (i < pts.size()) {
    cover.lefts.push_back(pts[i]);
    Rational limit = pts[i] + delta;
    ++i;
    while (i < pts.size() && pts[i] <= limit) ++i;
  }
  return cover;
}

std::size_t covering_number(const PointSet& f, const Rational& delta) {
  require_positive_delta(delta);
  const auto& pts = f.points();
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < pts.size()) {
    ++count;
    Rational limit = pts[i] + delta;
    ++i;
    while (i < pts.size() && pts[i] <= limit) ++i;
  }
  return count;
}

std::size_t brute_force_covering_number(const PointSet& f, const Rational& delta) {
  require_positive_delta(delta);
  if (f.size() > 15) {
    throw InputError("brute_force_covering_number: oracle limited to 15 points, got " +
                     std::to_string(f.size()));
  }
  return brute_rec(f.points(), 0, delta);
}

std::size_t packing_lower_bound(const PointSet& f, const Rational& delta) {
  require_positive_delta(delta);
  if (f.empty()) return 0;
  const auto& pts = f.points();
  std::size_t count = 1;
  Rational last = pts[0];
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i] - last > delta) {
      ++count;
      last = pts[i];
    }
  }
  return count;
}

ProductBoundReport product_cover_bound_check(const PointSet& c, const PointSet& d,
                                             const Rational& delta) {
  if (c.empty() || d.empty()) {
    throw InputError("product_cover_bound_check: sets must be nonempty");
  }
  if (delta.sign() <= 0 || !(delta < Rational(1, 2))) {
    throw InputError("product_cover_bound_check: delta must lie in (0, 1/2), got " +
                     delta.str());
  }
  Rational radius = std::max(bounding_radius(c), bounding_radius(d));
  Rational fine = delta / (Rational(2) * radius);
  ProductBoundReport report;
  report.delta = delta;
  report.radius = radius;
  report.lhs = covering_number(product_set(c, d), delta);
  report.rhs_c = covering_number(c, fine);
  report.rhs_d = covering_number(d, fine);
  report.holds = report.lhs <= report.rhs_c * report.rhs_d;
  return report;
}

std::vector<std::size_t> covering_counts(const PointSet& f, std::span<const Rational> deltas,
                                         Exec exec) {
  // Validate up front: an exception must not escape the parallel region.
  for (const Rational& d : deltas) require_positive_delta(d);
  std::vector<std::size_t> counts(deltas.size());
  if (exec == Exec::parallel) {
    const auto n = static_cast<std::ptrdiff_t>(deltas.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      counts[static_cast<std::size_t>(i)] = covering_number(f, deltas[static_cast<std::size_t>(i)]);
    }
  } else {
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      counts[i] = covering_number(f, deltas[i]);
    }
  }
  return counts;
}

}  // namespace boxdim
