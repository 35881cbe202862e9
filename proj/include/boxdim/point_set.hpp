#pragma once

#include <span>
#include <string>
#include <vector>

#include "boxdim/rational.hpp"

namespace boxdim {

/// Finite set of rationals, strictly sorted and deduplicated. Immutable
/// after construction; safe to share across threads.
class PointSet {
 public:
  PointSet() = default;

  /// Sorts and deduplicates. Any input order, duplicates allowed.
  static PointSet from_values(std::vector<Rational> values, std::string label = "");

  /// Adopts an already strictly increasing sequence; throws std::logic_error
  /// if the order invariant does not hold.
  static PointSet from_sorted(std::vector<Rational> sorted_values, std::string label = "");

  const std::vector<Rational>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Rational& operator[](std::size_t i) const { return points_[i]; }
  const Rational& front() const { return points_.front(); }
  const Rational& back() const { return points_.back(); }

  bool contains(const Rational& x) const;

  const std::string& label() const { return label_; }
  PointSet with_label(std::string label) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<Rational> points_;
  std::string label_;
};

PointSet make_set(std::vector<Rational> values);

/// {c*d : c in C, d in D}, deduplicated.
PointSet product_set(const PointSet& c, const PointSet& d);

/// Left fold of product_set; throws InputError on an empty list.
PointSet product_chain(std::span<const PointSet> sets);

/// Smallest R >= 1 with C contained in [-R, R]. Throws on the empty set.
Rational bounding_radius(const PointSet& c);

/// max - min. Throws on the empty set.
Rational diameter(const PointSet& c);

/// Minimum distance between adjacent points; 0 when fewer than two points.
Rational min_adjacent_gap(const PointSet& c);

}  // namespace boxdim
