#include "boxdim/point_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "boxdim/errors.hpp"

namespace boxdim {

PointSet PointSet::from_values(std::vector<Rational> values, std::string label) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  PointSet s;
  s.points_ = std::move(values);
  s.label_ = std::move(label);
  return s;
}

PointSet PointSet::from_sorted(std::vector<Rational> sorted_values, std::string label) {
  for (std::size_t i = 1; i < sorted_values.size(); ++i) {
    if (!(sorted_values[i - 1] < sorted_values[i])) {
      throw std::logic_error("from_sorted: sequence not strictly increasing");
    }
  }
  PointSet s;
  s.points_ = std::move(sorted_values);
  s.label_ = std::move(label);
  return s;
}

bool PointSet::contains(const Rational& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

PointSet PointSet::with_label(std::string label) const {
  PointSet s = *this;
  s.label_ = std::move(label);
  return s;
}

PointSet make_set(std::vector<Rational> values) {
  return PointSet::from_values(std::move(values));
}

PointSet product_set(const PointSet& c, const PointSet& d) {
  std::vector<Rational> products;
  products.reserve(c.size() * d.size());
  for (const Rational& a : c.points()) {
    for (const Rational& b : d.points()) {
      products.push_back(a * b);
    }
  }
  std::string label;
  if (!c.label().empty() && !d.label().empty()) {
    label = c.label() + "*" + d.label();
  }
  return PointSet::from_values(std::move(products), std::move(label));
}

PointSet product_chain(std::span<const PointSet> sets) {
  if (sets.empty()) throw InputError("product_chain: no operand sets");
  PointSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    acc = product_set(acc, sets[i]);
  }
  return acc;
}

Rational bounding_radius(const PointSet& c) {
  if (c.empty()) throw InputError("bounding_radius: empty set");
  Rational r = std::max(c.front().abs(), c.back().abs());
  // Floor at 1 so that delta/(2R) never exceeds delta.
  return std::max(r, Rational(1));
}

Rational diameter(const PointSet& c) {
  if (c.empty()) throw InputError("diameter: empty set");
  return c.back() - c.front();
}

Rational min_adjacent_gap(const PointSet& c) {
  if (c.size() < 2) return Rational(0);
  Rational best = c[1] - c[0];
  for (std::size_t i = 2; i < c.size(); ++i) {
    Rational gap = c[i] - c[i - 1];
    if (gap < best) best = gap;
  }
  return best;
}

}  // namespace boxdim
