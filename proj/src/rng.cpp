#include "boxdim/rng.hpp"

namespace boxdim {

Rational random_rational(SplitMix64& rng, unsigned max_den) {
  unsigned long den = static_cast<unsigned long>(1 + rng.below(max_den));
  // Numerators span [-2*den, 2*den] so values cover [-2, 2].
  long num = static_cast<long>(rng.below(4 * den + 1)) - static_cast<long>(2 * den);
  return Rational(num, den);
}

PointSet random_point_set(SplitMix64& rng, std::size_t max_size, unsigned max_den) {
  std::size_t size = 1 + rng.below(max_size);
  std::vector<Rational> values;
  values.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    values.push_back(random_rational(rng, max_den));
  }
  return PointSet::from_values(std::move(values));
}

}  // namespace boxdim
