#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "boxdim/exec.hpp"
#include "boxdim/point_set.hpp"

namespace boxdim {

/// Canonical prime factorization: factors sorted by prime, exponents >= 1,
/// empty for n = 1.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  std::uint64_t recompose() const;
};

bool is_prime(std::uint64_t n);

/// All primes <= b, increasing. Sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t b);

/// Trial-division factorization. Throws InputError for n = 0.
Factorization factorize(std::uint64_t n);

/// {1/n : 1 <= n <= m}, labeled "reciprocal:m".
PointSet reciprocal_integers(std::uint64_t m);

/// {1/p^k : 0 <= k <= k_max} for prime p, labeled "primepow:p:K".
PointSet prime_power_reciprocals(std::uint64_t p, unsigned k_max);

/// {1/n : n <= m, every prime factor of n is in primes}. Built by testing
/// each n <= m for smoothness rather than by expanding products, so no
/// out-of-range denominators are ever generated.
PointSet smooth_reciprocals(std::span<const std::uint64_t> primes, std::uint64_t m,
                            Exec exec = Exec::parallel);

/// Least integer >= 2 with a prime factor outside the list; this equals the
/// least prime missing from the list.
std::uint64_t smallest_nonsmooth(std::span<const std::uint64_t> primes);

/// Endpoints of the 2^depth closed intervals at the given stage of the
/// middle-thirds construction on [0, 1]; 2^(depth+1) points.
PointSet cantor_endpoints(unsigned depth);

}  // namespace boxdim
