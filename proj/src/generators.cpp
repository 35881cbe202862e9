#include "boxdim/generators.hpp"

#include <algorithm>
#include <string>

#include "boxdim/errors.hpp"

namespace boxdim {

namespace {

// Desk-scale ceiling for sieve/enumeration based generators.
constexpr std::uint64_t kMaxTruncation = 10'000'000;

void require_truncation(std::uint64_t m, const char* where) {
  if (m == 0) throw InputError(std::string(where) + ": m must be at least 1");
  if (m > kMaxTruncation) {
    throw InputError(std::string(where) + ": m exceeds the design ceiling of 10^7");
  }
}

void require_prime(std::uint64_t p, const char* where) {
  if (!is_prime(p)) {
    throw InputError(std::string(where) + ": " + std::to_string(p) + " is not prime");
  }
}

std::string primes_label(std::span<const std::uint64_t> primes) {
  std::string s;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(primes[i]);
  }
  return s;
}

bool divides_out_to_one(std::uint64_t n, std::span<const std::uint64_t> primes) {
  for (std::uint64_t p : primes) {
    while (n % p == 0) n /= p;
    if (n == 1) return true;
  }
  return n == 1;
}

}  // namespace

std::uint64_t Factorization::recompose() const {
  std::uint64_t value = 1;
  for (auto [p, e] : factors) {
    for (unsigned i = 0; i < e; ++i) value *= p;
  }
  return value;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t i = 5; i <= n / i; i += 6) {
    if (n % i == 0 || n % (i + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t b) {
  if (b > kMaxTruncation) {
    throw InputError("primes_up_to: bound exceeds the design ceiling of 10^7");
  }
  std::vector<std::uint64_t> primes;
  if (b < 2) return primes;
  std::vector<std::uint8_t> composite(b + 1, 0);
  for (std::uint64_t i = 2; i * i <= b; ++i) {
    if (!composite[i]) {
      for (std::uint64_t j = i * i; j <= b; j += i) composite[j] = 1;
    }
  }
  for (std::uint64_t i = 2; i <= b; ++i) {
    if (!composite[i]) primes.push_back(i);
  }
  return primes;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw InputError("factorize: n must be positive");
  Factorization f;
  f.n = n;
  std::uint64_t rest = n;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) f.factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t p = 5; p <= rest / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (rest > 1) f.factors.emplace_back(rest, 1);
  return f;
}

PointSet reciprocal_integers(std::uint64_t m) {
  require_truncation(m, "reciprocal_integers");
  std::vector<Rational> pts;
  pts.reserve(m);
  for (std::uint64_t n = m; n >= 1; --n) {
    pts.emplace_back(1, static_cast<unsigned long>(n));
  }
  return PointSet::from_sorted(std::move(pts), "reciprocal:" + std::to_string(m));
}

PointSet prime_power_reciprocals(std::uint64_t p, unsigned k_max) {
  require_prime(p, "prime_power_reciprocals");
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), p, k_max);
  std::vector<Rational> pts;
  pts.reserve(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) {
    pts.emplace_back(mpz_class(1), power);
    power /= static_cast<unsigned long>(p);
  }
  return PointSet::from_sorted(std::move(pts),
                               "primepow:" + std::to_string(p) + ":" + std::to_string(k_max));
}

PointSet smooth_reciprocals(std::span<const std::uint64_t> primes, std::uint64_t m, Exec exec) {
  if (primes.empty()) throw InputError("smooth_reciprocals: prime list must be nonempty");
  for (std::uint64_t p : primes) require_prime(p, "smooth_reciprocals");
  require_truncation(m, "smooth_reciprocals");

  std::vector<std::uint8_t> smooth(m + 1, 0);
  smooth[1] = 1;
  if (exec == Exec::parallel) {
    const auto last = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 2; n <= last; ++n) {
      smooth[static_cast<std::size_t>(n)] =
          divides_out_to_one(static_cast<std::uint64_t>(n), primes) ? 1 : 0;
    }
  } else {
    for (std::uint64_t n = 2; n <= m; ++n) {
      smooth[n] = divides_out_to_one(n, primes) ? 1 : 0;
    }
  }

  std::vector<Rational> pts;
  for (std::uint64_t n = m; n >= 1; --n) {
    if (smooth[n]) pts.emplace_back(1, static_cast<unsigned long>(n));
  }
  return PointSet::from_sorted(std::move(pts),
                               "smooth:" + primes_label(primes) + ":" + std::to_string(m));
}

std::uint64_t smallest_nonsmooth(std::span<const std::uint64_t> primes) {
  if (primes.empty()) throw InputError("smallest_nonsmooth: prime list must be nonempty");
  std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t q = 2;; ++q) {
    if (!is_prime(q)) continue;
    if (!std::binary_search(sorted.begin(), sorted.end(), q)) return q;
  }
}

PointSet cantor_endpoints(unsigned depth) {
  if (depth > 24) throw InputError("cantor_endpoints: depth exceeds the design ceiling of 24");
  struct Interval {
    Rational left, right;
  };
  std::vector<Interval> stage{{Rational(0), Rational(1)}};
  const Rational third(1, 3);
  for (unsigned d = 0; d < depth; ++d) {
    std::vector<Interval> next;
    next.reserve(stage.size() * 2);
    for (const Interval& iv : stage) {
      Rational w = (iv.right - iv.left) * third;
      next.push_back({iv.left, iv.left + w});
      next.push_back({iv.right - w, iv.right});
    }
    stage = std::move(next);
  }
  std::vector<Rational> pts;
  pts.reserve(stage.size() * 2);
  for (const Interval& iv : stage) {
    pts.push_back(iv.left);
    pts.push_back(iv.right);
  }
  return PointSet::from_sorted(std::move(pts), "cantor:" + std::to_string(depth));
}

}  // namespace boxdim
