#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxdim/dimension.hpp"
#include "boxdim/exec.hpp"

namespace boxdim {

/// One named verification outcome. passed is always recomputable from
/// details alone; the payload carries every number that entered the verdict.
struct VerifyReport {
  std::string check_name;
  bool passed = false;
  nlohmann::ordered_json details;
};

/// Seeded random product-bound trials: for each trial draw a pair of sets
/// (sizes 1..30, denominators <= 1024, values in [-2, 2]) and check
/// N(CD, delta) <= N(C, delta/2R) * N(D, delta/2R) exactly at every scale.
/// Any failing instance is listed verbatim in the report.
VerifyReport verify_lemma2(unsigned trials, std::uint64_t seed, const ScaleSchedule& schedule,
                           Exec exec = Exec::parallel);

/// Analytic-bound replay on exact counts across the schedule:
///  (a) N(reciprocal_integers(m), delta) >= k(delta) >= delta^(-1/2)/2
///      at every scale whose bracket integer k(delta) stays <= m;
///  (b) N(primepow(p, 64), delta) <= 2 + log(2/delta)/log(p) for each p,
///      at every scale satisfying the tail condition 1/p^64 <= delta/2.
VerifyReport verify_bounds(std::uint64_t m, std::span<const std::uint64_t> primes,
                           const ScaleSchedule& schedule, Exec exec = Exec::parallel);

struct EuclidOptions {
  std::vector<std::uint64_t> primes{2, 3, 5};
  std::uint64_t m = 100000;
  /// Explicit scales; when absent the deepest default_steps power-of-two
  /// scales that respect the shared validity window are used.
  std::optional<ScaleSchedule> schedule;
  unsigned default_steps = 5;
  double threshold = 0.25;
  Exec exec = Exec::parallel;
};

/// Finite-scale shadow of the contradiction: the reciprocal set's slope
/// stays near 1/2 while the smooth product set built from the given primes
/// flattens toward 0. passed when the slope gap reaches the threshold. The
/// witness (least integer with a factor outside the list) shows which
/// denominator the smooth set is missing.
VerifyReport verify_euclid(const EuclidOptions& options);

}  // namespace boxdim
