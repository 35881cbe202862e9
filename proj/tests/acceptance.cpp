// Acceptance suite: each criterion prints one [PASS]/[FAIL] line with the
// numbers behind the verdict. Run with no arguments for all criteria, or
// with a single criterion number. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "boxdim/cli.hpp"
#include "boxdim/covering.hpp"
#include "boxdim/dimension.hpp"
#include "boxdim/generators.hpp"
#include "boxdim/rng.hpp"
#include "boxdim/verify.hpp"

namespace {

using namespace boxdim;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    return d.count();
  }
};

// 1. Greedy covering equals the exhaustive oracle on 500 seeded sets.
bool criterion1(std::string& detail) {
  Timer timer;
  SplitMix64 rng(20260809);
  std::size_t agreements = 0;
  const std::size_t trials = 500;
  for (std::size_t i = 0; i < trials; ++i) {
    PointSet f = random_point_set(rng, 12);
    Rational delta(static_cast<long>(1 + rng.below(2048)), 1024UL);
    if (covering_number(f, delta) == brute_force_covering_number(f, delta)) ++agreements;
  }
  double elapsed = timer.seconds();
  std::ostringstream os;
  os << agreements << "/" << trials << " agreements in " << elapsed << "s";
  detail = os.str();
  return agreements == trials && elapsed < 10.0;
}

// 2. Product-cover bound holds exactly on 100 seeded pairs and on the
//    (primepow:2:40, primepow:3:25) pair across a 12-step schedule.
bool criterion2(std::string& detail) {
  Timer timer;
  auto schedule = ScaleSchedule::geometric(Rational(1, 3), Rational(1, 2), 12);
  VerifyReport random_pairs = verify_lemma2(100, 42, schedule);

  PointSet a2 = prime_power_reciprocals(2, 40);
  PointSet a3 = prime_power_reciprocals(3, 25);
  bool fixed_pair = true;
  for (const Rational& delta : schedule.scales()) {
    fixed_pair = fixed_pair && product_cover_bound_check(a2, a3, delta).holds;
  }
  double elapsed = timer.seconds();
  std::ostringstream os;
  os << "random pairs " << (random_pairs.passed ? "hold" : "FAIL") << ", primepow pair "
     << (fixed_pair ? "holds" : "FAILS") << " in " << elapsed << "s";
  detail = os.str();
  return random_pairs.passed && fixed_pair && elapsed < 30.0;
}

// 3. N(1/n trunc 1e4, delta) >= k(delta) >= delta^(-1/2)/2 at every scale
//    with k(delta) <= 1e4.
bool criterion3(std::string& detail) {
  Timer timer;
  PointSet recip = reciprocal_integers(10000);
  auto scales = ScaleSchedule::geometric(Rational(1, 4), Rational(1, 2), 24).scales();
  auto counts = covering_counts(recip, scales);
  std::size_t checked = 0, violations = 0;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    ReciprocalBound bound = reciprocal_lower_bound(scales[i]);
    if (bound.k > 10000) continue;
    ++checked;
    if (counts[i] < bound.k || static_cast<double>(bound.k) < bound.sqrt_bound) ++violations;
  }
  double elapsed = timer.seconds();
  std::ostringstream os;
  os << checked << " scales checked, " << violations << " violations in " << elapsed << "s";
  detail = os.str();
  return checked > 0 && violations == 0 && elapsed < 20.0;
}

// 4. Exact counts for primepow:p:64 never exceed 2 + log(2/delta)/log p on
//    scales satisfying the tail condition.
bool criterion4(std::string& detail) {
  auto scales = ScaleSchedule::geometric(Rational(1, 4), Rational(1, 2), 24).scales();
  std::size_t checked = 0, violations = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    PointSet powers = prime_power_reciprocals(p, 64);
    Rational tail = powers.front();
    for (const Rational& delta : scales) {
      if (tail > delta * Rational(1, 2)) continue;
      ++checked;
      if (static_cast<double>(covering_number(powers, delta)) >
          prime_power_upper_bound(p, delta)) {
        ++violations;
      }
    }
  }
  std::ostringstream os;
  os << checked << " scale/prime pairs, " << violations << " violations";
  detail = os.str();
  return checked > 0 && violations == 0;
}

// 5. Slope of reciprocal_integers(1e4) over geo:1/4:1/2:24 within [0.45, 0.55].
bool criterion5(std::string& detail) {
  Timer timer;
  auto schedule = ScaleSchedule::geometric(Rational(1, 4), Rational(1, 2), 24);
  DimensionReport report = fit_slope(count_curve(reciprocal_integers(10000), schedule));
  double elapsed = timer.seconds();
  std::ostringstream os;
  os << "slope " << report.slope << " (r2 " << report.r_squared << ", valid "
     << (report.valid ? "yes" : "no") << ") in " << elapsed << "s";
  detail = os.str();
  return report.slope >= 0.45 && report.slope <= 0.55 && report.valid && elapsed < 30.0;
}

// 6. Slopes of primepow:2:64 and primepow:3:64 over geo:1/4:1/2:18 at most 0.10.
bool criterion6(std::string& detail) {
  auto schedule = ScaleSchedule::geometric(Rational(1, 4), Rational(1, 2), 18);
  DimensionReport two = fit_slope(count_curve(prime_power_reciprocals(2, 64), schedule));
  DimensionReport three = fit_slope(count_curve(prime_power_reciprocals(3, 64), schedule));
  std::ostringstream os;
  os << "slope(p=2) " << two.slope << ", slope(p=3) " << three.slope;
  detail = os.str();
  return two.slope <= 0.10 && three.slope <= 0.10;
}

// 7. Calibration: cantor:10 over pow3:10 gives log2/log3 within 1e-6, r2
//    within 1e-9 of 1.
bool criterion7(std::string& detail) {
  DimensionReport report =
      fit_slope(count_curve(cantor_endpoints(10), ScaleSchedule::powers_of_three(10)));
  const double target = std::log(2.0) / std::log(3.0);
  std::ostringstream os;
  os << "slope " << report.slope << " vs " << target << ", r2 " << report.r_squared;
  detail = os.str();
  return std::abs(report.slope - target) <= 1e-6 && report.r_squared >= 1.0 - 1e-9;
}

// 8. Decomposition identity at m = 100 and the strictness witness at m = 1000.
bool criterion8(std::string& detail) {
  PointSet full = smooth_reciprocals(primes_up_to(100), 100);
  bool complete = full == reciprocal_integers(100);

  std::vector<std::uint64_t> p235{2, 3, 5};
  PointSet smooth = smooth_reciprocals(p235, 1000);
  PointSet recip = reciprocal_integers(1000);
  bool strict_subset = smooth.size() < recip.size();
  for (const Rational& x : smooth.points()) {
    strict_subset = strict_subset && recip.contains(x);
  }
  std::uint64_t witness = smallest_nonsmooth(p235);
  std::ostringstream os;
  os << "complete-list identity " << (complete ? "holds" : "FAILS") << ", subset "
     << smooth.size() << "/" << recip.size() << ", witness " << witness;
  detail = os.str();
  return complete && strict_subset && witness == 7;
}

// 9. Euclid gap at m = 1e5 with primes {2,3,5}.
bool criterion9(std::string& detail) {
  Timer timer;
  EuclidOptions options;
  options.primes = {2, 3, 5};
  options.m = 100000;
  VerifyReport report = verify_euclid(options);
  double recip_slope = report.details["reciprocal"]["slope"].get<double>();
  double smooth_slope = report.details["smooth"]["slope"].get<double>();
  double gap = report.details["slope_gap"].get<double>();
  double elapsed = timer.seconds();
  std::ostringstream os;
  os << "reciprocal " << recip_slope << ", smooth " << smooth_slope << ", gap " << gap
     << ", passed " << (report.passed ? "yes" : "no") << " in " << elapsed << "s";
  detail = os.str();
  return recip_slope >= 0.45 && smooth_slope <= 0.15 && gap >= 0.25 && report.passed &&
         elapsed < 60.0;
}

// 10. CLI determinism: identical flags and seed give byte-identical output.
bool criterion10(std::string& detail) {
  const std::vector<std::vector<std::string>> cases = {
      {"cover", "reciprocal:50", "--delta", "1/10"},
      {"dim", "cantor:8", "--scales", "pow3:8"},
      {"verify-lemma2", "--trials", "20", "--seed", "7"},
      {"verify-bounds", "--max", "500", "--primes", "2,3", "--scales", "geo:1/4:1/2:10"},
      {"verify-euclid", "--primes", "2,3", "--max", "2000"},
  };
  std::size_t stable = 0;
  for (const auto& args : cases) {
    std::ostringstream out1, err1, out2, err2;
    int c1 = run_cli(args, out1, err1);
    int c2 = run_cli(args, out2, err2);
    if (c1 == c2 && out1.str() == out2.str() && !out1.str().empty()) ++stable;
  }
  std::ostringstream os;
  os << stable << "/" << cases.size() << " commands byte-identical on rerun";
  detail = os.str();
  return stable == cases.size();
}

struct Criterion {
  int number;
  const char* title;
  std::function<bool(std::string&)> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "greedy covering equals exhaustive oracle (500 seeded sets)", criterion1},
    {2, "exact product-cover bound (100 pairs + primepow pair, 12 scales)", criterion2},
    {3, "reciprocal lower bound realized at every admissible scale", criterion3},
    {4, "prime-power counts below the analytic upper bound", criterion4},
    {5, "reciprocal slope in [0.45, 0.55] over geo:1/4:1/2:24", criterion5},
    {6, "prime-power slopes at most 0.10 over geo:1/4:1/2:18", criterion6},
    {7, "cantor calibration recovers log2/log3 exactly", criterion7},
    {8, "smooth decomposition identity and witness", criterion8},
    {9, "euclid slope gap at m = 1e5", criterion9},
    {10, "CLI determinism", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const Criterion& criterion : kCriteria) {
    if (only != 0 && criterion.number != only) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %2d: %s | %s\n", ok ? "PASS" : "FAIL", criterion.number,
                criterion.title, detail.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
