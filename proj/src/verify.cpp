#include "boxdim/verify.hpp"

#include <algorithm>
#include <cmath>

#include "boxdim/errors.hpp"
#include "boxdim/generators.hpp"
#include "boxdim/io.hpp"
#include "boxdim/rng.hpp"

namespace boxdim {

using nlohmann::ordered_json;

namespace {

std::vector<ordered_json> run_lemma2_trial(unsigned trial, std::uint64_t seed,
                                           std::span<const Rational> deltas) {
  SplitMix64 rng = trial_rng(seed, trial);
  PointSet c = random_point_set(rng);
  PointSet d = random_point_set(rng);
  std::vector<ordered_json> failures;
  for (const Rational& delta : deltas) {
    ProductBoundReport report = product_cover_bound_check(c, d, delta);
    if (!report.holds) {
      failures.push_back(ordered_json{{"trial", trial},
                                      {"C", point_set_to_json(c)},
                                      {"D", point_set_to_json(d)},
                                      {"delta", delta.str()},
                                      {"lhs", report.lhs},
                                      {"rhs_c", report.rhs_c},
                                      {"rhs_d", report.rhs_d}});
    }
  }
  return failures;
}

// Smallest m with 1/(m(m-1)) <= delta, i.e. the least reciprocal-set
// truncation whose resolution gap admits this scale.
std::uint64_t required_truncation_for(const Rational& delta) {
  // m(m-1) >= q/p; start from the integer square root and verify exactly.
  mpz_class quotient = delta.denominator() / delta.numerator();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), quotient.get_mpz_t());
  mpz_class m = root > 2 ? mpz_class(root - 1) : mpz_class(2);
  const mpz_class num = delta.numerator();
  const mpz_class den = delta.denominator();
  while (num * m * (m - 1) < den) ++m;
  if (!m.fits_ulong_p()) return 0;
  return m.get_ui();
}

ordered_json slope_block(const CountCurve& curve, const DimensionReport& report) {
  ordered_json samples = ordered_json::array();
  for (const auto& [delta, count] : curve.samples) {
    samples.push_back(ordered_json::array({delta.str(), count}));
  }
  return ordered_json{{"set", curve.set_label},
                      {"slope", json_real(report.slope)},
                      {"r2", json_real(report.r_squared)},
                      {"truncation_gap", report.truncation_gap.str()},
                      {"valid", report.valid},
                      {"samples", samples}};
}

}  // namespace

VerifyReport verify_lemma2(unsigned trials, std::uint64_t seed, const ScaleSchedule& schedule,
                           Exec exec) {
  if (trials == 0) throw InputError("verify_lemma2: need at least one trial");
  std::vector<Rational> deltas = schedule.scales();

  std::vector<std::vector<ordered_json>> per_trial(trials);
  if (exec == Exec::parallel) {
    const auto n = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      per_trial[static_cast<std::size_t>(i)] =
          run_lemma2_trial(static_cast<unsigned>(i), seed, deltas);
    }
  } else {
    for (unsigned i = 0; i < trials; ++i) {
      per_trial[i] = run_lemma2_trial(i, seed, deltas);
    }
  }

  ordered_json failures = ordered_json::array();
  for (auto& trial_failures : per_trial) {
    for (ordered_json& f : trial_failures) failures.push_back(std::move(f));
  }

  ordered_json scales = ordered_json::array();
  for (const Rational& d : deltas) scales.push_back(d.str());

  VerifyReport report;
  report.check_name = "lemma2-product-bound";
  report.passed = failures.empty();
  report.details = ordered_json{{"trials", trials},
                                {"seed", seed},
                                {"scales", scales},
                                {"checks", trials * deltas.size()},
                                {"failures", failures}};
  return report;
}

VerifyReport verify_bounds(std::uint64_t m, std::span<const std::uint64_t> primes,
                           const ScaleSchedule& schedule, Exec exec) {
  if (m < 2) throw InputError("verify_bounds: m must be at least 2");
  std::vector<Rational> deltas = schedule.scales();
  bool all_ok = true;

  PointSet recip = reciprocal_integers(m);
  std::vector<std::size_t> recip_counts = covering_counts(recip, deltas, exec);
  ordered_json lower_rows = ordered_json::array();
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    ReciprocalBound bound = reciprocal_lower_bound(deltas[i]);
    if (bound.k > m) continue;  // truncation too shallow to witness this scale
    bool ok = recip_counts[i] >= bound.k &&
              static_cast<double>(bound.k) >= bound.sqrt_bound;
    all_ok = all_ok && ok;
    lower_rows.push_back(ordered_json{{"delta", deltas[i].str()},
                                      {"count", recip_counts[i]},
                                      {"k", bound.k},
                                      {"sqrt_bound", json_real(bound.sqrt_bound)},
                                      {"ok", ok}});
  }

  constexpr unsigned kTailExponent = 64;
  ordered_json upper_blocks = ordered_json::array();
  for (std::uint64_t p : primes) {
    PointSet powers = prime_power_reciprocals(p, kTailExponent);
    // Tail condition 1/p^64 <= delta/2; the truncated tail then sits inside
    // the bound's central interval.
    Rational tail = powers.front();
    std::vector<Rational> usable;
    for (const Rational& delta : deltas) {
      if (!(tail > delta * Rational(1, 2))) usable.push_back(delta);
    }
    std::vector<std::size_t> counts = covering_counts(powers, usable, exec);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < usable.size(); ++i) {
      double bound = prime_power_upper_bound(p, usable[i]);
      bool ok = static_cast<double>(counts[i]) <= bound;
      all_ok = all_ok && ok;
      rows.push_back(ordered_json{{"delta", usable[i].str()},
                                  {"count", counts[i]},
                                  {"bound", json_real(bound)},
                                  {"ok", ok}});
    }
    upper_blocks.push_back(ordered_json{{"p", p}, {"trunc_k", kTailExponent}, {"scales", rows}});
  }

  VerifyReport report;
  report.check_name = "analytic-bounds";
  report.passed = all_ok;
  report.details = ordered_json{{"m", m},
                                {"scales", schedule.spec_string()},
                                {"reciprocal_lower", lower_rows},
                                {"prime_power_upper", upper_blocks}};
  return report;
}

VerifyReport verify_euclid(const EuclidOptions& options) {
  if (options.primes.empty()) throw InputError("verify_euclid: prime list must be nonempty");
  if (options.m < 2) throw InputError("verify_euclid: m must be at least 2");

  PointSet recip = reciprocal_integers(options.m);
  PointSet smooth = smooth_reciprocals(options.primes, options.m, options.exec);
  Rational shared_gap = std::max(min_adjacent_gap(recip), min_adjacent_gap(smooth));

  std::vector<Rational> scales;
  if (options.schedule) {
    for (const Rational& delta : options.schedule->scales()) {
      if (!(delta < shared_gap)) scales.push_back(delta);
    }
    if (scales.size() < 3) {
      std::vector<Rational> all = options.schedule->scales();
      Rational needed = all.size() >= 3 ? all[2] : all.back();
      throw WindowError(
          "shared validity window keeps fewer than 3 of the requested scales; "
          "resolution gap is " + shared_gap.str(),
          all.back().str(), required_truncation_for(needed));
    }
  } else {
    // Deepest default_steps scales 2^-t that stay at or above the shared
    // gap, never coarser than 1/4. The flattening of the smooth set shows
    // at the fine end of the window, so the default hugs it.
    unsigned steps = std::max(3u, options.default_steps);
    Rational delta(1, 4);
    unsigned t_end = 2;
    while (t_end < 64 && !(delta * Rational(1, 2) < shared_gap)) {
      delta *= Rational(1, 2);
      ++t_end;
    }
    if (t_end < 4) {
      throw WindowError("shared validity window admits fewer than 3 scales above gap " +
                            shared_gap.str(),
                        delta.str(), required_truncation_for(Rational(1, 16)));
    }
    unsigned t_start = t_end - std::min(t_end - 2, steps - 1);
    Rational d(1, 2);
    for (unsigned t = 2; t < t_start; ++t) d *= Rational(1, 2);
    for (unsigned t = t_start; t <= t_end; ++t) {
      d *= Rational(1, 2);
      scales.push_back(d);  // decreasing: 2^-t_start down to 2^-t_end
    }
  }

  CountCurve recip_curve = count_curve(recip, scales, options.exec);
  CountCurve smooth_curve = count_curve(smooth, scales, options.exec);
  DimensionReport recip_fit = fit_slope(recip_curve);
  DimensionReport smooth_fit = fit_slope(smooth_curve);

  ordered_json prime_slopes = ordered_json::array();
  const Rational delta_min = scales.back();
  for (std::uint64_t p : options.primes) {
    // Truncate each power set deep enough that its gap clears delta_min.
    unsigned k = 1;
    Rational gap(static_cast<long>(p - 1), static_cast<unsigned long>(p));
    while (gap > delta_min && k < 512) {
      gap = gap / Rational(static_cast<long>(p));
      ++k;
    }
    PointSet powers = prime_power_reciprocals(p, k);
    DimensionReport fit = fit_slope(count_curve(powers, scales, options.exec));
    prime_slopes.push_back(
        ordered_json{{"p", p}, {"trunc_k", k}, {"slope", json_real(fit.slope)}});
  }

  double gap = recip_fit.slope - smooth_fit.slope;
  bool passed = gap >= options.threshold;

  ordered_json scale_list = ordered_json::array();
  for (const Rational& d : scales) scale_list.push_back(d.str());

  VerifyReport report;
  report.check_name = "euclid-gap";
  report.passed = passed;
  report.details = ordered_json{
      {"m", options.m},
      {"threshold", json_real(options.threshold)},
      {"shared_gap", shared_gap.str()},
      {"scales", scale_list},
      {"reciprocal", slope_block(recip_curve, recip_fit)},
      {"smooth", slope_block(smooth_curve, smooth_fit)},
      {"prime_slopes", prime_slopes},
      {"witness_denominator", smallest_nonsmooth(options.primes)},
      {"slope_gap", json_real(gap)}};
  return report;
}

}  // namespace boxdim
