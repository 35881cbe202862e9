#include "boxdim/dimension.hpp"

#include <cmath>

#include "boxdim/errors.hpp"
#include "boxdim/generators.hpp"

namespace boxdim {

namespace {

const Rational& half() {
  static const Rational h(1, 2);
  return h;
}

void require_unit_interval_delta(const Rational& delta, const char* where) {
  if (delta.sign() <= 0 || !(delta < half())) {
    throw InputError(std::string(where) + ": delta must lie in (0, 1/2), got " + delta.str());
  }
}

}  // namespace

ScaleSchedule ScaleSchedule::geometric(Rational delta0, Rational ratio, unsigned steps) {
  if (delta0.sign() <= 0 || !(delta0 < half())) {
    throw InputError("schedule: delta0 must lie in (0, 1/2), got " + delta0.str());
  }
  if (ratio.sign() <= 0 || !(ratio < Rational(1))) {
    throw InputError("schedule: ratio must lie in (0, 1), got " + ratio.str());
  }
  if (steps == 0) throw InputError("schedule: steps must be at least 1");
  std::string spec = "geo:" + delta0.str() + ":" + ratio.str() + ":" + std::to_string(steps);
  return ScaleSchedule(std::move(delta0), std::move(ratio), steps, std::move(spec));
}

ScaleSchedule ScaleSchedule::powers_of_three(unsigned steps) {
  if (steps == 0) throw InputError("schedule: steps must be at least 1");
  return ScaleSchedule(Rational(1, 3), Rational(1, 3), steps, "pow3:" + std::to_string(steps));
}

std::vector<Rational> ScaleSchedule::scales() const {
  std::vector<Rational> out;
  out.reserve(steps_);
  Rational d = delta0_;
  for (unsigned j = 0; j < steps_; ++j) {
    out.push_back(d);
    d *= ratio_;
  }
  return out;
}

CountCurve count_curve(const PointSet& f, const ScaleSchedule& schedule, Exec exec) {
  std::vector<Rational> deltas = schedule.scales();
  return count_curve(f, deltas, exec);
}

CountCurve count_curve(const PointSet& f, std::span<const Rational> deltas, Exec exec) {
  if (f.empty()) throw InputError("count_curve: empty point set");
  for (std::size_t i = 1; i < deltas.size(); ++i) {
    if (!(deltas[i] < deltas[i - 1])) {
      throw InputError("count_curve: scales must be strictly decreasing");
    }
  }
  std::vector<std::size_t> counts = covering_counts(f, deltas, exec);
  CountCurve curve;
  curve.samples.reserve(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    curve.samples.emplace_back(deltas[i], counts[i]);
  }
  curve.truncation_gap = min_adjacent_gap(f);
  curve.set_label = f.label();
  return curve;
}

DimensionReport fit_slope(const CountCurve& curve) {
  const auto& samples = curve.samples;
  if (samples.size() < 3) {
    throw InputError("fit_slope: need at least 3 samples, got " + std::to_string(samples.size()));
  }
  double sum_x = 0, sum_y = 0;
  for (const auto& [delta, count] : samples) {
    if (count == 0) throw InputError("fit_slope: zero covering count at delta " + delta.str());
    sum_x += -std::log(delta.to_double());
    sum_y += std::log(static_cast<double>(count));
  }
  const double n = static_cast<double>(samples.size());
  const double mean_x = sum_x / n;
  const double mean_y = sum_y / n;
  double ss_xx = 0, ss_yy = 0, ss_xy = 0;
  for (const auto& [delta, count] : samples) {
    double dx = -std::log(delta.to_double()) - mean_x;
    double dy = std::log(static_cast<double>(count)) - mean_y;
    ss_xx += dx * dx;
    ss_yy += dy * dy;
    ss_xy += dx * dy;
  }
  DimensionReport report;
  report.slope = ss_xy / ss_xx;
  report.intercept = mean_y - report.slope * mean_x;
  report.r_squared = ss_yy > 0 ? (ss_xy * ss_xy) / (ss_xx * ss_yy) : 1.0;
  report.window_min = samples.back().first;
  report.window_max = samples.front().first;
  report.truncation_gap = curve.truncation_gap;
  report.valid = !(report.window_min < curve.truncation_gap);
  return report;
}

std::uint64_t k_of_delta(const Rational& delta) {
  require_unit_interval_delta(delta, "k_of_delta");
  const mpz_class p = delta.numerator();
  const mpz_class q = delta.denominator();
  // k is within +-2 of floor(sqrt(q/p)); verify the bracket exactly.
  mpz_class root;
  mpz_class quotient = q / p;
  mpz_sqrt(root.get_mpz_t(), quotient.get_mpz_t());
  mpz_class lo = root > 2 ? mpz_class(root - 2) : mpz_class(2);
  for (mpz_class k = lo; k <= root + 3; ++k) {
    // 1/(k(k+1)) <= p/q  and  p/q < 1/((k-1)k)
    if (p * k * (k + 1) >= q && p * (k - 1) * k < q) {
      if (!k.fits_ulong_p()) throw InputError("k_of_delta: delta too small for this build");
      return k.get_ui();
    }
  }
  throw std::logic_error("k_of_delta: bracket search failed for " + delta.str());
}

ReciprocalBound reciprocal_lower_bound(const Rational& delta) {
  ReciprocalBound b;
  b.k = k_of_delta(delta);
  b.sqrt_bound = 0.5 / std::sqrt(delta.to_double());
  return b;
}

double prime_power_upper_bound(std::uint64_t p, const Rational& delta) {
  if (!is_prime(p)) {
    throw InputError("prime_power_upper_bound: " + std::to_string(p) + " is not prime");
  }
  require_unit_interval_delta(delta, "prime_power_upper_bound");
  double log_two_over_delta = std::log(2.0) - std::log(delta.to_double());
  return 2.0 + log_two_over_delta / std::log(static_cast<double>(p));
}

SubadditivityReport subadditivity_estimate_check(const PointSet& c, const PointSet& d,
                                                 const ScaleSchedule& schedule,
                                                 double tolerance, Exec exec) {
  const PointSet cd = product_set(c, d);
  std::vector<Rational> deltas = schedule.scales();
  for (const PointSet* s : {&c, &d, &cd}) {
    Rational gap = min_adjacent_gap(*s);
    for (const Rational& delta : deltas) {
      if (delta < gap) {
        throw WindowError("scale " + delta.str() + " probes below the resolution gap " +
                              gap.str() + " of set '" + s->label() + "'",
                          delta.str());
      }
    }
  }
  SubadditivityReport report;
  report.dim_c = fit_slope(count_curve(c, deltas, exec)).slope;
  report.dim_d = fit_slope(count_curve(d, deltas, exec)).slope;
  report.dim_cd = fit_slope(count_curve(cd, deltas, exec)).slope;
  report.holds = report.dim_cd <= report.dim_c + report.dim_d + tolerance;
  return report;
}

}  // namespace boxdim
