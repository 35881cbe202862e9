#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "boxdim/covering.hpp"
#include "boxdim/exec.hpp"
#include "boxdim/point_set.hpp"

namespace boxdim {

/// Geometric scale schedule delta0 * ratio^j, j = 0..steps-1. Every scale
/// stays inside (0, 1/2).
class ScaleSchedule {
 public:
  static ScaleSchedule geometric(Rational delta0, Rational ratio, unsigned steps);
  static ScaleSchedule powers_of_three(unsigned steps);

  const Rational& delta0() const { return delta0_; }
  const Rational& ratio() const { return ratio_; }
  unsigned steps() const { return steps_; }

  /// Scales in decreasing order.
  std::vector<Rational> scales() const;

  /// Round-trips through the CLI syntax, e.g. "geo:1/4:1/2:24" or "pow3:10".
  const std::string& spec_string() const { return spec_; }

 private:
  ScaleSchedule(Rational delta0, Rational ratio, unsigned steps, std::string spec)
      : delta0_(std::move(delta0)), ratio_(std::move(ratio)), steps_(steps), spec_(std::move(spec)) {}
  Rational delta0_;
  Rational ratio_;
  unsigned steps_;
  std::string spec_;
};

/// Sampled (delta, N(F, delta)) pairs, strictly decreasing in delta, plus
/// the source set's resolution gap for validity checks downstream.
struct CountCurve {
  std::vector<std::pair<Rational, std::size_t>> samples;
  Rational truncation_gap;
  std::string set_label;
};

struct DimensionReport {
  double slope = 0.0;      // box-dimension estimate
  double intercept = 0.0;  // in log N = slope * log(1/delta) + intercept
  double r_squared = 1.0;
  Rational window_min;     // smallest sampled delta
  Rational window_max;     // largest sampled delta
  Rational truncation_gap;
  bool valid = false;      // window_min >= truncation_gap
};

/// Exact covering counts along the schedule. Scales may be evaluated
/// concurrently; assembly order is fixed by the schedule.
CountCurve count_curve(const PointSet& f, const ScaleSchedule& schedule,
                       Exec exec = Exec::parallel);

/// Covering counts at explicit scales (must be strictly decreasing).
CountCurve count_curve(const PointSet& f, std::span<const Rational> deltas,
                       Exec exec = Exec::parallel);

/// Ordinary least squares of log(count) against log(1/delta). Needs at
/// least 3 samples, all counts >= 1. The only floating-point step in the
/// pipeline: every count entering here is exact.
DimensionReport fit_slope(const CountCurve& curve);

/// The unique k >= 2 with 1/(k(k+1)) <= delta < 1/((k-1)k); these brackets
/// partition (0, 1/2).
std::uint64_t k_of_delta(const Rational& delta);

struct ReciprocalBound {
  std::uint64_t k;
  double sqrt_bound;  // delta^(-1/2) / 2, always <= k
};

/// Lower-bound data for the reciprocal set: any delta-cover of
/// {1, 1/2, ..., 1/k} needs at least k intervals, and k >= delta^(-1/2)/2.
ReciprocalBound reciprocal_lower_bound(const Rational& delta);

/// Analytic cover-size bound 2 + log(2/delta)/log(p) for the set of
/// reciprocal powers of p. Valid for exact counts of truncations whose tail
/// fits inside [-delta/2, delta/2], i.e. 1/p^K <= delta/2.
double prime_power_upper_bound(std::uint64_t p, const Rational& delta);

struct SubadditivityReport {
  double dim_c = 0.0;
  double dim_d = 0.0;
  double dim_cd = 0.0;
  bool holds = false;  // dim_cd <= dim_c + dim_d + tolerance
};

/// Estimate-level check of dimension subadditivity under set products. The
/// theorem-level counterpart is product_cover_bound_check, which is exact.
/// Throws WindowError if any scale probes below a participating set's gap.
SubadditivityReport subadditivity_estimate_check(const PointSet& c, const PointSet& d,
                                                 const ScaleSchedule& schedule,
                                                 double tolerance, Exec exec = Exec::parallel);

}  // namespace boxdim
