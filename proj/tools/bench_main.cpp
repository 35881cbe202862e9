// Compares the OpenMP kernels against their serial reference paths and
// checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "boxdim/covering.hpp"
#include "boxdim/dimension.hpp"
#include "boxdim/generators.hpp"
#include "boxdim/verify.hpp"

namespace {

using boxdim::Exec;

double seconds(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return elapsed.count();
}

void report(const std::string& name, double serial, double parallel, bool equal) {
  std::printf("%-34s %9.3fs %9.3fs %6.2fx  %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, equal ? "results equal" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serially\n");
#endif
  std::printf("%-34s %10s %10s %7s\n", "kernel", "serial", "parallel", "speedup");

  {
    boxdim::PointSet recip = boxdim::reciprocal_integers(100000);
    auto schedule = boxdim::ScaleSchedule::geometric(boxdim::Rational(1, 4),
                                                     boxdim::Rational(1, 2), 24);
    auto deltas = schedule.scales();
    std::vector<std::size_t> a, b;
    double ts = seconds([&] { a = boxdim::covering_counts(recip, deltas, Exec::serial); });
    double tp = seconds([&] { b = boxdim::covering_counts(recip, deltas, Exec::parallel); });
    report("covering counts, 1e5 pts x 24", ts, tp, a == b);
  }

  {
    std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
    boxdim::PointSet a, b;
    double ts = seconds([&] { a = boxdim::smooth_reciprocals(primes, 2000000, Exec::serial); });
    double tp = seconds([&] { b = boxdim::smooth_reciprocals(primes, 2000000, Exec::parallel); });
    report("smooth sieve, m = 2e6", ts, tp, a == b);
  }

  {
    auto schedule = boxdim::ScaleSchedule::geometric(boxdim::Rational(1, 3),
                                                     boxdim::Rational(1, 2), 6);
    boxdim::VerifyReport a, b;
    double ts = seconds([&] { a = boxdim::verify_lemma2(200, 42, schedule, Exec::serial); });
    double tp = seconds([&] { b = boxdim::verify_lemma2(200, 42, schedule, Exec::parallel); });
    report("product-bound trials, 200", ts, tp,
           a.passed == b.passed && a.details == b.details);
  }

  return 0;
}
