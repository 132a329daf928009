// Serial reference vs OpenMP window kernel on rotation orbits.
// usage: bench_window [max_points]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "polygeo/rotation.hpp"
#include "polygeo/window.hpp"

using namespace polygeo;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::int64_t max_points = argc > 1 ? std::atoll(argv[1]) : 4000;
  std::printf("%8s %10s %12s %12s %12s %9s\n", "points", "L", "reference_s", "exact_s", "packed_s", "speedup");
  for (std::int64_t n = 1000; n <= max_points; n *= 2) {
    const auto orbit = rotation::orbit(constants::phi(), n).points;
    std::vector<Quad> sorted = orbit;
    std::sort(sorted.begin(), sorted.end());
    const uniformity::EdgePoints edge(orbit);
    const Rational length(100, n);
    uniformity::WindowExtremes ref, exact, packed;
    const double t_ref = seconds([&] { ref = uniformity::visiting_extremes_reference(sorted, length); });
    const double t_exact = seconds([&] { exact = uniformity::visiting_extremes(std::span<const Quad>(sorted), length); });
    const double t_packed = seconds([&] { packed = uniformity::visiting_extremes(edge, length); });
    if (ref.min != packed.min || ref.max != packed.max || ref.min != exact.min || ref.max != exact.max) {
      std::fprintf(stderr, "mismatch at n=%lld\n", static_cast<long long>(n));
      return 1;
    }
    std::printf("%8lld %10.6f %12.4f %12.4f %12.4f %8.1fx\n", static_cast<long long>(n), length.convert_to<double>(),
                t_ref, t_exact, t_packed, t_ref / t_packed);
  }
  std::printf("threads: %d\n", omp_get_max_threads());
  return 0;
}
