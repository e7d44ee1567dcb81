// Timing table for the dense kernels against their serial reference
// implementations.  Pass --quick for a reduced problem set (used by ctest to
// make sure the harness itself stays healthy).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "ttmax/generators.hpp"
#include "ttmax/kernels.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
  // One warm-up, then best of reps.
  fn();
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double fast_ms, double serial_ms, double check) {
  std::printf("%-22s %10.3f ms %10.3f ms %8.2fx   check=%.3g\n", name, fast_ms, serial_ms,
              serial_ms / fast_ms, check);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  }

  const std::int64_t n = quick ? 8 : 24;
  const std::int64_t d = quick ? 3 : 4;
  const std::int64_t r = quick ? 3 : 8;
  const int reps = quick ? 2 : 5;

  const ttmax::Shape shape(std::vector<std::int64_t>(static_cast<std::size_t>(d), n));
  const ttmax::TTTensor tt = ttmax::random_tt_init(shape, r, 7);
  const ttmax::DenseTensor a = ttmax::uniform_tensor(shape, 11);
  const ttmax::DenseTensor b = ttmax::uniform_tensor(shape, 13);

  std::printf("kernel benchmark: n=%lld d=%lld r=%lld (%lld entries)\n",
              static_cast<long long>(n), static_cast<long long>(d), static_cast<long long>(r),
              static_cast<long long>(shape.element_count()));
  std::printf("%-22s %13s %13s %9s\n", "kernel", "parallel", "serial", "speedup");

  {
    ttmax::DenseTensor fast = ttmax::tt_to_dense(tt);
    ttmax::DenseTensor ref = ttmax::tt_to_dense_serial(tt);
    const double fast_ms = time_ms([&] { fast = ttmax::tt_to_dense(tt); }, reps);
    const double serial_ms = time_ms([&] { ref = ttmax::tt_to_dense_serial(tt); }, reps);
    report("tt_to_dense", fast_ms, serial_ms, ttmax::max_abs_diff(fast, ref));
  }
  {
    double fast_val = 0.0, ref_val = 0.0;
    const double fast_ms = time_ms([&] { fast_val = ttmax::max_abs_diff(a, b); }, reps);
    const double serial_ms = time_ms([&] { ref_val = ttmax::max_abs_diff_serial(a, b); }, reps);
    report("max_abs_diff", fast_ms, serial_ms, std::abs(fast_val - ref_val));
  }
  {
    double fast_val = 0.0, ref_val = 0.0;
    const double fast_ms = time_ms([&] { fast_val = ttmax::max_norm_error(a, tt); }, reps);
    const double serial_ms = time_ms([&] { ref_val = ttmax::max_norm_error_serial(a, tt); }, reps);
    report("max_norm_error", fast_ms, serial_ms, std::abs(fast_val - ref_val));
  }
  {
    ttmax::DenseTensor fast = ttmax::clip_to_ball(b, a, 0.25);
    ttmax::DenseTensor ref = ttmax::clip_to_ball_serial(b, a, 0.25);
    const double fast_ms = time_ms([&] { fast = ttmax::clip_to_ball(b, a, 0.25); }, reps);
    const double serial_ms = time_ms([&] { ref = ttmax::clip_to_ball_serial(b, a, 0.25); }, reps);
    report("clip_to_ball", fast_ms, serial_ms, ttmax::max_abs_diff(fast, ref));
  }
  return 0;
}
