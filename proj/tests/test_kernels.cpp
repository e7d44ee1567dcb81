#include <vector>

#include "doctest.h"
#include "ttmax/generators.hpp"
#include "ttmax/kernels.hpp"
#include "ttmax/rng.hpp"

using namespace ttmax;

TEST_CASE("parallel kernels agree with their serial references") {
  const std::vector<std::vector<std::int64_t>> shapes = {
      {2, 2}, {3, 4}, {2, 3, 4}, {3, 3, 3, 3}, {2, 2, 2, 2, 2}};
  Rng rng(101);
  for (const auto& dims : shapes) {
    const Shape shape(dims);
    const TTTensor tt = random_tt_init(shape, 3, rng.bits());
    const DenseTensor a = uniform_tensor(shape, rng.bits());
    const DenseTensor b = uniform_tensor(shape, rng.bits());

    CHECK(max_abs_diff(tt_to_dense(tt), tt_to_dense_serial(tt)) <= 1e-13);
    CHECK(max_abs_diff(a, b) == max_abs_diff_serial(a, b));
    CHECK(max_norm_error(a, tt) == doctest::Approx(max_norm_error_serial(a, tt)).epsilon(1e-13));
    CHECK(max_abs_diff(clip_to_ball(b, a, 0.3), clip_to_ball_serial(b, a, 0.3)) == 0.0);
  }
}

TEST_CASE("tt_to_dense places entries per the chain product") {
  const TTTensor tt = random_tt_init(Shape({3, 2, 4}), 2, 55);
  const DenseTensor dense = tt_to_dense(tt);
  const Shape shape = dense.shape();
  for (std::int64_t off = 0; off < shape.element_count(); ++off) {
    CHECK(dense[off] == doctest::Approx(tt_eval(tt, shape.multi_index(off))).epsilon(1e-13));
  }
}

TEST_CASE("max_abs_diff and max_norm_error match loop oracles") {
  const Shape shape({3, 4, 2});
  const DenseTensor a = uniform_tensor(shape, 1);
  const DenseTensor b = uniform_tensor(shape, 2);
  const TTTensor tt = random_tt_init(shape, 2, 3);
  const DenseTensor dense = tt_to_dense(tt);

  double want_ab = 0.0, want_at = 0.0;
  for (std::int64_t i = 0; i < a.size(); ++i) {
    want_ab = std::max(want_ab, std::abs(a[i] - b[i]));
    want_at = std::max(want_at, std::abs(a[i] - dense[i]));
  }
  CHECK(max_abs_diff(a, b) == want_ab);
  CHECK(max_norm_error(a, tt) == doctest::Approx(want_at).epsilon(1e-13));
}

TEST_CASE("clip_to_ball is the entrywise metric projection") {
  const Shape shape({4, 4});
  const DenseTensor center = uniform_tensor(shape, 9);
  const DenseTensor x = uniform_tensor(shape, 10);
  const double radius = 0.25;
  const DenseTensor y = clip_to_ball(x, center, radius);

  for (std::int64_t i = 0; i < x.size(); ++i) {
    CHECK(std::abs(y[i] - center[i]) <= radius + 1e-15);
    // No strictly-better feasible point entrywise: y is x clamped.
    const double lo = center[i] - radius, hi = center[i] + radius;
    CHECK(y[i] == std::min(hi, std::max(lo, x[i])));
  }
  // Idempotent and identity inside the ball.
  CHECK(max_abs_diff(clip_to_ball(y, center, radius), y) == 0.0);
}

TEST_CASE("kernels reject shape mismatches") {
  const DenseTensor a = uniform_tensor(Shape({2, 3}), 1);
  const DenseTensor b = uniform_tensor(Shape({3, 2}), 1);
  CHECK_THROWS(max_abs_diff(a, b));
  CHECK_THROWS(clip_to_ball(a, b, 0.1));
  const TTTensor tt = random_tt_init(Shape({2, 2}), 1, 1);
  CHECK_THROWS(max_norm_error(a, tt));
}
