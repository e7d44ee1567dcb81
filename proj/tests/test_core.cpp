#include <array>
#include <vector>

#include "doctest.h"
#include "ttmax/dense_tensor.hpp"
#include "ttmax/rng.hpp"
#include "ttmax/shape.hpp"
#include "ttmax/tt_tensor.hpp"

using namespace ttmax;

TEST_CASE("shape linearization keeps the last index fastest") {
  const Shape s({2, 3, 4});
  CHECK(s.order() == 3);
  CHECK(s.element_count() == 24);

  // offset(i,j,k) = (i*3 + j)*4 + k, so incrementing k moves by one.
  CHECK(s.offset(std::array<std::int64_t, 3>{0, 0, 0}) == 0);
  CHECK(s.offset(std::array<std::int64_t, 3>{0, 0, 1}) == 1);
  CHECK(s.offset(std::array<std::int64_t, 3>{0, 1, 0}) == 4);
  CHECK(s.offset(std::array<std::int64_t, 3>{1, 0, 0}) == 12);
  CHECK(s.offset(std::array<std::int64_t, 3>{1, 2, 3}) == 23);

  for (std::int64_t off = 0; off < s.element_count(); ++off) {
    const std::vector<std::int64_t> idx = s.multi_index(off);
    CHECK(s.offset(idx) == off);
  }
}

TEST_CASE("shape rejects bad extents and overflow") {
  CHECK_THROWS(Shape({5}));                       // order 1
  CHECK_THROWS(Shape({2, 0, 3}));                 // zero extent
  CHECK_THROWS(Shape({2, -1}));                   // negative extent
  CHECK_THROWS(Shape(std::vector<std::int64_t>(9, 2)));  // order 9
}

TEST_CASE("dense tensor norms match loop oracles") {
  Rng rng(42);
  DenseTensor a(Shape({3, 4, 2}));
  double sq = 0.0, mx = 0.0;
  for (std::int64_t i = 0; i < a.size(); ++i) {
    a[i] = rng.uniform_open(-2.0, 2.0);
    sq += a[i] * a[i];
    mx = std::max(mx, std::abs(a[i]));
  }
  CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(sq)).epsilon(1e-14));
  CHECK(a.max_norm() == mx);
}

TEST_CASE("from_values validates count and finiteness") {
  CHECK_THROWS(DenseTensor::from_values(Shape({2, 2}), {1.0, 2.0, 3.0}));
  std::vector<double> bad(4, 0.0);
  bad[2] = std::numeric_limits<double>::infinity();
  CHECK_THROWS(DenseTensor::from_values(Shape({2, 2}), bad));
}

namespace {

TTTensor small_train() {
  // 2 x 3 x 2 train with ranks (2, 2), deterministic entries.
  TTCore g1(1, 2, 2), g2(2, 3, 2), g3(2, 2, 1);
  double v = 0.1;
  for (auto* core : {&g1, &g2, &g3}) {
    for (std::int64_t i = 0; i < core->mode_size(); ++i) {
      for (std::int64_t a = 0; a < core->left_rank(); ++a) {
        for (std::int64_t b = 0; b < core->right_rank(); ++b) {
          core->slice(i)(a, b) = std::sin(v);
          v += 0.7;
        }
      }
    }
  }
  return TTTensor({g1, g2, g3});
}

}  // namespace

TEST_CASE("tt_eval equals the explicit chain product") {
  const TTTensor tt = small_train();
  const Shape shape = tt.shape();
  for (std::int64_t off = 0; off < shape.element_count(); ++off) {
    const std::vector<std::int64_t> idx = shape.multi_index(off);
    Eigen::MatrixXd acc = tt.core(0).slice(idx[0]);
    for (std::int64_t s = 1; s < tt.order(); ++s) acc = acc * tt.core(s).slice(idx[s]);
    CHECK(tt_eval(tt, idx) == doctest::Approx(acc(0, 0)).epsilon(1e-14));
  }
}

TEST_CASE("core unfoldings invert and use the pinned block layout") {
  TTCore g(2, 3, 4);
  Rng rng(7);
  for (std::int64_t i = 0; i < 3; ++i) {
    for (std::int64_t a = 0; a < 2; ++a) {
      for (std::int64_t b = 0; b < 4; ++b) g.slice(i)(a, b) = rng.normal();
    }
  }

  const Eigen::MatrixXd left = g.left_unfolding();
  REQUIRE(left.rows() == 6);
  REQUIRE(left.cols() == 4);
  for (std::int64_t i = 0; i < 3; ++i) {
    CHECK((left.block(i * 2, 0, 2, 4) - g.slice(i)).cwiseAbs().maxCoeff() == 0.0);
  }
  const TTCore back_l = TTCore::from_left_unfolding(left, 3);
  for (std::int64_t i = 0; i < 3; ++i) {
    CHECK((back_l.slice(i) - g.slice(i)).cwiseAbs().maxCoeff() == 0.0);
  }

  const Eigen::MatrixXd right = g.right_unfolding();
  REQUIRE(right.rows() == 2);
  REQUIRE(right.cols() == 12);
  for (std::int64_t i = 0; i < 3; ++i) {
    CHECK((right.block(0, i * 4, 2, 4) - g.slice(i)).cwiseAbs().maxCoeff() == 0.0);
  }
  const TTCore back_r = TTCore::from_right_unfolding(right, 3);
  for (std::int64_t i = 0; i < 3; ++i) {
    CHECK((back_r.slice(i) - g.slice(i)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("tt_sum and tt_scaled act entrywise") {
  const TTTensor a = small_train();
  TTTensor b = small_train();
  b.core(1).slice(0)(0, 0) += 0.5;  // make them differ
  const TTTensor sum = tt_sum(a, b);
  const TTTensor scaled = tt_scaled(a, -2.5);

  CHECK(sum.ranks() == std::vector<std::int64_t>{4, 4});
  const Shape shape = a.shape();
  for (std::int64_t off = 0; off < shape.element_count(); ++off) {
    const std::vector<std::int64_t> idx = shape.multi_index(off);
    CHECK(tt_eval(sum, idx) ==
          doctest::Approx(tt_eval(a, idx) + tt_eval(b, idx)).epsilon(1e-13));
    CHECK(tt_eval(scaled, idx) == doctest::Approx(-2.5 * tt_eval(a, idx)).epsilon(1e-13));
  }
}

TEST_CASE("tt tensor validates rank chain") {
  TTCore g1(1, 2, 2), g2(3, 2, 1);  // 2 != 3
  CHECK_THROWS(TTTensor({g1, g2}));
  TTCore h1(2, 2, 2), h2(2, 2, 1);  // boundary rank not 1
  CHECK_THROWS(TTTensor({h1, h2}));
}
