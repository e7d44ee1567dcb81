#include <array>
#include <vector>

#include "doctest.h"
#include "ttmax/generators.hpp"
#include "ttmax/kernels.hpp"

using namespace ttmax;

TEST_CASE("identity tensor has ones exactly on the superdiagonal") {
  const DenseTensor eye = identity_tensor(3, 3);
  const Shape shape = eye.shape();
  REQUIRE(shape.dims() == std::vector<std::int64_t>{3, 3, 3});
  for (std::int64_t off = 0; off < shape.element_count(); ++off) {
    const std::vector<std::int64_t> idx = shape.multi_index(off);
    const bool diag = idx[0] == idx[1] && idx[1] == idx[2];
    CHECK(eye[off] == (diag ? 1.0 : 0.0));
  }
}

TEST_CASE("identity train represents the identity tensor") {
  for (std::int64_t d : {2, 3}) {
    const TTTensor tt = identity_tt(4, d);
    CHECK(max_norm_error(identity_tensor(4, d), tt) <= 1e-14);
  }
}

TEST_CASE("uniform tensor is deterministic and inside the open interval") {
  const Shape shape({4, 5});
  const DenseTensor a = uniform_tensor(shape, 8);
  const DenseTensor b = uniform_tensor(shape, 8);
  const DenseTensor c = uniform_tensor(shape, 9);
  CHECK(max_abs_diff(a, b) == 0.0);
  CHECK(max_abs_diff(a, c) > 0.0);
  for (std::int64_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] > -1.0);
    CHECK(a[i] < 1.0);
  }
}

TEST_CASE("random train initialization has the requested uniform ranks") {
  const TTTensor tt = random_tt_init(Shape({3, 4, 5, 2}), 3, 51);
  CHECK(tt.ranks() == std::vector<std::int64_t>{3, 3, 3});
  CHECK(tt.mode_sizes() == std::vector<std::int64_t>{3, 4, 5, 2});
  const TTTensor again = random_tt_init(Shape({3, 4, 5, 2}), 3, 51);
  CHECK(max_abs_diff(tt_to_dense(tt), tt_to_dense(again)) == 0.0);
}

TEST_CASE("random train scaling keeps entries near unit size") {
  // The first core carries r^{1-d}, damping the product of d normal factors.
  const TTTensor tt = random_tt_init(Shape({4, 4, 4, 4}), 4, 3);
  const double mx = tt_to_dense(tt).max_norm();
  CHECK(mx > 1e-6);
  CHECK(mx < 1e3);
}
