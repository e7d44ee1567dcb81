#pragma once

#include <cstdint>

#include "ttmax/dense_tensor.hpp"
#include "ttmax/shape.hpp"
#include "ttmax/tt_tensor.hpp"

namespace ttmax {

/// Order-d tensor with extent n in every mode, 1 on the superdiagonal.
DenseTensor identity_tensor(std::int64_t n, std::int64_t d);

/// The same tensor in train form, built from identity CP factors.
TTTensor identity_tt(std::int64_t n, std::int64_t d);

/// I.i.d. entries uniform in the open interval (-1, 1).
DenseTensor uniform_tensor(const Shape& dims, std::uint64_t seed);

/// Train with standard-normal cores of uniform rank r, then the whole tensor
/// scaled by r^{1-d} (applied to the first core).
TTTensor random_tt_init(const Shape& dims, std::int64_t r, std::uint64_t seed);

}  // namespace ttmax
