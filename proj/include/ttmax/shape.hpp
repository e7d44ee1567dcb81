#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ttmax {

/// Mode extents of an order-d tensor, 2 <= d <= 8, every extent >= 1.
///
/// Dense storage is linearized with the *last* index fastest-varying, i.e.
/// offset(i_1,...,i_d) = ((i_1 n_2 + i_2) n_3 + ...) n_d + i_d with 0-based
/// indices.  All routines that exchange flat offsets with multi-indices go
/// through this class so the convention lives in exactly one place.
class Shape {
public:
  explicit Shape(std::vector<std::int64_t> dims);

  std::int64_t order() const { return static_cast<std::int64_t>(dims_.size()); }
  std::int64_t extent(std::int64_t mode) const { return dims_.at(static_cast<std::size_t>(mode)); }
  const std::vector<std::int64_t>& dims() const { return dims_; }

  /// Product of all extents; construction guarantees it fits in int64.
  std::int64_t element_count() const { return count_; }

  std::int64_t offset(std::span<const std::int64_t> index) const;
  void multi_index(std::int64_t offset, std::span<std::int64_t> index) const;
  std::vector<std::int64_t> multi_index(std::int64_t offset) const;

  bool operator==(const Shape& other) const { return dims_ == other.dims_; }
  bool operator!=(const Shape& other) const { return !(*this == other); }

private:
  std::vector<std::int64_t> dims_;
  std::int64_t count_ = 0;
};

}  // namespace ttmax
