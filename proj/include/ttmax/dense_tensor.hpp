#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ttmax/shape.hpp"

namespace ttmax {

/// Dense order-d tensor over the reals, stored per the Shape linearization
/// (last index fastest).  Values are required to stay finite; the factory
/// that accepts external data enforces this, internal algorithms preserve it.
class DenseTensor {
public:
  explicit DenseTensor(Shape shape, double fill = 0.0);
  static DenseTensor from_values(Shape shape, std::vector<double> values);

  const Shape& shape() const { return shape_; }
  std::int64_t size() const { return shape_.element_count(); }

  double& operator[](std::int64_t offset) { return values_[static_cast<std::size_t>(offset)]; }
  double operator[](std::int64_t offset) const { return values_[static_cast<std::size_t>(offset)]; }

  double at(std::span<const std::int64_t> index) const { return values_[static_cast<std::size_t>(shape_.offset(index))]; }
  double& at(std::span<const std::int64_t> index) { return values_[static_cast<std::size_t>(shape_.offset(index))]; }

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  const std::vector<double>& values() const { return values_; }

  double max_norm() const;
  double frobenius_norm() const;

private:
  Shape shape_;
  std::vector<double> values_;
};

/// Largest admissible dense allocation (number of doubles).  Keeps a stray
/// shape like 800^4 from taking the process down with it.
inline constexpr std::int64_t kDenseElementBudget = std::int64_t{1} << 27;

}  // namespace ttmax
