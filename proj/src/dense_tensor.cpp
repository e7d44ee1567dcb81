#include "ttmax/dense_tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace ttmax {

DenseTensor::DenseTensor(Shape shape, double fill)
    : shape_(std::move(shape)) {
  if (shape_.element_count() > kDenseElementBudget) {
    throw std::length_error("DenseTensor: element count exceeds dense budget");
  }
  values_.assign(static_cast<std::size_t>(shape_.element_count()), fill);
}

DenseTensor DenseTensor::from_values(Shape shape, std::vector<double> values) {
  if (static_cast<std::int64_t>(values.size()) != shape.element_count()) {
    throw std::invalid_argument("DenseTensor::from_values: value count does not match shape");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("DenseTensor::from_values: non-finite value");
  }
  DenseTensor t(shape);
  t.values_ = std::move(values);
  return t;
}

double DenseTensor::max_norm() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double DenseTensor::frobenius_norm() const {
  // Two-pass scaled sum keeps the result stable when entries are huge or tiny.
  double scale = max_norm();
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : values_) {
    const double q = v / scale;
    acc += q * q;
  }
  return scale * std::sqrt(acc);
}

}  // namespace ttmax
