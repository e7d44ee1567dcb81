#include "ttmax/shape.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace ttmax {

namespace {
constexpr std::int64_t kMaxOrder = 8;
}

Shape::Shape(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {
  const auto d = static_cast<std::int64_t>(dims_.size());
  if (d < 2 || d > kMaxOrder) {
    throw std::invalid_argument("Shape: order must lie in [2, 8], got " + std::to_string(d));
  }
  count_ = 1;
  for (std::int64_t n : dims_) {
    if (n < 1) throw std::invalid_argument("Shape: every extent must be >= 1");
    if (count_ > std::numeric_limits<std::int64_t>::max() / n) {
      throw std::invalid_argument("Shape: element count overflows int64");
    }
    count_ *= n;
  }
}

std::int64_t Shape::offset(std::span<const std::int64_t> index) const {
  if (static_cast<std::int64_t>(index.size()) != order()) {
    throw std::invalid_argument("Shape::offset: index order mismatch");
  }
  std::int64_t off = 0;
  for (std::size_t t = 0; t < index.size(); ++t) {
    if (index[t] < 0 || index[t] >= dims_[t]) {
      throw std::out_of_range("Shape::offset: index out of bounds");
    }
    off = off * dims_[t] + index[t];
  }
  return off;
}

void Shape::multi_index(std::int64_t offset, std::span<std::int64_t> index) const {
  if (offset < 0 || offset >= count_) throw std::out_of_range("Shape::multi_index: offset out of bounds");
  if (static_cast<std::int64_t>(index.size()) != order()) {
    throw std::invalid_argument("Shape::multi_index: index order mismatch");
  }
  for (std::int64_t t = order() - 1; t >= 0; --t) {
    index[static_cast<std::size_t>(t)] = offset % dims_[static_cast<std::size_t>(t)];
    offset /= dims_[static_cast<std::size_t>(t)];
  }
}

std::vector<std::int64_t> Shape::multi_index(std::int64_t offset) const {
  std::vector<std::int64_t> index(static_cast<std::size_t>(order()));
  multi_index(offset, index);
  return index;
}

}  // namespace ttmax
