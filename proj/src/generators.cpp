#include "ttmax/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "ttmax/norms.hpp"
#include "ttmax/rng.hpp"

namespace ttmax {

DenseTensor identity_tensor(std::int64_t n, std::int64_t d) {
  if (n < 1) throw std::invalid_argument("identity_tensor: extent must be >= 1");
  const Shape shape(std::vector<std::int64_t>(static_cast<std::size_t>(d), n));
  DenseTensor out(shape, 0.0);
  for (std::int64_t k = 0; k < n; ++k) {
    const std::vector<std::int64_t> diag(static_cast<std::size_t>(d), k);
    out.data()[shape.offset(diag)] = 1.0;
  }
  return out;
}

TTTensor identity_tt(std::int64_t n, std::int64_t d) {
  if (n < 1) throw std::invalid_argument("identity_tt: extent must be >= 1");
  if (d < 2) throw std::invalid_argument("identity_tt: order must be >= 2");
  const std::vector<Eigen::MatrixXd> factors(static_cast<std::size_t>(d),
                                             Eigen::MatrixXd::Identity(n, n));
  return cp_to_tt(factors);
}

DenseTensor uniform_tensor(const Shape& dims, std::uint64_t seed) {
  DenseTensor out(dims, 0.0);
  Rng rng(mix_seed({seed, 0x756e69u}));
  for (std::int64_t i = 0; i < out.size(); ++i) {
    out.data()[i] = rng.uniform_open(-1.0, 1.0);
  }
  return out;
}

TTTensor random_tt_init(const Shape& dims, std::int64_t r, std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("random_tt_init: rank must be >= 1");
  const std::int64_t d = dims.order();
  Rng rng(mix_seed({seed, 0x747469u}));

  std::vector<TTCore> cores;
  cores.reserve(static_cast<std::size_t>(d));
  for (std::int64_t s = 0; s < d; ++s) {
    const std::int64_t lr = s == 0 ? 1 : r;
    const std::int64_t rr = s == d - 1 ? 1 : r;
    std::vector<Eigen::MatrixXd> slices(static_cast<std::size_t>(dims.extent(s)));
    for (auto& slice : slices) {
      slice.resize(lr, rr);
      for (std::int64_t i = 0; i < lr; ++i) {
        for (std::int64_t j = 0; j < rr; ++j) slice(i, j) = rng.normal();
      }
    }
    cores.emplace_back(std::move(slices));
  }

  const double scale = std::pow(static_cast<double>(r), 1.0 - static_cast<double>(d));
  for (std::int64_t i = 0; i < cores.front().mode_size(); ++i) {
    cores.front().slice(i) *= scale;
  }
  return TTTensor(std::move(cores));
}

}  // namespace ttmax
