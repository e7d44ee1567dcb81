#include "ttmax/norms.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttmax {

double core_norm_f_inf(const TTCore& g) {
  double best = 0.0;
  for (std::int64_t i = 0; i < g.mode_size(); ++i) {
    best = std::max(best, g.slice(i).norm());
  }
  return best;
}

double gamma_tt_upper(const TTTensor& tt) {
  double prod = 1.0;
  for (std::int64_t s = 0; s < tt.order(); ++s) {
    prod *= core_norm_f_inf(tt.core(s));
  }
  return prod;
}

TTTensor cp_to_tt(const std::vector<Eigen::MatrixXd>& factors) {
  const auto d = static_cast<std::int64_t>(factors.size());
  if (d < 2) throw std::invalid_argument("cp_to_tt: at least two factors required");
  const std::int64_t k = factors.front().cols();
  if (k < 1) throw std::invalid_argument("cp_to_tt: factors must have at least one column");
  for (const auto& c : factors) {
    if (c.cols() != k) throw std::invalid_argument("cp_to_tt: factors must share the column count");
    if (c.rows() < 1) throw std::invalid_argument("cp_to_tt: factors must have at least one row");
  }

  std::vector<TTCore> cores;
  cores.reserve(static_cast<std::size_t>(d));
  for (std::int64_t s = 0; s < d; ++s) {
    const auto& c = factors[static_cast<std::size_t>(s)];
    std::vector<Eigen::MatrixXd> slices(static_cast<std::size_t>(c.rows()));
    for (std::int64_t i = 0; i < c.rows(); ++i) {
      if (s == 0) {
        slices[static_cast<std::size_t>(i)] = c.row(i);
      } else if (s == d - 1) {
        slices[static_cast<std::size_t>(i)] = c.row(i).transpose();
      } else {
        slices[static_cast<std::size_t>(i)] = Eigen::MatrixXd(c.row(i).asDiagonal());
      }
    }
    cores.emplace_back(std::move(slices));
  }
  return TTTensor(std::move(cores));
}

double gamma_cp_upper(const std::vector<Eigen::MatrixXd>& factors) {
  const auto d = static_cast<std::int64_t>(factors.size());
  if (d < 2) throw std::invalid_argument("gamma_cp_upper: at least two factors required");
  const std::int64_t k = factors.front().cols();
  double prod = 1.0;
  for (const auto& c : factors) {
    if (c.cols() != k) throw std::invalid_argument("gamma_cp_upper: factors must share the column count");
    prod *= c.rowwise().norm().maxCoeff();
  }
  return prod;
}

}  // namespace ttmax
