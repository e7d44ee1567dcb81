#include "ttmax/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ttmax/decomposition.hpp"

namespace ttmax {

namespace {

constexpr double kOrthoTol = 1e-8;
constexpr double kMinimalRankTol = 1e-10;

void require_orthonormal_columns(const Eigen::MatrixXd& basis, const char* what) {
  if (basis.rows() < 1 || basis.cols() < 1) {
    throw std::invalid_argument(std::string(what) + ": empty basis");
  }
  if (basis.rows() < basis.cols()) {
    throw std::invalid_argument(std::string(what) + ": more columns than rows");
  }
  const Eigen::MatrixXd gram = basis.transpose() * basis;
  const double dev = (gram - Eigen::MatrixXd::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff();
  if (dev > kOrthoTol) {
    throw std::invalid_argument(std::string(what) + ": columns are not orthonormal");
  }
}

double block_norm(const Eigen::Ref<const Eigen::MatrixXd>& block, UnitNorm norm) {
  if (norm == UnitNorm::frobenius) return block.norm();
  return Eigen::JacobiSVD<Eigen::MatrixXd>(block).singularValues()(0);
}

}  // namespace

Eigen::MatrixXd orthonormal_colspace(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() < 1 || m.cols() < 1 || m.rows() < m.cols()) {
    throw std::invalid_argument(std::string(what) + ": bad basis shape");
  }
  const Eigen::MatrixXd gram = m.transpose() * m;
  if ((gram - Eigen::MatrixXd::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff() <= kOrthoTol) {
    return m;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(kMinimalRankTol);
  if (qr.rank() < m.cols()) {
    throw std::invalid_argument(std::string(what) + ": unfolding is rank deficient");
  }
  return Eigen::MatrixXd(qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), m.cols()));
}

double subspace_coherence(const Eigen::MatrixXd& basis) {
  require_orthonormal_columns(basis, "subspace_coherence");
  const double m = static_cast<double>(basis.rows());
  const double q = static_cast<double>(basis.cols());
  return (m / q) * basis.rowwise().squaredNorm().maxCoeff();
}

double block_coherence(const Eigen::MatrixXd& basis, std::int64_t p, UnitNorm norm) {
  require_orthonormal_columns(basis, "block_coherence");
  if (p < 1 || basis.rows() % p != 0) {
    throw std::invalid_argument("block_coherence: block size must divide the row count");
  }
  const std::int64_t blocks = basis.rows() / p;
  double best = 0.0;
  for (std::int64_t i = 0; i < blocks; ++i) {
    best = std::max(best, block_norm(basis.middleRows(i * p, p), norm));
  }
  const double m = static_cast<double>(basis.rows());
  const double q = static_cast<double>(basis.cols());
  return (m / q) * best * best;
}

double core_left_coherence(const TTCore& g, UnitNorm norm) {
  const Eigen::MatrixXd basis = orthonormal_colspace(g.left_unfolding(), "core_left_coherence");
  return block_coherence(basis, g.left_rank(), norm);
}

double core_right_coherence(const TTCore& g, UnitNorm norm) {
  const Eigen::MatrixXd basis =
      orthonormal_colspace(g.right_unfolding().transpose(), "core_right_coherence");
  return block_coherence(basis, g.right_rank(), norm);
}

namespace {

CoherenceProfile profile_from(const TTTensor& seed_tt, const DenseTensor& a) {
  const std::int64_t d = seed_tt.order();
  CoherenceProfile profile;
  profile.ranks = seed_tt.ranks();

  const TTTensor left = orthogonalize_t(seed_tt, d);
  for (std::int64_t s = 0; s + 1 < d; ++s) {
    profile.left.push_back(core_left_coherence(left.core(s)));
  }
  const TTTensor right = orthogonalize_t(seed_tt, 1);
  for (std::int64_t s = 1; s < d; ++s) {
    profile.right.push_back(core_right_coherence(right.core(s)));
  }
  for (std::int64_t t = 1; t < d; ++t) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(unfold(a, t));
    profile.unfolding_spectral.push_back(svd.singularValues()(0));
  }
  return profile;
}

TTTensor minimal_tt(const DenseTensor& a, const char* what) {
  if (a.max_norm() == 0.0) {
    throw std::invalid_argument(std::string(what) + ": zero tensor");
  }
  return tt_svd(a, 0, kMinimalRankTol);
}

}  // namespace

CoherenceProfile tt_core_coherences(const DenseTensor& a) {
  return profile_from(minimal_tt(a, "tt_core_coherences"), a);
}

CoherenceProfile tt_core_coherences_via(const DenseTensor& a, std::int64_t t) {
  return profile_from(orthogonalize_t(minimal_tt(a, "tt_core_coherences_via"), t), a);
}

double gamma_bound_via_coherence(const DenseTensor& a, std::int64_t t) {
  const std::int64_t d = a.shape().order();
  if (t < 1 || t > d) throw std::invalid_argument("gamma_bound_via_coherence: pivot out of range");
  const CoherenceProfile p = tt_core_coherences(a);

  std::vector<std::int64_t> r(static_cast<std::size_t>(d + 1), 1);
  for (std::int64_t s = 1; s < d; ++s) r[static_cast<std::size_t>(s)] = p.ranks[static_cast<std::size_t>(s - 1)];

  double prod = 1.0;
  for (std::int64_t s = 1; s <= d; ++s) {
    const double n_s = static_cast<double>(a.shape().extent(s - 1));
    const double r_prev = static_cast<double>(r[static_cast<std::size_t>(s - 1)]);
    const double r_cur = static_cast<double>(r[static_cast<std::size_t>(s)]);
    const double left_term =
        s < d ? std::sqrt(r_cur / (n_s * r_prev) * p.left[static_cast<std::size_t>(s - 1)]) : 0.0;
    const double right_term =
        s > 1 ? std::sqrt(r_prev / (n_s * r_cur) * p.right[static_cast<std::size_t>(s - 2)]) : 0.0;
    if (s < t) {
      prod *= left_term;
    } else if (s > t) {
      prod *= right_term;
    } else {
      // Pivot core: bounded through the spectral norm of an adjacent
      // unfolding; with two admissible sides, take the smaller bound.
      double bound = std::numeric_limits<double>::infinity();
      if (t < d) bound = std::min(bound, p.unfolding_spectral[static_cast<std::size_t>(t - 1)] * left_term);
      if (t > 1) bound = std::min(bound, p.unfolding_spectral[static_cast<std::size_t>(t - 2)] * right_term);
      prod *= bound;
    }
  }
  return prod;
}

std::int64_t rank_bound_matrix(std::int64_t n1, std::int64_t n2, double epsilon) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("rank_bound_matrix: sizes must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("rank_bound_matrix: epsilon must lie in (0,1)");
  }
  const double value = 9.0 * std::log(3.0 * static_cast<double>(n1) * static_cast<double>(n2)) /
                       (epsilon * epsilon);
  return static_cast<std::int64_t>(std::ceil(value));
}

std::int64_t rank_bound_tt(const std::vector<std::int64_t>& dims, double epsilon, double c_d) {
  if (dims.size() < 2) throw std::invalid_argument("rank_bound_tt: at least two modes required");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("rank_bound_tt: epsilon must lie in (0,1)");
  }
  if (!(c_d > 0.0)) throw std::invalid_argument("rank_bound_tt: c_d must be positive");
  double log_arg = std::log(2.0) + 1.0;  // ln(2e)
  for (std::int64_t n : dims) {
    if (n < 1) throw std::invalid_argument("rank_bound_tt: sizes must be positive");
    log_arg += std::log(static_cast<double>(n));
  }
  return static_cast<std::int64_t>(std::ceil(c_d / (epsilon * epsilon) * log_arg));
}

CoherenceErrorBound coherence_error_bound(const DenseTensor& a, double epsilon, double c_d) {
  const CoherenceProfile p = tt_core_coherences(a);
  const std::int64_t d = a.shape().order();

  std::vector<std::int64_t> dims;
  double scale = 1.0;
  for (std::int64_t s = 0; s < d; ++s) {
    dims.push_back(a.shape().extent(s));
    scale *= static_cast<double>(a.shape().extent(s));
  }

  CoherenceErrorBound out;
  out.rank = rank_bound_tt(dims, epsilon, c_d);
  out.bound = std::numeric_limits<double>::infinity();
  for (std::int64_t t = 1; t < d; ++t) {
    double left_prod = 1.0;
    for (std::int64_t s = 1; s <= t; ++s) left_prod *= p.left[static_cast<std::size_t>(s - 1)];
    double right_prod = 1.0;
    for (std::int64_t s = t + 1; s <= d; ++s) right_prod *= p.right[static_cast<std::size_t>(s - 2)];
    const double value = static_cast<double>(p.ranks[static_cast<std::size_t>(t - 1)]) *
                         std::sqrt(left_prod) * std::sqrt(right_prod) *
                         p.unfolding_spectral[static_cast<std::size_t>(t - 1)];
    if (value < out.bound) {
      out.bound = value;
      out.best_t = t;
    }
  }
  out.bound *= epsilon / std::sqrt(scale);
  return out;
}

}  // namespace ttmax
