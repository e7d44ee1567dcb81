#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "ttmax/shape.hpp"

namespace ttmax {

/// Order-3 tensor-train core G of size left_rank x mode_size x right_rank,
/// held as one left_rank x right_rank matrix slice G(:,i,:) per mode index i.
///
/// Unfolding conventions (fixed so that interface-matrix recursions hold
/// without permutations):
///   left unfolding   (left_rank * n) x right_rank, slice i occupies the
///                    row block [i*left_rank, (i+1)*left_rank)
///   right unfolding  left_rank x (n * right_rank), slice i occupies the
///                    column block [i*right_rank, (i+1)*right_rank)
class TTCore {
public:
  TTCore(std::int64_t left_rank, std::int64_t mode_size, std::int64_t right_rank);
  explicit TTCore(std::vector<Eigen::MatrixXd> slices);

  std::int64_t left_rank() const { return left_rank_; }
  std::int64_t mode_size() const { return static_cast<std::int64_t>(slices_.size()); }
  std::int64_t right_rank() const { return right_rank_; }

  Eigen::MatrixXd& slice(std::int64_t i) { return slices_.at(static_cast<std::size_t>(i)); }
  const Eigen::MatrixXd& slice(std::int64_t i) const { return slices_.at(static_cast<std::size_t>(i)); }

  Eigen::MatrixXd left_unfolding() const;
  Eigen::MatrixXd right_unfolding() const;
  static TTCore from_left_unfolding(const Eigen::MatrixXd& m, std::int64_t mode_size);
  static TTCore from_right_unfolding(const Eigen::MatrixXd& m, std::int64_t mode_size);

private:
  std::int64_t left_rank_;
  std::int64_t right_rank_;
  std::vector<Eigen::MatrixXd> slices_;
};

/// Tensor-train represented tensor: cores G_1,...,G_d with boundary ranks 1
/// and matching internal ranks.  The represented entry at (i_1,...,i_d) is
/// the chain product G_1(0,i_1,:) G_2(:,i_2,:) ... G_d(:,i_d,0).
class TTTensor {
public:
  explicit TTTensor(std::vector<TTCore> cores);

  std::int64_t order() const { return static_cast<std::int64_t>(cores_.size()); }
  const TTCore& core(std::int64_t s) const { return cores_.at(static_cast<std::size_t>(s)); }
  TTCore& core(std::int64_t s) { return cores_.at(static_cast<std::size_t>(s)); }

  std::vector<std::int64_t> mode_sizes() const;
  Shape shape() const { return Shape(mode_sizes()); }
  /// Internal ranks r_1,...,r_{d-1}.
  std::vector<std::int64_t> ranks() const;

private:
  std::vector<TTCore> cores_;
};

/// Entry of the represented tensor at a (0-based) multi-index.
double tt_eval(const TTTensor& tt, std::span<const std::int64_t> index);

/// Representation of a+b with block-diagonal interior cores; ranks add.
TTTensor tt_sum(const TTTensor& a, const TTTensor& b);

/// Same tensor with the first core scaled by `factor`.
TTTensor tt_scaled(const TTTensor& tt, double factor);

}  // namespace ttmax
