#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "ttmax/dense_tensor.hpp"
#include "ttmax/tt_tensor.hpp"

namespace ttmax {

/// Unfolding A^<s> for a split position s in [1, d-1]: rows enumerate
/// (i_1,...,i_s) with i_1 fastest-varying, columns enumerate (i_{s+1},...,i_d)
/// with i_d fastest-varying.  With this pair of orderings the unfolding
/// factors exactly as (left interface) * (right interface).
Eigen::MatrixXd unfold(const DenseTensor& a, std::int64_t split);

/// Inverse of unfold for the same split.
DenseTensor fold(const Eigen::MatrixXd& m, const Shape& shape, std::int64_t split);

/// Interface matrices at a split s in [1, d-1]: the left factor
/// (n_1...n_s) x r_s built from cores 1..s and the right factor
/// r_s x (n_{s+1}...n_d) built from cores s+1..d, satisfying
/// unfold(tt_to_dense(tt), s) = left * right.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> interface_matrices(const TTTensor& tt, std::int64_t split);

/// Sequential-SVD decomposition of a dense tensor into tensor-train form.
///
/// Rank selection per sweep position s: keep singular values sigma_i with
/// sigma_i > tol * sigma_1, at least one and at most max_ranks[s-1] (a value
/// <= 0 means unbounded).  The rank cap wins over tol; a tie at the cap keeps
/// the first max_rank values as returned by the SVD.  A zero tensor yields
/// all ranks 1 with zero cores.  Cores 1..d-1 come out left-orthogonal, and
/// the Frobenius truncation error is at most the root of the summed squared
/// discarded singular values.
TTTensor tt_svd(const DenseTensor& a, const std::vector<std::int64_t>& max_ranks, double tol = 0.0);
/// Same with one uniform rank cap (<= 0 means unbounded).
TTTensor tt_svd(const DenseTensor& a, std::int64_t max_rank = 0, double tol = 0.0);

/// Rank truncation inside the format: right-orthogonalize, then sweep left
/// to right with truncated SVDs.  Matches tt_svd(tt_to_dense(tt), ...) in
/// reconstruction error without leaving the format.
TTTensor tt_round(const TTTensor& tt, std::int64_t max_rank, double tol = 0.0);

/// t-orthogonal form for t in [1, d] (1-based): cores left of t become
/// left-orthogonal, cores right of t right-orthogonal, with all the gauge
/// absorbed into core t.  Requires a minimal factorization; throws
/// std::invalid_argument when a core unfolding is rank deficient.
TTTensor orthogonalize_t(const TTTensor& tt, std::int64_t t);

/// Numerical rank of every unfolding, counting sigma_i > tol * sigma_1.
/// By the rank characterization these are the minimal tensor-train ranks.
std::vector<std::int64_t> tt_rank_of_dense(const DenseTensor& a, double tol = 1e-10);

}  // namespace ttmax
