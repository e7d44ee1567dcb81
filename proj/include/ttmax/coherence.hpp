#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ttmax/dense_tensor.hpp"
#include "ttmax/tt_tensor.hpp"

namespace ttmax {

// Unitarily invariant norm used when measuring blocks of an orthonormal basis.
enum class UnitNorm { frobenius, spectral };

// (m/q) * max row squared 2-norm of an m x q matrix with orthonormal columns.
// Invariant to the choice of basis for the column space.
// Orthonormal basis of the column space via column-pivoted QR (passthrough
// when the input already has orthonormal columns); throws when the input is
// column-rank deficient.
Eigen::MatrixXd orthonormal_colspace(const Eigen::MatrixXd& m,
                                     const char* what = "orthonormal_colspace");

double subspace_coherence(const Eigen::MatrixXd& basis);

// (m/q) * max over the m/p row blocks of the squared block norm. Reduces to
// subspace_coherence at p = 1 with the Frobenius selector.
double block_coherence(const Eigen::MatrixXd& basis, std::int64_t p,
                       UnitNorm norm = UnitNorm::frobenius);

// Block coherences of the column space of a core's left unfolding (block size
// r_{s-1}) and of the row space of its right unfolding (block size r_s). The
// input need not be orthogonal: a non-orthonormal unfolding is replaced by an
// orthonormal basis of the same space, which must have full rank.
double core_left_coherence(const TTCore& g, UnitNorm norm = UnitNorm::frobenius);
double core_right_coherence(const TTCore& g, UnitNorm norm = UnitNorm::frobenius);

struct CoherenceProfile {
  std::vector<double> left;                // per split s = 1..d-1
  std::vector<double> right;               // per split s = 2..d
  std::vector<double> unfolding_spectral;  // largest singular value of each unfolding
  std::vector<std::int64_t> ranks;
};

// Profile of a nonzero tensor: left coherences from a minimal left-orthogonal
// factorization, right coherences from a minimal right-orthogonal one,
// spectral norms of all unfoldings straight from the dense tensor.
CoherenceProfile tt_core_coherences(const DenseTensor& a);

// Same profile, but both orthogonal factorizations are reached by first
// orthogonalizing at pivot t. The result should not depend on t; tests use
// this to exercise the invariance numerically.
CoherenceProfile tt_core_coherences_via(const DenseTensor& a, std::int64_t t);

// Upper bound on gamma_tt_upper of a minimal factorization orthogonalized at
// pivot t (1-based). Orthogonal cores contribute their exact slice-norm
// maxima expressed through coherences; the pivot core is bounded through the
// spectral norm of the adjacent unfolding.
double gamma_bound_via_coherence(const DenseTensor& a, std::int64_t t);

// ceil(9 * ln(3 * n1 * n2) / epsilon^2).
std::int64_t rank_bound_matrix(std::int64_t n1, std::int64_t n2, double epsilon);

// ceil((c_d / epsilon^2) * ln(2 * e * n_1 * ... * n_d)).
std::int64_t rank_bound_tt(const std::vector<std::int64_t>& dims, double epsilon,
                           double c_d = 9.0);

struct CoherenceErrorBound {
  std::int64_t rank = 0;     // rank budget from rank_bound_tt
  double bound = 0.0;        // guaranteed entrywise error at that budget
  std::int64_t best_t = 0;   // 1-based unfolding attaining the minimum
};

// Entrywise approximation guarantee at the rank budget implied by epsilon:
// (epsilon / sqrt(prod n)) * min_t r_t * sqrt(prod left, prod right) * ||A^<t>||_2.
CoherenceErrorBound coherence_error_bound(const DenseTensor& a, double epsilon,
                                          double c_d = 9.0);

}  // namespace ttmax
