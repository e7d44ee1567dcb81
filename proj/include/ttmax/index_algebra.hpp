#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace ttmax {

// Partial-index calculus on subsets of an ambient dimension set [N].
// Everything here is 0-based: dimensions are numbered 0..N-1 and index
// values run in [0, m_w).  Arrays over "doubled" domains pair a dimension w
// with its copy w+N in ambient 2N; extents are duplicated accordingly.
// These routines are deliberately definitional and brute-force: they serve
// as the ground truth that the fast linear-algebra paths are tested against,
// at desk scale (N <= 4, extents <= 3).

/// Subset of the ambient dimension set [N], kept sorted and unique.
struct DimSubset {
  std::int64_t ambient = 0;
  std::vector<std::int64_t> members;

  DimSubset() = default;
  DimSubset(std::int64_t ambient, std::vector<std::int64_t> members);

  std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
  bool contains(std::int64_t w) const;
  bool subset_of(const DimSubset& other) const;
  bool operator==(const DimSubset& other) const = default;

  static DimSubset full(std::int64_t ambient);
  /// [N] minus this set.
  DimSubset complement() const;
};

/// Union of disjoint subsets of the same ambient set; throws on overlap.
DimSubset union_disjoint(const DimSubset& a, const DimSubset& b);
DimSubset set_minus(const DimSubset& a, const DimSubset& b);
/// O' (+) O'': embed the first copy as-is and the second shifted by N,
/// in ambient 2N.
DimSubset oplus(const DimSubset& a, const DimSubset& b);
/// O (+) O for the common symmetric case.
DimSubset doubled(const DimSubset& omega);
/// Checks the domain has the form O (+) O and returns O (ambient N).
DimSubset base_of_doubled(const DimSubset& dom);

/// Extents m^{x2} for a doubled domain: extent of w+N equals extent of w.
std::vector<std::int64_t> doubled_extents(const std::vector<std::int64_t>& m);

/// Assignment of index values to the dimensions of a subset.
struct PartialIndex {
  DimSubset domain;
  std::vector<std::int64_t> values;  // parallel to domain.members

  PartialIndex() = default;
  PartialIndex(DimSubset domain, std::vector<std::int64_t> values);
  std::int64_t value(std::int64_t w) const;
  bool operator==(const PartialIndex& other) const = default;
};

/// Restriction to a subset of the domain.
PartialIndex restrict_index(const PartialIndex& i, const DimSubset& to);
/// Union of assignments with disjoint domains.
PartialIndex join(const PartialIndex& i, const PartialIndex& j);
/// i (++) j: place i on the first copy and j on the second copy of [N].
PartialIndex concat(const PartialIndex& i, const PartialIndex& j);
/// alpha (*) i with block extents k: value at w is i_w + alpha_w * k_w.
PartialIndex kron_index(const PartialIndex& alpha, const PartialIndex& i,
                        const std::vector<std::int64_t>& k);

/// All assignments over a domain with the given (full-length) extents, in
/// the storage order used by PartialArray.
std::vector<PartialIndex> all_indices(const DimSubset& domain, const std::vector<std::int64_t>& extents);
std::vector<DimSubset> all_subsets(std::int64_t ambient);

/// Real array indexed by a partial index.  Storage is mixed-radix over the
/// sorted domain with the largest dimension fastest-varying.  An empty
/// domain gives a scalar (size one).
class PartialArray {
public:
  PartialArray(DimSubset domain, std::vector<std::int64_t> extents);

  const DimSubset& domain() const { return domain_; }
  const std::vector<std::int64_t>& extents() const { return extents_; }
  std::int64_t extent(std::int64_t w) const { return extents_.at(static_cast<std::size_t>(w)); }
  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

  std::int64_t offset(const PartialIndex& i) const;
  PartialIndex index_at(std::int64_t offset) const;

  double& at(const PartialIndex& i) { return values_[static_cast<std::size_t>(offset(i))]; }
  double at(const PartialIndex& i) const { return values_[static_cast<std::size_t>(offset(i))]; }
  double& operator[](std::int64_t off) { return values_[static_cast<std::size_t>(off)]; }
  double operator[](std::int64_t off) const { return values_[static_cast<std::size_t>(off)]; }

  double frobenius_norm() const;

private:
  DimSubset domain_;
  std::vector<std::int64_t> extents_;
  std::vector<double> values_;
};

/// Partial trace of an array on O (+) O along traced <= O (ambient N):
/// sum over matched values on both copies of the traced dimensions.
PartialArray partial_trace(const PartialArray& c, const DimSubset& traced);

/// Partial Frobenius norm along sub <= domain; over the empty set this is
/// the entrywise absolute value.
PartialArray partial_frobenius(const PartialArray& d, const DimSubset& sub);

/// Partition of a dimension subset into non-empty disjoint cells.
struct Partition {
  DimSubset ground;
  std::vector<std::vector<std::int64_t>> cells;

  Partition(DimSubset ground, std::vector<std::vector<std::int64_t>> cells);
  std::int64_t cell_count() const { return static_cast<std::int64_t>(cells.size()); }
  DimSubset cell_subset(std::int64_t t) const;
};

/// All partitions of a dimension subset (Bell-number many).
std::vector<Partition> enumerate_partitions(const DimSubset& ground);

/// Lower bound on the partition norm
///   ||C||_pi = sup { <C, Z^(1) x ... x Z^(kappa)> : ||Z^(tau)||_F = 1 }
/// by alternating maximization over the cell factors from random restarts.
/// Exact for the single-cell partition, where the norm is ||C||_F.
double partition_norm(const PartialArray& c, const Partition& pi, int restarts = 32,
                      std::uint64_t seed = 0x7a717);

struct ThetaWeights {
  DimSubset omega;            // base set O of the doubled ground O (+) O
  std::vector<double> theta;  // parallel to omega.members; 1/2 iff w pairs with w+N
  double total = 0.0;         // Theta_pi
};

/// Pairing weights of a partition of a doubled domain.
ThetaWeights theta_weights(const Partition& pi);

/// Overlap set O_tau = (cell u (cell - N)) n O of a cell of a partition of
/// O (+) O, as a subset of ambient N.
DimSubset cell_overlap(const Partition& pi, std::int64_t t);

struct CauchySchwarzSides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Both sides of the partitioned Cauchy-Schwarz bound
///   sum_i prod_tau C^(tau)_{i_{O_tau}} <= prod_w m_w^theta_w prod_tau ||C^(tau)||_F
/// for arrays C^(tau) on the overlap sets of pi with common extents m.
CauchySchwarzSides cauchy_schwarz_check(const Partition& pi,
                                        const std::vector<PartialArray>& cell_arrays,
                                        const std::vector<std::int64_t>& m);

/// Chain array Phi_O(W_1, ..., W_{|O|+1}) on O (+) O with extents k^{x2}:
/// the entry at i (++) j is W_1(0, i_{w_1}) W_2(j_{w_1}, i_{w_2}) ...
/// W_{|O|+1}(j_{w_{|O|}}, 0).
PartialArray build_phi(const DimSubset& omega, const std::vector<std::int64_t>& k,
                       const std::vector<Eigen::MatrixXd>& w);

/// Block-diagonal extension Psi_O on extents (r * k)^{x2}: the entry at
/// (alpha (*) i) (++) (beta (*) j) is Phi(i (++) j) times prod_w
/// delta(alpha_w, beta_w).
PartialArray build_psi(const DimSubset& omega, const std::vector<std::int64_t>& r,
                       const std::vector<std::int64_t>& k, const std::vector<Eigen::MatrixXd>& w);

/// Matrix-chain value (W_1 R_1)(R_1^T W_2 R_2) ... (R_{d-1}^T W_d); the
/// boundary factors W_1 and W_d are a row and a column.
double eval_quadratic_form(const std::vector<Eigen::MatrixXd>& w,
                           const std::vector<Eigen::MatrixXd>& r);

/// The same value evaluated as the brute-force index sum against
/// Psi_{[d-1]}(W_1, ..., W_d); kept separate from eval_quadratic_form so the
/// two routes stay independent.
double quadratic_form_index_sum(const std::vector<Eigen::MatrixXd>& w,
                                const std::vector<Eigen::MatrixXd>& r);

/// Segment products W-hat_1 = W_1...W_{w_1}, W-hat_t = W_{w_{t-1}+1}...W_{w_t},
/// W-hat_{|O|+1} = W_{w_{|O|}+1}...W_d for a subset O of [d-1].
std::vector<Eigen::MatrixXd> merge_chain(const std::vector<Eigen::MatrixXd>& w, const DimSubset& omega);

}  // namespace ttmax
