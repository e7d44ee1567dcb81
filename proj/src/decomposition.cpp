#include "ttmax/decomposition.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <stdexcept>
#include <string>

namespace ttmax {

namespace {

// Relative threshold shared by every numerical-rank decision in this module.
constexpr double kRankTol = 1e-10;

void check_split(const Shape& shape, std::int64_t split, const char* who) {
  if (split < 1 || split >= shape.order()) {
    throw std::invalid_argument(std::string(who) + ": split must lie in [1, d-1]");
  }
}

// Row index of the unfolding enumerates the leading block with the *first*
// index fastest, while dense storage runs the *last* index fastest.  This
// table maps a storage-ordered leading offset to the unfolding row.
std::vector<std::int64_t> row_permutation(const Shape& shape, std::int64_t split) {
  std::int64_t lead = 1;
  for (std::int64_t t = 0; t < split; ++t) lead *= shape.extent(t);
  std::vector<std::int64_t> row_of_head(static_cast<std::size_t>(lead));
  std::vector<std::int64_t> idx(static_cast<std::size_t>(split), 0);
  for (std::int64_t head = 0; head < lead; ++head) {
    std::int64_t row = 0;
    std::int64_t weight = 1;
    for (std::int64_t t = 0; t < split; ++t) {
      row += idx[static_cast<std::size_t>(t)] * weight;
      weight *= shape.extent(t);
    }
    row_of_head[static_cast<std::size_t>(head)] = row;
    // Odometer over the leading block in storage order (last index fastest).
    for (std::int64_t t = split - 1; t >= 0; --t) {
      if (++idx[static_cast<std::size_t>(t)] < shape.extent(t)) break;
      idx[static_cast<std::size_t>(t)] = 0;
    }
  }
  return row_of_head;
}

std::int64_t select_rank(const Eigen::VectorXd& sigma, std::int64_t cap, double tol) {
  std::int64_t k = 0;
  const double cutoff = tol * (sigma.size() > 0 ? sigma(0) : 0.0);
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) ++k;
  }
  if (cap > 0) k = std::min(k, cap);
  return std::max<std::int64_t>(k, 1);
}

}  // namespace

Eigen::MatrixXd unfold(const DenseTensor& a, std::int64_t split) {
  check_split(a.shape(), split, "unfold");
  const Shape& shape = a.shape();
  std::int64_t tail = 1;
  for (std::int64_t t = split; t < shape.order(); ++t) tail *= shape.extent(t);
  const std::int64_t lead = shape.element_count() / tail;
  const std::vector<std::int64_t> row_of_head = row_permutation(shape, split);

  Eigen::MatrixXd m(lead, tail);
  for (std::int64_t head = 0; head < lead; ++head) {
    m.row(row_of_head[static_cast<std::size_t>(head)]) =
        Eigen::VectorXd::Map(a.data() + head * tail, tail).transpose();
  }
  return m;
}

DenseTensor fold(const Eigen::MatrixXd& m, const Shape& shape, std::int64_t split) {
  check_split(shape, split, "fold");
  std::int64_t tail = 1;
  for (std::int64_t t = split; t < shape.order(); ++t) tail *= shape.extent(t);
  const std::int64_t lead = shape.element_count() / tail;
  if (m.rows() != lead || m.cols() != tail) {
    throw std::invalid_argument("fold: matrix does not match shape and split");
  }
  const std::vector<std::int64_t> row_of_head = row_permutation(shape, split);
  DenseTensor a(shape);
  for (std::int64_t head = 0; head < lead; ++head) {
    Eigen::VectorXd::Map(a.data() + head * tail, tail) =
        m.row(row_of_head[static_cast<std::size_t>(head)]).transpose();
  }
  return a;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> interface_matrices(const TTTensor& tt, std::int64_t split) {
  check_split(tt.shape(), split, "interface_matrices");
  const std::int64_t d = tt.order();

  // Left factor: start from the 1x1 identity and append one core at a time;
  // appending core s maps row block p to rows (i_s, p) with the new index
  // slowest, which is exactly the first-index-fastest row order above.
  Eigen::MatrixXd left = Eigen::MatrixXd::Ones(1, 1);
  for (std::int64_t s = 0; s < split; ++s) {
    const TTCore& core = tt.core(s);
    Eigen::MatrixXd next(left.rows() * core.mode_size(), core.right_rank());
    for (std::int64_t i = 0; i < core.mode_size(); ++i) {
      next.middleRows(i * left.rows(), left.rows()) = left * core.slice(i);
    }
    left = std::move(next);
  }

  Eigen::MatrixXd right = Eigen::MatrixXd::Ones(1, 1);
  for (std::int64_t s = d - 1; s >= split; --s) {
    const TTCore& core = tt.core(s);
    Eigen::MatrixXd next(core.left_rank(), core.mode_size() * right.cols());
    for (std::int64_t i = 0; i < core.mode_size(); ++i) {
      next.middleCols(i * right.cols(), right.cols()) = core.slice(i) * right;
    }
    right = std::move(next);
  }
  return {std::move(left), std::move(right)};
}

TTTensor tt_svd(const DenseTensor& a, const std::vector<std::int64_t>& max_ranks, double tol) {
  const Shape& shape = a.shape();
  const std::int64_t d = shape.order();
  if (!max_ranks.empty() && static_cast<std::int64_t>(max_ranks.size()) != d - 1) {
    throw std::invalid_argument("tt_svd: expected one rank cap per split position");
  }
  if (tol < 0.0) throw std::invalid_argument("tt_svd: tol must be >= 0");

  // M starts as the first unfolding; its rows carry (i_s, alpha_{s-1}) with
  // alpha fastest, matching the left-unfolding layout of a core.
  std::int64_t tail = shape.element_count() / shape.extent(0);
  Eigen::MatrixXd m = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>::Map(
      a.data(), shape.extent(0), tail);

  std::vector<TTCore> cores;
  cores.reserve(static_cast<std::size_t>(d));
  for (std::int64_t s = 0; s + 1 < d; ++s) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const std::int64_t cap = max_ranks.empty() ? 0 : max_ranks[static_cast<std::size_t>(s)];
    const std::int64_t k = select_rank(svd.singularValues(), cap, tol);

    Eigen::MatrixXd u = svd.matrixU().leftCols(k);
    cores.push_back(TTCore::from_left_unfolding(u, shape.extent(s)));

    Eigen::MatrixXd w = svd.singularValues().head(k).asDiagonal() * svd.matrixV().leftCols(k).transpose();
    const std::int64_t n_next = shape.extent(s + 1);
    tail /= n_next;
    Eigen::MatrixXd next(k * n_next, tail);
    for (std::int64_t i = 0; i < n_next; ++i) {
      next.middleRows(i * k, k) = w.middleCols(i * tail, tail);
    }
    m = std::move(next);
  }
  // The final reshape leaves the (r_{d-1} n_d) x 1 left unfolding of the
  // last core.
  cores.push_back(TTCore::from_left_unfolding(m, shape.extent(d - 1)));
  return TTTensor(std::move(cores));
}

TTTensor tt_svd(const DenseTensor& a, std::int64_t max_rank, double tol) {
  std::vector<std::int64_t> caps;
  if (max_rank > 0) caps.assign(static_cast<std::size_t>(a.shape().order() - 1), max_rank);
  return tt_svd(a, caps, tol);
}

TTTensor tt_round(const TTTensor& tt, std::int64_t max_rank, double tol) {
  const std::int64_t d = tt.order();
  std::vector<TTCore> cores;
  cores.reserve(static_cast<std::size_t>(d));
  for (std::int64_t s = 0; s < d; ++s) cores.push_back(tt.core(s));

  // Right-to-left orthogonalization; afterwards the left sweep sees the same
  // singular values as a dense decomposition would.
  for (std::int64_t s = d - 1; s >= 1; --s) {
    const Eigen::MatrixXd mt = cores[static_cast<std::size_t>(s)].right_unfolding().transpose();
    const std::int64_t k = std::min(mt.rows(), mt.cols());
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(mt);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(mt.rows(), k);
    Eigen::MatrixXd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    cores[static_cast<std::size_t>(s)] = TTCore::from_right_unfolding(
        q.transpose(), cores[static_cast<std::size_t>(s)].mode_size());
    // The gauge may shrink the bond, so rebuild the neighbour from scratch.
    const TTCore& prev = cores[static_cast<std::size_t>(s - 1)];
    std::vector<Eigen::MatrixXd> scaled;
    scaled.reserve(static_cast<std::size_t>(prev.mode_size()));
    for (std::int64_t i = 0; i < prev.mode_size(); ++i) scaled.push_back(prev.slice(i) * r.transpose());
    cores[static_cast<std::size_t>(s - 1)] = TTCore(std::move(scaled));
  }

  for (std::int64_t s = 0; s + 1 < d; ++s) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(cores[static_cast<std::size_t>(s)].left_unfolding(),
                                       Eigen::ComputeThinU | Eigen::ComputeThinV);
    const std::int64_t k = select_rank(svd.singularValues(), max_rank, tol);
    cores[static_cast<std::size_t>(s)] = TTCore::from_left_unfolding(
        svd.matrixU().leftCols(k), cores[static_cast<std::size_t>(s)].mode_size());
    const Eigen::MatrixXd carry =
        svd.singularValues().head(k).asDiagonal() * svd.matrixV().leftCols(k).transpose();
    const TTCore& next = cores[static_cast<std::size_t>(s + 1)];
    std::vector<Eigen::MatrixXd> scaled;
    scaled.reserve(static_cast<std::size_t>(next.mode_size()));
    for (std::int64_t i = 0; i < next.mode_size(); ++i) scaled.push_back(carry * next.slice(i));
    cores[static_cast<std::size_t>(s + 1)] = TTCore(std::move(scaled));
  }
  return TTTensor(std::move(cores));
}

TTTensor orthogonalize_t(const TTTensor& tt, std::int64_t t) {
  const std::int64_t d = tt.order();
  if (t < 1 || t > d) throw std::invalid_argument("orthogonalize_t: t must lie in [1, d]");
  std::vector<TTCore> cores;
  cores.reserve(static_cast<std::size_t>(d));
  for (std::int64_t s = 0; s < d; ++s) cores.push_back(tt.core(s));

  const auto require_full_rank = [](const Eigen::MatrixXd& m, std::int64_t needed) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> probe(m);
    probe.setThreshold(kRankTol);
    if (probe.rank() < needed) {
      throw std::invalid_argument("orthogonalize_t: rank-deficient core unfolding, factorization is not minimal");
    }
  };

  // Left-orthogonalize cores 1..t-1 (1-based), pushing the gauge rightwards.
  for (std::int64_t s = 0; s < t - 1; ++s) {
    const Eigen::MatrixXd m = cores[static_cast<std::size_t>(s)].left_unfolding();
    require_full_rank(m, m.cols());
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), m.cols());
    Eigen::MatrixXd r = qr.matrixQR().topRows(m.cols()).triangularView<Eigen::Upper>();
    cores[static_cast<std::size_t>(s)] =
        TTCore::from_left_unfolding(q, cores[static_cast<std::size_t>(s)].mode_size());
    TTCore& next = cores[static_cast<std::size_t>(s + 1)];
    for (std::int64_t i = 0; i < next.mode_size(); ++i) next.slice(i) = r * next.slice(i);
  }

  // Right-orthogonalize cores t+1..d, pushing the gauge leftwards.
  for (std::int64_t s = d - 1; s >= t; --s) {
    const Eigen::MatrixXd mt = cores[static_cast<std::size_t>(s)].right_unfolding().transpose();
    require_full_rank(mt, mt.cols());
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(mt);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(mt.rows(), mt.cols());
    Eigen::MatrixXd r = qr.matrixQR().topRows(mt.cols()).triangularView<Eigen::Upper>();
    cores[static_cast<std::size_t>(s)] = TTCore::from_right_unfolding(
        q.transpose(), cores[static_cast<std::size_t>(s)].mode_size());
    TTCore& prev = cores[static_cast<std::size_t>(s - 1)];
    for (std::int64_t i = 0; i < prev.mode_size(); ++i) prev.slice(i) = prev.slice(i) * r.transpose();
  }
  return TTTensor(std::move(cores));
}

std::vector<std::int64_t> tt_rank_of_dense(const DenseTensor& a, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tt_rank_of_dense: tol must be >= 0");
  const std::int64_t d = a.shape().order();
  std::vector<std::int64_t> ranks;
  ranks.reserve(static_cast<std::size_t>(d - 1));
  for (std::int64_t split = 1; split < d; ++split) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(unfold(a, split));
    ranks.push_back(select_rank(svd.singularValues(), 0, tol));
  }
  return ranks;
}

}  // namespace ttmax
