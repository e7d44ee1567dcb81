#include "ttmax/tt_tensor.hpp"

#include <stdexcept>
#include <string>

namespace ttmax {

TTCore::TTCore(std::int64_t left_rank, std::int64_t mode_size, std::int64_t right_rank)
    : left_rank_(left_rank), right_rank_(right_rank) {
  if (left_rank < 1 || mode_size < 1 || right_rank < 1) {
    throw std::invalid_argument("TTCore: all dimensions must be >= 1");
  }
  slices_.assign(static_cast<std::size_t>(mode_size), Eigen::MatrixXd::Zero(left_rank, right_rank));
}

TTCore::TTCore(std::vector<Eigen::MatrixXd> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) throw std::invalid_argument("TTCore: at least one slice required");
  left_rank_ = slices_.front().rows();
  right_rank_ = slices_.front().cols();
  if (left_rank_ < 1 || right_rank_ < 1) throw std::invalid_argument("TTCore: empty slice");
  for (const auto& s : slices_) {
    if (s.rows() != left_rank_ || s.cols() != right_rank_) {
      throw std::invalid_argument("TTCore: slices disagree in size");
    }
  }
}

Eigen::MatrixXd TTCore::left_unfolding() const {
  Eigen::MatrixXd m(left_rank_ * mode_size(), right_rank_);
  for (std::int64_t i = 0; i < mode_size(); ++i) {
    m.middleRows(i * left_rank_, left_rank_) = slice(i);
  }
  return m;
}

Eigen::MatrixXd TTCore::right_unfolding() const {
  Eigen::MatrixXd m(left_rank_, mode_size() * right_rank_);
  for (std::int64_t i = 0; i < mode_size(); ++i) {
    m.middleCols(i * right_rank_, right_rank_) = slice(i);
  }
  return m;
}

TTCore TTCore::from_left_unfolding(const Eigen::MatrixXd& m, std::int64_t mode_size) {
  if (mode_size < 1 || m.rows() % mode_size != 0) {
    throw std::invalid_argument("TTCore::from_left_unfolding: row count not divisible by mode size");
  }
  const std::int64_t p = m.rows() / mode_size;
  std::vector<Eigen::MatrixXd> slices;
  slices.reserve(static_cast<std::size_t>(mode_size));
  for (std::int64_t i = 0; i < mode_size; ++i) slices.push_back(m.middleRows(i * p, p));
  return TTCore(std::move(slices));
}

TTCore TTCore::from_right_unfolding(const Eigen::MatrixXd& m, std::int64_t mode_size) {
  if (mode_size < 1 || m.cols() % mode_size != 0) {
    throw std::invalid_argument("TTCore::from_right_unfolding: column count not divisible by mode size");
  }
  const std::int64_t q = m.cols() / mode_size;
  std::vector<Eigen::MatrixXd> slices;
  slices.reserve(static_cast<std::size_t>(mode_size));
  for (std::int64_t i = 0; i < mode_size; ++i) slices.push_back(m.middleCols(i * q, q));
  return TTCore(std::move(slices));
}

TTTensor::TTTensor(std::vector<TTCore> cores) : cores_(std::move(cores)) {
  const auto d = static_cast<std::int64_t>(cores_.size());
  if (d < 2) throw std::invalid_argument("TTTensor: order must be >= 2");
  if (cores_.front().left_rank() != 1 || cores_.back().right_rank() != 1) {
    throw std::invalid_argument("TTTensor: boundary ranks must equal 1");
  }
  for (std::int64_t s = 0; s + 1 < d; ++s) {
    if (cores_[static_cast<std::size_t>(s)].right_rank() !=
        cores_[static_cast<std::size_t>(s + 1)].left_rank()) {
      throw std::invalid_argument("TTTensor: rank mismatch between cores " + std::to_string(s) +
                                  " and " + std::to_string(s + 1));
    }
  }
}

std::vector<std::int64_t> TTTensor::mode_sizes() const {
  std::vector<std::int64_t> n;
  n.reserve(cores_.size());
  for (const auto& c : cores_) n.push_back(c.mode_size());
  return n;
}

std::vector<std::int64_t> TTTensor::ranks() const {
  std::vector<std::int64_t> r;
  r.reserve(cores_.size() - 1);
  for (std::size_t s = 0; s + 1 < cores_.size(); ++s) r.push_back(cores_[s].right_rank());
  return r;
}

double tt_eval(const TTTensor& tt, std::span<const std::int64_t> index) {
  if (static_cast<std::int64_t>(index.size()) != tt.order()) {
    throw std::invalid_argument("tt_eval: index order mismatch");
  }
  for (std::int64_t s = 0; s < tt.order(); ++s) {
    if (index[static_cast<std::size_t>(s)] < 0 ||
        index[static_cast<std::size_t>(s)] >= tt.core(s).mode_size()) {
      throw std::out_of_range("tt_eval: index out of bounds");
    }
  }
  Eigen::RowVectorXd v = tt.core(0).slice(index[0]);
  for (std::int64_t s = 1; s < tt.order(); ++s) {
    v = v * tt.core(s).slice(index[static_cast<std::size_t>(s)]);
  }
  return v(0);
}

TTTensor tt_sum(const TTTensor& a, const TTTensor& b) {
  if (a.order() != b.order() || a.mode_sizes() != b.mode_sizes()) {
    throw std::invalid_argument("tt_sum: shapes disagree");
  }
  const std::int64_t d = a.order();
  std::vector<TTCore> cores;
  cores.reserve(static_cast<std::size_t>(d));
  for (std::int64_t s = 0; s < d; ++s) {
    const TTCore& ca = a.core(s);
    const TTCore& cb = b.core(s);
    const std::int64_t n = ca.mode_size();
    std::vector<Eigen::MatrixXd> slices;
    slices.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      if (s == 0) {
        // Row concatenation [A | B].
        Eigen::MatrixXd m(1, ca.right_rank() + cb.right_rank());
        m << ca.slice(i), cb.slice(i);
        slices.push_back(std::move(m));
      } else if (s == d - 1) {
        // Column concatenation [A; B].
        Eigen::MatrixXd m(ca.left_rank() + cb.left_rank(), 1);
        m << ca.slice(i), cb.slice(i);
        slices.push_back(std::move(m));
      } else {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(ca.left_rank() + cb.left_rank(),
                                                  ca.right_rank() + cb.right_rank());
        m.topLeftCorner(ca.left_rank(), ca.right_rank()) = ca.slice(i);
        m.bottomRightCorner(cb.left_rank(), cb.right_rank()) = cb.slice(i);
        slices.push_back(std::move(m));
      }
    }
    cores.emplace_back(std::move(slices));
  }
  return TTTensor(std::move(cores));
}

TTTensor tt_scaled(const TTTensor& tt, double factor) {
  std::vector<TTCore> cores;
  cores.reserve(static_cast<std::size_t>(tt.order()));
  for (std::int64_t s = 0; s < tt.order(); ++s) cores.push_back(tt.core(s));
  for (std::int64_t i = 0; i < cores.front().mode_size(); ++i) cores.front().slice(i) *= factor;
  return TTTensor(std::move(cores));
}

}  // namespace ttmax
