#include "ttmax/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ttmax {

DenseTensor tt_to_dense(const TTTensor& tt) {
  const std::int64_t d = tt.order();
  Shape shape = tt.shape();
  if (shape.element_count() > kDenseElementBudget) {
    throw std::length_error("tt_to_dense: element count exceeds dense budget");
  }

  // Partial chain products over the leading modes: after step s, row p of T
  // holds G_1(0,i_1,:)...G_s(:,i_s,:) where p is the storage offset of
  // (i_1,...,i_s).  Appending mode s+1 maps row p to the row block
  // [p*n_{s+1}, (p+1)*n_{s+1}); the blocks are disjoint, so the expansion
  // parallelizes cleanly.
  Eigen::MatrixXd t(tt.core(0).mode_size(), tt.core(0).right_rank());
  for (std::int64_t i = 0; i < tt.core(0).mode_size(); ++i) t.row(i) = tt.core(0).slice(i);

  for (std::int64_t s = 1; s < d; ++s) {
    const TTCore& core = tt.core(s);
    const std::int64_t n = core.mode_size();
    const std::int64_t q = core.right_rank();
    const std::int64_t rows = t.rows();
    const Eigen::MatrixXd g = core.right_unfolding();  // left_rank x (n*q), slice i in column block i
    Eigen::MatrixXd z = t * g;                         // rows x (n*q)
    Eigen::MatrixXd next(rows * n, q);
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < rows; ++p) {
      for (std::int64_t i = 0; i < n; ++i) {
        next.row(p * n + i) = z.block(p, i * q, 1, q);
      }
    }
    t = std::move(next);
  }

  DenseTensor out(shape);
  Eigen::VectorXd::Map(out.data(), shape.element_count()) = t.col(0);
  return out;
}

DenseTensor tt_to_dense_serial(const TTTensor& tt) {
  Shape shape = tt.shape();
  if (shape.element_count() > kDenseElementBudget) {
    throw std::length_error("tt_to_dense_serial: element count exceeds dense budget");
  }
  DenseTensor out(shape);
  std::vector<std::int64_t> index(static_cast<std::size_t>(shape.order()));
  for (std::int64_t off = 0; off < shape.element_count(); ++off) {
    shape.multi_index(off, index);
    out[off] = tt_eval(tt, index);
  }
  return out;
}

namespace {
void require_same_shape(const DenseTensor& a, const DenseTensor& b, const char* who) {
  if (a.shape() != b.shape()) throw std::invalid_argument(std::string(who) + ": shapes disagree");
}
}  // namespace

double max_abs_diff(const DenseTensor& a, const DenseTensor& b) {
  require_same_shape(a, b, "max_abs_diff");
  const std::int64_t n = a.size();
  const double* pa = a.data();
  const double* pb = b.data();
  double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    m = std::max(m, std::abs(pa[i] - pb[i]));
  }
  return m;
}

double max_abs_diff_serial(const DenseTensor& a, const DenseTensor& b) {
  require_same_shape(a, b, "max_abs_diff_serial");
  double m = 0.0;
  for (std::int64_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_norm_error(const DenseTensor& a, const TTTensor& tt) {
  return max_abs_diff(a, tt_to_dense(tt));
}

double max_norm_error_serial(const DenseTensor& a, const TTTensor& tt) {
  return max_abs_diff_serial(a, tt_to_dense_serial(tt));
}

DenseTensor clip_to_ball(const DenseTensor& x, const DenseTensor& center, double radius) {
  require_same_shape(x, center, "clip_to_ball");
  if (!(radius >= 0.0)) throw std::invalid_argument("clip_to_ball: radius must be >= 0");
  DenseTensor out(x.shape());
  const std::int64_t n = x.size();
  const double* px = x.data();
  const double* pc = center.data();
  double* po = out.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    po[i] = pc[i] + std::clamp(px[i] - pc[i], -radius, radius);
  }
  return out;
}

DenseTensor clip_to_ball_serial(const DenseTensor& x, const DenseTensor& center, double radius) {
  require_same_shape(x, center, "clip_to_ball_serial");
  if (!(radius >= 0.0)) throw std::invalid_argument("clip_to_ball_serial: radius must be >= 0");
  DenseTensor out(x.shape());
  for (std::int64_t i = 0; i < x.size(); ++i) {
    out[i] = center[i] + std::clamp(x[i] - center[i], -radius, radius);
  }
  return out;
}

}  // namespace ttmax
