#pragma once

#include <cstdint>

#include "ttmax/dense_tensor.hpp"
#include "ttmax/tt_tensor.hpp"

namespace ttmax {

struct APConfig {
  std::int64_t rank = 1;       // uniform train-rank target
  std::int64_t max_iter = 500;
  double conv_tol = 1e-8;      // relative Frobenius stagnation threshold
  double slack = 1e-6;         // relative tolerance in the success predicate
  std::uint64_t seed = 0;
};

struct ApproxReport {
  double epsilon_achieved = 0.0;
  std::int64_t iterations_used = 0;
  bool converged = false;
  double residual_max = 0.0;
  std::int64_t rank = 0;
  std::uint64_t seed = 0;
};

/// Entrywise projection onto the radius-epsilon max-norm ball around a.
DenseTensor project_ball(const DenseTensor& x, const DenseTensor& a, double epsilon);

/// Quasioptimal Frobenius projection onto trains of uniform rank <= r.
TTTensor quasi_project_lowrank(const DenseTensor& y, std::int64_t r);

struct APResult {
  ApproxReport report;
  TTTensor tt;
};

/// Alternate between the max-norm ball around a and the low-rank set,
/// starting from x0 (ranks <= cfg.rank).  Stops on entrywise success, on
/// relative Frobenius stagnation of the low-rank iterates, or at max_iter.
/// converged means the final iterate lies in the (slightly slackened) ball.
APResult alternating_projections(const DenseTensor& a, double epsilon, const APConfig& cfg,
                                 const TTTensor& x0);

/// Upper bound on the smallest epsilon for which the ball meets the rank-r
/// set: bisect on alternating-projection success over [0, max-norm of a],
/// take the best over random restarts.  The zero train certifies the upper
/// bracket, so a feasible value always exists; the reported value is the
/// recomputed residual of the best witness found.
APResult binary_search_epsilon(const DenseTensor& a, const APConfig& cfg,
                               std::int64_t restarts);

}  // namespace ttmax
