#include "ttmax/altproj.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "ttmax/decomposition.hpp"
#include "ttmax/generators.hpp"
#include "ttmax/kernels.hpp"
#include "ttmax/rng.hpp"

namespace ttmax {

namespace {

// Absolute feasibility floor relative to the data scale: without it, an
// exactly representable tensor could never pass the epsilon = 0 probe.
constexpr double kFeasibilityFloor = 1e-12;

double accept_threshold(double epsilon, const APConfig& cfg, double a_max) {
  return epsilon * (1.0 + cfg.slack) + kFeasibilityFloor * std::max(1.0, a_max);
}

double frobenius_diff(const DenseTensor& x, const DenseTensor& y) {
  Eigen::Map<const Eigen::ArrayXd> px(x.data(), x.size());
  Eigen::Map<const Eigen::ArrayXd> py(y.data(), y.size());
  return std::sqrt((px - py).square().sum());
}

void validate_config(const APConfig& cfg) {
  if (cfg.rank < 1) throw std::invalid_argument("alternating projections: rank must be >= 1");
  if (cfg.max_iter < 1) throw std::invalid_argument("alternating projections: max_iter must be >= 1");
  if (!(cfg.conv_tol > 0.0)) throw std::invalid_argument("alternating projections: conv_tol must be positive");
  if (!(cfg.slack >= 0.0)) throw std::invalid_argument("alternating projections: slack must be nonnegative");
}

}  // namespace

DenseTensor project_ball(const DenseTensor& x, const DenseTensor& a, double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("project_ball: epsilon must be nonnegative");
  return clip_to_ball(x, a, epsilon);
}

TTTensor quasi_project_lowrank(const DenseTensor& y, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("quasi_project_lowrank: rank must be >= 1");
  return tt_svd(y, r, 0.0);
}

APResult alternating_projections(const DenseTensor& a, double epsilon, const APConfig& cfg,
                                 const TTTensor& x0) {
  validate_config(cfg);
  if (!(epsilon >= 0.0)) throw std::invalid_argument("alternating_projections: epsilon must be nonnegative");
  if (!(x0.shape() == a.shape())) throw std::invalid_argument("alternating_projections: shape mismatch");
  for (std::int64_t r : x0.ranks()) {
    if (r > cfg.rank) throw std::invalid_argument("alternating_projections: x0 exceeds the target rank");
  }

  const double accept = accept_threshold(epsilon, cfg, a.max_norm());
  const double a_frob = a.frobenius_norm();

  TTTensor x = x0;
  DenseTensor xd = tt_to_dense(x);
  std::int64_t iterations = 0;
  for (std::int64_t t = 1; t <= cfg.max_iter; ++t) {
    iterations = t;
    const double res = max_abs_diff(a, xd);
    if (!std::isfinite(res)) throw std::runtime_error("alternating_projections: non-finite iterate");
    if (res <= accept) break;

    const DenseTensor y = project_ball(xd, a, epsilon);
    TTTensor xn = quasi_project_lowrank(y, cfg.rank);
    DenseTensor xnd = tt_to_dense(xn);
    const double step = frobenius_diff(xnd, xd);
    x = std::move(xn);
    xd = std::move(xnd);
    if (step <= cfg.conv_tol * a_frob) break;
  }

  ApproxReport report;
  report.residual_max = max_abs_diff(a, xd);
  report.epsilon_achieved = report.residual_max;
  report.converged = report.residual_max <= accept;
  report.iterations_used = iterations;
  report.rank = cfg.rank;
  report.seed = cfg.seed;
  return APResult{report, std::move(x)};
}

APResult binary_search_epsilon(const DenseTensor& a, const APConfig& cfg, std::int64_t restarts) {
  validate_config(cfg);
  if (restarts < 1) throw std::invalid_argument("binary_search_epsilon: restarts must be >= 1");

  const double a_max = a.max_norm();

  // The zero train is always a feasible witness at epsilon = max-norm of a.
  APResult best{ApproxReport{}, quasi_project_lowrank(DenseTensor(a.shape(), 0.0), 1)};
  best.report.epsilon_achieved = a_max;
  best.report.residual_max = a_max;
  best.report.converged = true;
  best.report.rank = cfg.rank;
  best.report.seed = cfg.seed;
  if (a_max == 0.0) return best;

  auto consider = [&best](APResult&& run) {
    if (run.report.converged && run.report.residual_max < best.report.epsilon_achieved) {
      best = std::move(run);
      best.report.epsilon_achieved = best.report.residual_max;
    }
  };

  for (std::int64_t j = 0; j < restarts; ++j) {
    APConfig local = cfg;
    local.seed = mix_seed({cfg.seed, 0x6273u, static_cast<std::uint64_t>(j)});
    const TTTensor x0 = random_tt_init(a.shape(), cfg.rank, local.seed);

    // Probe exact representability first; on success there is nothing to bisect.
    {
      APResult run = alternating_projections(a, 0.0, local, x0);
      const bool hit = run.report.converged;
      consider(std::move(run));
      if (hit) continue;
    }

    double lo = 0.0;
    double hi = a_max;
    for (int b = 0; b < 20 && hi - lo >= 1e-3 * a_max; ++b) {
      const double mid = 0.5 * (lo + hi);
      APResult run = alternating_projections(a, mid, local, x0);
      if (run.report.converged) {
        hi = mid;
        consider(std::move(run));
      } else {
        lo = mid;
      }
    }
  }
  // Restarts run under derived seeds; the report carries the caller's seed.
  best.report.seed = cfg.seed;
  return best;
}

}  // namespace ttmax
