#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ttmax/tt_tensor.hpp"

namespace ttmax {

enum class SketchDistribution { gaussian, rademacher };

/// Randomized rank-r compression plan.  Each interior bond of the train gets
/// an independent k_s x r matrix with i.i.d. entries of standard deviation
/// eta[s]; the product of the etas must equal r^{-(d-1)/2} so the compressed
/// train is an unbiased estimate of the input.  An empty eta means the equal
/// split eta_s = r^{-1/2}.
struct SketchConfig {
  std::int64_t target_rank = 1;
  SketchDistribution distribution = SketchDistribution::gaussian;
  std::uint64_t seed = 0;
  std::vector<double> eta;
};

/// One scaled random matrix per interior bond; deterministic in (seed, s).
std::vector<Eigen::MatrixXd> draw_sketches(const SketchConfig& config,
                                           const std::vector<std::int64_t>& inner_ranks);

/// Sandwich the sketch matrices between the cores: the first core is
/// multiplied by R_1 on the right, interior cores by R_{s-1}^T and R_s, the
/// last by R_{d-1}^T on the left.  All interior ranks of the result equal
/// target_rank.
TTTensor compress(const TTTensor& tt, const SketchConfig& config);

struct SketchTrial {
  std::int64_t trial = 0;
  double max_error = 0.0;
  double gamma_bound = 0.0;
  double implied_epsilon = 0.0;
};

struct SketchReport {
  std::vector<SketchTrial> trials;
  double gamma_bound = 0.0;
  double median_error = 0.0;
  double median_implied_epsilon = 0.0;
};

/// Monte-Carlo error study: per trial, compress with an independent seed and
/// record the entrywise error against the dense form, its ratio to
/// gamma_tt_upper, and medians across trials.
SketchReport sketch_error_report(const TTTensor& tt, const SketchConfig& config,
                                 std::int64_t trials);

std::string sketch_report_csv(const SketchReport& report);

struct MomentRow {
  double p = 0.0;
  double empirical = 0.0;   // empirical L_p norm of the centered value
  double shape = 0.0;       // sum_{kappa=1}^{2d-2} (p/r)^{kappa/2}
};

/// Distribution study of the scalar obtained by sandwiching gaussian sketches
/// of rank r into a fixed matrix chain W_1 * ... * W_d (row vector, square
/// middles, column vector).  The chain product itself is the exact mean.
std::vector<MomentRow> moment_scan(const std::vector<Eigen::MatrixXd>& w, std::int64_t r,
                                   const std::vector<double>& p_values, std::int64_t trials,
                                   std::uint64_t seed);

}  // namespace ttmax
