#include "ttmax/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ttmax/index_algebra.hpp"
#include "ttmax/kernels.hpp"
#include "ttmax/norms.hpp"
#include "ttmax/rng.hpp"

namespace ttmax {

namespace {

std::vector<double> resolve_eta(const SketchConfig& config, std::size_t bonds) {
  const double r = static_cast<double>(config.target_rank);
  if (config.eta.empty()) {
    return std::vector<double>(bonds, 1.0 / std::sqrt(r));
  }
  if (config.eta.size() != bonds) {
    throw std::invalid_argument("sketch: one eta per interior bond required");
  }
  double prod = 1.0;
  for (double e : config.eta) {
    if (!(e > 0.0)) throw std::invalid_argument("sketch: eta values must be positive");
    prod *= e;
  }
  const double target = std::pow(r, -0.5 * static_cast<double>(bonds));
  if (std::abs(prod - target) > 1e-12 * target) {
    throw std::invalid_argument("sketch: product of eta values must equal r^{-(d-1)/2}");
  }
  return config.eta;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

std::vector<Eigen::MatrixXd> draw_sketches(const SketchConfig& config,
                                           const std::vector<std::int64_t>& inner_ranks) {
  if (config.target_rank < 1) throw std::invalid_argument("draw_sketches: target rank must be >= 1");
  if (inner_ranks.empty()) throw std::invalid_argument("draw_sketches: at least one bond required");
  const std::vector<double> eta = resolve_eta(config, inner_ranks.size());

  std::vector<Eigen::MatrixXd> out;
  out.reserve(inner_ranks.size());
  for (std::size_t s = 0; s < inner_ranks.size(); ++s) {
    if (inner_ranks[s] < 1) throw std::invalid_argument("draw_sketches: bond ranks must be >= 1");
    Rng rng(mix_seed({config.seed, 0x736bu, static_cast<std::uint64_t>(s)}));
    Eigen::MatrixXd r(inner_ranks[s], config.target_rank);
    for (std::int64_t i = 0; i < r.rows(); ++i) {
      for (std::int64_t j = 0; j < r.cols(); ++j) {
        const double xi = config.distribution == SketchDistribution::gaussian
                              ? rng.normal()
                              : rng.rademacher();
        r(i, j) = eta[s] * xi;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

TTTensor compress(const TTTensor& tt, const SketchConfig& config) {
  const std::int64_t d = tt.order();
  std::vector<std::int64_t> bonds(tt.ranks());
  const std::vector<Eigen::MatrixXd> r = draw_sketches(config, bonds);

  std::vector<TTCore> cores;
  cores.reserve(static_cast<std::size_t>(d));
  for (std::int64_t s = 0; s < d; ++s) {
    const TTCore& g = tt.core(s);
    std::vector<Eigen::MatrixXd> slices(static_cast<std::size_t>(g.mode_size()));
    for (std::int64_t i = 0; i < g.mode_size(); ++i) {
      Eigen::MatrixXd h = g.slice(i);
      if (s > 0) h = r[static_cast<std::size_t>(s - 1)].transpose() * h;
      if (s < d - 1) h = h * r[static_cast<std::size_t>(s)];
      slices[static_cast<std::size_t>(i)] = std::move(h);
    }
    cores.emplace_back(std::move(slices));
  }
  return TTTensor(std::move(cores));
}

SketchReport sketch_error_report(const TTTensor& tt, const SketchConfig& config,
                                 std::int64_t trials) {
  if (trials < 1) throw std::invalid_argument("sketch_error_report: trials must be >= 1");
  const DenseTensor dense = tt_to_dense(tt);
  SketchReport report;
  report.gamma_bound = gamma_tt_upper(tt);
  report.trials.resize(static_cast<std::size_t>(trials));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < trials; ++t) {
    SketchConfig local = config;
    local.seed = mix_seed({config.seed, 0x7472u, static_cast<std::uint64_t>(t)});
    const double err = max_norm_error(dense, compress(tt, local));
    SketchTrial& row = report.trials[static_cast<std::size_t>(t)];
    row.trial = t;
    row.max_error = err;
    row.gamma_bound = report.gamma_bound;
    row.implied_epsilon = report.gamma_bound > 0.0 ? err / report.gamma_bound : 0.0;
  }

  std::vector<double> errs, eps;
  for (const auto& row : report.trials) {
    errs.push_back(row.max_error);
    eps.push_back(row.implied_epsilon);
  }
  report.median_error = median(std::move(errs));
  report.median_implied_epsilon = median(std::move(eps));
  return report;
}

std::string sketch_report_csv(const SketchReport& report) {
  std::string out = "trial,max_error,gamma_bound,implied_epsilon\n";
  char buf[160];
  for (const auto& row : report.trials) {
    std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g,%.17g\n",
                  static_cast<long long>(row.trial), row.max_error, row.gamma_bound,
                  row.implied_epsilon);
    out += buf;
  }
  return out;
}

std::vector<MomentRow> moment_scan(const std::vector<Eigen::MatrixXd>& w, std::int64_t r,
                                   const std::vector<double>& p_values, std::int64_t trials,
                                   std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("moment_scan: trials must be >= 1");
  if (r < 1) throw std::invalid_argument("moment_scan: rank must be >= 1");
  const auto d = static_cast<std::int64_t>(w.size());
  if (d < 2) throw std::invalid_argument("moment_scan: at least two chain matrices required");
  for (double p : p_values) {
    if (!(p >= 1.0)) throw std::invalid_argument("moment_scan: moments require p >= 1");
  }

  Eigen::MatrixXd full = w.front();
  for (std::int64_t s = 1; s < d; ++s) full = full * w[static_cast<std::size_t>(s)];
  if (full.rows() != 1 || full.cols() != 1) {
    throw std::invalid_argument("moment_scan: chain must contract to a scalar");
  }
  const double mean = full(0, 0);

  std::vector<std::int64_t> bonds(static_cast<std::size_t>(d - 1));
  for (std::int64_t s = 0; s + 1 < d; ++s) {
    bonds[static_cast<std::size_t>(s)] = w[static_cast<std::size_t>(s)].cols();
  }

  std::vector<double> centered(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < trials; ++t) {
    SketchConfig cfg;
    cfg.target_rank = r;
    cfg.distribution = SketchDistribution::gaussian;
    cfg.seed = mix_seed({seed, 0x6d6fu, static_cast<std::uint64_t>(t)});
    const std::vector<Eigen::MatrixXd> sk = draw_sketches(cfg, bonds);
    centered[static_cast<std::size_t>(t)] = eval_quadratic_form(w, sk) - mean;
  }

  std::vector<MomentRow> rows;
  for (double p : p_values) {
    MomentRow row;
    row.p = p;
    double acc = 0.0;
    for (double c : centered) acc += std::pow(std::abs(c), p);
    row.empirical = std::pow(acc / static_cast<double>(trials), 1.0 / p);
    for (std::int64_t kappa = 1; kappa <= 2 * d - 2; ++kappa) {
      row.shape += std::pow(p / static_cast<double>(r), 0.5 * static_cast<double>(kappa));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ttmax
