#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ttmax/altproj.hpp"

namespace ttmax {

enum class TensorKind { identity, uniform };

std::string to_string(TensorKind kind);
TensorKind tensor_kind_from_string(const std::string& name);

/// Cartesian sweep over (kind, order, size, rank) with repeated runs per
/// cell.  Identity cells aggregate with the minimum across repetitions,
/// uniform cells with the median.  Timing is off by default so reruns are
/// byte-identical.
struct ExperimentGrid {
  std::vector<TensorKind> kinds{TensorKind::identity};
  std::vector<std::int64_t> orders{2};
  std::vector<std::int64_t> sizes{16};
  std::vector<std::int64_t> ranks{4};
  std::int64_t repetitions = 5;
  std::uint64_t base_seed = 0;
  std::int64_t restarts = 1;    // restarts inside each epsilon search
  bool record_timing = false;
  bool allow_large = false;     // lift the order-3 size cap
  APConfig ap;                  // rank and seed are overridden per cell
};

struct ExperimentRow {
  std::string kind;
  std::int64_t d = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::string rep;  // repetition number, or "agg" for the aggregated row
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  std::int64_t iterations = 0;
  bool converged = false;
  double elapsed_ms = 0.0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::string csv;
};

/// Seed for a single repetition; depends only on the labels, so subsetting a
/// grid reproduces the same cells.
std::uint64_t cell_seed(std::uint64_t base, std::int64_t d, std::int64_t n, std::int64_t r,
                        std::int64_t rep);

ExperimentResult run_grid(const ExperimentGrid& grid);

std::string rows_to_csv(const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> rows_from_csv(const std::string& csv);

struct RateFit {
  std::string kind;
  std::int64_t d = 0;
  double alpha = 0.0;     // exponent of (n - r)
  double beta = 0.0;      // decay exponent of r
  double log_c = 0.0;     // fitted log-constant
  double residual = 0.0;  // root-mean-square misfit in log space
  std::int64_t points = 0;
};

/// Least-squares fit of log(epsilon) = log_c + alpha*log(n-r) - beta*log(r)
/// per (kind, d) over the aggregated rows.  Groups with fewer than four
/// usable points are skipped; throws when no group is fittable.
std::vector<RateFit> fit_rates(const std::vector<ExperimentRow>& rows);

/// One SVG per (kind, d): epsilon against rank on log-log axes, one polyline
/// per tensor size, built from the aggregated rows.  Returns written paths.
std::vector<std::string> emit_plots(const std::vector<ExperimentRow>& rows,
                                    const std::string& out_dir);

}  // namespace ttmax
