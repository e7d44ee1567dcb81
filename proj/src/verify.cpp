#include "ttmax/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "ttmax/altproj.hpp"
#include "ttmax/coherence.hpp"
#include "ttmax/decomposition.hpp"
#include "ttmax/generators.hpp"
#include "ttmax/index_algebra.hpp"
#include "ttmax/kernels.hpp"
#include "ttmax/norms.hpp"
#include "ttmax/rng.hpp"
#include "ttmax/sketch.hpp"

namespace ttmax {

namespace {

PartialArray random_array(const DimSubset& domain, const std::vector<std::int64_t>& extents,
                          Rng& rng) {
  PartialArray out(domain, extents);
  for (std::int64_t i = 0; i < out.size(); ++i) out[i] = rng.normal();
  return out;
}

std::vector<Eigen::MatrixXd> random_chain(const std::vector<std::int64_t>& k, Rng& rng) {
  std::vector<Eigen::MatrixXd> w;
  const auto n = static_cast<std::int64_t>(k.size());
  for (std::int64_t s = 0; s <= n; ++s) {
    const std::int64_t rows = s == 0 ? 1 : k[static_cast<std::size_t>(s - 1)];
    const std::int64_t cols = s == n ? 1 : k[static_cast<std::size_t>(s)];
    Eigen::MatrixXd m(rows, cols);
    for (std::int64_t i = 0; i < rows; ++i) {
      for (std::int64_t j = 0; j < cols; ++j) m(i, j) = rng.normal();
    }
    w.push_back(std::move(m));
  }
  return w;
}

DenseTensor random_dense(const Shape& shape, Rng& rng) {
  DenseTensor out(shape, 0.0);
  for (std::int64_t i = 0; i < out.size(); ++i) out.data()[i] = rng.normal();
  return out;
}

double max_abs(const PartialArray& a, const PartialArray& b) {
  double worst = 0.0;
  for (std::int64_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

SuiteResult index_suite(std::uint64_t seed) {
  Rng rng(mix_seed({seed, 0x696478u}));
  SuiteResult suite;
  suite.suite = "index-algebra";

  {
    // Partial traces compose over disjoint sets, in either order.
    const DimSubset omega = DimSubset::full(3);
    const std::vector<std::int64_t> m{2, 3, 2};
    const PartialArray c = random_array(doubled(omega), doubled_extents(m), rng);
    const DimSubset s0(3, {0});
    const DimSubset s12(3, {1, 2});
    const PartialArray once = partial_trace(partial_trace(c, s0), s12);
    const PartialArray swapped = partial_trace(partial_trace(c, s12), s0);
    const PartialArray joint = partial_trace(c, DimSubset::full(3));
    const double worst = std::max(max_abs(once, joint), max_abs(swapped, joint));
    suite.checks.push_back({"trace-composition", worst <= 1e-12, worst});
  }
  {
    // Partial Frobenius reductions compose the same way.
    const DimSubset omega = DimSubset::full(4);
    const std::vector<std::int64_t> m{2, 2, 3, 2};
    const PartialArray d = random_array(omega, m, rng);
    const DimSubset s1(4, {1});
    const DimSubset s23(4, {0, 3});
    const PartialArray once = partial_frobenius(partial_frobenius(d, s1), s23);
    const PartialArray joint = partial_frobenius(d, DimSubset(4, {0, 1, 3}));
    const double worst = max_abs(once, joint);
    suite.checks.push_back({"frobenius-composition", worst <= 1e-12, worst});
  }
  {
    // Pairing count: 2*Theta never exceeds |Omega|, nor 2|Omega| - kappa
    // once there are more cells than dimensions.
    double worst = -1.0;
    const DimSubset omega = DimSubset::full(3);
    for (const Partition& pi : enumerate_partitions(doubled(omega))) {
      const double theta2 = 2.0 * theta_weights(pi).total;
      const auto kappa = static_cast<double>(pi.cell_count());
      double limit = 3.0;
      if (kappa > 3.0) limit = std::min(limit, 6.0 - kappa);
      worst = std::max(worst, theta2 - limit);
    }
    suite.checks.push_back({"pairing-bound", worst <= 0.0, worst});
  }
  {
    // Product-sum inequality against the Frobenius/extent bound.
    const DimSubset omega = DimSubset::full(2);
    const std::vector<std::int64_t> m{3, 2};
    double worst = -1e300;
    for (const Partition& pi : enumerate_partitions(doubled(omega))) {
      std::vector<PartialArray> cells;
      for (std::int64_t t = 0; t < pi.cell_count(); ++t) {
        cells.push_back(random_array(cell_overlap(pi, t), m, rng));
      }
      const CauchySchwarzSides sides = cauchy_schwarz_check(pi, cells, m);
      worst = std::max(worst, sides.lhs - sides.rhs);
    }
    suite.checks.push_back({"product-sum-bound", worst <= 1e-12, worst});
  }
  {
    // Sandwiched chain value equals the structured index sum.
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      const std::vector<std::int64_t> k{2, 3};
      const std::vector<Eigen::MatrixXd> w = random_chain(k, rng);
      std::vector<Eigen::MatrixXd> r;
      for (std::int64_t kk : k) {
        Eigen::MatrixXd mat(kk, 2);
        for (std::int64_t i = 0; i < mat.rows(); ++i) {
          for (std::int64_t j = 0; j < mat.cols(); ++j) mat(i, j) = rng.normal();
        }
        r.push_back(std::move(mat));
      }
      const double chain = eval_quadratic_form(w, r);
      const double brute = quadratic_form_index_sum(w, r);
      worst = std::max(worst, std::abs(chain - brute) / std::max(1.0, std::abs(chain)));
    }
    suite.checks.push_back({"quadratic-form-chain", worst <= 1e-12, worst});
  }
  {
    // Tracing the structured array contracts the chain and multiplies by the
    // rank of the traced position.
    const std::vector<std::int64_t> k{2, 2, 3};
    const std::vector<std::int64_t> r{2, 3, 2};
    const std::vector<Eigen::MatrixXd> w = random_chain(k, rng);
    const DimSubset full3 = DimSubset::full(3);
    const PartialArray d = build_psi(full3, r, k, w);
    double worst = 0.0;
    for (std::int64_t s = 0; s < 3; ++s) {
      const DimSubset rest = set_minus(full3, DimSubset(3, {s}));
      const PartialArray traced = partial_trace(d, DimSubset(3, {s}));
      PartialArray expect = build_psi(rest, r, k, merge_chain(w, rest));
      for (std::int64_t i = 0; i < expect.size(); ++i) {
        expect[i] *= static_cast<double>(r[static_cast<std::size_t>(s)]);
      }
      worst = std::max(worst, max_abs(traced, expect));
    }
    suite.checks.push_back({"trace-identity", worst <= 1e-12, worst});
  }

  suite.pass = std::all_of(suite.checks.begin(), suite.checks.end(),
                           [](const SuiteCheck& c) { return c.pass; });
  return suite;
}

SuiteResult decomposition_suite(std::uint64_t seed) {
  Rng rng(mix_seed({seed, 0x646563u}));
  SuiteResult suite;
  suite.suite = "decomposition";

  const DenseTensor a = random_dense(Shape({4, 3, 4, 2}), rng);
  {
    const TTTensor tt = tt_svd(a, 0, 0.0);
    const double worst = max_norm_error(a, tt) / a.max_norm();
    suite.checks.push_back({"full-rank-reconstruction", worst <= 1e-12, worst});
  }
  {
    // Truncation error against the discarded singular values of the
    // unfoldings of the original tensor.
    const TTTensor tt = tt_svd(a, 2, 0.0);
    const DenseTensor b = tt_to_dense(tt);
    Eigen::Map<const Eigen::ArrayXd> pa(a.data(), a.size());
    Eigen::Map<const Eigen::ArrayXd> pb(b.data(), b.size());
    const double err = std::sqrt((pa - pb).square().sum());
    double budget = 0.0;
    for (std::int64_t t = 1; t < a.shape().order(); ++t) {
      const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXd>(unfold(a, t)).singularValues();
      for (std::int64_t i = 2; i < sv.size(); ++i) budget += sv(i) * sv(i);
    }
    const double worst = err - (std::sqrt(budget) + 1e-10);
    suite.checks.push_back({"truncation-quasioptimal", worst <= 0.0, worst});
  }
  {
    const TTTensor tt = tt_svd(a, 0, 1e-10);
    double worst = 0.0;
    for (std::int64_t t = 1; t <= a.shape().order(); ++t) {
      worst = std::max(worst, max_norm_error(a, orthogonalize_t(tt, t)) / a.max_norm());
    }
    suite.checks.push_back({"pivot-orthogonalization", worst <= 1e-10, worst});
  }

  suite.pass = std::all_of(suite.checks.begin(), suite.checks.end(),
                           [](const SuiteCheck& c) { return c.pass; });
  return suite;
}

SuiteResult coherence_suite(std::uint64_t seed) {
  Rng rng(mix_seed({seed, 0x636f68u}));
  SuiteResult suite;
  suite.suite = "coherence";

  {
    const std::int64_t expected[] = {18694, 21713, 30002, 38291};
    const std::int64_t n[] = {18694, 100000, 10000000, 1000000000};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      worst = std::max(worst,
                       std::abs(static_cast<double>(rank_bound_matrix(n[i], n[i], 0.1) - expected[i])));
    }
    suite.checks.push_back({"rank-table", worst == 0.0, worst});
  }
  const DenseTensor a = random_dense(Shape({4, 4, 4}), rng);
  {
    // For left-orthogonal cores the block coherence reduces to a closed-form
    // slice-norm maximum.
    const TTTensor tt = tt_svd(a, 0, 1e-10);
    double worst = 0.0;
    for (std::int64_t s = 0; s + 1 < tt.order(); ++s) {
      const TTCore& g = tt.core(s);
      double mx = 0.0;
      for (std::int64_t i = 0; i < g.mode_size(); ++i) {
        mx = std::max(mx, g.slice(i).squaredNorm());
      }
      const double formula = static_cast<double>(g.mode_size() * g.left_rank()) /
                             static_cast<double>(g.right_rank()) * mx;
      const double direct = core_left_coherence(g);
      worst = std::max(worst, std::abs(formula - direct) / std::max(1.0, direct));
    }
    suite.checks.push_back({"slice-formula", worst <= 1e-12, worst});
  }
  {
    const CoherenceProfile base = tt_core_coherences(a);
    double worst = 0.0;
    for (std::int64_t t = 1; t <= 3; ++t) {
      const CoherenceProfile p = tt_core_coherences_via(a, t);
      for (std::size_t s = 0; s < base.left.size(); ++s) {
        worst = std::max(worst, std::abs(p.left[s] - base.left[s]));
      }
      for (std::size_t s = 0; s < base.right.size(); ++s) {
        worst = std::max(worst, std::abs(p.right[s] - base.right[s]));
      }
    }
    suite.checks.push_back({"profile-invariance", worst <= 1e-8, worst});
  }
  {
    const TTTensor tt = tt_svd(a, 0, 1e-10);
    double worst = -1e300;
    for (std::int64_t t = 1; t <= 3; ++t) {
      const double bound = gamma_bound_via_coherence(a, t);
      const double gamma = gamma_tt_upper(orthogonalize_t(tt, t));
      worst = std::max(worst, gamma - bound - 1e-10);
    }
    suite.checks.push_back({"pivot-gamma-bound", worst <= 0.0, worst});
  }

  suite.pass = std::all_of(suite.checks.begin(), suite.checks.end(),
                           [](const SuiteCheck& c) { return c.pass; });
  return suite;
}

SuiteResult sketch_suite(std::uint64_t seed) {
  Rng rng(mix_seed({seed, 0x736b32u}));
  SuiteResult suite;
  suite.suite = "sketch";

  {
    // Inner bond ranks 1 with two-point entries reproduce the tensor exactly.
    std::vector<Eigen::MatrixXd> factors;
    for (int s = 0; s < 3; ++s) {
      Eigen::MatrixXd c(3, 1);
      for (std::int64_t i = 0; i < 3; ++i) c(i, 0) = rng.normal();
      factors.push_back(std::move(c));
    }
    const TTTensor tt = cp_to_tt(factors);
    SketchConfig cfg;
    cfg.target_rank = 4;
    cfg.distribution = SketchDistribution::rademacher;
    cfg.seed = seed;
    const double worst = max_abs_diff(tt_to_dense(tt), tt_to_dense(compress(tt, cfg)));
    suite.checks.push_back({"bond-rank-one-exact", worst <= 1e-14, worst});
  }
  {
    const TTTensor tt = random_tt_init(Shape({3, 3, 3}), 2, seed);
    SketchConfig cfg;
    cfg.target_rank = 3;
    cfg.seed = mix_seed({seed, 1u});
    const double worst =
        max_abs_diff(tt_to_dense(compress(tt, cfg)), tt_to_dense(compress(tt, cfg)));
    suite.checks.push_back({"determinism", worst == 0.0, worst});
  }
  {
    // Sample mean of gaussian sketches against the tensor, at four standard
    // errors entrywise.
    const TTTensor tt = random_tt_init(Shape({3, 3, 3}), 2, mix_seed({seed, 2u}));
    const DenseTensor dense = tt_to_dense(tt);
    const std::int64_t trials = 3000;
    std::vector<double> mean(static_cast<std::size_t>(dense.size()), 0.0);
    std::vector<double> sq(static_cast<std::size_t>(dense.size()), 0.0);
    for (std::int64_t t = 0; t < trials; ++t) {
      SketchConfig cfg;
      cfg.target_rank = 2;
      cfg.seed = mix_seed({seed, 3u, static_cast<std::uint64_t>(t)});
      const DenseTensor b = tt_to_dense(compress(tt, cfg));
      for (std::int64_t i = 0; i < b.size(); ++i) {
        mean[static_cast<std::size_t>(i)] += b.data()[i];
        sq[static_cast<std::size_t>(i)] += b.data()[i] * b.data()[i];
      }
    }
    double worst = -1e300;
    for (std::int64_t i = 0; i < dense.size(); ++i) {
      const double m = mean[static_cast<std::size_t>(i)] / static_cast<double>(trials);
      const double var = sq[static_cast<std::size_t>(i)] / static_cast<double>(trials) - m * m;
      const double se = std::sqrt(std::max(var, 0.0) / static_cast<double>(trials));
      worst = std::max(worst, std::abs(m - dense.data()[i]) - 4.0 * se);
    }
    suite.checks.push_back({"unbiased-mean", worst <= 0.0, worst});
  }

  suite.pass = std::all_of(suite.checks.begin(), suite.checks.end(),
                           [](const SuiteCheck& c) { return c.pass; });
  return suite;
}

SuiteResult approx_suite(std::uint64_t seed) {
  Rng rng(mix_seed({seed, 0x617070u}));
  SuiteResult suite;
  suite.suite = "approx";

  {
    const Shape shape({3, 4, 3});
    const DenseTensor a = random_dense(shape, rng);
    const DenseTensor x = random_dense(shape, rng);
    const double eps = 0.4;
    const DenseTensor y = project_ball(x, a, eps);
    const DenseTensor yy = project_ball(y, a, eps);
    double worst = max_abs_diff(a, y) - eps;           // lands in the ball
    worst = std::max(worst, max_abs_diff(y, yy));      // idempotent
    for (std::int64_t i = 0; i < y.size(); ++i) {
      // No entry moves further than its own 1-D projection requires.
      const double gap = std::abs(x.data()[i] - a.data()[i]);
      const double moved = std::abs(y.data()[i] - x.data()[i]);
      worst = std::max(worst, moved - std::max(0.0, gap - eps));
    }
    suite.checks.push_back({"ball-projection", worst <= 1e-14, worst});
  }
  {
    APConfig cfg;
    cfg.rank = 1;
    cfg.seed = mix_seed({seed, 4u});
    const APResult run = binary_search_epsilon(identity_tensor(2, 2), cfg, 2);
    const double eps = run.report.epsilon_achieved;
    const bool pass = eps >= 0.45 && eps <= 0.65;
    suite.checks.push_back({"identity-anchor", pass, eps});
  }
  {
    const TTTensor target = random_tt_init(Shape({4, 4, 4}), 2, mix_seed({seed, 5u}));
    APConfig cfg;
    cfg.rank = 2;
    cfg.seed = mix_seed({seed, 6u});
    const APResult run = binary_search_epsilon(tt_to_dense(target), cfg, 1);
    suite.checks.push_back(
        {"exact-rank-recovery", run.report.epsilon_achieved <= 1e-6, run.report.epsilon_achieved});
  }

  suite.pass = std::all_of(suite.checks.begin(), suite.checks.end(),
                           [](const SuiteCheck& c) { return c.pass; });
  return suite;
}

}  // namespace

std::vector<SuiteResult> run_verification_suites(std::uint64_t seed) {
  return {index_suite(seed), decomposition_suite(seed), coherence_suite(seed),
          sketch_suite(seed), approx_suite(seed)};
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.pass; });
}

}  // namespace ttmax
