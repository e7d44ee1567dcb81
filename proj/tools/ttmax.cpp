// Command-line driver: entrywise low-rank approximation, sketch studies,
// coherence profiles, rank-bound calculators, experiment grids, and the
// built-in property suites.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ttmax/altproj.hpp"
#include "ttmax/coherence.hpp"
#include "ttmax/config.hpp"
#include "ttmax/decomposition.hpp"
#include "ttmax/experiment.hpp"
#include "ttmax/generators.hpp"
#include "ttmax/kernels.hpp"
#include "ttmax/norms.hpp"
#include "ttmax/sketch.hpp"
#include "ttmax/tnsr_io.hpp"
#include "ttmax/verify.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  std::uint64_t seed = 0;
  bool seed_given = false;
};

void add_common(CLI::App* sub, CommonArgs* args) {
  sub->add_option("--config", args->config_path, "key = value configuration file");
  sub->add_option("--out", args->out_path, "output file (default: stdout)");
  sub->add_option("--format", args->format, "output format")
      ->check(CLI::IsMember({"csv", "tnsr"}));
  sub->add_option("--seed", args->seed, "seed override")
      ->each([args](const std::string&) { args->seed_given = true; });
}

ttmax::Config load_config(const CommonArgs& args) {
  ttmax::Config cfg;
  if (!args.config_path.empty()) cfg = ttmax::Config::parse_file(args.config_path);
  return cfg;
}

std::uint64_t resolve_seed(const CommonArgs& args, const ttmax::Config& cfg) {
  return args.seed_given ? args.seed : cfg.get_uint("seed", 0);
}

void write_output(const CommonArgs& args, const std::string& content) {
  if (args.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream os(args.out_path);
  if (!os) throw std::runtime_error("cannot open for writing: " + args.out_path);
  os << content;
  os.flush();
  if (!os) throw std::runtime_error("write failed: " + args.out_path);
}

ttmax::DenseTensor build_tensor(const ttmax::Config& cfg, std::uint64_t seed) {
  const std::string kind = cfg.get_string("tensor", "identity");
  if (kind == "file") {
    return ttmax::read_tnsr_file(cfg.get_string("input"));
  }
  if (kind == "identity") {
    return ttmax::identity_tensor(cfg.get_int("n", 8), cfg.get_int("d", 2));
  }
  if (kind == "uniform") {
    std::vector<std::int64_t> dims;
    if (cfg.has("dims")) {
      dims = cfg.get_int_list("dims");
    } else {
      dims.assign(static_cast<std::size_t>(cfg.get_int("d", 2)), cfg.get_int("n", 8));
    }
    return ttmax::uniform_tensor(ttmax::Shape(dims), seed);
  }
  throw ttmax::ConfigError("unknown tensor '" + kind + "' (expected identity, uniform, or file)");
}

ttmax::APConfig ap_config_from(const ttmax::Config& cfg, std::uint64_t seed) {
  ttmax::APConfig ap;
  ap.rank = cfg.get_int("rank", 1);
  ap.max_iter = cfg.get_int("max_iter", 500);
  ap.conv_tol = cfg.get_double("conv_tol", 1e-8);
  ap.slack = cfg.get_double("slack", 1e-6);
  ap.seed = seed;
  return ap;
}

int run_approx(const CommonArgs& args) {
  const ttmax::Config cfg = load_config(args);
  const std::uint64_t seed = resolve_seed(args, cfg);
  const ttmax::DenseTensor a = build_tensor(cfg, seed);
  const ttmax::APConfig ap = ap_config_from(cfg, seed);
  const std::int64_t restarts = cfg.get_int("restarts", 1);

  const ttmax::APResult run = ttmax::binary_search_epsilon(a, ap, restarts);

  if (args.format == "tnsr") {
    std::ostringstream os;
    ttmax::write_tnsr(os, ttmax::tt_to_dense(run.tt));
    write_output(args, os.str());
  } else {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "epsilon,iterations,converged,residual_max,rank,seed\n%.17g,%lld,%d,%.17g,%lld,%llu\n",
                  run.report.epsilon_achieved, static_cast<long long>(run.report.iterations_used),
                  run.report.converged ? 1 : 0, run.report.residual_max,
                  static_cast<long long>(run.report.rank),
                  static_cast<unsigned long long>(run.report.seed));
    write_output(args, buf);
  }
  return 0;
}

int run_sketch(const CommonArgs& args) {
  const ttmax::Config cfg = load_config(args);
  const std::uint64_t seed = resolve_seed(args, cfg);

  ttmax::SketchConfig sk;
  sk.target_rank = cfg.get_int("target_rank", 16);
  sk.seed = seed;
  const std::string dist = cfg.get_string("distribution", "gaussian");
  if (dist == "gaussian") {
    sk.distribution = ttmax::SketchDistribution::gaussian;
  } else if (dist == "rademacher") {
    sk.distribution = ttmax::SketchDistribution::rademacher;
  } else {
    throw ttmax::ConfigError("unknown distribution '" + dist + "'");
  }

  const std::string source = cfg.get_string("tt", "decompose");
  ttmax::TTTensor tt = [&] {
    if (source == "random") {
      const ttmax::DenseTensor probe = build_tensor(cfg, seed);  // shape holder
      return ttmax::random_tt_init(probe.shape(), cfg.get_int("rank", 2), seed);
    }
    if (source == "decompose") {
      return ttmax::tt_svd(build_tensor(cfg, seed), 0, 1e-10);
    }
    throw ttmax::ConfigError("unknown tt source '" + source + "' (expected decompose or random)");
  }();

  const std::int64_t trials = cfg.get_int("trials", 50);
  const ttmax::SketchReport report = ttmax::sketch_error_report(tt, sk, trials);
  write_output(args, ttmax::sketch_report_csv(report));
  if (!args.out_path.empty()) {
    std::printf("trials=%lld median_error=%.6g gamma_bound=%.6g median_implied_epsilon=%.6g\n",
                static_cast<long long>(trials), report.median_error, report.gamma_bound,
                report.median_implied_epsilon);
  }
  return 0;
}

int run_coherence(const CommonArgs& args) {
  const ttmax::Config cfg = load_config(args);
  const std::uint64_t seed = resolve_seed(args, cfg);
  const ttmax::DenseTensor a = build_tensor(cfg, seed);
  const double epsilon = cfg.get_double("epsilon", 0.1);
  const double c_d = cfg.get_double("c_d", 9.0);

  const ttmax::CoherenceProfile profile = ttmax::tt_core_coherences(a);
  const ttmax::CoherenceErrorBound bound = ttmax::coherence_error_bound(a, epsilon, c_d);

  std::string out = "quantity,index,value\n";
  char buf[128];
  for (std::size_t s = 0; s < profile.ranks.size(); ++s) {
    std::snprintf(buf, sizeof(buf), "rank,%zu,%lld\n", s + 1,
                  static_cast<long long>(profile.ranks[s]));
    out += buf;
  }
  for (std::size_t s = 0; s < profile.left.size(); ++s) {
    std::snprintf(buf, sizeof(buf), "left_coherence,%zu,%.17g\n", s + 1, profile.left[s]);
    out += buf;
  }
  for (std::size_t s = 0; s < profile.right.size(); ++s) {
    std::snprintf(buf, sizeof(buf), "right_coherence,%zu,%.17g\n", s + 2, profile.right[s]);
    out += buf;
  }
  for (std::size_t s = 0; s < profile.unfolding_spectral.size(); ++s) {
    std::snprintf(buf, sizeof(buf), "unfolding_spectral,%zu,%.17g\n", s + 1,
                  profile.unfolding_spectral[s]);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "rank_budget,0,%lld\n", static_cast<long long>(bound.rank));
  out += buf;
  std::snprintf(buf, sizeof(buf), "error_bound,0,%.17g\n", bound.bound);
  out += buf;
  std::snprintf(buf, sizeof(buf), "best_split,0,%lld\n", static_cast<long long>(bound.best_t));
  out += buf;
  write_output(args, out);
  return 0;
}

int run_bounds(const CommonArgs& args) {
  const ttmax::Config cfg = load_config(args);
  const double epsilon = cfg.get_double("epsilon", 0.1);
  std::string out = "quantity,value\n";
  char buf[96];
  bool any = false;
  if (cfg.has("n1") || cfg.has("n2")) {
    const std::int64_t n1 = cfg.get_int("n1");
    const std::int64_t n2 = cfg.get_int("n2", n1);
    std::snprintf(buf, sizeof(buf), "matrix_rank_bound,%lld\n",
                  static_cast<long long>(ttmax::rank_bound_matrix(n1, n2, epsilon)));
    out += buf;
    any = true;
  }
  if (cfg.has("dims")) {
    const double c_d = cfg.get_double("c_d", 9.0);
    std::snprintf(buf, sizeof(buf), "tt_rank_bound,%lld\n",
                  static_cast<long long>(
                      ttmax::rank_bound_tt(cfg.get_int_list("dims"), epsilon, c_d)));
    out += buf;
    any = true;
  }
  if (!any) {
    throw ttmax::ConfigError("bounds: provide n1/n2 for the matrix bound or dims for the train bound");
  }
  write_output(args, out);
  return 0;
}

int run_experiment(const CommonArgs& args) {
  const ttmax::Config cfg = load_config(args);
  ttmax::ExperimentGrid grid;
  grid.kinds.clear();
  for (const std::string& k : cfg.get_string_list("kinds", {"identity"})) {
    grid.kinds.push_back(ttmax::tensor_kind_from_string(k));
  }
  grid.orders = cfg.get_int_list("orders", {2});
  grid.sizes = cfg.get_int_list("sizes", {16});
  grid.ranks = cfg.get_int_list("ranks", {4});
  grid.repetitions = cfg.get_int("repetitions", 5);
  grid.base_seed = resolve_seed(args, cfg);
  grid.restarts = cfg.get_int("restarts", 1);
  grid.record_timing = cfg.get_bool("timing", false);
  grid.allow_large = cfg.get_bool("allow_large", false);
  grid.ap.max_iter = cfg.get_int("max_iter", 500);
  grid.ap.conv_tol = cfg.get_double("conv_tol", 1e-8);
  grid.ap.slack = cfg.get_double("slack", 1e-6);

  const ttmax::ExperimentResult result = ttmax::run_grid(grid);
  write_output(args, result.csv);

  if (cfg.get_bool("fit", false)) {
    for (const ttmax::RateFit& fit : ttmax::fit_rates(result.rows)) {
      std::printf("fit kind=%s d=%lld alpha=%.4g beta=%.4g residual=%.4g points=%lld\n",
                  fit.kind.c_str(), static_cast<long long>(fit.d), fit.alpha, fit.beta,
                  fit.residual, static_cast<long long>(fit.points));
    }
  }
  if (cfg.has("plots_dir")) {
    for (const std::string& path : ttmax::emit_plots(result.rows, cfg.get_string("plots_dir"))) {
      std::printf("plot %s\n", path.c_str());
    }
  }
  return 0;
}

int run_verify(const CommonArgs& args) {
  const ttmax::Config cfg = load_config(args);
  const std::uint64_t seed = resolve_seed(args, cfg);
  const std::vector<ttmax::SuiteResult> results = ttmax::run_verification_suites(seed);
  std::string out;
  char buf[160];
  for (const auto& suite : results) {
    for (const auto& check : suite.checks) {
      std::snprintf(buf, sizeof(buf), "%-16s %-28s %s  worst=%.3g\n", suite.suite.c_str(),
                    check.name.c_str(), check.pass ? "PASS" : "FAIL", check.worst);
      out += buf;
    }
  }
  const bool ok = ttmax::all_passed(results);
  out += ok ? "all suites passed\n" : "suite failures detected\n";
  write_output(args, out);
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entrywise low-rank tensor-train approximation toolkit"};
  app.require_subcommand(1);

  CommonArgs approx_args, sketch_args, coherence_args, bounds_args, experiment_args, verify_args;
  CLI::App* approx = app.add_subcommand("approx", "bound the entrywise error of one instance");
  add_common(approx, &approx_args);
  CLI::App* sketch = app.add_subcommand("sketch", "randomized compression error study");
  add_common(sketch, &sketch_args);
  CLI::App* coherence = app.add_subcommand("coherence", "core coherence profile and error bound");
  add_common(coherence, &coherence_args);
  CLI::App* bounds = app.add_subcommand("bounds", "rank-bound calculators");
  add_common(bounds, &bounds_args);
  CLI::App* experiment = app.add_subcommand("experiment", "run a parameter grid");
  add_common(experiment, &experiment_args);
  CLI::App* verify = app.add_subcommand("verify", "run the built-in property suites");
  add_common(verify, &verify_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(approx)) return run_approx(approx_args);
    if (app.got_subcommand(sketch)) return run_sketch(sketch_args);
    if (app.got_subcommand(coherence)) return run_coherence(coherence_args);
    if (app.got_subcommand(bounds)) return run_bounds(bounds_args);
    if (app.got_subcommand(experiment)) return run_experiment(experiment_args);
    if (app.got_subcommand(verify)) return run_verify(verify_args);
  } catch (const ttmax::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 2;
}
