#include <algorithm>
#include <cmath>
#include <filesystem>
#include <vector>

#include "doctest.h"
#include "ttmax/config.hpp"
#include "ttmax/experiment.hpp"

using namespace ttmax;

TEST_CASE("tensor kinds roundtrip through their names") {
  CHECK(to_string(TensorKind::identity) == "identity");
  CHECK(to_string(TensorKind::uniform) == "uniform");
  CHECK(tensor_kind_from_string("identity") == TensorKind::identity);
  CHECK(tensor_kind_from_string("uniform") == TensorKind::uniform);
  CHECK_THROWS_AS(tensor_kind_from_string("sparse"), ConfigError);
}

TEST_CASE("cell seeds depend only on the cell labels") {
  const std::uint64_t s = cell_seed(5, 2, 16, 4, 1);
  CHECK(s == cell_seed(5, 2, 16, 4, 1));
  CHECK(s != cell_seed(5, 2, 16, 4, 2));
  CHECK(s != cell_seed(5, 2, 16, 8, 1));
  CHECK(s != cell_seed(6, 2, 16, 4, 1));
}

namespace {

ExperimentGrid small_grid() {
  ExperimentGrid grid;
  grid.kinds = {TensorKind::identity, TensorKind::uniform};
  grid.orders = {2};
  grid.sizes = {4};
  grid.ranks = {1, 2};
  grid.repetitions = 3;
  grid.base_seed = 11;
  grid.ap.max_iter = 60;
  return grid;
}

}  // namespace

TEST_CASE("grid runs emit one row per repetition plus an aggregate") {
  const ExperimentResult result = run_grid(small_grid());
  // 2 kinds x 1 order x 1 size x 2 ranks = 4 cells, (3 reps + 1 agg) rows each.
  REQUIRE(result.rows.size() == 16);

  for (const ExperimentRow& row : result.rows) {
    CHECK(row.elapsed_ms == 0.0);  // timing off by default
    CHECK(row.epsilon >= 0.0);
  }

  // Aggregates: min over repetitions for identity cells, median for uniform.
  for (std::size_t base = 0; base < result.rows.size(); base += 4) {
    std::vector<double> eps;
    for (std::size_t k = 0; k < 3; ++k) eps.push_back(result.rows[base + k].epsilon);
    const ExperimentRow& agg = result.rows[base + 3];
    CHECK(agg.rep == "agg");
    std::sort(eps.begin(), eps.end());
    const double want = agg.kind == "identity" ? eps[0] : eps[1];
    CHECK(agg.epsilon == want);
  }
}

TEST_CASE("grid runs are reproducible row for row") {
  const ExperimentResult a = run_grid(small_grid());
  const ExperimentResult b = run_grid(small_grid());
  CHECK(a.csv == b.csv);
}

TEST_CASE("csv serialization inverts on the emitted rows") {
  const ExperimentResult result = run_grid(small_grid());
  CHECK(result.csv.rfind("kind,d,n,r,rep,seed,epsilon,iterations,converged,elapsed_ms\n", 0) ==
        0);
  const std::vector<ExperimentRow> back = rows_from_csv(result.csv);
  REQUIRE(back.size() == result.rows.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].kind == result.rows[i].kind);
    CHECK(back[i].d == result.rows[i].d);
    CHECK(back[i].n == result.rows[i].n);
    CHECK(back[i].r == result.rows[i].r);
    CHECK(back[i].rep == result.rows[i].rep);
    CHECK(back[i].seed == result.rows[i].seed);
    CHECK(back[i].epsilon == result.rows[i].epsilon);  // 17 digits roundtrip
    CHECK(back[i].converged == result.rows[i].converged);
  }
  CHECK_THROWS_AS(rows_from_csv("bad header\n"), ConfigError);
  CHECK_THROWS_AS(rows_from_csv("kind,d,n,r,rep,seed,epsilon,iterations,converged,elapsed_ms\n"
                                "identity,2,4\n"),
                  ConfigError);
}

TEST_CASE("grid validation rejects unusable settings") {
  ExperimentGrid grid = small_grid();
  grid.ranks = {};
  CHECK_THROWS_AS(run_grid(grid), ConfigError);

  grid = small_grid();
  grid.repetitions = 0;
  CHECK_THROWS_AS(run_grid(grid), ConfigError);

  grid = small_grid();
  grid.orders = {9};
  CHECK_THROWS_AS(run_grid(grid), ConfigError);

  // Dense-size guard on higher orders, liftable explicitly.
  grid = small_grid();
  grid.orders = {3};
  grid.sizes = {128};
  CHECK_THROWS_AS(run_grid(grid), ConfigError);
}

TEST_CASE("rate fits recover planted decay exponents") {
  // epsilon = c * (n - r)^alpha * r^{-beta} exactly, alpha = 0.7, beta = 1.3.
  std::vector<ExperimentRow> rows;
  const double c = 0.8, alpha = 0.7, beta = 1.3;
  for (std::int64_t n : {16, 32, 64}) {
    for (std::int64_t r : {2, 4, 8}) {
      ExperimentRow row;
      row.kind = "identity";
      row.d = 2;
      row.n = n;
      row.r = r;
      row.rep = "agg";
      row.epsilon = c * std::pow(static_cast<double>(n - r), alpha) *
                    std::pow(static_cast<double>(r), -beta);
      rows.push_back(row);
    }
  }
  const std::vector<RateFit> fits = fit_rates(rows);
  REQUIRE(fits.size() == 1);
  CHECK(fits[0].kind == "identity");
  CHECK(fits[0].d == 2);
  CHECK(fits[0].points == 9);
  CHECK(fits[0].alpha == doctest::Approx(alpha).epsilon(1e-9));
  CHECK(fits[0].beta == doctest::Approx(beta).epsilon(1e-9));
  CHECK(fits[0].log_c == doctest::Approx(std::log(c)).epsilon(1e-9));
  CHECK(fits[0].residual <= 1e-10);

  CHECK_THROWS_AS(fit_rates({}), std::invalid_argument);
}

TEST_CASE("plot emission writes one image per tensor family") {
  const ExperimentResult result = run_grid(small_grid());
  const std::string dir = "plot_check_out";
  const std::vector<std::string> paths = emit_plots(result.rows, dir);
  CHECK(paths.size() == 2);  // identity d=2, uniform d=2
  for (const std::string& p : paths) {
    CHECK(std::filesystem::exists(p));
    CHECK(std::filesystem::file_size(p) > 0);
  }
  std::filesystem::remove_all(dir);
}
