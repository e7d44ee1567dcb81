#include "ttmax/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "ttmax/config.hpp"
#include "ttmax/generators.hpp"
#include "ttmax/rng.hpp"

namespace ttmax {

std::string to_string(TensorKind kind) {
  return kind == TensorKind::identity ? "identity" : "uniform";
}

TensorKind tensor_kind_from_string(const std::string& name) {
  if (name == "identity") return TensorKind::identity;
  if (name == "uniform") return TensorKind::uniform;
  throw ConfigError("unknown tensor kind '" + name + "' (expected identity or uniform)");
}

std::uint64_t cell_seed(std::uint64_t base, std::int64_t d, std::int64_t n, std::int64_t r,
                        std::int64_t rep) {
  return mix_seed({base, 0x65787074u, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(n),
                   static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(rep)});
}

namespace {

struct Cell {
  TensorKind kind;
  std::int64_t d, n, r;
};

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

void validate_grid(const ExperimentGrid& grid) {
  if (grid.kinds.empty() || grid.orders.empty() || grid.sizes.empty() || grid.ranks.empty()) {
    throw ConfigError("experiment grid: kinds, orders, sizes, and ranks must be non-empty");
  }
  if (grid.repetitions < 1) throw ConfigError("experiment grid: repetitions must be >= 1");
  if (grid.restarts < 1) throw ConfigError("experiment grid: restarts must be >= 1");
  for (std::int64_t d : grid.orders) {
    if (d < 2 || d > 8) throw ConfigError("experiment grid: orders must lie in [2, 8]");
    for (std::int64_t n : grid.sizes) {
      if (n < 1) throw ConfigError("experiment grid: sizes must be >= 1");
      if (d >= 3 && n > 100 && !grid.allow_large) {
        throw ConfigError("experiment grid: order-3 cells are capped at size 100 "
                          "(set allow_large to lift)");
      }
    }
  }
  for (std::int64_t r : grid.ranks) {
    if (r < 1) throw ConfigError("experiment grid: ranks must be >= 1");
  }
}

}  // namespace

ExperimentResult run_grid(const ExperimentGrid& grid) {
  validate_grid(grid);

  std::vector<Cell> cells;
  for (TensorKind kind : grid.kinds) {
    for (std::int64_t d : grid.orders) {
      for (std::int64_t n : grid.sizes) {
        for (std::int64_t r : grid.ranks) {
          cells.push_back(Cell{kind, d, n, r});
        }
      }
    }
  }

  const std::int64_t per_cell = grid.repetitions + 1;  // repetitions plus one aggregate
  ExperimentResult result;
  result.rows.resize(cells.size() * static_cast<std::size_t>(per_cell));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(cells.size()); ++c) {
    const Cell& cell = cells[static_cast<std::size_t>(c)];
    const Shape shape(std::vector<std::int64_t>(static_cast<std::size_t>(cell.d), cell.n));
    std::vector<double> eps;
    double elapsed_total = 0.0;
    bool all_converged = true;

    for (std::int64_t rep = 1; rep <= grid.repetitions; ++rep) {
      const std::uint64_t seed = cell_seed(grid.base_seed, cell.d, cell.n, cell.r, rep);
      const DenseTensor a = cell.kind == TensorKind::identity
                                ? identity_tensor(cell.n, cell.d)
                                : uniform_tensor(shape, seed);
      APConfig cfg = grid.ap;
      cfg.rank = cell.r;
      cfg.seed = seed;

      const auto start = std::chrono::steady_clock::now();
      const APResult run = binary_search_epsilon(a, cfg, grid.restarts);
      double elapsed = 0.0;
      if (grid.record_timing) {
        elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
      }

      ExperimentRow& row =
          result.rows[static_cast<std::size_t>(c * per_cell + rep - 1)];
      row.kind = to_string(cell.kind);
      row.d = cell.d;
      row.n = cell.n;
      row.r = cell.r;
      row.rep = std::to_string(rep);
      row.seed = seed;
      row.epsilon = run.report.epsilon_achieved;
      row.iterations = run.report.iterations_used;
      row.converged = run.report.converged;
      row.elapsed_ms = elapsed;

      eps.push_back(row.epsilon);
      elapsed_total += elapsed;
      all_converged = all_converged && row.converged;
    }

    ExperimentRow& agg = result.rows[static_cast<std::size_t>((c + 1) * per_cell - 1)];
    agg.kind = to_string(cell.kind);
    agg.d = cell.d;
    agg.n = cell.n;
    agg.r = cell.r;
    agg.rep = "agg";
    agg.seed = cell_seed(grid.base_seed, cell.d, cell.n, cell.r, 0);
    agg.epsilon = cell.kind == TensorKind::identity ? *std::min_element(eps.begin(), eps.end())
                                                    : median_of(eps);
    agg.iterations = 0;
    agg.converged = all_converged;
    agg.elapsed_ms = grid.record_timing ? elapsed_total : 0.0;
  }

  result.csv = rows_to_csv(result.rows);
  return result;
}

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = "kind,d,n,r,rep,seed,epsilon,iterations,converged,elapsed_ms\n";
  char buf[256];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%lld,%lld,%lld,%s,%llu,%.17g,%lld,%d,%.17g\n",
                  row.kind.c_str(), static_cast<long long>(row.d), static_cast<long long>(row.n),
                  static_cast<long long>(row.r), row.rep.c_str(),
                  static_cast<unsigned long long>(row.seed), row.epsilon,
                  static_cast<long long>(row.iterations), row.converged ? 1 : 0, row.elapsed_ms);
    out += buf;
  }
  return out;
}

std::vector<ExperimentRow> rows_from_csv(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  if (!std::getline(is, line) || line != "kind,d,n,r,rep,seed,epsilon,iterations,converged,elapsed_ms") {
    throw ConfigError("experiment csv: unexpected header");
  }
  std::vector<ExperimentRow> rows;
  std::int64_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 10) {
      throw ConfigError("experiment csv line " + std::to_string(lineno) + ": expected 10 fields");
    }
    ExperimentRow row;
    try {
      row.kind = fields[0];
      row.d = std::stoll(fields[1]);
      row.n = std::stoll(fields[2]);
      row.r = std::stoll(fields[3]);
      row.rep = fields[4];
      row.seed = std::stoull(fields[5]);
      row.epsilon = std::stod(fields[6]);
      row.iterations = std::stoll(fields[7]);
      row.converged = std::stoll(fields[8]) != 0;
      row.elapsed_ms = std::stod(fields[9]);
    } catch (const std::exception&) {
      throw ConfigError("experiment csv line " + std::to_string(lineno) + ": malformed field");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RateFit> fit_rates(const std::vector<ExperimentRow>& rows) {
  std::map<std::pair<std::string, std::int64_t>, std::vector<const ExperimentRow*>> groups;
  for (const auto& row : rows) {
    if (row.rep != "agg" || row.n <= row.r || !(row.epsilon > 0.0)) continue;
    groups[{row.kind, row.d}].push_back(&row);
  }

  std::vector<RateFit> fits;
  for (const auto& [key, pts] : groups) {
    if (pts.size() < 4) continue;
    const auto count = static_cast<std::int64_t>(pts.size());
    Eigen::MatrixXd x(count, 3);
    Eigen::VectorXd y(count);
    for (std::int64_t i = 0; i < count; ++i) {
      const ExperimentRow& row = *pts[static_cast<std::size_t>(i)];
      x(i, 0) = 1.0;
      x(i, 1) = std::log(static_cast<double>(row.n - row.r));
      x(i, 2) = -std::log(static_cast<double>(row.r));
      y(i) = std::log(row.epsilon);
    }
    const Eigen::VectorXd sol = x.colPivHouseholderQr().solve(y);
    RateFit fit;
    fit.kind = key.first;
    fit.d = key.second;
    fit.log_c = sol(0);
    fit.alpha = sol(1);
    fit.beta = sol(2);
    fit.residual = std::sqrt((x * sol - y).squaredNorm() / static_cast<double>(count));
    fit.points = count;
    fits.push_back(fit);
  }
  if (fits.empty()) {
    throw std::invalid_argument("fit_rates: need at least four aggregated points in some (kind, d) group");
  }
  return fits;
}

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string svg_for_group(const std::vector<const ExperimentRow*>& pts) {
  constexpr double kW = 640, kH = 480;
  constexpr double kL = 70, kR = 610, kT = 40, kB = 420;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << kL << "\" y1=\"" << kB << "\" x2=\"" << kR << "\" y2=\"" << kB
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL << "\" y2=\"" << kB
      << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << 0.5 * (kL + kR) << "\" y=\"" << kB + 36
      << "\" text-anchor=\"middle\" font-size=\"13\">rank (log scale)</text>\n"
      << "<text x=\"18\" y=\"" << 0.5 * (kT + kB)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
      << 0.5 * (kT + kB) << ")\">max-norm error (log scale)</text>\n";

  if (!pts.empty()) {
    double lx_min = 1e300, lx_max = -1e300, ly_min = 1e300, ly_max = -1e300;
    for (const ExperimentRow* row : pts) {
      const double lx = std::log10(static_cast<double>(row->r));
      const double ly = std::log10(std::max(row->epsilon, 1e-16));
      lx_min = std::min(lx_min, lx);
      lx_max = std::max(lx_max, lx);
      ly_min = std::min(ly_min, ly);
      ly_max = std::max(ly_max, ly);
    }
    if (lx_max - lx_min < 1e-9) { lx_min -= 0.5; lx_max += 0.5; }
    if (ly_max - ly_min < 1e-9) { ly_min -= 0.5; ly_max += 0.5; }
    const auto sx = [&](double lx) { return kL + (lx - lx_min) / (lx_max - lx_min) * (kR - kL); };
    const auto sy = [&](double ly) { return kB - (ly - ly_min) / (ly_max - ly_min) * (kB - kT); };

    std::map<std::int64_t, std::vector<const ExperimentRow*>> series;
    for (const ExperimentRow* row : pts) series[row->n].push_back(row);

    std::size_t color = 0;
    double legend_y = kT + 10;
    for (auto& [n, rows] : series) {
      std::sort(rows.begin(), rows.end(),
                [](const ExperimentRow* a, const ExperimentRow* b) { return a->r < b->r; });
      const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
      svg << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
      for (const ExperimentRow* row : rows) {
        svg << sx(std::log10(static_cast<double>(row->r))) << ','
            << sy(std::log10(std::max(row->epsilon, 1e-16))) << ' ';
      }
      svg << "\"/>\n";
      svg << "<text x=\"" << kR - 90 << "\" y=\"" << legend_y << "\" font-size=\"12\" fill=\""
          << stroke << "\">n=" << n << "</text>\n";
      legend_y += 16;
      ++color;
    }

    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", std::pow(10.0, lx_min));
    svg << "<text x=\"" << kL << "\" y=\"" << kB + 18 << "\" font-size=\"11\">" << buf
        << "</text>\n";
    std::snprintf(buf, sizeof(buf), "%.3g", std::pow(10.0, lx_max));
    svg << "<text x=\"" << kR - 20 << "\" y=\"" << kB + 18 << "\" font-size=\"11\">" << buf
        << "</text>\n";
    std::snprintf(buf, sizeof(buf), "%.3g", std::pow(10.0, ly_min));
    svg << "<text x=\"" << kL - 64 << "\" y=\"" << kB << "\" font-size=\"11\">" << buf
        << "</text>\n";
    std::snprintf(buf, sizeof(buf), "%.3g", std::pow(10.0, ly_max));
    svg << "<text x=\"" << kL - 64 << "\" y=\"" << kT + 4 << "\" font-size=\"11\">" << buf
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::vector<std::string> emit_plots(const std::vector<ExperimentRow>& rows,
                                    const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);

  std::map<std::pair<std::string, std::int64_t>, std::vector<const ExperimentRow*>> groups;
  for (const auto& row : rows) {
    if (row.rep == "agg") groups[{row.kind, row.d}].push_back(&row);
  }

  std::vector<std::string> written;
  const auto write_svg = [&](const std::string& name, const std::string& body) {
    const std::string path = (std::filesystem::path(out_dir) / name).string();
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << body;
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path);
    written.push_back(path);
  };

  if (groups.empty()) {
    write_svg("empty.svg", svg_for_group({}));
    return written;
  }
  for (const auto& [key, pts] : groups) {
    write_svg(key.first + "_d" + std::to_string(key.second) + ".svg", svg_for_group(pts));
  }
  return written;
}

}  // namespace ttmax
