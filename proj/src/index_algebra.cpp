#include "ttmax/index_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ttmax/rng.hpp"

namespace ttmax {

DimSubset::DimSubset(std::int64_t ambient_in, std::vector<std::int64_t> members_in)
    : ambient(ambient_in), members(std::move(members_in)) {
  if (ambient < 0) throw std::invalid_argument("DimSubset: ambient must be >= 0");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw std::invalid_argument("DimSubset: duplicate member");
  }
  if (!members.empty() && (members.front() < 0 || members.back() >= ambient)) {
    throw std::invalid_argument("DimSubset: member outside [0, ambient)");
  }
}

bool DimSubset::contains(std::int64_t w) const {
  return std::binary_search(members.begin(), members.end(), w);
}

bool DimSubset::subset_of(const DimSubset& other) const {
  if (ambient != other.ambient) return false;
  return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
}

DimSubset DimSubset::full(std::int64_t ambient) {
  std::vector<std::int64_t> m(static_cast<std::size_t>(ambient));
  for (std::int64_t w = 0; w < ambient; ++w) m[static_cast<std::size_t>(w)] = w;
  return DimSubset(ambient, std::move(m));
}

DimSubset DimSubset::complement() const {
  std::vector<std::int64_t> rest;
  rest.reserve(static_cast<std::size_t>(ambient - size()));
  for (std::int64_t w = 0; w < ambient; ++w) {
    if (!contains(w)) rest.push_back(w);
  }
  return DimSubset(ambient, std::move(rest));
}

DimSubset union_disjoint(const DimSubset& a, const DimSubset& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("union_disjoint: ambient mismatch");
  std::vector<std::int64_t> m = a.members;
  for (std::int64_t w : b.members) {
    if (a.contains(w)) throw std::invalid_argument("union_disjoint: subsets overlap");
    m.push_back(w);
  }
  return DimSubset(a.ambient, std::move(m));
}

DimSubset set_minus(const DimSubset& a, const DimSubset& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("set_minus: ambient mismatch");
  std::vector<std::int64_t> m;
  for (std::int64_t w : a.members) {
    if (!b.contains(w)) m.push_back(w);
  }
  return DimSubset(a.ambient, std::move(m));
}

DimSubset oplus(const DimSubset& a, const DimSubset& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("oplus: ambient mismatch");
  std::vector<std::int64_t> m = a.members;
  for (std::int64_t w : b.members) m.push_back(w + a.ambient);
  return DimSubset(2 * a.ambient, std::move(m));
}

DimSubset doubled(const DimSubset& omega) { return oplus(omega, omega); }

DimSubset base_of_doubled(const DimSubset& dom) {
  if (dom.ambient % 2 != 0) throw std::invalid_argument("base_of_doubled: ambient is odd");
  const std::int64_t n = dom.ambient / 2;
  std::vector<std::int64_t> base;
  for (std::int64_t w : dom.members) {
    if (w < n) base.push_back(w);
  }
  DimSubset omega(n, std::move(base));
  if (doubled(omega) != dom) throw std::invalid_argument("base_of_doubled: domain is not of the form O (+) O");
  return omega;
}

std::vector<std::int64_t> doubled_extents(const std::vector<std::int64_t>& m) {
  std::vector<std::int64_t> out = m;
  out.insert(out.end(), m.begin(), m.end());
  return out;
}

PartialIndex::PartialIndex(DimSubset domain_in, std::vector<std::int64_t> values_in)
    : domain(std::move(domain_in)), values(std::move(values_in)) {
  if (values.size() != domain.members.size()) {
    throw std::invalid_argument("PartialIndex: one value per domain member required");
  }
}

std::int64_t PartialIndex::value(std::int64_t w) const {
  const auto it = std::lower_bound(domain.members.begin(), domain.members.end(), w);
  if (it == domain.members.end() || *it != w) {
    throw std::invalid_argument("PartialIndex::value: dimension not in domain");
  }
  return values[static_cast<std::size_t>(it - domain.members.begin())];
}

PartialIndex restrict_index(const PartialIndex& i, const DimSubset& to) {
  if (!to.subset_of(i.domain)) throw std::invalid_argument("restrict_index: target is not a subset");
  std::vector<std::int64_t> vals;
  vals.reserve(to.members.size());
  for (std::int64_t w : to.members) vals.push_back(i.value(w));
  return PartialIndex(to, std::move(vals));
}

PartialIndex join(const PartialIndex& i, const PartialIndex& j) {
  DimSubset dom = union_disjoint(i.domain, j.domain);
  std::vector<std::int64_t> vals;
  vals.reserve(dom.members.size());
  for (std::int64_t w : dom.members) {
    vals.push_back(i.domain.contains(w) ? i.value(w) : j.value(w));
  }
  return PartialIndex(std::move(dom), std::move(vals));
}

PartialIndex concat(const PartialIndex& i, const PartialIndex& j) {
  DimSubset dom = oplus(i.domain, j.domain);
  std::vector<std::int64_t> vals = i.values;
  vals.insert(vals.end(), j.values.begin(), j.values.end());
  return PartialIndex(std::move(dom), std::move(vals));
}

PartialIndex kron_index(const PartialIndex& alpha, const PartialIndex& i,
                        const std::vector<std::int64_t>& k) {
  if (alpha.domain != i.domain) throw std::invalid_argument("kron_index: domains disagree");
  if (static_cast<std::int64_t>(k.size()) != i.domain.ambient) {
    throw std::invalid_argument("kron_index: one extent per ambient dimension required");
  }
  std::vector<std::int64_t> vals(i.values.size());
  for (std::size_t t = 0; t < vals.size(); ++t) {
    const std::int64_t w = i.domain.members[t];
    vals[t] = i.values[t] + alpha.values[t] * k[static_cast<std::size_t>(w)];
  }
  return PartialIndex(i.domain, std::move(vals));
}

std::vector<PartialIndex> all_indices(const DimSubset& domain, const std::vector<std::int64_t>& extents) {
  if (static_cast<std::int64_t>(extents.size()) != domain.ambient) {
    throw std::invalid_argument("all_indices: one extent per ambient dimension required");
  }
  std::int64_t count = 1;
  for (std::int64_t w : domain.members) count *= extents[static_cast<std::size_t>(w)];
  std::vector<PartialIndex> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::int64_t> vals(domain.members.size(), 0);
  for (std::int64_t c = 0; c < count; ++c) {
    out.emplace_back(domain, vals);
    // Odometer with the largest dimension fastest, matching PartialArray.
    for (auto t = static_cast<std::int64_t>(vals.size()) - 1; t >= 0; --t) {
      const std::int64_t w = domain.members[static_cast<std::size_t>(t)];
      if (++vals[static_cast<std::size_t>(t)] < extents[static_cast<std::size_t>(w)]) break;
      vals[static_cast<std::size_t>(t)] = 0;
    }
  }
  return out;
}

std::vector<DimSubset> all_subsets(std::int64_t ambient) {
  std::vector<DimSubset> out;
  out.reserve(static_cast<std::size_t>(1) << ambient);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ambient); ++mask) {
    std::vector<std::int64_t> m;
    for (std::int64_t w = 0; w < ambient; ++w) {
      if (mask & (std::uint64_t{1} << w)) m.push_back(w);
    }
    out.emplace_back(ambient, std::move(m));
  }
  return out;
}

PartialArray::PartialArray(DimSubset domain, std::vector<std::int64_t> extents)
    : domain_(std::move(domain)), extents_(std::move(extents)) {
  if (static_cast<std::int64_t>(extents_.size()) != domain_.ambient) {
    throw std::invalid_argument("PartialArray: one extent per ambient dimension required");
  }
  std::int64_t count = 1;
  for (std::int64_t w : domain_.members) {
    const std::int64_t m = extents_[static_cast<std::size_t>(w)];
    if (m < 1) throw std::invalid_argument("PartialArray: extents must be >= 1");
    count *= m;
  }
  values_.assign(static_cast<std::size_t>(count), 0.0);
}

std::int64_t PartialArray::offset(const PartialIndex& i) const {
  if (i.domain != domain_) throw std::invalid_argument("PartialArray::offset: domain mismatch");
  std::int64_t off = 0;
  for (std::size_t t = 0; t < i.values.size(); ++t) {
    const std::int64_t w = domain_.members[t];
    const std::int64_t m = extents_[static_cast<std::size_t>(w)];
    if (i.values[t] < 0 || i.values[t] >= m) throw std::out_of_range("PartialArray::offset: value out of range");
    off = off * m + i.values[t];
  }
  return off;
}

PartialIndex PartialArray::index_at(std::int64_t off) const {
  if (off < 0 || off >= size()) throw std::out_of_range("PartialArray::index_at: offset out of range");
  std::vector<std::int64_t> vals(domain_.members.size());
  for (auto t = static_cast<std::int64_t>(vals.size()) - 1; t >= 0; --t) {
    const std::int64_t m = extents_[static_cast<std::size_t>(domain_.members[static_cast<std::size_t>(t)])];
    vals[static_cast<std::size_t>(t)] = off % m;
    off /= m;
  }
  return PartialIndex(domain_, std::move(vals));
}

double PartialArray::frobenius_norm() const {
  double acc = 0.0;
  for (double v : values_) acc += v * v;
  return std::sqrt(acc);
}

PartialArray partial_trace(const PartialArray& c, const DimSubset& traced) {
  const DimSubset omega = base_of_doubled(c.domain());
  if (!traced.subset_of(omega)) throw std::invalid_argument("partial_trace: traced set must lie in the base domain");
  const std::vector<std::int64_t> m(c.extents().begin(), c.extents().begin() + omega.ambient);
  const DimSubset rest = set_minus(omega, traced);

  PartialArray out(doubled(rest), c.extents());
  const auto rest_indices = all_indices(rest, m);
  const auto traced_indices = all_indices(traced, m);
  for (const auto& i : rest_indices) {
    for (const auto& j : rest_indices) {
      double acc = 0.0;
      for (const auto& l : traced_indices) {
        acc += c.at(concat(join(i, l), join(j, l)));
      }
      out.at(concat(i, j)) = acc;
    }
  }
  return out;
}

PartialArray partial_frobenius(const PartialArray& d, const DimSubset& sub) {
  if (!sub.subset_of(d.domain())) throw std::invalid_argument("partial_frobenius: sub must lie in the domain");
  const DimSubset rest = set_minus(d.domain(), sub);
  PartialArray out(rest, d.extents());
  const auto rest_indices = all_indices(rest, d.extents());
  const auto sub_indices = all_indices(sub, d.extents());
  for (const auto& i : rest_indices) {
    double acc = 0.0;
    for (const auto& j : sub_indices) {
      const double v = d.at(join(i, j));
      acc += v * v;
    }
    out.at(i) = std::sqrt(acc);
  }
  return out;
}

Partition::Partition(DimSubset ground_in, std::vector<std::vector<std::int64_t>> cells_in)
    : ground(std::move(ground_in)), cells(std::move(cells_in)) {
  std::vector<std::int64_t> seen;
  for (auto& cell : cells) {
    if (cell.empty()) throw std::invalid_argument("Partition: empty cell");
    std::sort(cell.begin(), cell.end());
    seen.insert(seen.end(), cell.begin(), cell.end());
  }
  std::sort(cells.begin(), cells.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("Partition: cells overlap");
  }
  if (seen != ground.members) throw std::invalid_argument("Partition: cells do not cover the ground set");
}

DimSubset Partition::cell_subset(std::int64_t t) const {
  return DimSubset(ground.ambient, cells.at(static_cast<std::size_t>(t)));
}

std::vector<Partition> enumerate_partitions(const DimSubset& ground) {
  std::vector<Partition> out;
  std::vector<std::vector<std::int64_t>> cells;
  const auto& elems = ground.members;

  auto place = [&](auto&& self, std::size_t pos) -> void {
    if (pos == elems.size()) {
      out.emplace_back(ground, cells);
      return;
    }
    // Index-based: deeper levels push/pop on `cells`, which may reallocate.
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      cells[ci].push_back(elems[pos]);
      self(self, pos + 1);
      cells[ci].pop_back();
    }
    cells.push_back({elems[pos]});
    self(self, pos + 1);
    cells.pop_back();
  };
  if (elems.empty()) return out;
  place(place, 0);
  return out;
}

double partition_norm(const PartialArray& c, const Partition& pi, int restarts, std::uint64_t seed) {
  if (pi.ground != c.domain()) throw std::invalid_argument("partition_norm: partition ground must equal the array domain");
  const auto kappa = pi.cell_count();
  if (kappa == 1) return c.frobenius_norm();

  // Per-entry offsets into every cell factor, so the alternating sweeps are
  // plain table walks.
  std::vector<PartialArray> z;
  std::vector<std::vector<std::int64_t>> cell_off(static_cast<std::size_t>(kappa));
  for (std::int64_t t = 0; t < kappa; ++t) {
    z.emplace_back(pi.cell_subset(t), c.extents());
    cell_off[static_cast<std::size_t>(t)].resize(static_cast<std::size_t>(c.size()));
  }
  for (std::int64_t off = 0; off < c.size(); ++off) {
    const PartialIndex idx = c.index_at(off);
    for (std::int64_t t = 0; t < kappa; ++t) {
      cell_off[static_cast<std::size_t>(t)][static_cast<std::size_t>(off)] =
          z[static_cast<std::size_t>(t)].offset(restrict_index(idx, pi.cell_subset(t)));
    }
  }

  double best = 0.0;
  for (int restart = 0; restart < restarts; ++restart) {
    Rng rng(mix_seed({seed, static_cast<std::uint64_t>(restart)}));
    for (auto& zt : z) {
      double norm2 = 0.0;
      for (std::int64_t o = 0; o < zt.size(); ++o) {
        zt[o] = rng.normal();
        norm2 += zt[o] * zt[o];
      }
      const double norm = std::sqrt(norm2);
      for (std::int64_t o = 0; o < zt.size(); ++o) zt[o] /= norm;
    }

    double value = 0.0;
    double prev = -1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
      for (std::int64_t t = 0; t < kappa; ++t) {
        auto& zt = z[static_cast<std::size_t>(t)];
        std::vector<double> b(static_cast<std::size_t>(zt.size()), 0.0);
        for (std::int64_t off = 0; off < c.size(); ++off) {
          double prod = c[off];
          for (std::int64_t s = 0; s < kappa; ++s) {
            if (s == t) continue;
            prod *= z[static_cast<std::size_t>(s)][cell_off[static_cast<std::size_t>(s)][static_cast<std::size_t>(off)]];
          }
          b[static_cast<std::size_t>(cell_off[static_cast<std::size_t>(t)][static_cast<std::size_t>(off)])] += prod;
        }
        double norm2 = 0.0;
        for (double v : b) norm2 += v * v;
        value = std::sqrt(norm2);
        if (value < 1e-300) break;  // pairing vanished; restart cannot improve
        for (std::int64_t o = 0; o < zt.size(); ++o) zt[o] = b[static_cast<std::size_t>(o)] / value;
      }
      if (value < 1e-300) break;
      if (std::abs(value - prev) <= 1e-12 * std::max(1.0, value)) break;
      prev = value;
    }
    best = std::max(best, value);
  }
  return best;
}

ThetaWeights theta_weights(const Partition& pi) {
  ThetaWeights out;
  out.omega = base_of_doubled(pi.ground);
  const std::int64_t n = out.omega.ambient;
  for (std::int64_t w : out.omega.members) {
    double theta = 0.0;
    for (const auto& cell : pi.cells) {
      const bool has_w = std::binary_search(cell.begin(), cell.end(), w);
      if (has_w) {
        if (std::binary_search(cell.begin(), cell.end(), w + n)) theta = 0.5;
        break;
      }
    }
    out.theta.push_back(theta);
    out.total += theta;
  }
  return out;
}

DimSubset cell_overlap(const Partition& pi, std::int64_t t) {
  const DimSubset omega = base_of_doubled(pi.ground);
  const std::int64_t n = omega.ambient;
  std::vector<std::int64_t> m;
  for (std::int64_t w : pi.cells.at(static_cast<std::size_t>(t))) {
    m.push_back(w < n ? w : w - n);
  }
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return DimSubset(n, std::move(m));
}

CauchySchwarzSides cauchy_schwarz_check(const Partition& pi,
                                        const std::vector<PartialArray>& cell_arrays,
                                        const std::vector<std::int64_t>& m) {
  const ThetaWeights tw = theta_weights(pi);
  if (static_cast<std::int64_t>(m.size()) != tw.omega.ambient) {
    throw std::invalid_argument("cauchy_schwarz_check: one extent per base dimension required");
  }
  if (static_cast<std::int64_t>(cell_arrays.size()) != pi.cell_count()) {
    throw std::invalid_argument("cauchy_schwarz_check: one array per cell required");
  }
  for (std::int64_t t = 0; t < pi.cell_count(); ++t) {
    if (cell_arrays[static_cast<std::size_t>(t)].domain() != cell_overlap(pi, t)) {
      throw std::invalid_argument("cauchy_schwarz_check: array domain must be the cell overlap set");
    }
  }

  CauchySchwarzSides sides;
  for (const auto& i : all_indices(tw.omega, m)) {
    double prod = 1.0;
    for (std::int64_t t = 0; t < pi.cell_count(); ++t) {
      prod *= cell_arrays[static_cast<std::size_t>(t)].at(restrict_index(i, cell_overlap(pi, t)));
    }
    sides.lhs += prod;
  }
  sides.rhs = 1.0;
  for (std::size_t t = 0; t < tw.omega.members.size(); ++t) {
    sides.rhs *= std::pow(static_cast<double>(m[static_cast<std::size_t>(tw.omega.members[t])]), tw.theta[t]);
  }
  for (const auto& arr : cell_arrays) sides.rhs *= arr.frobenius_norm();
  return sides;
}

PartialArray build_phi(const DimSubset& omega, const std::vector<std::int64_t>& k,
                       const std::vector<Eigen::MatrixXd>& w) {
  const auto q = omega.size();
  if (q == 0) throw std::invalid_argument("build_phi: omega must be non-empty");
  if (static_cast<std::int64_t>(w.size()) != q + 1) {
    throw std::invalid_argument("build_phi: expected |omega|+1 matrices");
  }
  if (static_cast<std::int64_t>(k.size()) != omega.ambient) {
    throw std::invalid_argument("build_phi: one extent per ambient dimension required");
  }
  const auto extent = [&](std::int64_t t) { return k[static_cast<std::size_t>(omega.members[static_cast<std::size_t>(t)])]; };
  if (w.front().rows() != 1 || w.back().cols() != 1) {
    throw std::invalid_argument("build_phi: boundary matrices must be a row and a column");
  }
  for (std::int64_t t = 0; t <= q; ++t) {
    const auto& mat = w[static_cast<std::size_t>(t)];
    if (t > 0 && mat.rows() != extent(t - 1)) throw std::invalid_argument("build_phi: matrix rows mismatch");
    if (t < q && mat.cols() != extent(t)) throw std::invalid_argument("build_phi: matrix cols mismatch");
  }

  PartialArray out(doubled(omega), doubled_extents(k));
  const auto idx = all_indices(omega, k);
  for (const auto& i : idx) {
    for (const auto& j : idx) {
      double acc = w[0](0, i.values[0]);
      for (std::int64_t t = 1; t < q; ++t) {
        acc *= w[static_cast<std::size_t>(t)](j.values[static_cast<std::size_t>(t - 1)],
                                              i.values[static_cast<std::size_t>(t)]);
      }
      acc *= w[static_cast<std::size_t>(q)](j.values[static_cast<std::size_t>(q - 1)], 0);
      out.at(concat(i, j)) = acc;
    }
  }
  return out;
}

PartialArray build_psi(const DimSubset& omega, const std::vector<std::int64_t>& r,
                       const std::vector<std::int64_t>& k, const std::vector<Eigen::MatrixXd>& w) {
  if (static_cast<std::int64_t>(r.size()) != omega.ambient) {
    throw std::invalid_argument("build_psi: one rank extent per ambient dimension required");
  }
  const PartialArray phi = build_phi(omega, k, w);
  std::vector<std::int64_t> rk(k.size());
  for (std::size_t t = 0; t < k.size(); ++t) rk[t] = r[t] * k[t];

  PartialArray out(doubled(omega), doubled_extents(rk));
  const auto block_idx = all_indices(omega, k);
  const auto rank_idx = all_indices(omega, r);
  // Entries with alpha != beta vanish, so only the block diagonal is filled.
  for (const auto& alpha : rank_idx) {
    for (const auto& i : block_idx) {
      const PartialIndex row = kron_index(alpha, i, k);
      for (const auto& j : block_idx) {
        out.at(concat(row, kron_index(alpha, j, k))) = phi.at(concat(i, j));
      }
    }
  }
  return out;
}

double eval_quadratic_form(const std::vector<Eigen::MatrixXd>& w, const std::vector<Eigen::MatrixXd>& r) {
  const auto d = static_cast<std::int64_t>(w.size());
  if (d < 2 || static_cast<std::int64_t>(r.size()) != d - 1) {
    throw std::invalid_argument("eval_quadratic_form: expected d matrices and d-1 sketch factors");
  }
  if (w.front().rows() != 1 || w.back().cols() != 1) {
    throw std::invalid_argument("eval_quadratic_form: boundary matrices must be a row and a column");
  }
  for (std::int64_t s = 0; s < d; ++s) {
    if (s > 0 && w[static_cast<std::size_t>(s)].rows() != r[static_cast<std::size_t>(s - 1)].rows()) {
      throw std::invalid_argument("eval_quadratic_form: chain dimensions disagree");
    }
    if (s < d - 1 && w[static_cast<std::size_t>(s)].cols() != r[static_cast<std::size_t>(s)].rows()) {
      throw std::invalid_argument("eval_quadratic_form: chain dimensions disagree");
    }
  }
  Eigen::MatrixXd acc = w[0] * r[0];
  for (std::int64_t s = 1; s < d - 1; ++s) {
    acc = acc * (r[static_cast<std::size_t>(s - 1)].transpose() * w[static_cast<std::size_t>(s)] *
                 r[static_cast<std::size_t>(s)]);
  }
  acc = acc * (r[static_cast<std::size_t>(d - 2)].transpose() * w[static_cast<std::size_t>(d - 1)]);
  return acc(0, 0);
}

double quadratic_form_index_sum(const std::vector<Eigen::MatrixXd>& w, const std::vector<Eigen::MatrixXd>& r) {
  const auto n = static_cast<std::int64_t>(r.size());
  if (n < 1) throw std::invalid_argument("quadratic_form_index_sum: at least one sketch factor required");
  std::vector<std::int64_t> kext(static_cast<std::size_t>(n));
  std::vector<std::int64_t> rext(static_cast<std::size_t>(n));
  for (std::int64_t s = 0; s < n; ++s) {
    kext[static_cast<std::size_t>(s)] = r[static_cast<std::size_t>(s)].rows();
    rext[static_cast<std::size_t>(s)] = r[static_cast<std::size_t>(s)].cols();
  }
  const DimSubset omega = DimSubset::full(n);
  const PartialArray d = build_psi(omega, rext, kext, w);

  const auto block_idx = all_indices(omega, kext);
  const auto rank_idx = all_indices(omega, rext);
  double acc = 0.0;
  for (const auto& i : block_idx) {
    for (const auto& j : block_idx) {
      for (const auto& alpha : rank_idx) {
        for (const auto& beta : rank_idx) {
          double prod = d.at(concat(kron_index(alpha, i, kext), kron_index(beta, j, kext)));
          if (prod == 0.0) continue;
          for (std::int64_t s = 0; s < n; ++s) {
            prod *= r[static_cast<std::size_t>(s)](i.values[static_cast<std::size_t>(s)],
                                                   alpha.values[static_cast<std::size_t>(s)]) *
                    r[static_cast<std::size_t>(s)](j.values[static_cast<std::size_t>(s)],
                                                   beta.values[static_cast<std::size_t>(s)]);
          }
          acc += prod;
        }
      }
    }
  }
  return acc;
}

std::vector<Eigen::MatrixXd> merge_chain(const std::vector<Eigen::MatrixXd>& w, const DimSubset& omega) {
  const auto d = static_cast<std::int64_t>(w.size());
  if (omega.ambient != d - 1) throw std::invalid_argument("merge_chain: omega must live in [d-1]");
  std::vector<std::int64_t> bounds;
  bounds.push_back(-1);
  for (std::int64_t v : omega.members) bounds.push_back(v);
  bounds.push_back(d - 1);

  std::vector<Eigen::MatrixXd> merged;
  merged.reserve(bounds.size() - 1);
  for (std::size_t t = 0; t + 1 < bounds.size(); ++t) {
    Eigen::MatrixXd acc = w[static_cast<std::size_t>(bounds[t] + 1)];
    for (std::int64_t s = bounds[t] + 2; s <= bounds[t + 1]; ++s) {
      acc = acc * w[static_cast<std::size_t>(s)];
    }
    merged.push_back(std::move(acc));
  }
  return merged;
}

}  // namespace ttmax
