#include <Eigen/Dense>
#include <vector>

#include "doctest.h"
#include "ttmax/index_algebra.hpp"
#include "ttmax/rng.hpp"

using namespace ttmax;

namespace {

PartialArray random_array(const DimSubset& dom, const std::vector<std::int64_t>& extents,
                          Rng& rng) {
  PartialArray c(dom, extents);
  for (std::int64_t i = 0; i < c.size(); ++i) c[i] = rng.uniform_open(-1.0, 1.0);
  return c;
}

std::vector<Eigen::MatrixXd> random_chain(const std::vector<std::int64_t>& inner, Rng& rng) {
  // Row vector, square-ish middles, column vector: sizes 1 x k_0, k_0 x k_1,
  // ..., k_{last} x 1.
  std::vector<Eigen::MatrixXd> w;
  std::vector<std::int64_t> dims;
  dims.push_back(1);
  dims.insert(dims.end(), inner.begin(), inner.end());
  dims.push_back(1);
  for (std::size_t t = 0; t + 1 < dims.size(); ++t) {
    Eigen::MatrixXd m(dims[t], dims[t + 1]);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform_open(-1.0, 1.0);
    w.push_back(m);
  }
  return w;
}

}  // namespace

TEST_CASE("dim subsets stay sorted, unique, and range-checked") {
  const DimSubset s(5, {3, 1, 0});
  CHECK(s.members == std::vector<std::int64_t>{0, 1, 3});
  CHECK_THROWS(DimSubset(5, {3, 1, 3, 0}));  // duplicate member
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(s.complement().members == std::vector<std::int64_t>{2, 4});
  CHECK(DimSubset::full(3).members == std::vector<std::int64_t>{0, 1, 2});
  CHECK_THROWS(DimSubset(3, {3}));
  CHECK_THROWS(DimSubset(3, {-1}));
  CHECK_THROWS(union_disjoint(DimSubset(4, {0, 1}), DimSubset(4, {1, 2})));
  CHECK(union_disjoint(DimSubset(4, {0, 3}), DimSubset(4, {2})).members ==
        std::vector<std::int64_t>{0, 2, 3});
  CHECK(set_minus(DimSubset(4, {0, 1, 2}), DimSubset(4, {1})).members ==
        std::vector<std::int64_t>{0, 2});
}

TEST_CASE("doubled domains embed copies at an offset of the ambient size") {
  const DimSubset omega(3, {0, 2});
  const DimSubset dd = doubled(omega);
  CHECK(dd.ambient == 6);
  CHECK(dd.members == std::vector<std::int64_t>{0, 2, 3, 5});
  CHECK(base_of_doubled(dd) == omega);
  CHECK_THROWS(base_of_doubled(DimSubset(6, {0, 1, 3})));  // 1 pairs with 4

  const DimSubset mixed = oplus(DimSubset(3, {1}), DimSubset(3, {0, 2}));
  CHECK(mixed.members == std::vector<std::int64_t>{1, 3, 5});

  CHECK(doubled_extents({2, 3, 4}) == std::vector<std::int64_t>{2, 3, 4, 2, 3, 4});
}

TEST_CASE("partial index join, restrict, concat, and kron") {
  const PartialIndex i(DimSubset(4, {0, 2}), {1, 2});
  const PartialIndex j(DimSubset(4, {1}), {0});
  const PartialIndex ij = join(i, j);
  CHECK(ij.domain.members == std::vector<std::int64_t>{0, 1, 2});
  CHECK(ij.value(0) == 1);
  CHECK(ij.value(1) == 0);
  CHECK(ij.value(2) == 2);
  CHECK(restrict_index(ij, DimSubset(4, {0, 2})) == i);
  CHECK_THROWS(join(i, i));  // overlapping domains

  const PartialIndex cc = concat(i, j);
  CHECK(cc.domain.ambient == 8);
  CHECK(cc.domain.members == std::vector<std::int64_t>{0, 2, 5});
  CHECK(cc.value(0) == 1);
  CHECK(cc.value(2) == 2);
  CHECK(cc.value(5) == 0);

  // kron: value at w is i_w + alpha_w * k_w.
  const PartialIndex alpha(DimSubset(4, {0, 2}), {2, 1});
  const std::vector<std::int64_t> k{3, 1, 2, 1};
  const PartialIndex big = kron_index(alpha, i, k);
  CHECK(big.value(0) == 1 + 2 * 3);
  CHECK(big.value(2) == 2 + 1 * 2);
}

TEST_CASE("all_indices matches the partial array layout") {
  const DimSubset dom(4, {1, 3});
  const std::vector<std::int64_t> extents{2, 3, 2, 2};
  const PartialArray arr(dom, extents);
  const std::vector<PartialIndex> idx = all_indices(dom, extents);
  REQUIRE(static_cast<std::int64_t>(idx.size()) == arr.size());
  REQUIRE(arr.size() == 6);  // 3 * 2
  for (std::int64_t off = 0; off < arr.size(); ++off) {
    CHECK(arr.offset(idx[static_cast<std::size_t>(off)]) == off);
    CHECK(arr.index_at(off) == idx[static_cast<std::size_t>(off)]);
  }
  // Largest member fastest-varying: consecutive offsets step dim 3 first.
  CHECK(idx[0].value(1) == 0);
  CHECK(idx[0].value(3) == 0);
  CHECK(idx[1].value(1) == 0);
  CHECK(idx[1].value(3) == 1);
  CHECK(idx[2].value(1) == 1);
  CHECK(idx[2].value(3) == 0);

  CHECK(all_subsets(4).size() == 16);
  const PartialArray scalar(DimSubset(4, {}), extents);
  CHECK(scalar.size() == 1);
}

TEST_CASE("partial trace matches the brute-force diagonal sum") {
  Rng rng(71);
  const std::int64_t n = 3;
  const std::vector<std::int64_t> m{2, 3, 2};
  const DimSubset full = DimSubset::full(n);
  const PartialArray c = random_array(doubled(full), doubled_extents(m), rng);

  const DimSubset traced(n, {0, 2});
  const DimSubset rest(n, {1});
  const PartialArray got = partial_trace(c, traced);
  CHECK(got.domain() == doubled(rest));

  for (std::int64_t i1 = 0; i1 < m[1]; ++i1) {
    for (std::int64_t j1 = 0; j1 < m[1]; ++j1) {
      double want = 0.0;
      for (std::int64_t l0 = 0; l0 < m[0]; ++l0) {
        for (std::int64_t l2 = 0; l2 < m[2]; ++l2) {
          const PartialIndex row = join(PartialIndex(rest, {i1}), PartialIndex(traced, {l0, l2}));
          const PartialIndex col = join(PartialIndex(rest, {j1}), PartialIndex(traced, {l0, l2}));
          want += c.at(concat(row, col));
        }
      }
      const PartialIndex at = concat(PartialIndex(rest, {i1}), PartialIndex(rest, {j1}));
      CHECK(got.at(at) == doctest::Approx(want).epsilon(1e-14));
    }
  }
}

TEST_CASE("partial traces over disjoint sets compose") {
  Rng rng(72);
  const std::vector<std::int64_t> m{2, 2, 3};
  const DimSubset full = DimSubset::full(3);
  const PartialArray c = random_array(doubled(full), doubled_extents(m), rng);
  const DimSubset s1(3, {0});
  const DimSubset s2(3, {2});

  const PartialArray joint = partial_trace(c, union_disjoint(s1, s2));
  const PartialArray seq_a = partial_trace(partial_trace(c, s1), s2);
  const PartialArray seq_b = partial_trace(partial_trace(c, s2), s1);
  REQUIRE(joint.size() == seq_a.size());
  for (std::int64_t i = 0; i < joint.size(); ++i) {
    CHECK(joint[i] == doctest::Approx(seq_a[i]).epsilon(1e-13));
    CHECK(joint[i] == doctest::Approx(seq_b[i]).epsilon(1e-13));
  }
}

TEST_CASE("partial frobenius composes and defaults to entrywise magnitude") {
  Rng rng(73);
  const DimSubset full = DimSubset::full(3);
  const std::vector<std::int64_t> m{2, 3, 2};
  const PartialArray d = random_array(full, m, rng);

  const PartialArray abs = partial_frobenius(d, DimSubset(3, {}));
  for (std::int64_t i = 0; i < d.size(); ++i) CHECK(abs[i] == std::abs(d[i]));

  const PartialArray joint = partial_frobenius(d, DimSubset(3, {0, 2}));
  const PartialArray seq = partial_frobenius(partial_frobenius(d, DimSubset(3, {2})),
                                             DimSubset(3, {0}));
  REQUIRE(joint.size() == seq.size());
  for (std::int64_t i = 0; i < joint.size(); ++i) {
    CHECK(joint[i] == doctest::Approx(seq[i]).epsilon(1e-13));
  }

  // Over the full domain the scalar is the Frobenius norm.
  const PartialArray total = partial_frobenius(d, full);
  REQUIRE(total.size() == 1);
  CHECK(total[0] == doctest::Approx(d.frobenius_norm()).epsilon(1e-14));
}

TEST_CASE("partition enumeration counts Bell numbers") {
  CHECK(enumerate_partitions(DimSubset(1, {0})).size() == 1);
  CHECK(enumerate_partitions(DimSubset(2, {0, 1})).size() == 2);
  CHECK(enumerate_partitions(DimSubset(3, {0, 1, 2})).size() == 5);
  CHECK(enumerate_partitions(DimSubset(4, {0, 1, 2, 3})).size() == 15);
  CHECK(enumerate_partitions(DimSubset(5, {0, 1, 2, 3, 4})).size() == 52);
  CHECK_THROWS(Partition(DimSubset(2, {0, 1}), {{0}}));          // misses 1
  CHECK_THROWS(Partition(DimSubset(2, {0, 1}), {{0, 1}, {1}}));  // overlap
}

TEST_CASE("partition norm is the Frobenius norm for one cell") {
  Rng rng(74);
  const DimSubset dom(2, {0, 1});
  const PartialArray c = random_array(dom, {3, 4}, rng);
  const Partition single(dom, {{0, 1}});
  CHECK(partition_norm(c, single) == doctest::Approx(c.frobenius_norm()).epsilon(1e-12));
}

TEST_CASE("partition norm with singleton cells is the spectral norm") {
  Rng rng(75);
  const DimSubset dom(2, {0, 1});
  const std::int64_t rows = 4, cols = 5;
  const PartialArray c = random_array(dom, {rows, cols}, rng);
  Eigen::MatrixXd m(rows, cols);
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j = 0; j < cols; ++j) {
      m(i, j) = c.at(PartialIndex(dom, {i, j}));
    }
  }
  const double sigma = m.bdcSvd().singularValues()(0);
  CHECK(partition_norm(c, Partition(dom, {{0}, {1}})) ==
        doctest::Approx(sigma).epsilon(1e-7));
}

TEST_CASE("partition norm dominates random pairings and obeys Frobenius cap") {
  Rng rng(76);
  const DimSubset dom(3, {0, 1, 2});
  const std::vector<std::int64_t> m{2, 3, 2};
  const PartialArray c = random_array(dom, m, rng);
  for (const Partition& pi : enumerate_partitions(dom)) {
    const double norm = partition_norm(c, pi);
    CHECK(norm <= c.frobenius_norm() + 1e-9);
    for (int rep = 0; rep < 5; ++rep) {
      // Random unit-Frobenius test array per cell; their pairing with c is a
      // lower bound on the supremum.
      std::vector<PartialArray> z;
      for (std::int64_t t = 0; t < pi.cell_count(); ++t) {
        PartialArray zt = random_array(pi.cell_subset(t), m, rng);
        const double f = zt.frobenius_norm();
        for (std::int64_t i = 0; i < zt.size(); ++i) zt[i] /= f;
        z.push_back(zt);
      }
      double pairing = 0.0;
      for (std::int64_t off = 0; off < c.size(); ++off) {
        const PartialIndex idx = c.index_at(off);
        double prod = c[off];
        for (std::int64_t t = 0; t < pi.cell_count(); ++t) {
          prod *= z[static_cast<std::size_t>(t)].at(restrict_index(idx, pi.cell_subset(t)));
        }
        pairing += prod;
      }
      CHECK(std::abs(pairing) <= norm + 1e-9);
    }
  }
}

TEST_CASE("pairing weights mark dimensions whose copies share a cell") {
  const DimSubset omega(2, {0, 1});
  const DimSubset ground = doubled(omega);  // {0,1,2,3} in ambient 4

  const ThetaWeights both = theta_weights(Partition(ground, {{0, 2}, {1, 3}}));
  CHECK(both.omega == omega);
  CHECK(both.theta == std::vector<double>{0.5, 0.5});
  CHECK(both.total == doctest::Approx(1.0));

  // A dimension whose copies land in different cells contributes no extent
  // factor to the product-sum bound.
  const ThetaWeights split = theta_weights(Partition(ground, {{0}, {2}, {1, 3}}));
  CHECK(split.theta == std::vector<double>{0.0, 0.5});
  CHECK(split.total == doctest::Approx(0.5));
}

TEST_CASE("cell overlap folds the second copy back onto the base set") {
  const DimSubset omega(3, {0, 1, 2});
  const Partition pi(doubled(omega), {{0, 4}, {1, 3}, {2, 5}});
  CHECK(cell_overlap(pi, 0).members == std::vector<std::int64_t>{0, 1});
  CHECK(cell_overlap(pi, 1).members == std::vector<std::int64_t>{0, 1});
  CHECK(cell_overlap(pi, 2).members == std::vector<std::int64_t>{2});
}

TEST_CASE("partitioned product sums obey the weighted Frobenius bound") {
  Rng rng(77);
  const std::vector<std::int64_t> m{2, 3, 2};
  const DimSubset omega = DimSubset::full(3);
  for (const Partition& pi : enumerate_partitions(doubled(omega))) {
    std::vector<PartialArray> cells;
    for (std::int64_t t = 0; t < pi.cell_count(); ++t) {
      cells.push_back(random_array(cell_overlap(pi, t), m, rng));
    }
    const CauchySchwarzSides sides = cauchy_schwarz_check(pi, cells, m);
    CHECK(sides.lhs <= sides.rhs + 1e-12);
  }
}

TEST_CASE("chain arrays match their defining products") {
  Rng rng(78);
  const DimSubset omega(3, {0, 1, 2});
  const std::vector<std::int64_t> k{2, 3, 2};
  const std::vector<Eigen::MatrixXd> w = random_chain(k, rng);
  const PartialArray phi = build_phi(omega, k, w);

  for (std::int64_t i0 = 0; i0 < k[0]; ++i0)
    for (std::int64_t i1 = 0; i1 < k[1]; ++i1)
      for (std::int64_t i2 = 0; i2 < k[2]; ++i2)
        for (std::int64_t j0 = 0; j0 < k[0]; ++j0)
          for (std::int64_t j1 = 0; j1 < k[1]; ++j1)
            for (std::int64_t j2 = 0; j2 < k[2]; ++j2) {
              const double want = w[0](0, i0) * w[1](j0, i1) * w[2](j1, i2) * w[3](j2, 0);
              const PartialIndex at = concat(PartialIndex(omega, {i0, i1, i2}),
                                             PartialIndex(omega, {j0, j1, j2}));
              CHECK(phi.at(at) == doctest::Approx(want).epsilon(1e-14));
            }
}

TEST_CASE("block-diagonal extension vanishes off the matched blocks") {
  Rng rng(79);
  const DimSubset omega(2, {0, 1});
  const std::vector<std::int64_t> k{2, 2};
  const std::vector<std::int64_t> r{2, 3};
  const std::vector<Eigen::MatrixXd> w = random_chain(k, rng);
  const PartialArray phi = build_phi(omega, k, w);
  const PartialArray psi = build_psi(omega, r, k, w);
  CHECK(psi.extents()[0] == 4);  // r_0 * k_0
  CHECK(psi.extents()[1] == 6);

  const std::vector<std::int64_t> rk{r[0] * k[0], r[1] * k[1]};
  for (std::int64_t off = 0; off < psi.size(); ++off) {
    const PartialIndex at = psi.index_at(off);
    // Decompose each value v_w = i_w + alpha_w * k_w on both copies.
    std::vector<std::int64_t> i_part, j_part, a_part, b_part;
    for (std::int64_t w_id = 0; w_id < 2; ++w_id) {
      i_part.push_back(at.value(w_id) % k[static_cast<std::size_t>(w_id)]);
      a_part.push_back(at.value(w_id) / k[static_cast<std::size_t>(w_id)]);
      j_part.push_back(at.value(w_id + 2) % k[static_cast<std::size_t>(w_id)]);
      b_part.push_back(at.value(w_id + 2) / k[static_cast<std::size_t>(w_id)]);
    }
    const bool matched = a_part == b_part;
    if (!matched) {
      CHECK(psi[off] == 0.0);
    } else {
      const PartialIndex phi_at = concat(PartialIndex(omega, i_part), PartialIndex(omega, j_part));
      CHECK(psi[off] == doctest::Approx(phi.at(phi_at)).epsilon(1e-14));
    }
  }
}

TEST_CASE("quadratic-form value equals its brute-force index sum") {
  Rng rng(80);
  for (int rep = 0; rep < 20; ++rep) {
    const std::vector<std::int64_t> k{2, 3};
    const std::vector<Eigen::MatrixXd> w = random_chain(k, rng);
    std::vector<Eigen::MatrixXd> r;
    for (std::int64_t kk : k) {
      Eigen::MatrixXd m(kk, 2);
      for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform_open(-1.0, 1.0);
      r.push_back(m);
    }
    const double fast = eval_quadratic_form(w, r);
    const double slow = quadratic_form_index_sum(w, r);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
  }
}

TEST_CASE("merge_chain groups consecutive factors") {
  Rng rng(81);
  const std::vector<std::int64_t> k{2, 3, 2};
  const std::vector<Eigen::MatrixXd> w = random_chain(k, rng);  // 4 matrices

  const std::vector<Eigen::MatrixXd> merged = merge_chain(w, DimSubset(3, {1}));
  REQUIRE(merged.size() == 2);
  CHECK((merged[0] - w[0] * w[1]).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((merged[1] - w[2] * w[3]).cwiseAbs().maxCoeff() <= 1e-14);

  const std::vector<Eigen::MatrixXd> ends = merge_chain(w, DimSubset(3, {0, 2}));
  REQUIRE(ends.size() == 3);
  CHECK((ends[0] - w[0]).cwiseAbs().maxCoeff() == 0.0);
  CHECK((ends[1] - w[1] * w[2]).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((ends[2] - w[3]).cwiseAbs().maxCoeff() == 0.0);

  const std::vector<Eigen::MatrixXd> keep_all = merge_chain(w, DimSubset(3, {0, 1, 2}));
  REQUIRE(keep_all.size() == 4);
  for (std::size_t t = 0; t < 4; ++t) {
    CHECK((keep_all[t] - w[t]).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("tracing the block-diagonal chain contracts factors and scales by rank") {
  Rng rng(82);
  const std::vector<std::int64_t> k{2, 2, 3};
  const std::vector<std::int64_t> r{2, 3, 2};
  const std::vector<Eigen::MatrixXd> w = random_chain(k, rng);
  const DimSubset full = DimSubset::full(3);
  const PartialArray d = build_psi(full, r, k, w);

  for (std::int64_t s = 0; s < 3; ++s) {
    const DimSubset traced(3, {s});
    const DimSubset kept = set_minus(full, traced);
    const PartialArray got = partial_trace(d, traced);
    PartialArray want = build_psi(kept, r, k, merge_chain(w, kept));
    double worst = 0.0;
    REQUIRE(got.size() == want.size());
    for (std::int64_t i = 0; i < want.size(); ++i) {
      worst = std::max(worst,
                       std::abs(got[i] - static_cast<double>(r[static_cast<std::size_t>(s)]) *
                                             want[i]));
    }
    CHECK(worst <= 1e-12);
  }

  // Tracing two dimensions at once multiplies by both ranks.
  const DimSubset pair(3, {0, 2});
  const PartialArray got = partial_trace(d, pair);
  PartialArray want = build_psi(set_minus(full, pair), r, k, merge_chain(w, set_minus(full, pair)));
  for (std::int64_t i = 0; i < want.size(); ++i) {
    CHECK(got[i] == doctest::Approx(static_cast<double>(r[0] * r[2]) * want[i]).epsilon(1e-12));
  }
}
