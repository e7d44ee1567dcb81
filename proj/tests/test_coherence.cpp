#include <cmath>
#include <vector>

#include "doctest.h"
#include "ttmax/coherence.hpp"
#include "ttmax/decomposition.hpp"
#include "ttmax/generators.hpp"
#include "ttmax/norms.hpp"
#include "ttmax/rng.hpp"

using namespace ttmax;

namespace {

Eigen::MatrixXd random_orthonormal(std::int64_t m, std::int64_t q, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd g(m, q);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = rng.normal();
  return Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ() *
         Eigen::MatrixXd::Identity(m, q);
}

}  // namespace

TEST_CASE("subspace coherence of coordinate embeddings is maximal") {
  const std::int64_t m = 12, q = 3;
  const Eigen::MatrixXd embed = Eigen::MatrixXd::Identity(m, q);
  CHECK(subspace_coherence(embed) == doctest::Approx(static_cast<double>(m) / q));
}

TEST_CASE("subspace coherence lies in its admissible range") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const Eigen::MatrixXd u = random_orthonormal(10, 4, seed);
    const double mu = subspace_coherence(u);
    CHECK(mu >= 1.0 - 1e-12);
    CHECK(mu <= 10.0 / 4.0 + 1e-12);
  }
}

TEST_CASE("coherence routines insist on orthonormal columns") {
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(6, 2);
  bad(0, 0) = 2.0;
  CHECK_THROWS(subspace_coherence(bad));
  CHECK_THROWS(block_coherence(bad, 2));
}

TEST_CASE("orthonormal_colspace recovers a basis of the column space") {
  Rng rng(13);
  Eigen::MatrixXd u = random_orthonormal(8, 3, 7);
  Eigen::MatrixXd mix(3, 3);
  for (Eigen::Index i = 0; i < mix.size(); ++i) mix.data()[i] = rng.uniform_open(-2.0, 2.0);
  const Eigen::MatrixXd q = orthonormal_colspace(u * mix);
  REQUIRE(q.cols() == 3);
  // Same projector, orthonormal columns.
  CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((q * q.transpose() - u * u.transpose()).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK_THROWS(orthonormal_colspace(Eigen::MatrixXd::Zero(6, 2)));
}

TEST_CASE("block coherence of the full identity basis depends on the selector") {
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(8, 8);
  for (std::int64_t p : {1, 2, 4}) {
    CHECK(block_coherence(eye, p, UnitNorm::spectral) == doctest::Approx(1.0));
    CHECK(block_coherence(eye, p, UnitNorm::frobenius) ==
          doctest::Approx(static_cast<double>(p)));
  }
  CHECK_THROWS(block_coherence(eye, 3));  // 8 not divisible by 3
}

TEST_CASE("block coherence at block size one is the subspace coherence") {
  const Eigen::MatrixXd u = random_orthonormal(9, 3, 21);
  CHECK(block_coherence(u, 1, UnitNorm::frobenius) ==
        doctest::Approx(subspace_coherence(u)).epsilon(1e-13));
}

TEST_CASE("left core coherence reduces to the largest slice norm") {
  // For a left-orthogonal core the basis is the unfolding itself, so the
  // block maxima are the slice Frobenius norms.
  const DenseTensor a = uniform_tensor(Shape({4, 3, 4}), 77);
  const TTTensor tt = tt_svd(a, 0, 1e-10);
  const TTCore& g = tt.core(1);
  const double p = static_cast<double>(g.left_rank());
  const double n = static_cast<double>(g.mode_size());
  const double q = static_cast<double>(g.right_rank());
  double max_slice = 0.0;
  for (std::int64_t i = 0; i < g.mode_size(); ++i) {
    max_slice = std::max(max_slice, g.slice(i).squaredNorm());
  }
  CHECK(core_left_coherence(g) == doctest::Approx(n * p / q * max_slice).epsilon(1e-12));
}

TEST_CASE("coherence profile is invariant to the orthogonalization pivot") {
  const DenseTensor a = uniform_tensor(Shape({4, 4, 4}), 31);
  const CoherenceProfile base = tt_core_coherences(a);
  for (std::int64_t t : {1, 2, 3}) {
    const CoherenceProfile via = tt_core_coherences_via(a, t);
    REQUIRE(via.left.size() == base.left.size());
    for (std::size_t s = 0; s < base.left.size(); ++s) {
      CHECK(via.left[s] == doctest::Approx(base.left[s]).epsilon(1e-8));
    }
    for (std::size_t s = 0; s < base.right.size(); ++s) {
      CHECK(via.right[s] == doctest::Approx(base.right[s]).epsilon(1e-8));
    }
  }
}

TEST_CASE("rank budget for square matrices matches hand-computed values") {
  CHECK(rank_bound_matrix(18694, 18694, 0.1) == 18694);
  CHECK(rank_bound_matrix(100000, 100000, 0.1) == 21713);
  CHECK(rank_bound_matrix(10000000, 10000000, 0.1) == 30002);
  CHECK(rank_bound_matrix(1000000000, 1000000000, 0.1) == 38291);
  CHECK_THROWS(rank_bound_matrix(10, 10, 0.0));
  CHECK_THROWS(rank_bound_matrix(10, 10, 1.0));
}

TEST_CASE("train rank budget matches its closed form") {
  // ceil((c_d / eps^2) * ln(2 e n_1 ... n_d)), checked against independent
  // arithmetic.
  CHECK(rank_bound_tt({2, 2}, 0.9, 1.0) == 4);  // ln(8e)/0.81 = 3.80...
  const std::vector<std::int64_t> dims{4, 5, 6};
  const double eps = 0.3;
  const double want = std::ceil(9.0 / (eps * eps) *
                                (std::log(2.0) + 1.0 + std::log(4.0) + std::log(5.0) +
                                 std::log(6.0)));
  CHECK(rank_bound_tt(dims, eps) == static_cast<std::int64_t>(want));
}

TEST_CASE("coherence-based entrywise bound dominates the pivot factorization") {
  const DenseTensor a = uniform_tensor(Shape({3, 4, 3}), 57);
  const TTTensor minimal = tt_svd(a, 0, 1e-10);
  for (std::int64_t t = 1; t <= minimal.order(); ++t) {
    const double gamma = gamma_tt_upper(orthogonalize_t(minimal, t));
    CHECK(gamma_bound_via_coherence(a, t) >= gamma - 1e-10);
  }
}

TEST_CASE("entrywise error bound scales linearly in the target accuracy") {
  const DenseTensor a = uniform_tensor(Shape({4, 3, 4}), 93);
  const CoherenceErrorBound b1 = coherence_error_bound(a, 0.1);
  const CoherenceErrorBound b2 = coherence_error_bound(a, 0.2);
  CHECK(b1.best_t >= 1);
  CHECK(b1.best_t < 3 + 1);
  CHECK(b1.bound > 0.0);
  CHECK(b2.bound == doctest::Approx(2.0 * b1.bound).epsilon(1e-12));
  CHECK(b1.rank == rank_bound_tt({4, 3, 4}, 0.1));
}
