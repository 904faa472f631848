#include <cmath>

#include <doctest.h>

#include "mxa/norms.hpp"
#include "mxa/rng.hpp"
#include "test_helpers.hpp"

using namespace mxa;

TEST_CASE("norm basics") {
  Matrix id3 = Matrix::identity(3);
  CHECK(norm(NormId::schatten(2.0), id3) == doctest::Approx(std::sqrt(3.0)));
  CHECK(norm(NormId::schatten(1.0), id3) == doctest::Approx(3.0));

  Matrix d{{3.0, 0.0}, {0.0, 1.0}};
  CHECK(norm(NormId::kyfan(1), d) == doctest::Approx(3.0));
  CHECK(norm(NormId::kyfan(2), d) == doctest::Approx(4.0));
  CHECK(norm(NormId::kyfan_normalized(2), d) == doctest::Approx(2.0));

  Rng rng(1);
  Matrix m = testing::random_matrix(rng, 4, 4);
  CHECK(norm(NormId::schatten(2.0), m) == doctest::Approx(m.frobenius()).epsilon(1e-10));
}

TEST_CASE("norms are unitarily invariant") {
  Rng rng(2);
  Matrix m = testing::random_matrix(rng, 4, 4);
  Matrix u = hermitian_eig(testing::random_hermitian(rng, 4)).frame;
  Matrix v = hermitian_eig(testing::random_hermitian(rng, 4)).frame;
  for (const auto& id : norm_catalog(4)) {
    CHECK(norm(id, u * m * v) == doctest::Approx(norm(id, m)).epsilon(1e-9));
  }
}

TEST_CASE("antinorm basics") {
  CHECK(antinorm(AntinormId::det_root(), Matrix::identity(4)) == doctest::Approx(1.0));

  Matrix d{{4.0, 0.0}, {0.0, 1.0}};
  CHECK(antinorm(AntinormId::schatten_quasi(0.5), d) == doctest::Approx(9.0));

  // singular input -> derived antinorm is 0
  Matrix s{{1.0, 0.0}, {0.0, 0.0}};
  CHECK(antinorm(AntinormId::derived(NormId::trace_norm(), -1.0), s) == 0.0);
  CHECK(antinorm(AntinormId::det_root(), s) == 0.0);

  CHECK_THROWS_AS(antinorm(AntinormId::det_root(), Matrix{{-1.0}}), Error);
}

TEST_CASE("antinorms are superadditive on random PSD pairs") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = testing::random_psd(rng, 4);
    Matrix b = testing::random_psd(rng, 4);
    for (const auto& id : antinorm_catalog(4)) {
      double lhs = antinorm(id, a + b);
      double rhs = antinorm(id, a) + antinorm(id, b);
      CHECK(lhs >= rhs - 1e-9 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("minkowski det root is the p->0 limit of derived antinorms") {
  // base norm Tr(.)/n, p = -1e-3, well-conditioned A
  Rng rng(5);
  Matrix a = testing::random_psd(rng, 4) + Matrix::identity(4);
  const std::size_t n = 4;
  auto lam = eigvals(a);
  double tr_p = 0.0;
  const double p = -1e-3;
  for (double v : lam) tr_p += std::pow(v, p);
  double derived = std::pow(tr_p / n, 1.0 / p);
  double det_root = antinorm(AntinormId::det_root(), a);
  CHECK(std::abs(derived - det_root) / det_root < 1e-3);
}

TEST_CASE("majorize identical inputs passes with zero margins") {
  Rng rng(7);
  Matrix x = testing::random_psd(rng, 4);
  for (MajOrder o : {MajOrder::weak, MajOrder::weak_log, MajOrder::log, MajOrder::super_weak_log}) {
    auto rep = majorize(o, x, x);
    CHECK(rep.verdict);
    CHECK(std::abs(rep.worst_margin) < 1e-10);
  }
}

TEST_CASE("weak majorization hand example fails at k=1") {
  Matrix x{{2.0, 0.0}, {0.0, 0.0}};
  Matrix y{{1.0, 0.0}, {0.0, 1.0}};
  auto rep = majorize(MajOrder::weak, x, y);
  CHECK_FALSE(rep.verdict);
  CHECK(rep.worst_k == 1);
  CHECK(rep.partial_margins[0] == doctest::Approx(-1.0));
  CHECK(rep.partial_margins[1] == doctest::Approx(0.0));
}

TEST_CASE("araki log-majorization (ABA)^2 vs A^2 B^2 A^2") {
  // Conditioning is capped: the determinant-equality margin of an 8th-order
  // product is only meaningful up to eps * kappa.
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = testing::random_psd(rng, 4);
    Matrix b = testing::random_psd(rng, 4);
    a += Matrix::identity(4) * (0.2 * opnorm(a));
    b += Matrix::identity(4) * (0.2 * opnorm(b));
    Matrix aba = a * b * a;
    Matrix lhs = aba * aba;
    Matrix rhs = a * a * b * b * a * a;
    auto rep = majorize(MajOrder::log, hermitian_part(lhs), hermitian_part(rhs));
    CHECK(rep.verdict);
  }
}

TEST_CASE("log implies weak_log implies weak on PSD") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = testing::random_psd(rng, 4);
    Matrix b = testing::random_psd(rng, 4);
    a += Matrix::identity(4) * (0.2 * opnorm(a));
    b += Matrix::identity(4) * (0.2 * opnorm(b));
    Matrix aba = a * b * a;
    Matrix lhs = aba * aba;
    Matrix rhs = a * a * b * b * a * a;
    auto rl = majorize(MajOrder::log, lhs, rhs);
    auto rwl = majorize(MajOrder::weak_log, lhs, rhs);
    auto rw = majorize(MajOrder::weak, lhs, rhs);
    if (rl.verdict) CHECK(rwl.verdict);
    if (rwl.verdict) CHECK(rw.verdict);
  }
}

TEST_CASE("kyfan_transfer lists ordered norms for passing reports") {
  Rng rng(17);
  Matrix a = testing::random_psd(rng, 4);
  Matrix b = testing::random_psd(rng, 4);
  Matrix aba = a * b * a;
  Matrix lhs = aba * aba;
  Matrix rhs = a * a * b * b * a * a;
  auto rep = majorize(MajOrder::weak_log, lhs, rhs);
  REQUIRE(rep.verdict);
  auto list = kyfan_transfer(rep, lhs, rhs);
  CHECK_FALSE(list.empty());
  for (const auto& c : list) CHECK(c.lhs <= c.rhs + 1e-9 * std::max(1.0, c.rhs));

  // identical inputs -> all equal
  auto eq = kyfan_transfer(majorize(MajOrder::weak, a, a), a, a);
  for (const auto& c : eq) CHECK(c.lhs == doctest::Approx(c.rhs));

  // failing report -> empty list
  Matrix x{{2.0, 0.0}, {0.0, 0.0}};
  Matrix y = Matrix::identity(2);
  auto fail = majorize(MajOrder::weak, x, y);
  CHECK(kyfan_transfer(fail, x, y).empty());
}

TEST_CASE("super weak log handles singular matrices") {
  Matrix x{{2.0, 0.0}, {0.0, 0.0}};
  auto rep = majorize(MajOrder::super_weak_log, x, x);
  CHECK(rep.verdict);
  CHECK(rep.floor_hit);
}
