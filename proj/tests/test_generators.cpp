#include <cmath>

#include <doctest.h>

#include "mxa/generators.hpp"
#include "mxa/eig.hpp"
#include "test_helpers.hpp"

using namespace mxa;

TEST_CASE("generators satisfy their defining predicates") {
  Rng rng(123);
  const std::size_t n = 4;

  SUBCASE("contraction") {
    for (int t = 0; t < 10; ++t) CHECK(opnorm(gen::contraction(rng, n)) <= 1.0 + 1e-12);
  }
  SUBCASE("expansive") {
    for (int t = 0; t < 10; ++t) {
      Matrix z = gen::expansive(rng, n);
      CHECK(min_eig(hermitian_part(z.adjoint() * z)) >= 1.0 - 1e-9);
    }
  }
  SUBCASE("unitary and isometry") {
    Matrix u = gen::unitary(rng, n);
    CHECK((u.adjoint() * u - Matrix::identity(n)).max_abs() < 1e-10);
    Matrix v = gen::isometry(rng, 6, 3);
    CHECK((v.adjoint() * v - Matrix::identity(3)).max_abs() < 1e-10);
  }
  SUBCASE("projection and semi-unitary") {
    Matrix e = gen::projection(rng, n);
    CHECK(rel_diff(e * e, e) < 1e-9);
    Matrix s = gen::semi_unitary(rng, n);
    Matrix f1 = s.adjoint() * s, f2 = s * s.adjoint();
    CHECK(rel_diff(f1, f2) < 1e-9);
    CHECK(rel_diff(f1 * f1, f1) < 1e-9);
  }
  SUBCASE("normal") {
    Matrix z = gen::normal_matrix(rng, n);
    CHECK(rel_diff(z * z.adjoint(), z.adjoint() * z) < 1e-9);
  }
}

TEST_CASE("monotone pair commutes and is co-monotone") {
  Rng rng(5);
  auto p = gen::monotone_pair(rng, 5);
  CHECK(rel_diff(p.a * p.b, p.b * p.a) < 1e-9);
  // shared frame: eigenvalues of a and b sorted the same way pair up
  auto ea = hermitian_eig(p.a);
  Matrix b_in_a = ea.frame.adjoint() * p.b * ea.frame;
  std::vector<double> bd(5);
  for (int i = 0; i < 5; ++i) bd[i] = b_in_a(i, i).real();
  for (int i = 0; i + 1 < 5; ++i) {
    // a descending implies b descending (co-monotone), up to ties
    CHECK(bd[i] >= bd[i + 1] - 1e-8);
  }
  auto q = gen::antimonotone_pair(rng, 5);
  auto eq = hermitian_eig(q.a);
  Matrix b2 = eq.frame.adjoint() * q.b * eq.frame;
  for (int i = 0; i + 1 < 5; ++i) CHECK(b2(i, i).real() <= b2(i + 1, i + 1).real() + 1e-8);
}

TEST_CASE("hermitian block generators") {
  Rng rng(6);
  Matrix h = gen::psd_hermitian_blocks(rng, 3, 2);
  CHECK(is_psd(h));
  for (int s = 0; s < 3; ++s)
    for (int t2 = 0; t2 < 3; ++t2) {
      Matrix blk = h.block(s * 2, s * 2 + 2, t2 * 2, t2 * 2 + 2);
      CHECK((blk - blk.adjoint()).max_abs() < 1e-10);
    }

  Matrix h2 = gen::herm_offdiag_block(rng, 3);
  CHECK(is_psd(h2));
  Matrix x = h2.block(0, 3, 3, 6);
  CHECK((x - x.adjoint()).max_abs() < 1e-10);

  Matrix x3 = gen::ginibre(rng, 3, 3);
  Matrix h3 = gen::psd_with_offdiag(rng, x3);
  CHECK(is_psd(h3, 1e-8));
  CHECK(rel_diff(h3.block(0, 3, 3, 6), x3) < 1e-12);
}

TEST_CASE("weight pairs") {
  Rng rng(7);
  auto w = gen::commuting_normal_weights(rng, 4);
  CHECK(rel_diff(w.x * w.y, w.y * w.x) < 1e-9);
  CHECK(rel_diff(w.x.adjoint() * w.x + w.y.adjoint() * w.y, Matrix::identity(4)) < 1e-10);

  auto d = gen::ds_weight_pair(rng, 4);
  CHECK((d.x.adjoint() * d.x + d.y.adjoint() * d.y - Matrix::identity(4)).max_abs() < 1e-12);
  CHECK((d.x * d.x.adjoint() + d.y * d.y.adjoint() - Matrix::identity(4)).max_abs() < 1e-12);
}

TEST_CASE("kraus maps") {
  Rng rng(8);
  auto sub = gen::subunital_kraus_map(rng, 3, 2);
  CHECK(min_eig(Matrix::identity(3) - sub.apply_identity(3)) >= -1e-10);
  Matrix p = testing::random_psd(rng, 3);
  CHECK(is_psd(sub.apply(p)));

  auto uni = gen::unital_kraus_map(rng, 3, 3);
  CHECK(rel_diff(uni.apply_identity(3), Matrix::identity(3)) < 1e-10);
}

TEST_CASE("correlation matrices have unit diagonal") {
  Rng rng(9);
  Matrix z = gen::correlation(rng, 5);
  CHECK(is_psd(z));
  for (int i = 0; i < 5; ++i) CHECK(z(i, i).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("psd generator caps conditioning") {
  Rng rng(10);
  Matrix p = gen::psd(rng, 5, 100.0);
  auto lam = eigvals(p);
  CHECK(lam.front() / lam.back() <= 110.0);
}
