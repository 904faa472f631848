#include <cmath>

#include <doctest.h>

#include "mxa/eig.hpp"
#include "mxa/rng.hpp"
#include "test_helpers.hpp"

using namespace mxa;

TEST_CASE("eig of diagonal input sorts descending") {
  Matrix m{{1.0, 0.0}, {0.0, 3.0}};
  auto eg = hermitian_eig(m);
  CHECK(eg.eigenvalues[0] == doctest::Approx(3.0));
  CHECK(eg.eigenvalues[1] == doctest::Approx(1.0));
  // frame is the column swap
  CHECK(std::abs(eg.frame(0, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(eg.frame(1, 0)) == doctest::Approx(1.0));
}

TEST_CASE("eig 2x2 closed form") {
  Matrix m{{2.0, 1.0}, {1.0, 2.0}};
  auto eg = hermitian_eig(m);
  CHECK(eg.eigenvalues[0] == doctest::Approx(3.0));
  CHECK(eg.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("eig random 8x8: orthonormal frame, reconstruction") {
  Rng rng(42);
  Matrix h = testing::random_hermitian(rng, 8);
  auto eg = hermitian_eig(h);
  Matrix gram = eg.frame.adjoint() * eg.frame;
  CHECK((gram - Matrix::identity(8)).max_abs() < 1e-12);
  CHECK(rel_diff(eg.reconstruct(), h) < 1e-11);
}

TEST_CASE("eig rejects non-square and non-hermitian") {
  CHECK_THROWS_AS(hermitian_eig(Matrix(2, 3)), Error);
  Matrix m{{0.0, 1.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(hermitian_eig(m), Error);
}

TEST_CASE("svd of zero matrix") {
  auto s = svd(Matrix(3, 2));
  for (double v : s.singular) CHECK(v == 0.0);
  CHECK((s.left.adjoint() * s.left - Matrix::identity(2)).max_abs() < 1e-12);
}

TEST_CASE("svd mu^2 sums to the entry square sum") {
  Matrix m{{1.0, 4.0, 5.0}, {2.0, 6.0, 7.0}, {3.0, 8.0, 9.0}};
  auto s = svd(m);
  double sum = 0.0;
  for (double v : s.singular) sum += v * v;
  CHECK(sum == doctest::Approx(285.0).epsilon(1e-12));
  CHECK(rel_diff(s.reconstruct(), m) < 1e-11);
}

TEST_CASE("svd of an isometry gives unit singular values") {
  Rng rng(5);
  Matrix g = testing::random_matrix(rng, 6, 3);
  auto qr = svd(g);
  Matrix v = qr.left;  // orthonormal columns
  auto s = svd(v);
  for (double val : s.singular) CHECK(val == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("abs_value matches svd and fixes PSD inputs") {
  Matrix n{{0.0, 2.0}, {0.0, 0.0}};
  Matrix a = abs_value(n);
  CHECK(a(0, 0).real() == doctest::Approx(0.0));
  CHECK(a(1, 1).real() == doctest::Approx(2.0));

  Rng rng(7);
  Matrix p = testing::random_psd(rng, 5);
  CHECK(rel_diff(abs_value(p), p) < 1e-10);

  Matrix m = testing::random_matrix(rng, 5, 5);
  auto mu = singular_values(m);
  auto lam = eigvals(abs_value(m));
  for (std::size_t i = 0; i < mu.size(); ++i) CHECK(lam[i] == doctest::Approx(mu[i]).epsilon(1e-10));
}

TEST_CASE("matrix_function identity and square") {
  Rng rng(11);
  Matrix a = testing::random_hermitian(rng, 4);
  CHECK(rel_diff(matrix_function(fn::identity(), a), a) < 1e-12);

  Matrix d{{1.0, 0.0}, {0.0, 2.0}};
  Matrix d2 = matrix_function(fn::square(), d);
  CHECK(d2(0, 0).real() == doctest::Approx(1.0));
  CHECK(d2(1, 1).real() == doctest::Approx(4.0));
}

TEST_CASE("matrix sqrt squares back") {
  Matrix a{{2.0, 1.0}, {1.0, 2.0}};
  Matrix r = matrix_function(fn::sqrt(), a);
  CHECK(rel_diff(r * r, a) < 1e-11);
}

TEST_CASE("matrix_function respects domain") {
  Matrix a{{-1.0, 0.0}, {0.0, 2.0}};
  CHECK_THROWS_AS(matrix_function(fn::sqrt(), a), Error);
}

TEST_CASE("isometry equivariance f(VAV*) = V f(A) V* for f(0)=0") {
  Rng rng(23);
  Matrix a = testing::random_psd(rng, 3);
  Matrix g = testing::random_matrix(rng, 6, 3);
  Matrix v = svd(g).left;
  Matrix lhs = matrix_function(fn::sqrt(), v * a * v.adjoint());
  Matrix rhs = v * matrix_function(fn::sqrt(), a) * v.adjoint();
  CHECK(rel_diff(lhs, rhs) < 1e-9);
}

TEST_CASE("pseudo_power generalized inverse convention") {
  Matrix a{{2.0, 0.0}, {0.0, 0.0}};
  Matrix inv = pseudo_power(a, -1.0);
  CHECK(inv(0, 0).real() == doctest::Approx(0.5));
  CHECK(std::abs(inv(1, 1)) < 1e-14);

  CHECK(rel_diff(pseudo_power(Matrix::identity(3), 0.37), Matrix::identity(3)) < 1e-12);
}

TEST_CASE("pseudo_power of rank-deficient PSD hits the range projection") {
  Rng rng(31);
  Matrix g = testing::random_matrix(rng, 5, 3);
  Matrix a = g * g.adjoint();  // rank 3 in dim 5
  Matrix e = pseudo_power(a, 0.7) * pseudo_power(a, -0.7);
  CHECK(rel_diff(e, range_projection(a)) < 1e-10);
  CHECK(rel_diff(pseudo_power(a, 1.0), a) < 1e-10);
  // group law on the range
  Matrix lhs = pseudo_power(a, 0.4) * pseudo_power(a, 0.6);
  CHECK(rel_diff(lhs, a) < 1e-9);
}

TEST_CASE("polar reconstructs and is unitary for square input") {
  Rng rng(13);
  Matrix m = testing::random_matrix(rng, 4, 4);
  auto pf = polar(m);
  CHECK(rel_diff(pf.partial_isometry * pf.modulus, m) < 1e-11);
  Matrix gram = pf.partial_isometry.adjoint() * pf.partial_isometry;
  CHECK((gram - Matrix::identity(4)).max_abs() < 1e-10);

  // unitary input -> (U, I)
  Matrix u = hermitian_eig(testing::random_hermitian(rng, 4)).frame;
  auto pu = polar(u);
  CHECK(rel_diff(pu.partial_isometry, u) < 1e-10);
  CHECK(rel_diff(pu.modulus, Matrix::identity(4)) < 1e-10);

  // PSD input -> identity factor
  Matrix p = testing::random_psd(rng, 4);
  auto pp = polar(p);
  CHECK(rel_diff(pp.partial_isometry, Matrix::identity(4)) < 1e-9);
  CHECK(rel_diff(pp.modulus, p) < 1e-10);
}

TEST_CASE("complete_to_unitary") {
  // identity columns -> identity
  Matrix v(3, 2);
  v(0, 0) = 1.0;
  v(1, 1) = 1.0;
  Matrix u = complete_to_unitary(v);
  CHECK(rel_diff(u, Matrix::identity(3)) < 1e-12);

  // single unit vector in C^2
  Matrix w(2, 1);
  w(0, 0) = cpx(0.6, 0.0);
  w(1, 0) = cpx(0.0, 0.8);
  Matrix uw = complete_to_unitary(w);
  CHECK((uw.adjoint() * uw - Matrix::identity(2)).max_abs() < 1e-12);
  CHECK(std::abs(uw(0, 0) - w(0, 0)) < 1e-14);

  // square unitary input -> itself
  Rng rng(19);
  Matrix q = hermitian_eig(testing::random_hermitian(rng, 4)).frame;
  CHECK(rel_diff(complete_to_unitary(q), q) < 1e-12);

  CHECK_THROWS_AS(complete_to_unitary(Matrix{{1.0, 1.0}, {0.0, 1.0}}), Error);
}

TEST_CASE("eig eigenvalues match svd singular values on PSD") {
  Rng rng(101);
  Matrix p = testing::random_psd(rng, 6);
  auto lam = eigvals(p);
  auto mu = singular_values(p);
  for (std::size_t i = 0; i < lam.size(); ++i)
    CHECK(lam[i] == doctest::Approx(mu[i]).epsilon(1e-10));
}
