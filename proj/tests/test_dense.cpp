#include <doctest.h>

#include "mxa/dense.hpp"
#include "mxa/json_io.hpp"
#include "mxa/rng.hpp"
#include "test_helpers.hpp"

using namespace mxa;

TEST_CASE("matrix arithmetic basics") {
  Matrix a{{1.0, 2.0}, {3.0, 4.0}};
  Matrix b{{0.0, 1.0}, {1.0, 0.0}};
  Matrix c = a * b;
  CHECK(c(0, 0) == cpx(2.0, 0.0));
  CHECK(c(0, 1) == cpx(1.0, 0.0));
  CHECK(c(1, 0) == cpx(4.0, 0.0));
  CHECK(c(1, 1) == cpx(3.0, 0.0));

  CHECK((a + b - b - a).frobenius() == doctest::Approx(0.0));
  CHECK(a.trace() == cpx(5.0, 0.0));
}

TEST_CASE("adjoint is an involution") {
  Rng rng(17);
  Matrix m = testing::random_matrix(rng, 4, 7);
  CHECK(rel_diff(m.adjoint().adjoint(), m) == 0.0);
}

TEST_CASE("direct sums and blocks") {
  Matrix a{{1.0}};
  Matrix b{{2.0, 0.0}, {0.0, 3.0}};
  Matrix s = direct_sum(a, b);
  CHECK(s.rows() == 3);
  CHECK(s(1, 1) == cpx(2.0, 0.0));
  CHECK(rel_diff(s.block(1, 3, 1, 3), b) == 0.0);

  Matrix copies = direct_sum_copies(b, 3);
  CHECK(copies.rows() == 6);
  CHECK(copies(5, 5) == cpx(3.0, 0.0));
}

TEST_CASE("kron dimensions and values") {
  Matrix a{{1.0, 2.0}};
  Matrix b{{3.0}, {4.0}};
  Matrix k = a.kron(b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 2);
  CHECK(k(0, 0) == cpx(3.0, 0.0));
  CHECK(k(1, 1) == cpx(8.0, 0.0));
}

TEST_CASE("hermitian check tolerates roundoff only") {
  Rng rng(3);
  Matrix h = testing::random_hermitian(rng, 5);
  CHECK(h.is_hermitian());
  h(0, 1) += cpx(1e-3, 0.0);
  CHECK_FALSE(h.is_hermitian());
}

TEST_CASE("matrix JSON round-trip is exact") {
  Rng rng(99);
  Matrix m = testing::random_matrix(rng, 3, 5);
  Matrix back = matrix_from_string(matrix_to_string(m));
  REQUIRE(back.rows() == m.rows());
  REQUIRE(back.cols() == m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) CHECK(back(i, j) == m(i, j));
}

TEST_CASE("dimension mismatch throws") {
  Matrix a(2, 3), b(2, 2);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(b * a.adjoint(), Error);
}
