#pragma once

#include <doctest.h>

#include "mxa/dense.hpp"
#include "mxa/rng.hpp"

namespace mxa::testing {

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cpx(rng.gauss(), rng.gauss());
  return m;
}

inline Matrix random_hermitian(Rng& rng, std::size_t n) {
  Matrix g = random_matrix(rng, n, n);
  return hermitian_part(g);
}

inline Matrix random_psd(Rng& rng, std::size_t n) {
  Matrix g = random_matrix(rng, n, n);
  return g * g.adjoint();
}

}  // namespace mxa::testing
