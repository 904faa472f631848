#pragma once
//
// Seeded random instances for the checker and search machinery. Every
// generator asserts its defining predicate on the way out.
//

#include <cstdint>
#include <vector>

#include "mxa/dense.hpp"
#include "mxa/rng.hpp"

namespace mxa {

namespace gen {

Matrix ginibre(Rng& rng, std::size_t rows, std::size_t cols);
Matrix hermitian(Rng& rng, std::size_t n);
// PSD with condition number capped at roughly `kappa`; log-order margins of
// high-power products are only meaningful for moderate conditioning.
Matrix psd(Rng& rng, std::size_t n, double kappa = 1e4);
Matrix unitary(Rng& rng, std::size_t n);
Matrix normal_matrix(Rng& rng, std::size_t n);
Matrix contraction(Rng& rng, std::size_t n);
Matrix expansive(Rng& rng, std::size_t n);
Matrix isometry(Rng& rng, std::size_t rows, std::size_t cols);
Matrix projection(Rng& rng, std::size_t n);          // random rank
Matrix semi_unitary(Rng& rng, std::size_t n);        // S*S = SS* = projection

// A = f(C), B = g(C) for nondecreasing f, g: commuting, co-monotone spectra.
struct MonotonePair {
  Matrix a, b;
};
MonotonePair monotone_pair(Rng& rng, std::size_t n);
MonotonePair antimonotone_pair(Rng& rng, std::size_t n);

// PSD in beta x beta Hermitian blocks of size n.
Matrix psd_hermitian_blocks(Rng& rng, std::size_t beta, std::size_t n);

// PSD [A X; X* B] with Hermitian X, built as [|X|+P, X; X, |X|+Q].
Matrix herm_offdiag_block(Rng& rng, std::size_t n);

// PSD [A X; X* B] with arbitrary prescribed off-diagonal block X
// (A = X B^{-1} X^* + R route, Schur-complement verified).
Matrix psd_with_offdiag(Rng& rng, const Matrix& x);

// Normal commuting X, Y with X*X + Y*Y = I.
struct WeightPair {
  Matrix x, y;
};
WeightPair commuting_normal_weights(Rng& rng, std::size_t n);
// X*X + Y*Y = XX* + YY* = I (doubly stochastic pair).
WeightPair ds_weight_pair(Rng& rng, std::size_t n);

// Kraus family {Z_i} with sum Z_i^* Z_i <= I; apply as sum Z^* X Z.
struct KrausMap {
  std::vector<Matrix> ops;
  bool unital = false;

  Matrix apply(const Matrix& x) const;
  Matrix apply_identity(std::size_t n) const;
};
KrausMap subunital_kraus_map(Rng& rng, std::size_t n, std::size_t terms);
// sum Z_i^* Z_i = I exactly (columns of a Haar unitary).
KrausMap unital_kraus_map(Rng& rng, std::size_t n, std::size_t terms);

// PSD with unit diagonal (Schur multiplier with diagonal <= 1).
Matrix correlation(Rng& rng, std::size_t n);

}  // namespace gen

}  // namespace mxa
