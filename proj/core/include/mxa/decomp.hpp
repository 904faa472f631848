#pragma once
//
// Constructive block-matrix decompositions. Every operation returns explicit
// unitaries/isometries together with a residual certificate that can be
// re-verified from its stored fields alone.
//

#include <cstdint>
#include <string>
#include <vector>

#include "mxa/eig.hpp"

namespace mxa {

struct BlockRect {
  std::size_t row_start = 0, row_end = 0, col_start = 0, col_end = 0;

  std::size_t rows() const { return row_end - row_start; }
  std::size_t cols() const { return col_end - col_start; }
};

// A matrix plus a block layout. Blocks must tile the base exactly.
struct PartitionedMatrix {
  Matrix base;
  std::vector<BlockRect> blocks;

  void validate() const;  // disjoint + exact cover, throws BadPartition
  Matrix block_matrix(std::size_t k) const;
  bool column_compatible() const;  // pairwise equal or disjoint column sets
  bool row_compatible() const;
};

struct DecompositionTerm {
  Matrix factor;  // orthonormal columns
  Matrix middle;  // Hermitian
  double weight = 1.0;
};

struct DecompositionCertificate {
  Matrix target;
  std::vector<DecompositionTerm> terms;
  double residual = 0.0;  // ||target - sum w V M V*||_F / ||target||_F

  Matrix reconstruct() const;
  double compute_residual() const;
  // Worst deviation of factor^* factor from the identity.
  double factor_orthonormality() const;
  // Worst Hermiticity defect among middles, relative.
  double middle_hermiticity() const;
  void finalize();  // fills residual
};

// H PSD with a 2x2 block partition (square diagonal blocks n, m):
//   H = U (A + 0) U^* + V (0 + B) V^*,  U, V unitary in M_{n+m}.
DecompositionCertificate split_positive_2x2(const Matrix& h, std::size_t top);

// H PSD with p x p square diagonal blocks: H = sum_i U_i H_ii U_i^*,
// U_i isometries with n_i columns.
DecompositionCertificate split_positive_multi(const Matrix& h,
                                              const std::vector<std::size_t>& sizes);

// H = [A X; X B] PSD with Hermitian off-diagonal block:
//   H = (U (A+B) U^* + V (A+B) V^*) / 2,  U, V in M_{2n,n} isometries.
DecompositionCertificate hermitian_offdiag_halves(const Matrix& h);

// H PSD in beta x beta Hermitian blocks of size n, beta dyadic (2, 4, 8):
//   (+)^m H = (1/beta) sum_k V_k ((+)^m Delta) V_k^*,  m = 2^beta.
// beta = 8 blows the ambient dimension up to 2048 n and must be opted into.
DecompositionCertificate clifford_partial_trace(const Matrix& h, std::size_t beta,
                                                bool allow_beta8 = false);

// |A|^2 = sum_k U_k |A_k|^2 U_k^* for row compatible, column compatible, or
// arbitrary four-block partitions. Refuses unsupported layouts (for example
// the five-block pinwheel).
DecompositionCertificate pythagoras(const PartitionedMatrix& pa);

// The beta anticommuting signed-permutation generators in M_{2^beta}.
std::vector<Matrix> clifford_generators(std::size_t beta);

// Eigenvalue dominance lambda_k(X) <= lambda_k(Y) gives X <= U Y U^*.
Matrix orbit_dominate(const Matrix& x, const Matrix& y);

struct OrbitPair {
  Matrix u, v;
};

// f(C) <= (U M U^* + V M V^*)/2 via the spectral split of C at the
// monotonicity switch of f (golden-section argmin when absent). For monotone
// f this degenerates to V = U and a single orbit.
OrbitPair orbit_two_sided(const FunctionSpec& f, const Matrix& c, const Matrix& m);

// Raw form: X <= (U M U^* + V M V^*)/2 from the spectral split of X itself
// at the threshold r. Valid whenever the per-part dominance holds (checked;
// throws SplitDominanceFails otherwise).
OrbitPair orbit_two_sided(const Matrix& x, const Matrix& m, double r);

// Concave direction: f(C) >= (U M U^* + V M V^*)/2.
OrbitPair orbit_two_sided_concave(const FunctionSpec& f, const Matrix& c, const Matrix& m);

// f monotone concave, f(0) >= 0: f(A+B) <= U f(A) U^* + V f(B) V^*.
OrbitPair subadditive_orbit(const FunctionSpec& f, const Matrix& a, const Matrix& b);

// g monotone convex, g(0) <= 0: g(A+B) >= U g(A) U^* + V g(B) V^*.
OrbitPair superadditive_orbit(const FunctionSpec& g, const Matrix& a, const Matrix& b);

struct HhDecomposition {
  Matrix u, v;      // 2n x n isometries
  Matrix mix1, mix2;  // (1-x)A + xB and xA + (1-x)B (or the C*-mixes)
};

// f monotone concave, f(0) >= 0, 0 < x < 1:
//   f(A) + f(B)  <=  U f(mix1) U^* + V f(mix2) V^*   (direct sum on the left)
HhDecomposition hh_decomposition(const FunctionSpec& f, const Matrix& a, const Matrix& b,
                                 double x);

// Commuting normal weights X, Y with X^*X + Y^*Y = I in place of scalars.
HhDecomposition hh_decomposition_weighted(const FunctionSpec& f, const Matrix& a,
                                          const Matrix& b, const Matrix& wx, const Matrix& wy);

// d majorized by the eigenvalues of B: unitary W with diag(W B W^*) = d.
Matrix schur_horn(const Matrix& b, const std::vector<double>& d);

// Diagonal part of B as the exact average of n conjugations by powers of the
// Fourier phase matrix.
DecompositionCertificate pinch_diagonal_average(const Matrix& b);

// A majorized by B (trace equality): A = (1/n) sum_k U_k B U_k^*.
DecompositionCertificate majorize_average(const Matrix& a, const Matrix& b);

// Positive A_i summing to the identity on S: mutually orthogonal projections
// P_i on (+)^n S with top-left block A_i.
std::vector<Matrix> stinespring_dilation(const std::vector<Matrix>& images);

// Positive map given by its values on the spectral projections of A: Kraus
// factors Z_{i,j} with Phi(f(A)) = sum Z^* f(A) Z on the algebra of A.
struct CommutativeKraus {
  std::vector<Matrix> factors;
  SpectralDecomposition spectral;  // of A

  Matrix apply(const Matrix& x) const;  // sum Z^* X Z
};

CommutativeKraus kraus_on_commutative(const Matrix& a, const std::vector<Matrix>& images);

}  // namespace mxa
