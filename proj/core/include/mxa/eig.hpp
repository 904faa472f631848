#pragma once
//
// Spectral core: Hermitian eigendecomposition (cyclic Jacobi), SVD, matrix
// functional calculus, generalized powers of singular positive matrices,
// polar factors, and unitary completion of isometric columns.
//

#include <functional>
#include <optional>
#include <vector>

#include "mxa/dense.hpp"

namespace mxa {

// Eigenvalues sorted nonincreasing; frame columns are the matching
// orthonormal eigenvectors. frame * diag(eigenvalues) * frame^* reconstructs
// the input.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix frame;

  Matrix reconstruct() const;
};

// Cyclic Jacobi with fixed sweep limit 64; converged when the off-diagonal
// Frobenius mass drops below 1e-14 * ||A||_F. Deterministic for fixed input;
// equal eigenvalues keep the stable order of their Jacobi columns.
SpectralDecomposition hermitian_eig(const Matrix& m);

// Eigenvalues only, convenience.
std::vector<double> eigvals(const Matrix& hermitian);

struct Svd {
  Matrix left;                   // rows x k, orthonormal columns
  std::vector<double> singular;  // k = min(rows, cols), nonincreasing
  Matrix right;                  // cols x k, orthonormal columns

  Matrix reconstruct() const;
};

// Via eigendecomposition of M^*M; null directions are completed
// orthonormally so the frames always have full column rank.
Svd svd(const Matrix& m);

std::vector<double> singular_values(const Matrix& m);

// Largest singular value.
double opnorm(const Matrix& m);

// |M| = (M^*M)^{1/2}, positive semidefinite, cols x cols.
Matrix abs_value(const Matrix& m);

struct PolarFactors {
  Matrix partial_isometry;
  Matrix modulus;
};

// M = partial_isometry * modulus. For square M the isometry acts as the
// identity on the null space, so PSD inputs give factor I exactly.
PolarFactors polar(const Matrix& m);

// Scalar function with the structural flags the orbit machinery needs.
struct FunctionSpec {
  std::function<double(double)> evaluator;
  std::string name;
  bool convex = false;
  bool concave = false;
  bool nondecreasing = false;
  bool nonincreasing = false;
  int value_at_zero_sign = 0;  // sign of f(0)
  bool e_convex = false;       // h(e^t) convex
  bool e_concave = false;
  // Point where a convex (concave) function switches from nonincreasing to
  // nondecreasing (resp. the reverse). Absent for monotone functions.
  std::optional<double> monotonicity_switch;
  double domain_lo = 0.0;
  double domain_hi = 1e300;

  bool monotone() const { return nondecreasing || nonincreasing; }
  double operator()(double t) const { return evaluator(t); }
  void validate() const;  // flag consistency + grid spot-check of the switch
};

namespace fn {
FunctionSpec identity();
FunctionSpec sqrt();
FunctionSpec power(double p);      // t^p: concave for 0<p<1, convex for p>1
FunctionSpec log1p();              // log(1+t), concave nondecreasing
FunctionSpec t_over_1pt();         // t/(1+t), concave nondecreasing
FunctionSpec square();
FunctionSpec expm1();              // e^t - 1, convex nondecreasing
FunctionSpec t_log1p();            // t*log(1+t), convex nondecreasing
FunctionSpec abs();                // |t| on the whole line, switch at 0
FunctionSpec shifted_square(double r);  // (t-r)^2, convex with switch at r
FunctionSpec concave_hat(double s);     // 2st - t^2, concave, switch at s
FunctionSpec neg_power(double p);  // t^p for p<0 on (0, inf)
FunctionSpec e_convex_log1p_pow(double alpha);   // log(1+t^a)
FunctionSpec e_concave_log_ratio(double alpha);  // log(t^a/(t+1))
}  // namespace fn

// frame * diag(f(lambda)) * frame^*; throws DomainError if an eigenvalue
// leaves [domain_lo, domain_hi].
Matrix matrix_function(const FunctionSpec& f, const Matrix& hermitian);
Matrix matrix_function(const std::function<double(double)>& f, const Matrix& hermitian);

// A^t on the range of A, zero on the null space; negative t uses the
// generalized inverse convention. Requires A PSD.
Matrix pseudo_power(const Matrix& psd, double t);

// Orthogonal projection onto the range of a PSD matrix.
Matrix range_projection(const Matrix& psd);

// Extends V (orthonormal columns, rows >= cols) to a square unitary whose
// first cols columns equal V. Deterministic completion from canonical basis
// vectors.
Matrix complete_to_unitary(const Matrix& v);

// General matrix exponential (scaling and squaring, Taylor core).
Matrix expm(const Matrix& m);

// lambda_min of a Hermitian matrix (smallest eigenvalue).
double min_eig(const Matrix& hermitian);

// PSD check: lambda_min >= -tau * max(1, ||m||_op).
bool is_psd(const Matrix& m, double tau = tol::psd);
void require_psd(const Matrix& m, const char* who, double tau = tol::psd);

}  // namespace mxa
