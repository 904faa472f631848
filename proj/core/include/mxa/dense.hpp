#pragma once
//
// Dense complex matrices, row-major storage. This is the single carrier type
// for every operator in the library; everything else (eigensolvers, norms,
// decompositions, checkers) is built on top of it.
//

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mxa {

using cpx = std::complex<double>;

// Error codes shared across the library. Thrown wrapped in mxa::Error.
enum class Errc {
  NotSquare,
  NotHermitian,
  NotPSD,
  NotIsometry,
  DomainError,
  BadParameter,
  DimensionMismatch,
  BadPartition,
  OffDiagNotHermitian,
  NotDyadic,
  BlocksNotHermitian,
  UnsupportedPartition,
  NotDominated,
  SplitDominanceFails,
  FlagViolation,
  NotMajorized,
  NotResolutionOfIdentity,
  NotPositiveOnProjections,
  UnknownTheorem,
  GeneratorUnavailable,
  BadConfig,
  IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Global tolerances. All relative checks scale by the operator (or Frobenius)
// norm of the input they guard.
namespace tol {
inline constexpr double herm = 1e-10;
inline constexpr double orth = 1e-10;
inline constexpr double eq = 1e-9;
inline constexpr double psd = 1e-10;
inline constexpr double maj = 1e-8;
inline constexpr double cert = 1e-9;
inline constexpr double check = 1e-8;
inline constexpr double eig_floor = 1e-14;  // eigenvalues below floor*lambda_1 count as zero
}  // namespace tol

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cpx(0.0, 0.0)) {}
  Matrix(std::initializer_list<std::initializer_list<cpx>> init);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diag(const std::vector<double>& d);
  static Matrix diag(const std::vector<cpx>& d);
  // Column vector from entries.
  static Matrix col_vector(const std::vector<cpx>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return a_.empty(); }

  cpx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cpx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<cpx>& data() const { return a_; }
  std::vector<cpx>& data() { return a_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conjugate() const;

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator*(cpx s) const;
  Matrix operator*(double s) const;
  Matrix operator-() const { return *this * cpx(-1.0, 0.0); }
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);

  cpx trace() const;
  double frobenius() const;
  double max_abs() const;

  // Entrywise (Schur/Hadamard) product.
  Matrix schur(const Matrix& rhs) const;
  Matrix kron(const Matrix& rhs) const;

  // Half-open ranges [r0, r1) x [c0, c1).
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix column(std::size_t j) const;

  bool is_square() const { return rows_ == cols_; }
  // ||M - M*||_F <= tau * max(1, ||M||_F)
  bool is_hermitian(double tau = tol::herm) const;

  void require_square(const char* who) const;
  void require_hermitian(const char* who, double tau = tol::herm) const;

 private:
  std::size_t rows_, cols_;
  std::vector<cpx> a_;
};

inline Matrix operator*(cpx s, const Matrix& m) { return m * s; }
inline Matrix operator*(double s, const Matrix& m) { return m * s; }

Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix direct_sum(const std::vector<Matrix>& parts);
// n copies of a along the diagonal.
Matrix direct_sum_copies(const Matrix& a, std::size_t n);

// Hermitian part (M + M*)/2 and skew part (M - M*)/(2i), both Hermitian.
Matrix hermitian_part(const Matrix& m);
Matrix skew_part_i(const Matrix& m);

double rel_diff(const Matrix& a, const Matrix& b);

}  // namespace mxa
