#include "mxa/dense.hpp"

#include <algorithm>
#include <cmath>

namespace mxa {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotPSD: return "NotPSD";
    case Errc::NotIsometry: return "NotIsometry";
    case Errc::DomainError: return "DomainError";
    case Errc::BadParameter: return "BadParameter";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadPartition: return "BadPartition";
    case Errc::OffDiagNotHermitian: return "OffDiagNotHermitian";
    case Errc::NotDyadic: return "NotDyadic";
    case Errc::BlocksNotHermitian: return "BlocksNotHermitian";
    case Errc::UnsupportedPartition: return "UnsupportedPartition";
    case Errc::NotDominated: return "NotDominated";
    case Errc::SplitDominanceFails: return "SplitDominanceFails";
    case Errc::FlagViolation: return "FlagViolation";
    case Errc::NotMajorized: return "NotMajorized";
    case Errc::NotResolutionOfIdentity: return "NotResolutionOfIdentity";
    case Errc::NotPositiveOnProjections: return "NotPositiveOnProjections";
    case Errc::UnknownTheorem: return "UnknownTheorem";
    case Errc::GeneratorUnavailable: return "GeneratorUnavailable";
    case Errc::BadConfig: return "BadConfig";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cpx>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged initializer");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diag(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::diag(const std::vector<cpx>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::col_vector(const std::vector<cpx>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conjugate() const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = std::conj(a_[i]);
  return r;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Errc::DimensionMismatch, "operator+");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += rhs.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Errc::DimensionMismatch, "operator-");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= rhs.a_[i];
  return r;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Errc::DimensionMismatch, "operator+=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Errc::DimensionMismatch, "operator-=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::DimensionMismatch, "operator*");
  Matrix r(rows_, rhs.cols_);
  const std::size_t n = rows_, k = cols_, m = rhs.cols_;
  // i-k-j loop order keeps both operands in row-major streaming access.
  for (std::size_t i = 0; i < n; ++i) {
    cpx* ri = &r.a_[i * m];
    for (std::size_t p = 0; p < k; ++p) {
      const cpx aip = a_[i * k + p];
      if (aip == cpx(0.0, 0.0)) continue;
      const cpx* bp = &rhs.a_[p * m];
      for (std::size_t j = 0; j < m; ++j) ri[j] += aip * bp[j];
    }
  }
  return r;
}

Matrix Matrix::operator*(cpx s) const {
  Matrix r = *this;
  for (auto& v : r.a_) v *= s;
  return r;
}

Matrix Matrix::operator*(double s) const { return *this * cpx(s, 0.0); }

cpx Matrix::trace() const {
  require_square("trace");
  cpx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double s = 0.0;
  for (const auto& v : a_) s = std::max(s, std::abs(v));
  return s;
}

Matrix Matrix::schur(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::DimensionMismatch, "schur");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] *= rhs.a_[i];
  return r;
}

Matrix Matrix::kron(const Matrix& rhs) const {
  Matrix r(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const cpx v = (*this)(i, j);
      if (v == cpx(0.0, 0.0)) continue;
      for (std::size_t p = 0; p < rhs.rows_; ++p)
        for (std::size_t q = 0; q < rhs.cols_; ++q)
          r(i * rhs.rows_ + p, j * rhs.cols_ + q) = v * rhs(p, q);
    }
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  if (r1 < r0 || c1 < c0 || r1 > rows_ || c1 > cols_)
    throw Error(Errc::BadPartition, "block range");
  Matrix r(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) r(i - r0, j - c0) = (*this)(i, j);
  return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw Error(Errc::BadPartition, "set_block range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::column(std::size_t j) const { return block(0, rows_, j, j + 1); }

bool Matrix::is_hermitian(double tau) const {
  if (!is_square()) return false;
  double off = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      off += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  return std::sqrt(off) <= tau * std::max(1.0, frobenius());
}

void Matrix::require_square(const char* who) const {
  if (!is_square()) throw Error(Errc::NotSquare, who);
}

void Matrix::require_hermitian(const char* who, double tau) const {
  require_square(who);
  if (!is_hermitian(tau)) throw Error(Errc::NotHermitian, who);
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

Matrix direct_sum(const std::vector<Matrix>& parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) rows += p.rows(), cols += p.cols();
  Matrix r(rows, cols);
  std::size_t i = 0, j = 0;
  for (const auto& p : parts) {
    r.set_block(i, j, p);
    i += p.rows();
    j += p.cols();
  }
  return r;
}

Matrix direct_sum_copies(const Matrix& a, std::size_t n) {
  Matrix r(a.rows() * n, a.cols() * n);
  for (std::size_t k = 0; k < n; ++k) r.set_block(k * a.rows(), k * a.cols(), a);
  return r;
}

Matrix hermitian_part(const Matrix& m) {
  m.require_square("hermitian_part");
  return (m + m.adjoint()) * 0.5;
}

Matrix skew_part_i(const Matrix& m) {
  m.require_square("skew_part_i");
  return (m - m.adjoint()) * cpx(0.0, -0.5);
}

double rel_diff(const Matrix& a, const Matrix& b) {
  double scale = std::max(a.frobenius(), b.frobenius());
  if (scale == 0.0) return 0.0;
  return (a - b).frobenius() / scale;
}

}  // namespace mxa
