#include "mxa/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mxa {

Matrix SpectralDecomposition::reconstruct() const {
  Matrix d = Matrix::diag(eigenvalues);
  return frame * d * frame.adjoint();
}

namespace {

double offdiag_frobenius(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

SpectralDecomposition hermitian_eig(const Matrix& m) {
  m.require_square("hermitian_eig");
  if (!m.is_hermitian()) throw Error(Errc::NotHermitian, "hermitian_eig");

  const std::size_t n = m.rows();
  Matrix a = hermitian_part(m);  // symmetrize roundoff
  Matrix v = Matrix::identity(n);
  const double total = std::max(a.frobenius(), 1e-300);

  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_frobenius(a) <= 1e-14 * total) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cpx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const cpx phase = apq / mag;  // apq = mag * phase
        const double tau = (aqq - app) / (2.0 * mag);
        const double sign = tau >= 0.0 ? 1.0 : -1.0;
        const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Unitary J differs from the identity only in the (p,q) plane:
        //   J[p,p] = c        J[p,q] = s*phase
        //   J[q,p] = -s*conj(phase)   J[q,q] = c
        // Update A <- J^* A J and V <- V J.
        for (std::size_t k = 0; k < n; ++k) {
          const cpx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cpx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cpx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * phase * vkp + c * vkq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cpx(a(p, p).real(), 0.0);
        a(q, q) = cpx(a(q, q).real(), 0.0);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.frame = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.frame(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> eigvals(const Matrix& hermitian) {
  return hermitian_eig(hermitian).eigenvalues;
}

Matrix Svd::reconstruct() const {
  Matrix s(singular.size(), singular.size());
  for (std::size_t i = 0; i < singular.size(); ++i) s(i, i) = singular[i];
  return left * s * right.adjoint();
}

namespace {

// Deterministic Gram-Schmidt completion of `have` orthonormal columns to a
// full basis of C^n. Each new column starts from the canonical basis vector
// farthest from the current span (largest residual), which always exists.
void complete_columns(Matrix& frame, std::size_t have) {
  const std::size_t n = frame.rows();
  for (std::size_t filled = have; filled < frame.cols(); ++filled) {
    // residual^2 of e_i against the span is 1 - (row i norm)^2
    std::size_t best = 0;
    double best_res = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < filled; ++j) row += std::norm(frame(i, j));
      const double res = 1.0 - row;
      if (res > best_res) {
        best_res = res;
        best = i;
      }
    }
    std::vector<cpx> w(n, 0.0);
    w[best] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < filled; ++j) {
        cpx dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(frame(i, j)) * w[i];
        for (std::size_t i = 0; i < n; ++i) w[i] -= dot * frame(i, j);
      }
    }
    double norm = 0.0;
    for (const auto& x : w) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm < 1e-6) throw Error(Errc::DomainError, "orthonormal completion failed");
    for (std::size_t i = 0; i < n; ++i) frame(i, filled) = w[i] / norm;
  }
}

}  // namespace

Svd svd(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t k = std::min(rows, cols);
  Svd out;
  if (k == 0) return out;

  if (rows < cols) {
    // Gram the smaller side.
    Svd t = svd(m.adjoint());
    out.left = t.right;
    out.right = t.left;
    out.singular = t.singular;
    return out;
  }

  const Matrix gram = m.adjoint() * m;  // cols x cols
  SpectralDecomposition eg = hermitian_eig(gram);

  out.singular.resize(k);
  out.right = Matrix(cols, k);
  out.left = Matrix(rows, k);
  // The Gram eigenvalues carry O(eps ||M||^2) noise, so singular values below
  // sqrt of that level are numerically zero.
  const double lam_top = std::max(eg.eigenvalues.empty() ? 0.0 : eg.eigenvalues[0], 0.0);
  const double gram_floor = 1e-13 * std::max(lam_top, 1e-300);

  std::size_t nonzero = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const double lam = eg.eigenvalues[j];
    out.singular[j] = lam > gram_floor ? std::sqrt(lam) : 0.0;
    for (std::size_t i = 0; i < cols; ++i) out.right(i, j) = eg.frame(i, j);
    if (out.singular[j] > 0.0) nonzero = j + 1;
  }
  for (std::size_t j = 0; j < nonzero; ++j) {
    const Matrix lj = m * out.right.column(j);
    for (std::size_t i = 0; i < rows; ++i) out.left(i, j) = lj(i, 0) / out.singular[j];
    // Re-orthonormalize against earlier columns: recovery through small
    // singular values loses orthogonality.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < j; ++p) {
        cpx dot = 0.0;
        for (std::size_t i = 0; i < rows; ++i) dot += std::conj(out.left(i, p)) * out.left(i, j);
        for (std::size_t i = 0; i < rows; ++i) out.left(i, j) -= dot * out.left(i, p);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < rows; ++i) norm += std::norm(out.left(i, j));
      norm = std::sqrt(norm);
      if (norm > 1e-300)
        for (std::size_t i = 0; i < rows; ++i) out.left(i, j) /= norm;
    }
  }
  if (nonzero < k) complete_columns(out.left, nonzero);
  return out;
}

std::vector<double> singular_values(const Matrix& m) {
  // Hermitian inputs bypass the Gram squaring (which costs half the digits
  // on small singular values): they are just absolute eigenvalues.
  if (m.is_square() && m.is_hermitian(tol::herm * 100)) {
    auto vals = eigvals(hermitian_part(m));
    for (auto& v : vals) v = std::abs(v);
    std::sort(vals.rbegin(), vals.rend());
    return vals;
  }
  return svd(m).singular;
}

double opnorm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  auto sv = singular_values(m);
  return sv.empty() ? 0.0 : sv[0];
}

Matrix abs_value(const Matrix& m) {
  Svd s = svd(m);
  Matrix d(s.singular.size(), s.singular.size());
  for (std::size_t i = 0; i < s.singular.size(); ++i) d(i, i) = s.singular[i];
  Matrix r = s.right * d * s.right.adjoint();
  return hermitian_part(r);
}

PolarFactors polar(const Matrix& m) {
  Svd s = svd(m);
  PolarFactors out;
  out.modulus = abs_value(m);
  if (m.is_square()) {
    // Map null(M) to itself so that PSD inputs give the identity factor:
    // fill the left null columns with the right null columns.
    const std::size_t n = m.rows();
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < s.singular.size(); ++j)
      if (s.singular[j] > 0.0) nonzero = j + 1;
    Matrix left = s.left;
    for (std::size_t j = nonzero; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) left(i, j) = s.right(i, j);
    // Re-orthonormalize the copied block against the live columns.
    for (std::size_t j = nonzero; j < n; ++j) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t p = 0; p < j; ++p) {
          cpx dot = 0.0;
          for (std::size_t i = 0; i < n; ++i) dot += std::conj(left(i, p)) * left(i, j);
          for (std::size_t i = 0; i < n; ++i) left(i, j) -= dot * left(i, p);
        }
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += std::norm(left(i, j));
      norm = std::sqrt(norm);
      if (norm < 1e-8) {
        // Copied direction collapsed; fall back to canonical completion.
        complete_columns(left, j);
        break;
      }
      for (std::size_t i = 0; i < n; ++i) left(i, j) /= norm;
    }
    out.partial_isometry = left * s.right.adjoint();
  } else {
    out.partial_isometry = s.left * s.right.adjoint();
  }
  return out;
}

Matrix matrix_function(const FunctionSpec& f, const Matrix& hermitian) {
  SpectralDecomposition eg = hermitian_eig(hermitian);
  std::vector<double> vals(eg.eigenvalues.size());
  double top = 0.0;
  for (double v : eg.eigenvalues) top = std::max(top, std::abs(v));
  const double slack = 1e-12 * std::max(1.0, top);
  // Eigenvalues within roundoff of 0 snap to exactly 0 so that functions with
  // unbounded derivative at the origin do not amplify spectral noise.
  const double snap = 1e-13 * top;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    double t = eg.eigenvalues[i];
    if (std::abs(t) <= snap) t = 0.0;
    if (t < f.domain_lo - slack || t > f.domain_hi + slack)
      throw Error(Errc::DomainError, "matrix_function: eigenvalue outside domain of " + f.name);
    t = std::min(std::max(t, f.domain_lo), f.domain_hi);
    vals[i] = f.evaluator(t);
  }
  Matrix r = eg.frame * Matrix::diag(vals) * eg.frame.adjoint();
  return hermitian_part(r);
}

Matrix matrix_function(const std::function<double(double)>& f, const Matrix& hermitian) {
  FunctionSpec spec;
  spec.evaluator = f;
  spec.name = "ad-hoc";
  spec.domain_lo = -1e300;
  spec.domain_hi = 1e300;
  return matrix_function(spec, hermitian);
}

Matrix pseudo_power(const Matrix& psd, double t) {
  require_psd(psd, "pseudo_power");
  SpectralDecomposition eg = hermitian_eig(hermitian_part(psd));
  const double top = eg.eigenvalues.empty() ? 0.0 : std::max(eg.eigenvalues[0], 0.0);
  const double floor = tol::eig_floor * std::max(top, 1e-300);
  std::vector<double> vals(eg.eigenvalues.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double lam = eg.eigenvalues[i];
    vals[i] = lam > floor ? std::pow(lam, t) : 0.0;
  }
  Matrix r = eg.frame * Matrix::diag(vals) * eg.frame.adjoint();
  return hermitian_part(r);
}

Matrix range_projection(const Matrix& psd) {
  require_psd(psd, "range_projection");
  SpectralDecomposition eg = hermitian_eig(hermitian_part(psd));
  const double top = eg.eigenvalues.empty() ? 0.0 : std::max(eg.eigenvalues[0], 0.0);
  const double floor = tol::eig_floor * std::max(top, 1e-300);
  std::vector<double> vals(eg.eigenvalues.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = eg.eigenvalues[i] > floor ? 1.0 : 0.0;
  Matrix r = eg.frame * Matrix::diag(vals) * eg.frame.adjoint();
  return hermitian_part(r);
}

Matrix complete_to_unitary(const Matrix& v) {
  const std::size_t rows = v.rows(), cols = v.cols();
  if (rows < cols) throw Error(Errc::NotIsometry, "complete_to_unitary: more columns than rows");
  Matrix gram = v.adjoint() * v;
  if (rel_diff(gram, Matrix::identity(cols)) > tol::orth * 10.0 &&
      (gram - Matrix::identity(cols)).max_abs() > tol::orth)
    throw Error(Errc::NotIsometry, "complete_to_unitary: columns not orthonormal");
  Matrix u(rows, rows);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) u(i, j) = v(i, j);
  complete_columns(u, cols);
  return u;
}

Matrix expm(const Matrix& m) {
  m.require_square("expm");
  const std::size_t n = m.rows();
  int squarings = 0;
  double scale = m.max_abs() * n;
  while (scale > 0.25) {
    scale *= 0.5;
    ++squarings;
  }
  Matrix x = m * std::pow(0.5, squarings);
  Matrix term = Matrix::identity(n);
  Matrix sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = term * x * (1.0 / k);
    sum += term;
    if (term.max_abs() < 1e-18 * std::max(1.0, sum.max_abs())) break;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

double min_eig(const Matrix& hermitian) {
  auto vals = eigvals(hermitian);
  return vals.empty() ? 0.0 : vals.back();
}

bool is_psd(const Matrix& m, double tau) {
  if (!m.is_square() || !m.is_hermitian(tol::herm * 100)) return false;
  auto vals = eigvals(hermitian_part(m));
  if (vals.empty()) return true;
  const double scale = std::max(std::abs(vals.front()), std::abs(vals.back()));
  return vals.back() >= -tau * std::max(1.0, scale);
}

void require_psd(const Matrix& m, const char* who, double tau) {
  if (!is_psd(m, tau)) throw Error(Errc::NotPSD, who);
}

}  // namespace mxa
