#include "mxa/generators.hpp"

#include <algorithm>
#include <cmath>

#include "mxa/eig.hpp"

namespace mxa {
namespace gen {

Matrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cpx(rng.gauss(), rng.gauss());
  return m;
}

Matrix hermitian(Rng& rng, std::size_t n) { return hermitian_part(ginibre(rng, n, n)); }

Matrix psd(Rng& rng, std::size_t n, double kappa) {
  Matrix g = ginibre(rng, n, n);
  Matrix p = g * g.adjoint();
  const double top = opnorm(p);
  return p + Matrix::identity(n) * (top / std::max(kappa, 1.0));
}

Matrix unitary(Rng& rng, std::size_t n) {
  // Eigenframe of a GUE matrix is Haar-distributed up to column phases;
  // randomize the phases as well.
  Matrix q = hermitian_eig(hermitian(rng, n)).frame;
  std::vector<cpx> ph(n);
  for (auto& v : ph) v = std::exp(cpx(0.0, rng.uniform(0.0, 6.283185307179586)));
  return q * Matrix::diag(ph);
}

Matrix normal_matrix(Rng& rng, std::size_t n) {
  Matrix q = unitary(rng, n);
  std::vector<cpx> z(n);
  for (auto& v : z) v = cpx(rng.gauss(), rng.gauss());
  return q * Matrix::diag(z) * q.adjoint();
}

Matrix contraction(Rng& rng, std::size_t n) {
  Matrix g = ginibre(rng, n, n);
  return g * (1.0 / (opnorm(g) * (1.0 + rng.uniform())));
}

Matrix expansive(Rng& rng, std::size_t n) {
  // Z = U (I + P) with P PSD.
  Matrix p = psd(rng, n);
  return unitary(rng, n) * (Matrix::identity(n) + p);
}

Matrix isometry(Rng& rng, std::size_t rows, std::size_t cols) {
  return svd(ginibre(rng, rows, cols)).left;
}

Matrix projection(Rng& rng, std::size_t n) {
  const std::size_t rank = 1 + rng.below(n);
  Matrix v = isometry(rng, n, rank);
  return hermitian_part(v * v.adjoint());
}

Matrix semi_unitary(Rng& rng, std::size_t n) {
  const std::size_t rank = 1 + rng.below(n);
  Matrix q = unitary(rng, n);
  Matrix u1 = unitary(rng, rank);
  Matrix inner(n, n);
  inner.set_block(0, 0, u1);
  return q * inner * q.adjoint();
}

MonotonePair monotone_pair(Rng& rng, std::size_t n) {
  Matrix q = unitary(rng, n);
  std::vector<double> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = rng.uniform(0.0, 2.0);
    b[i] = rng.uniform(0.0, 2.0);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  MonotonePair out;
  out.a = hermitian_part(q * Matrix::diag(a) * q.adjoint());
  out.b = hermitian_part(q * Matrix::diag(b) * q.adjoint());
  return out;
}

MonotonePair antimonotone_pair(Rng& rng, std::size_t n) {
  // Shared eigenbasis, one spectrum reversed.
  Matrix q = unitary(rng, n);
  std::vector<double> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = rng.uniform(0.0, 2.0);
    b[i] = rng.uniform(0.0, 2.0);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.rbegin(), b.rend());
  MonotonePair p;
  p.a = hermitian_part(q * Matrix::diag(a) * q.adjoint());
  p.b = hermitian_part(q * Matrix::diag(b) * q.adjoint());
  return p;
}

Matrix psd_hermitian_blocks(Rng& rng, std::size_t beta, std::size_t n) {
  // Sum of P_j (x) B_j with real symmetric PSD P_j and PSD B_j, plus a
  // commuting-family Gram term [T S_i S_j T].
  Matrix h(beta * n, beta * n);
  for (int rep = 0; rep < 2; ++rep) {
    Matrix g(beta, beta);
    for (std::size_t i = 0; i < beta; ++i)
      for (std::size_t j = 0; j < beta; ++j) g(i, j) = rng.gauss();
    Matrix p = g * g.adjoint();  // real symmetric PSD
    h += p.kron(psd(rng, n));
  }
  {
    Matrix t = psd(rng, n);
    Matrix q = unitary(rng, n);
    std::vector<Matrix> s(beta);
    for (std::size_t i = 0; i < beta; ++i) {
      std::vector<double> d(n);
      for (auto& v : d) v = rng.gauss();
      s[i] = hermitian_part(q * Matrix::diag(d) * q.adjoint());
    }
    Matrix x(beta * n, n);
    for (std::size_t i = 0; i < beta; ++i) x.set_block(i * n, 0, t * s[i]);
    h += x * x.adjoint();
  }
  return hermitian_part(h);
}

Matrix herm_offdiag_block(Rng& rng, std::size_t n) {
  Matrix x = hermitian(rng, n);
  Matrix ax = abs_value(x);
  Matrix h(2 * n, 2 * n);
  h.set_block(0, 0, ax + psd(rng, n) * 0.5);
  h.set_block(0, n, x);
  h.set_block(n, 0, x);
  h.set_block(n, n, ax + psd(rng, n) * 0.5);
  return hermitian_part(h);
}

Matrix psd_with_offdiag(Rng& rng, const Matrix& x) {
  const std::size_t n = x.rows();
  Matrix b = psd(rng, n) + Matrix::identity(n) * 0.1;
  Matrix binv = pseudo_power(b, -1.0);
  Matrix a = hermitian_part(x * binv * x.adjoint()) + psd(rng, n) * rng.uniform(0.0, 0.5);
  Matrix h(2 * n, 2 * n);
  h.set_block(0, 0, a);
  h.set_block(0, n, x);
  h.set_block(n, 0, x.adjoint());
  h.set_block(n, n, b);
  return hermitian_part(h);
}

WeightPair commuting_normal_weights(Rng& rng, std::size_t n) {
  Matrix q = unitary(rng, n);
  std::vector<cpx> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = rng.uniform(0.0, 1.5707963267948966);
    x[i] = std::cos(theta) * std::exp(cpx(0.0, rng.uniform(0.0, 6.283185307179586)));
    y[i] = std::sin(theta) * std::exp(cpx(0.0, rng.uniform(0.0, 6.283185307179586)));
  }
  WeightPair out;
  out.x = q * Matrix::diag(x) * q.adjoint();
  out.y = q * Matrix::diag(y) * q.adjoint();
  return out;
}

WeightPair ds_weight_pair(Rng& rng, std::size_t n) {
  // X = UC, Y = US with commuting PSD C, S and C^2 + S^2 = I.
  Matrix q = unitary(rng, n);
  std::vector<double> c(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = rng.uniform(0.0, 1.5707963267948966);
    c[i] = std::cos(theta);
    s[i] = std::sin(theta);
  }
  Matrix cc = hermitian_part(q * Matrix::diag(c) * q.adjoint());
  Matrix ss = hermitian_part(q * Matrix::diag(s) * q.adjoint());
  Matrix u = unitary(rng, n);
  WeightPair out;
  out.x = u * cc;
  out.y = u * ss;
  return out;
}

Matrix KrausMap::apply(const Matrix& x) const {
  if (ops.empty()) throw Error(Errc::BadParameter, "empty Kraus map");
  Matrix out(ops[0].cols(), ops[0].cols());
  for (const auto& z : ops) out += z.adjoint() * x * z;
  return out;
}

Matrix KrausMap::apply_identity(std::size_t n) const { return apply(Matrix::identity(n)); }

KrausMap subunital_kraus_map(Rng& rng, std::size_t n, std::size_t terms) {
  KrausMap map;
  Matrix sum(n, n);
  for (std::size_t i = 0; i < terms; ++i) {
    map.ops.push_back(ginibre(rng, n, n));
    sum += map.ops.back().adjoint() * map.ops.back();
  }
  const double top = opnorm(sum);
  const double scale = 1.0 / std::sqrt(top * (1.0 + rng.uniform()));
  for (auto& z : map.ops) z = z * scale;
  return map;
}

KrausMap unital_kraus_map(Rng& rng, std::size_t n, std::size_t terms) {
  // Stack the blocks of the first block-column of a Haar unitary.
  Matrix u = unitary(rng, n * terms);
  KrausMap map;
  map.unital = true;
  for (std::size_t i = 0; i < terms; ++i)
    map.ops.push_back(u.block(i * n, (i + 1) * n, 0, n));
  return map;
}

Matrix correlation(Rng& rng, std::size_t n) {
  Matrix p = psd(rng, n);
  std::vector<cpx> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = 1.0 / std::sqrt(p(i, i).real());
  Matrix dd = Matrix::diag(d);
  return hermitian_part(dd * p * dd);
}

}  // namespace gen
}  // namespace mxa
