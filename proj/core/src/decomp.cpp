#include "mxa/decomp.hpp"

#include <algorithm>
#include <cmath>

namespace mxa {

void PartitionedMatrix::validate() const {
  const std::size_t rows = base.rows(), cols = base.cols();
  if (blocks.empty()) throw Error(Errc::BadPartition, "no blocks");
  std::size_t covered = 0;
  for (const auto& b : blocks) {
    if (b.row_end <= b.row_start || b.col_end <= b.col_start || b.row_end > rows ||
        b.col_end > cols)
      throw Error(Errc::BadPartition, "block out of range or empty");
    covered += b.rows() * b.cols();
  }
  if (covered != rows * cols) throw Error(Errc::BadPartition, "blocks do not tile the base");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const auto &a = blocks[i], &b = blocks[j];
      const bool row_overlap = a.row_start < b.row_end && b.row_start < a.row_end;
      const bool col_overlap = a.col_start < b.col_end && b.col_start < a.col_end;
      if (row_overlap && col_overlap) throw Error(Errc::BadPartition, "blocks overlap");
    }
}

Matrix PartitionedMatrix::block_matrix(std::size_t k) const {
  const auto& b = blocks.at(k);
  return base.block(b.row_start, b.row_end, b.col_start, b.col_end);
}

bool PartitionedMatrix::column_compatible() const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const auto &a = blocks[i], &b = blocks[j];
      const bool equal = a.col_start == b.col_start && a.col_end == b.col_end;
      const bool disjoint = a.col_end <= b.col_start || b.col_end <= a.col_start;
      if (!equal && !disjoint) return false;
    }
  return true;
}

bool PartitionedMatrix::row_compatible() const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const auto &a = blocks[i], &b = blocks[j];
      const bool equal = a.row_start == b.row_start && a.row_end == b.row_end;
      const bool disjoint = a.row_end <= b.row_start || b.row_end <= a.row_start;
      if (!equal && !disjoint) return false;
    }
  return true;
}

Matrix DecompositionCertificate::reconstruct() const {
  Matrix sum(target.rows(), target.cols());
  for (const auto& t : terms) sum += (t.factor * t.middle * t.factor.adjoint()) * t.weight;
  return sum;
}

double DecompositionCertificate::compute_residual() const {
  // Relative to the target when it has mass, otherwise to the term scale
  // (a zero target is legitimate, e.g. the diagonal part of a Hermitian
  // matrix with zero diagonal).
  double scale = target.frobenius();
  for (const auto& t : terms) scale = std::max(scale, std::abs(t.weight) * t.middle.frobenius());
  return (target - reconstruct()).frobenius() / std::max(scale, 1e-300);
}

double DecompositionCertificate::factor_orthonormality() const {
  double worst = 0.0;
  for (const auto& t : terms) {
    Matrix gram = t.factor.adjoint() * t.factor;
    worst = std::max(worst, (gram - Matrix::identity(gram.rows())).max_abs());
  }
  return worst;
}

double DecompositionCertificate::middle_hermiticity() const {
  double worst = 0.0;
  for (const auto& t : terms) {
    const double scale = std::max(1.0, t.middle.frobenius());
    worst = std::max(worst, (t.middle - t.middle.adjoint()).frobenius() / scale);
  }
  return worst;
}

void DecompositionCertificate::finalize() {
  residual = compute_residual();
  // Hard certificate invariants; middle Hermiticity is the caller's promise
  // (the pinching identity legitimately carries non-Hermitian middles).
  if (residual > tol::cert)
    throw Error(Errc::DomainError,
                "certificate residual " + std::to_string(residual) + " above tolerance");
  if (factor_orthonormality() > tol::orth)
    throw Error(Errc::DomainError, "certificate factors lost orthonormality");
}

namespace {

std::vector<std::size_t> block_offsets(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> off(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) off[i + 1] = off[i] + sizes[i];
  return off;
}

// H = C^* C with C = H^{1/2}: for each block row T_i of C,
// T_i^* T_i = U_i H_ii U_i^* with U_i = right(T_i) left(T_i)^*.
std::vector<DecompositionTerm> split_terms_from_sqrt(const Matrix& c, const Matrix& h,
                                                     const std::vector<std::size_t>& sizes) {
  const auto off = block_offsets(sizes);
  const std::size_t n = c.rows();
  if (off.back() != n) throw Error(Errc::BadPartition, "sizes do not sum to the dimension");
  std::vector<DecompositionTerm> terms;
  terms.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const Matrix ti = c.block(off[i], off[i + 1], 0, n);
    Svd s = svd(ti);
    DecompositionTerm t;
    t.factor = s.right * s.left.adjoint();
    t.middle = hermitian_part(h.block(off[i], off[i + 1], off[i], off[i + 1]));
    t.weight = 1.0;
    terms.push_back(std::move(t));
  }
  return terms;
}

Matrix psd_sqrt(const Matrix& h) { return pseudo_power(h, 0.5); }

}  // namespace

DecompositionCertificate split_positive_2x2(const Matrix& h, std::size_t top) {
  h.require_square("split_positive_2x2");
  if (top == 0 || top >= h.rows()) throw Error(Errc::BadPartition, "split_positive_2x2");
  require_psd(h, "split_positive_2x2");
  const std::size_t n = h.rows();

  const Matrix c = psd_sqrt(h);
  DecompositionCertificate cert;
  cert.target = h;
  // Padded block rows keep the factors square (unitary).
  for (int part = 0; part < 2; ++part) {
    Matrix t(n, n);
    const std::size_t r0 = part == 0 ? 0 : top;
    const std::size_t r1 = part == 0 ? top : n;
    t.set_block(r0, 0, c.block(r0, r1, 0, n));
    Svd s = svd(t);
    DecompositionTerm term;
    term.factor = s.right * s.left.adjoint();
    Matrix middle(n, n);
    if (part == 0)
      middle.set_block(0, 0, hermitian_part(h.block(0, top, 0, top)));
    else
      middle.set_block(top, top, hermitian_part(h.block(top, n, top, n)));
    term.middle = middle;
    cert.terms.push_back(std::move(term));
  }
  cert.finalize();
  return cert;
}

DecompositionCertificate split_positive_multi(const Matrix& h,
                                              const std::vector<std::size_t>& sizes) {
  h.require_square("split_positive_multi");
  require_psd(h, "split_positive_multi");
  DecompositionCertificate cert;
  cert.target = h;
  cert.terms = split_terms_from_sqrt(psd_sqrt(h), h, sizes);
  cert.finalize();
  return cert;
}

DecompositionCertificate hermitian_offdiag_halves(const Matrix& h) {
  h.require_square("hermitian_offdiag_halves");
  if (h.rows() % 2 != 0) throw Error(Errc::BadPartition, "needs even dimension");
  const std::size_t n = h.rows() / 2;
  require_psd(h, "hermitian_offdiag_halves");
  const Matrix x = h.block(0, n, n, 2 * n);
  if (!x.is_hermitian(tol::herm * std::max(1.0, h.frobenius())))
    throw Error(Errc::OffDiagNotHermitian, "hermitian_offdiag_halves");

  // Congruence by diag(I, iI) then the reflection R makes both diagonal
  // blocks (A+B)/2; the two-block split then yields the halves.
  Matrix t(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, i) = 1.0;
    t(n + i, n + i) = cpx(0.0, 1.0);
  }
  Matrix r(2 * n, 2 * n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i) {
    r(i, i) = inv_sqrt2;
    r(i, n + i) = inv_sqrt2;
    r(n + i, i) = inv_sqrt2;
    r(n + i, n + i) = -inv_sqrt2;
  }
  const Matrix k = r * (t * h * t.adjoint()) * r;
  DecompositionCertificate inner = split_positive_2x2(hermitian_part(k), n);

  const Matrix back = t.adjoint() * r;  // H = back * K * back^*
  const Matrix sum = hermitian_part(h.block(0, n, 0, n) + h.block(n, 2 * n, n, 2 * n));

  DecompositionCertificate cert;
  cert.target = h;
  Matrix u_full = back * inner.terms[0].factor;
  Matrix v_full = back * inner.terms[1].factor;
  DecompositionTerm t1;
  t1.factor = u_full.block(0, 2 * n, 0, n);
  t1.middle = sum;
  t1.weight = 0.5;
  DecompositionTerm t2;
  t2.factor = v_full.block(0, 2 * n, n, 2 * n);
  t2.middle = sum;
  t2.weight = 0.5;
  cert.terms = {std::move(t1), std::move(t2)};
  cert.finalize();
  return cert;
}

std::vector<Matrix> clifford_generators(std::size_t beta) {
  const std::size_t m = std::size_t{1} << beta;
  std::vector<Matrix> gens;
  gens.reserve(beta);
  for (std::size_t j = 1; j <= beta; ++j) {
    Matrix q(m, m);
    const std::size_t flip = std::size_t{1} << (beta - j);
    std::size_t zmask = 0;
    for (std::size_t t = 0; t + 1 < j; ++t) zmask |= std::size_t{1} << (beta - 1 - t);
    for (std::size_t col = 0; col < m; ++col) {
      const std::size_t row = col ^ flip;
      const int sign = __builtin_popcountll(col & zmask) % 2 == 0 ? 1 : -1;
      q(row, col) = static_cast<double>(sign);
    }
    gens.push_back(std::move(q));
  }
  return gens;
}

namespace {

struct CliffordIndex {
  std::size_t beta, m, n;

  std::size_t flat(std::size_t j, std::size_t q, std::size_t i) const {
    return (j * m + q) * n + i;
  }
};

// Left-multiplication by W = (+)_j (Q_{j+1} (x) I_n): a signed row shuffle.
Matrix apply_w_left(const CliffordIndex& ix, const Matrix& mat,
                    const std::vector<std::size_t>& flip, const std::vector<std::size_t>& zmask) {
  Matrix out(mat.rows(), mat.cols());
  for (std::size_t j = 0; j < ix.beta; ++j)
    for (std::size_t q = 0; q < ix.m; ++q) {
      const std::size_t src = ix.flat(j, q ^ flip[j], 0);
      const std::size_t dst = ix.flat(j, q, 0);
      const double sign = __builtin_popcountll((q ^ flip[j]) & zmask[j]) % 2 == 0 ? 1.0 : -1.0;
      for (std::size_t i = 0; i < ix.n; ++i)
        for (std::size_t c = 0; c < mat.cols(); ++c)
          out(dst + i, c) = sign * mat(src + i, c);
    }
  return out;
}

// Left-multiplication by R_p = J_p (x) I_{mn}: mixes the beta outer blocks.
Matrix apply_r_left(const CliffordIndex& ix, const Matrix& jp, const Matrix& mat) {
  Matrix out(mat.rows(), mat.cols());
  const std::size_t blk = ix.m * ix.n;
  for (std::size_t j = 0; j < ix.beta; ++j)
    for (std::size_t j2 = 0; j2 < ix.beta; ++j2) {
      const double w = jp(j, j2).real();
      if (w == 0.0) continue;
      for (std::size_t r = 0; r < blk; ++r)
        for (std::size_t c = 0; c < mat.cols(); ++c)
          out(j * blk + r, c) += w * mat(j2 * blk + r, c);
    }
  return out;
}

}  // namespace

DecompositionCertificate clifford_partial_trace(const Matrix& h, std::size_t beta,
                                                bool allow_beta8) {
  if (beta != 2 && beta != 4 && beta != 8)
    throw Error(Errc::NotDyadic, "clifford_partial_trace: beta must be 2, 4 or 8");
  if (beta == 8 && !allow_beta8)
    throw Error(Errc::BadParameter, "beta = 8 is gated (ambient dimension 2048 n)");
  h.require_square("clifford_partial_trace");
  if (h.rows() % beta != 0) throw Error(Errc::BadPartition, "dimension not divisible by beta");
  const std::size_t n = h.rows() / beta;
  require_psd(h, "clifford_partial_trace");
  const double hscale = std::max(1.0, h.frobenius());
  for (std::size_t s = 0; s < beta; ++s)
    for (std::size_t t = 0; t < beta; ++t) {
      Matrix blk = h.block(s * n, (s + 1) * n, t * n, (t + 1) * n);
      if ((blk - blk.adjoint()).frobenius() > tol::herm * hscale * 10)
        throw Error(Errc::BlocksNotHermitian, "clifford_partial_trace");
    }

  const std::size_t m = std::size_t{1} << beta;
  const std::size_t inner = m * n;
  const std::size_t big = beta * inner;
  CliffordIndex ix{beta, m, n};

  std::vector<std::size_t> flip(beta), zmask(beta);
  for (std::size_t j = 0; j < beta; ++j) {
    flip[j] = std::size_t{1} << (beta - 1 - j);
    zmask[j] = 0;
    for (std::size_t t = 0; t < j; ++t) zmask[j] |= std::size_t{1} << (beta - 1 - t);
  }

  // J_p = (x)^p J_1 for beta = 2^p.
  Matrix j1{{1.0, 1.0}, {1.0, -1.0}};
  j1 = j1 * (1.0 / std::sqrt(2.0));
  Matrix jp = j1;
  for (std::size_t dim = 2; dim < beta; dim *= 2) jp = jp.kron(j1);

  // sqrt(G) comes from sqrt(H): G is the shuffle of (+)^m H.
  const Matrix hs = psd_sqrt(h);
  auto lift = [&](const Matrix& src) {
    // src is beta*n x beta*n with blocks S_{s,t}; result has (s,q,i) layout
    // with blocks delta_{qq'} S_{s,t}.
    Matrix out(big, big);
    for (std::size_t s = 0; s < beta; ++s)
      for (std::size_t t = 0; t < beta; ++t)
        for (std::size_t q = 0; q < m; ++q)
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t i2 = 0; i2 < n; ++i2)
              out(ix.flat(s, q, i), ix.flat(t, q, i2)) = src(s * n + i, t * n + i2);
    return out;
  };
  const Matrix gs = lift(hs);  // = G^{1/2}

  // C = R_p W G^{1/2} W R_p (all three unitary Hermitian).
  Matrix c = apply_w_left(ix, gs, flip, zmask);
  c = apply_w_left(ix, c.adjoint(), flip, zmask).adjoint();
  c = apply_r_left(ix, jp, c);
  c = apply_r_left(ix, jp, c.adjoint()).adjoint();
  c = hermitian_part(c);

  const Matrix omega2 = hermitian_part(c * c);
  std::vector<std::size_t> sizes(beta, inner);
  auto terms = split_terms_from_sqrt(c, omega2, sizes);

  // Assemble V_k = P W R_p u_k, P the (s,q,i) -> (q,s,i) shuffle.
  const Matrix delta = [&] {
    Matrix d(n, n);
    for (std::size_t s = 0; s < beta; ++s)
      d += h.block(s * n, (s + 1) * n, s * n, (s + 1) * n);
    return hermitian_part(d);
  }();
  const Matrix middle = direct_sum_copies(delta, m);

  DecompositionCertificate cert;
  Matrix big_h(big, big);
  {
    const Matrix hh = hermitian_part(h);
    for (std::size_t q = 0; q < m; ++q) big_h.set_block(q * beta * n, q * beta * n, hh);
  }
  cert.target = big_h;
  for (auto& t : terms) {
    Matrix v = apply_r_left(ix, jp, t.factor);
    v = apply_w_left(ix, v, flip, zmask);
    Matrix shuffled(big, v.cols());
    for (std::size_t s = 0; s < beta; ++s)
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t dst = (q * beta + s) * n + i;
          const std::size_t src = ix.flat(s, q, i);
          for (std::size_t col = 0; col < v.cols(); ++col) shuffled(dst, col) = v(src, col);
        }
    DecompositionTerm term;
    term.factor = std::move(shuffled);
    term.middle = middle;
    term.weight = 1.0 / static_cast<double>(beta);
    cert.terms.push_back(std::move(term));
  }
  cert.finalize();
  return cert;
}

namespace {

// Recursive engine behind pythagoras(); blocks are given by index into pa.
DecompositionCertificate pythagoras_impl(const Matrix& base,
                                         const std::vector<BlockRect>& blocks);

DecompositionCertificate pythagoras_column_compatible(const Matrix& base,
                                                      const std::vector<BlockRect>& blocks) {
  // Group blocks by their column range, sorted by start.
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (const auto& b : blocks) ranges.emplace_back(b.col_start, b.col_end);
  std::sort(ranges.begin(), ranges.end());
  ranges.erase(std::unique(ranges.begin(), ranges.end()), ranges.end());

  const Matrix gram = hermitian_part(base.adjoint() * base);
  std::vector<std::size_t> sizes;
  for (const auto& r : ranges) sizes.push_back(r.second - r.first);
  auto groups = split_terms_from_sqrt(psd_sqrt(gram), gram, sizes);

  DecompositionCertificate cert;
  cert.target = gram;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& b = blocks[k];
    const std::size_t g =
        std::lower_bound(ranges.begin(), ranges.end(),
                         std::make_pair(b.col_start, b.col_end)) -
        ranges.begin();
    Matrix ak = base.block(b.row_start, b.row_end, b.col_start, b.col_end);
    DecompositionTerm t;
    t.factor = groups[g].factor;
    t.middle = hermitian_part(ak.adjoint() * ak);
    t.weight = 1.0;
    cert.terms.push_back(std::move(t));
  }
  cert.finalize();
  return cert;
}

DecompositionCertificate pythagoras_row_compatible(const Matrix& base,
                                                   const std::vector<BlockRect>& blocks) {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (const auto& b : blocks) ranges.emplace_back(b.row_start, b.row_end);
  std::sort(ranges.begin(), ranges.end());
  ranges.erase(std::unique(ranges.begin(), ranges.end()), ranges.end());

  const std::size_t d2 = base.cols();
  DecompositionCertificate cert;
  cert.target = hermitian_part(base.adjoint() * base);
  for (const auto& rr : ranges) {
    // Blocks of this block row tile the columns; sort them by column start.
    std::vector<BlockRect> row_blocks;
    for (const auto& b : blocks)
      if (b.row_start == rr.first && b.row_end == rr.second) row_blocks.push_back(b);
    std::sort(row_blocks.begin(), row_blocks.end(),
              [](const BlockRect& a, const BlockRect& b) { return a.col_start < b.col_start; });
    const Matrix strip = base.block(rr.first, rr.second, 0, d2);
    const Matrix gram = hermitian_part(strip.adjoint() * strip);
    std::vector<std::size_t> sizes;
    for (const auto& b : row_blocks) sizes.push_back(b.cols());
    auto terms = split_terms_from_sqrt(psd_sqrt(gram), gram, sizes);
    for (auto& t : terms) cert.terms.push_back(std::move(t));
  }
  cert.finalize();
  return cert;
}

DecompositionCertificate pythagoras_impl(const Matrix& base,
                                         const std::vector<BlockRect>& blocks) {
  PartitionedMatrix probe{base, blocks};
  if (probe.column_compatible()) return pythagoras_column_compatible(base, blocks);
  if (probe.row_compatible()) return pythagoras_row_compatible(base, blocks);

  // Look for a clean vertical or horizontal cut and recurse on the halves.
  const std::size_t rows = base.rows(), cols = base.cols();
  for (std::size_t cut = 1; cut < cols; ++cut) {
    bool clean = true;
    for (const auto& b : blocks)
      if (b.col_start < cut && b.col_end > cut) {
        clean = false;
        break;
      }
    if (!clean) continue;
    std::vector<BlockRect> left, right;
    for (const auto& b : blocks) {
      if (b.col_end <= cut)
        left.push_back(b);
      else {
        BlockRect s = b;
        s.col_start -= cut;
        s.col_end -= cut;
        right.push_back(s);
      }
    }
    if (left.empty() || right.empty()) continue;
    const Matrix lbase = base.block(0, rows, 0, cut);
    const Matrix rbase = base.block(0, rows, cut, cols);
    const Matrix gram = hermitian_part(base.adjoint() * base);
    auto outer = split_terms_from_sqrt(psd_sqrt(gram), gram, {cut, cols - cut});
    DecompositionCertificate cert;
    cert.target = gram;
    auto lower_terms = pythagoras_impl(lbase, left).terms;
    for (auto& t : lower_terms) {
      t.factor = outer[0].factor * t.factor;
      cert.terms.push_back(std::move(t));
    }
    auto upper_terms = pythagoras_impl(rbase, right).terms;
    for (auto& t : upper_terms) {
      t.factor = outer[1].factor * t.factor;
      cert.terms.push_back(std::move(t));
    }
    cert.finalize();
    return cert;
  }
  for (std::size_t cut = 1; cut < rows; ++cut) {
    bool clean = true;
    for (const auto& b : blocks)
      if (b.row_start < cut && b.row_end > cut) {
        clean = false;
        break;
      }
    if (!clean) continue;
    std::vector<BlockRect> top, bottom;
    for (const auto& b : blocks) {
      if (b.row_end <= cut)
        top.push_back(b);
      else {
        BlockRect s = b;
        s.row_start -= cut;
        s.row_end -= cut;
        bottom.push_back(s);
      }
    }
    if (top.empty() || bottom.empty()) continue;
    // |A|^2 = |T|^2 + |B|^2: the sub-terms pass through unchanged.
    DecompositionCertificate cert;
    cert.target = hermitian_part(base.adjoint() * base);
    auto t_terms = pythagoras_impl(base.block(0, cut, 0, cols), top).terms;
    auto b_terms = pythagoras_impl(base.block(cut, rows, 0, cols), bottom).terms;
    for (auto& t : t_terms) cert.terms.push_back(std::move(t));
    for (auto& t : b_terms) cert.terms.push_back(std::move(t));
    cert.finalize();
    return cert;
  }
  throw Error(Errc::UnsupportedPartition, "pythagoras: no compatible grouping or cut");
}

}  // namespace

DecompositionCertificate pythagoras(const PartitionedMatrix& pa) {
  pa.validate();
  return pythagoras_impl(pa.base, pa.blocks);
}

Matrix orbit_dominate(const Matrix& x, const Matrix& y) {
  x.require_hermitian("orbit_dominate X", tol::herm * 100);
  y.require_hermitian("orbit_dominate Y", tol::herm * 100);
  if (x.rows() != y.rows()) throw Error(Errc::DimensionMismatch, "orbit_dominate");
  auto ex = hermitian_eig(hermitian_part(x));
  auto ey = hermitian_eig(hermitian_part(y));
  double scale = 1.0;
  for (double v : ey.eigenvalues) scale = std::max(scale, std::abs(v));
  for (std::size_t k = 0; k < ex.eigenvalues.size(); ++k) {
    const double deficit = ex.eigenvalues[k] - ey.eigenvalues[k];
    if (deficit > tol::maj * scale)
      throw Error(Errc::NotDominated, "orbit_dominate at k=" + std::to_string(k + 1) +
                                          " deficit " + std::to_string(deficit));
  }
  return ex.frame * ey.frame.adjoint();
}

namespace {

double golden_section_min(const std::function<double(double)>& f, double a, double b) {
  constexpr double phi = 0.6180339887498948482;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && b - a > 1e-12 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

// Core of the two-sided orbit bound, convex direction.
OrbitPair orbit_two_sided_convex_impl(const FunctionSpec& f, const Matrix& c, const Matrix& m) {
  f.validate();
  c.require_hermitian("orbit_two_sided C", tol::herm * 100);
  m.require_hermitian("orbit_two_sided M", tol::herm * 100);
  const std::size_t n = c.rows();
  auto eg = hermitian_eig(hermitian_part(c));

  if (f.monotone()) {
    Matrix fc = matrix_function(f, hermitian_part(c));
    Matrix u = orbit_dominate(fc, m);
    return {u, u};
  }

  double r;
  if (f.monotonicity_switch)
    r = *f.monotonicity_switch;
  else if (f.convex)
    r = golden_section_min(f.evaluator, eg.eigenvalues.back(), eg.eigenvalues.front());
  else
    throw Error(Errc::BadParameter, "orbit_two_sided: no switch point for " + f.name);

  // Eigenvalues are sorted descending: upper part first.
  std::size_t k1 = 0;
  while (k1 < n && eg.eigenvalues[k1] > r) ++k1;
  const std::size_t k2 = n - k1;
  if (k1 == 0 || k2 == 0) {
    // Everything on one side of the switch; f is monotone there.
    Matrix fc = matrix_function(f, hermitian_part(c));
    Matrix u;
    try {
      u = orbit_dominate(fc, m);
    } catch (const Error& e) {
      throw Error(Errc::SplitDominanceFails, e.what());
    }
    return {u, u};
  }

  const Matrix q = eg.frame;
  const Matrix mhat = q.adjoint() * m * q;
  Matrix m11 = hermitian_part(mhat.block(0, k1, 0, k1));
  Matrix m22 = hermitian_part(mhat.block(k1, n, k1, n));
  std::vector<double> f1(k1), f2(k2);
  for (std::size_t i = 0; i < k1; ++i) f1[i] = f.evaluator(eg.eigenvalues[i]);
  for (std::size_t i = 0; i < k2; ++i) f2[i] = f.evaluator(eg.eigenvalues[k1 + i]);

  Matrix u0, v0;
  try {
    u0 = orbit_dominate(Matrix::diag(f1), m11);
    v0 = orbit_dominate(Matrix::diag(f2), m22);
  } catch (const Error& e) {
    throw Error(Errc::SplitDominanceFails, e.what());
  }
  Matrix ut = direct_sum(u0, v0);
  Matrix vt = direct_sum(u0, v0 * (-1.0));
  return {q * ut * q.adjoint(), q * vt * q.adjoint()};
}

}  // namespace

OrbitPair orbit_two_sided(const FunctionSpec& f, const Matrix& c, const Matrix& m) {
  return orbit_two_sided_convex_impl(f, c, m);
}

OrbitPair orbit_two_sided(const Matrix& x, const Matrix& m, double r) {
  x.require_hermitian("orbit_two_sided X", tol::herm * 100);
  m.require_hermitian("orbit_two_sided M", tol::herm * 100);
  const std::size_t n = x.rows();
  auto eg = hermitian_eig(hermitian_part(x));
  std::size_t k1 = 0;
  while (k1 < n && eg.eigenvalues[k1] > r) ++k1;
  const std::size_t k2 = n - k1;
  if (k1 == 0 || k2 == 0) {
    Matrix u;
    try {
      u = orbit_dominate(x, m);
    } catch (const Error& e) {
      throw Error(Errc::SplitDominanceFails, e.what());
    }
    return {u, u};
  }
  const Matrix q = eg.frame;
  const Matrix mhat = q.adjoint() * m * q;
  Matrix m11 = hermitian_part(mhat.block(0, k1, 0, k1));
  Matrix m22 = hermitian_part(mhat.block(k1, n, k1, n));
  std::vector<double> x1(eg.eigenvalues.begin(), eg.eigenvalues.begin() + k1);
  std::vector<double> x2(eg.eigenvalues.begin() + k1, eg.eigenvalues.end());
  Matrix u0, v0;
  try {
    u0 = orbit_dominate(Matrix::diag(x1), m11);
    v0 = orbit_dominate(Matrix::diag(x2), m22);
  } catch (const Error& e) {
    throw Error(Errc::SplitDominanceFails, e.what());
  }
  Matrix ut = direct_sum(u0, v0);
  Matrix vt = direct_sum(u0, v0 * (-1.0));
  return {q * ut * q.adjoint(), q * vt * q.adjoint()};
}

OrbitPair orbit_two_sided_concave(const FunctionSpec& f, const Matrix& c, const Matrix& m) {
  FunctionSpec g = f;
  g.evaluator = [f](double t) { return -f.evaluator(t); };
  g.name = "-" + f.name;
  std::swap(g.convex, g.concave);
  std::swap(g.nondecreasing, g.nonincreasing);
  g.value_at_zero_sign = -g.value_at_zero_sign;
  return orbit_two_sided_convex_impl(g, c, m * (-1.0));
}

namespace {

// Shared machinery: f monotone concave with f(0) = 0 on [0, inf).
OrbitPair subadditive_orbit_zero(const FunctionSpec& f, const Matrix& a, const Matrix& b) {
  const Matrix s = hermitian_part(a + b);
  const Matrix fs = matrix_function(f, s);
  const double eps = f.nonincreasing ? -1.0 : 1.0;
  const Matrix abs_fs = fs * eps;  // |f|(S), PSD
  const Matrix abs_fs_half = psd_sqrt(hermitian_part(abs_fs));
  const Matrix s_invhalf = pseudo_power(s, -0.5);

  auto one_side = [&](const Matrix& part, const Matrix& f_part) {
    const Matrix x = psd_sqrt(part) * s_invhalf;  // contraction
    const Matrix g = hermitian_part(x * abs_fs * x.adjoint()) * eps;  // X f(S) X^*
    Matrix u0 = orbit_dominate(g, f_part);
    const Matrix t = abs_fs_half * x.adjoint();
    Svd sv = svd(t);
    const Matrix w = sv.left * sv.right.adjoint();  // T T^* = W (T^* T) W^*
    return w * u0;
  };

  const Matrix fa = matrix_function(f, hermitian_part(a));
  const Matrix fb = matrix_function(f, hermitian_part(b));
  OrbitPair out;
  out.u = one_side(hermitian_part(a), fa);
  out.v = one_side(hermitian_part(b), fb);
  return out;
}

}  // namespace

OrbitPair subadditive_orbit(const FunctionSpec& f, const Matrix& a, const Matrix& b) {
  f.validate();
  if (!f.concave || !f.monotone())
    throw Error(Errc::FlagViolation, "subadditive_orbit needs monotone concave f");
  require_psd(a, "subadditive_orbit A");
  require_psd(b, "subadditive_orbit B");
  const double f0 = f.evaluator(0.0);
  if (f0 < -1e-12) throw Error(Errc::FlagViolation, "subadditive_orbit needs f(0) >= 0");
  if (std::abs(f0) <= 1e-12) return subadditive_orbit_zero(f, a, b);
  // Reduce to f - f(0); the same unitaries work for f.
  FunctionSpec f0spec = f;
  f0spec.evaluator = [f, f0](double t) { return f.evaluator(t) - f0; };
  f0spec.name = f.name + "-f(0)";
  return subadditive_orbit_zero(f0spec, a, b);
}

OrbitPair superadditive_orbit(const FunctionSpec& g, const Matrix& a, const Matrix& b) {
  g.validate();
  if (!g.convex || !g.monotone())
    throw Error(Errc::FlagViolation, "superadditive_orbit needs monotone convex g");
  if (g.evaluator(0.0) > 1e-12)
    throw Error(Errc::FlagViolation, "superadditive_orbit needs g(0) <= 0");
  FunctionSpec f = g;
  f.evaluator = [g](double t) { return -g.evaluator(t); };
  f.name = "-" + g.name;
  std::swap(f.convex, f.concave);
  std::swap(f.nondecreasing, f.nonincreasing);
  return subadditive_orbit(f, a, b);
}

namespace {

HhDecomposition hh_from_congruence(const FunctionSpec& f, const Matrix& a, const Matrix& b,
                                   const Matrix& congruence) {
  require_psd(a, "hh_decomposition A");
  require_psd(b, "hh_decomposition B");
  if (!f.concave || !f.monotone())
    throw Error(Errc::FlagViolation, "hh_decomposition needs monotone concave f");
  const double f0 = f.evaluator(0.0);
  if (f0 < -1e-12) throw Error(Errc::FlagViolation, "hh_decomposition needs f(0) >= 0");

  const std::size_t n = a.rows();
  const Matrix ab = direct_sum(hermitian_part(a), hermitian_part(b));
  const Matrix k = hermitian_part(congruence.adjoint() * ab * congruence);
  const Matrix mix1 = hermitian_part(k.block(0, n, 0, n));
  const Matrix mix2 = hermitian_part(k.block(n, 2 * n, n, 2 * n));

  FunctionSpec fz = f;
  if (f0 > 1e-12) {
    // Tie the function down at the origin; it agrees with f on every
    // spectrum involved as long as the inputs are strictly positive.
    double r0 = std::min(min_eig(hermitian_part(a)), min_eig(hermitian_part(b)));
    if (r0 <= tol::eig_floor * std::max(1.0, opnorm(ab)))
      throw Error(Errc::FlagViolation,
                  "hh_decomposition: f(0) > 0 needs positive definite inputs");
    if (!f.nondecreasing)
      throw Error(Errc::FlagViolation, "hh_decomposition: f(0) > 0 needs nondecreasing f");
    const double fr = f.evaluator(r0);
    fz.evaluator = [f, r0, fr](double t) { return t >= r0 ? f.evaluator(t) : fr * t / r0; };
    fz.name = f.name + "~0";
  }

  // A (+) B = S + T with S, T PSD congruent to mix1 (+) 0 and 0 (+) mix2.
  DecompositionCertificate split = split_positive_2x2(k, n);
  const Matrix p_full = congruence * split.terms[0].factor;
  const Matrix q_full = congruence * split.terms[1].factor;
  Matrix mid1(2 * n, 2 * n), mid2(2 * n, 2 * n);
  mid1.set_block(0, 0, mix1);
  mid2.set_block(n, n, mix2);
  const Matrix s = hermitian_part(p_full * mid1 * p_full.adjoint());
  const Matrix t = hermitian_part(q_full * mid2 * q_full.adjoint());

  OrbitPair orbits = subadditive_orbit(fz, s, t);

  HhDecomposition out;
  out.mix1 = mix1;
  out.mix2 = mix2;
  // f(S) = (P embed) f(mix1) (P embed)^* with fz(0) = 0.
  out.u = orbits.u * p_full.block(0, 2 * n, 0, n);
  out.v = orbits.v * q_full.block(0, 2 * n, n, 2 * n);
  return out;
}

}  // namespace

HhDecomposition hh_decomposition(const FunctionSpec& f, const Matrix& a, const Matrix& b,
                                 double x) {
  if (x <= 0.0 || x >= 1.0) throw Error(Errc::BadParameter, "hh_decomposition x in (0,1)");
  const std::size_t n = a.rows();
  Matrix r(2 * n, 2 * n);
  const double c = std::sqrt(1.0 - x), s = std::sqrt(x);
  for (std::size_t i = 0; i < n; ++i) {
    r(i, i) = c;
    r(i, n + i) = s;
    r(n + i, i) = s;
    r(n + i, n + i) = -c;
  }
  return hh_from_congruence(f, a, b, r);
}

HhDecomposition hh_decomposition_weighted(const FunctionSpec& f, const Matrix& a,
                                          const Matrix& b, const Matrix& wx, const Matrix& wy) {
  // [X Y; Y* -X*] is unitary for commuting normal X, Y with X*X + Y*Y = I
  // (Fuglede gives X*Y = YX*); the resulting C*-mixes are X*AX + YBY* and
  // Y*AY + XBX*.
  const std::size_t n = a.rows();
  Matrix hcong(2 * n, 2 * n);
  hcong.set_block(0, 0, wx);
  hcong.set_block(0, n, wy);
  hcong.set_block(n, 0, wy.adjoint());
  hcong.set_block(n, n, wx.adjoint() * (-1.0));
  const Matrix gram = hcong.adjoint() * hcong;
  if ((gram - Matrix::identity(2 * n)).max_abs() > 1e-8)
    throw Error(Errc::BadParameter, "weights do not form a unitary (need commuting normal)");
  return hh_from_congruence(f, a, b, hcong);
}

Matrix schur_horn(const Matrix& b, const std::vector<double>& d) {
  b.require_hermitian("schur_horn", tol::herm * 100);
  const std::size_t n = b.rows();
  if (d.size() != n) throw Error(Errc::DimensionMismatch, "schur_horn");
  auto eg = hermitian_eig(hermitian_part(b));

  // Majorization check: d ~< lambda with trace equality.
  {
    std::vector<double> ds = d, ls = eg.eigenvalues;
    std::sort(ds.rbegin(), ds.rend());
    std::sort(ls.rbegin(), ls.rend());
    double scale = 1.0;
    for (double v : ls) scale = std::max(scale, std::abs(v));
    double pd = 0.0, pl = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      pd += ds[k];
      pl += ls[k];
      if (pd > pl + tol::maj * scale * 10)
        throw Error(Errc::NotMajorized, "schur_horn partial sums at k=" + std::to_string(k + 1));
    }
    if (std::abs(pd - pl) > tol::eq * scale * n)
      throw Error(Errc::NotMajorized, "schur_horn trace mismatch");
  }

  // Work with ascending values; Chan-Li style: each step pins one target
  // exactly with a single plane rotation, merging the touched pair.
  std::vector<std::size_t> target_order(n);
  for (std::size_t i = 0; i < n; ++i) target_order[i] = i;
  std::stable_sort(target_order.begin(), target_order.end(),
                   [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });

  struct Active {
    double value;
    std::size_t pos;
  };
  std::vector<Active> active(n);
  for (std::size_t i = 0; i < n; ++i)
    active[i] = {eg.eigenvalues[n - 1 - i], n - 1 - i};  // ascending values
  std::sort(active.begin(), active.end(),
            [](const Active& a, const Active& b) { return a.value < b.value; });

  Matrix rot = Matrix::identity(n);
  std::vector<std::size_t> pinned_pos(n);
  double scale = 1.0;
  for (const auto& a : active) scale = std::max(scale, std::abs(a.value));

  for (std::size_t step = 0; step < n; ++step) {
    const double t = d[target_order[step]];
    if (active.size() == 1) {
      pinned_pos[step] = active[0].pos;
      active.clear();
      break;
    }
    // Largest active value <= t (with slack); the next one is then >= t.
    std::size_t j = 0;
    while (j + 1 < active.size() && active[j + 1].value <= t + 1e-12 * scale) ++j;
    if (std::abs(active[j].value - t) <= 1e-12 * scale) {
      pinned_pos[step] = active[j].pos;
      active.erase(active.begin() + j);
      continue;
    }
    if (j + 1 >= active.size() || active[j].value > t + 1e-12 * scale)
      throw Error(Errc::NotMajorized, "schur_horn: no bracketing pair");
    const double lo = active[j].value, hi = active[j + 1].value;
    const double s2 = (t - lo) / (hi - lo);
    const double c = std::sqrt(1.0 - s2), s = std::sqrt(s2);
    const std::size_t p = active[j].pos, q = active[j + 1].pos;
    // Plane rotation sending diag(lo, hi) to t at position p.
    for (std::size_t col = 0; col < n; ++col) {
      const cpx rp = rot(p, col), rq = rot(q, col);
      rot(p, col) = c * rp + s * rq;
      rot(q, col) = -s * rp + c * rq;
    }
    pinned_pos[step] = p;
    const double merged = lo + hi - t;
    active.erase(active.begin() + j, active.begin() + j + 2);
    Active mg{merged, q};
    active.insert(std::lower_bound(active.begin(), active.end(), mg,
                                   [](const Active& a, const Active& b) {
                                     return a.value < b.value;
                                   }),
                  mg);
  }

  // Route each pinned position to the caller's index for that target.
  Matrix perm(n, n);
  for (std::size_t step = 0; step < n; ++step) perm(target_order[step], pinned_pos[step]) = 1.0;

  // rot acts on the descending eigenbasis directly (positions refer to it).
  return perm * rot * eg.frame.adjoint();
}

DecompositionCertificate pinch_diagonal_average(const Matrix& b) {
  b.require_square("pinch_diagonal_average");
  const std::size_t n = b.rows();
  DecompositionCertificate cert;
  Matrix diag_part(n, n);
  for (std::size_t i = 0; i < n; ++i) diag_part(i, i) = b(i, i);
  cert.target = diag_part;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<cpx> phases(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double arg = 6.283185307179586476925286766559 *
                         static_cast<double>(k * j % n) / static_cast<double>(n);
      phases[j] = std::exp(cpx(0.0, arg));
    }
    DecompositionTerm t;
    t.factor = Matrix::diag(phases);
    t.middle = b;
    t.weight = 1.0 / static_cast<double>(n);
    cert.terms.push_back(std::move(t));
  }
  cert.finalize();
  return cert;
}

DecompositionCertificate majorize_average(const Matrix& a, const Matrix& b) {
  a.require_hermitian("majorize_average A", tol::herm * 100);
  b.require_hermitian("majorize_average B", tol::herm * 100);
  if (a.rows() != b.rows()) throw Error(Errc::DimensionMismatch, "majorize_average");
  const std::size_t n = a.rows();
  auto ea = hermitian_eig(hermitian_part(a));
  const Matrix w1 = schur_horn(b, ea.eigenvalues);  // throws NotMajorized if not

  DecompositionCertificate cert;
  cert.target = hermitian_part(a);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<cpx> phases(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double arg = 6.283185307179586476925286766559 *
                         static_cast<double>(k * j % n) / static_cast<double>(n);
      phases[j] = std::exp(cpx(0.0, arg));
    }
    DecompositionTerm t;
    t.factor = ea.frame * Matrix::diag(phases) * w1;
    t.middle = hermitian_part(b);
    t.weight = 1.0 / static_cast<double>(n);
    cert.terms.push_back(std::move(t));
  }
  cert.finalize();
  return cert;
}

std::vector<Matrix> stinespring_dilation(const std::vector<Matrix>& images) {
  if (images.empty()) throw Error(Errc::BadParameter, "stinespring_dilation: no images");
  const std::size_t s = images[0].rows();
  const std::size_t n = images.size();
  Matrix sum(s, s);
  for (const auto& a : images) {
    require_psd(a, "stinespring_dilation image");
    if (a.rows() != s || a.cols() != s)
      throw Error(Errc::DimensionMismatch, "stinespring_dilation");
    sum += a;
  }
  if (rel_diff(sum, Matrix::identity(s)) > tol::eq * 10)
    throw Error(Errc::NotResolutionOfIdentity, "images do not sum to the identity");

  // Top block row (A_1^{1/2} ... A_n^{1/2}) has orthonormal rows; complete
  // it to a unitary on the n-fold sum.
  Matrix top(s, n * s);
  for (std::size_t i = 0; i < n; ++i) top.set_block(0, i * s, psd_sqrt(images[i]));
  const Matrix v = complete_to_unitary(top.adjoint()).adjoint();  // first s rows = top

  std::vector<Matrix> projections;
  projections.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix vi = v.block(0, n * s, i * s, (i + 1) * s);  // columns of block i
    projections.push_back(hermitian_part(vi * vi.adjoint()));
  }
  return projections;
}

Matrix CommutativeKraus::apply(const Matrix& x) const {
  if (factors.empty()) throw Error(Errc::BadParameter, "empty Kraus family");
  Matrix out(factors[0].cols(), factors[0].cols());
  for (const auto& z : factors) out += z.adjoint() * x * z;
  return out;
}

CommutativeKraus kraus_on_commutative(const Matrix& a, const std::vector<Matrix>& images) {
  a.require_hermitian("kraus_on_commutative", tol::herm * 100);
  const std::size_t m = a.rows();
  if (images.size() != m)
    throw Error(Errc::DimensionMismatch, "need one image per spectral projection");
  CommutativeKraus out;
  out.spectral = hermitian_eig(hermitian_part(a));
  const std::size_t n = images[0].rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_psd(images[i], tol::psd * 100))
      throw Error(Errc::NotPositiveOnProjections, "kraus_on_commutative image " +
                                                      std::to_string(i));
    const Matrix root = psd_sqrt(hermitian_part(images[i]));
    for (std::size_t j = 0; j < n; ++j) {
      Matrix z(m, n);
      for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < m; ++row)
          z(row, col) = out.spectral.frame(row, i) * root(j, col);
      out.factors.push_back(std::move(z));
    }
  }
  return out;
}

}  // namespace mxa
