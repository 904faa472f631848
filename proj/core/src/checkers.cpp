#include <algorithm>
#include <cmath>

#include "mxa/decomp.hpp"
#include "mxa/eig.hpp"
#include "mxa/generators.hpp"
#include "mxa/norms.hpp"
#include "mxa/numrange.hpp"
#include "mxa/theorems.hpp"

// The checker catalog. Each entry draws a random instance from its seeded
// context, evaluates the statement's margin in a scale-free way and returns
// it; the harness aggregates worst cases. Existence statements ("for some
// unitary/isometry") are checked through the eigenvalue dominance criterion
// and, where a construction exists, by building the certificate as well.

namespace mxa {
namespace {

using margin::dominance;
using margin::dominance_offset;
using margin::dominance_values;
using margin::norms;
using margin::psd_gap;
using margin::scalar;
using margin::weyl_two_orbit;
using margin::wlog_values;

double pickd(Rng& rng, std::initializer_list<double> options) {
  std::vector<double> v(options);
  return v[rng.below(v.size())];
}

// PSD with spectrum inside [lo, hi]: products of several of these keep the
// conditioning that log-margin comparisons can stand.
Matrix psd_in(Rng& rng, std::size_t n, double lo, double hi) {
  Matrix q = gen::unitary(rng, n);
  std::vector<double> d(n);
  for (auto& v : d) v = rng.uniform(lo, hi);
  return hermitian_part(q * Matrix::diag(d) * q.adjoint());
}

Matrix herm_in(Rng& rng, std::size_t n, double lo, double hi) {
  return psd_in(rng, n, lo, hi);
}

Matrix bounded_contraction(Rng& rng, std::size_t n) {
  Matrix u = gen::unitary(rng, n), v = gen::unitary(rng, n);
  std::vector<double> d(n);
  for (auto& x : d) x = rng.uniform(0.35, 1.0);
  return u * Matrix::diag(d) * v.adjoint();
}

Matrix bounded_expansive(Rng& rng, std::size_t n) {
  Matrix u = gen::unitary(rng, n), v = gen::unitary(rng, n);
  std::vector<double> d(n);
  for (auto& x : d) x = rng.uniform(1.0, 2.5);
  return u * Matrix::diag(d) * v.adjoint();
}

FunctionSpec pick_concave(Rng& rng) {
  switch (rng.below(5)) {
    case 0: return fn::sqrt();
    case 1: return fn::power(0.3);
    case 2: return fn::power(0.8);
    case 3: return fn::log1p();
    default: return fn::t_over_1pt();
  }
}

FunctionSpec pick_convex_zero(Rng& rng) {
  // convex, nondecreasing on [0, inf), g(0) = 0
  switch (rng.below(4)) {
    case 0: return fn::power(1.5);
    case 1: return fn::power(2.5);
    case 2: return fn::t_log1p();
    default: return fn::square();
  }
}

Matrix powm(const Matrix& psd, double p) { return pseudo_power(psd, p); }

std::vector<double> eig_of(const Matrix& h) { return eigvals(hermitian_part(h)); }

// Iterated two-term subadditive split over a list of PSD parts:
//   f(sum parts) <= sum_k W_k f(M_k) W_k^*   (f monotone concave, f(0) = 0)
// Returns the right-hand side; the convex flag flips the direction.
Matrix iterated_orbit_bound(const FunctionSpec& f, const std::vector<Matrix>& parts,
                            bool convex) {
  Matrix total(parts[0].rows(), parts[0].cols());
  for (const auto& m : parts) total += m;
  Matrix bound(parts[0].rows(), parts[0].cols());
  Matrix outer = Matrix::identity(parts[0].rows());
  Matrix rest = hermitian_part(total);
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    rest = hermitian_part(rest - parts[k]);
    OrbitPair orbits = convex ? superadditive_orbit(f, parts[k], rest)
                              : subadditive_orbit(f, parts[k], rest);
    bound += outer * orbits.u * matrix_function(f, parts[k]) * orbits.u.adjoint() *
             outer.adjoint();
    outer = outer * orbits.v;
  }
  bound += outer * matrix_function(f, parts.back()) * outer.adjoint();
  return hermitian_part(bound);
}

std::vector<double> pow_vals(std::vector<double> v, double p) {
  for (auto& x : v) x = std::pow(std::max(x, 0.0), p);
  return v;
}

// ----- rearrangement, subadditivity, congruence ------------------------

double rearrange_hs(TrialContext& c) {
  auto mono = gen::monotone_pair(c.rng, c.n);
  auto anti = gen::antimonotone_pair(c.rng, c.n);
  Matrix z = gen::normal_matrix(c.rng, c.n);
  c.put("A", mono.a);
  c.put("B", mono.b);
  c.put("Z", z);
  const double m1 = scalar((mono.a * z * mono.b).frobenius(), (z * mono.a * mono.b).frobenius());
  // antimonotone pairs reverse the inequality
  const double m2 = scalar((z * anti.a * anti.b).frobenius(), (anti.a * z * anti.b).frobenius());
  return std::min(m1, m2);
}

double proj_norm(TrialContext& c) {
  auto mono = gen::monotone_pair(c.rng, c.n);
  Matrix e = gen::projection(c.rng, c.n);
  c.put("A", mono.a);
  c.put("B", mono.b);
  c.put("E", e);
  return scalar(opnorm(mono.a * e * mono.b), opnorm(e * mono.a * mono.b));
}

double semi_sqrt2(TrialContext& c) {
  auto mono = gen::monotone_pair(c.rng, c.n);
  Matrix s = gen::semi_unitary(c.rng, c.n);
  c.put("S", s);
  return scalar(opnorm(mono.a * s * mono.b), std::sqrt(2.0) * opnorm(s * mono.a * mono.b));
}

double compress_sv(TrialContext& c) {
  auto mono = gen::monotone_pair(c.rng, c.n);
  Matrix e = gen::projection(c.rng, c.n);
  auto mu_l = singular_values(mono.a * e * mono.b);
  auto mu_r = singular_values(e * mono.a * mono.b);
  return dominance_values(mu_l, mu_r);
}

double posmap_monotone(TrialContext& c) {
  // Asymmetric Kadison order: the product of images sits below an orbit of
  // the image of the product (the scalar compression case is Chebyshev's sum
  // inequality, which fixes this direction).
  auto mono = gen::monotone_pair(c.rng, c.n);
  auto phi = gen::unital_kraus_map(c.rng, c.n, 2);
  Matrix image = hermitian_part(phi.apply(mono.a * mono.b * mono.a));
  Matrix pa = hermitian_part(phi.apply(mono.a));
  Matrix pb = hermitian_part(phi.apply(mono.b));
  Matrix prod = hermitian_part(pa * pb * pa);
  return dominance(prod, image);
}

double subadd_norm(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  c.put("A", a);
  c.put("B", b);
  return norms(matrix_function(f, a + b), matrix_function(f, a) + matrix_function(f, b));
}

double expansive_trace(TrialContext& c) {
  Matrix a = gen::psd(c.rng, c.n);
  Matrix z = bounded_expansive(c.rng, c.n);
  FunctionSpec f = pick_concave(c.rng);
  Matrix inner = hermitian_part(z.adjoint() * a * z);
  double m = norms(matrix_function(f, inner), z.adjoint() * matrix_function(f, a) * z);
  // trace form allows non-monotone concave f with f(0) >= 0
  FunctionSpec hat = fn::concave_hat(0.8 * opnorm(inner));
  const double tl = matrix_function(hat, inner).trace().real();
  const double tr = (z.adjoint() * matrix_function(hat, a) * z).trace().real();
  return std::min(m, scalar(tl, tr));
}

double jot_sum(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  const std::size_t m = 2 + c.rng.below(2);
  Matrix lhs_arg(c.n, c.n), rhs(c.n, c.n);
  for (std::size_t i = 0; i < m; ++i) {
    Matrix a = gen::psd(c.rng, c.n);
    Matrix z = bounded_expansive(c.rng, c.n);
    lhs_arg += z.adjoint() * a * z;
    rhs += z.adjoint() * matrix_function(f, a) * z;
  }
  return norms(matrix_function(f, hermitian_part(lhs_arg)), rhs);
}

double jot_convex(TrialContext& c) {
  FunctionSpec g = pick_convex_zero(c.rng);
  const std::size_t m = 2 + c.rng.below(2);
  Matrix arg(c.n, c.n), lhs(c.n, c.n);
  for (std::size_t i = 0; i < m; ++i) {
    Matrix a = gen::psd(c.rng, c.n);
    Matrix z = bounded_expansive(c.rng, c.n);
    arg += z.adjoint() * a * z;
    lhs += z.adjoint() * matrix_function(g, a) * z;
  }
  return norms(lhs, matrix_function(g, hermitian_part(arg)));
}

double normal_subadd(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix a = gen::normal_matrix(c.rng, c.n);
  Matrix b = gen::normal_matrix(c.rng, c.n);
  return norms(matrix_function(f, abs_value(a + b)),
               matrix_function(f, abs_value(a)) + matrix_function(f, abs_value(b)));
}

double cartesian(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix z = gen::ginibre(c.rng, c.n, c.n);
  Matrix re = hermitian_part(z), im = skew_part_i(z);
  return norms(matrix_function(f, abs_value(z)),
               matrix_function(f, abs_value(re)) + matrix_function(f, abs_value(im)));
}

double zpluszstar(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix z = gen::ginibre(c.rng, c.n, c.n);
  return norms(matrix_function(f, abs_value(z + z.adjoint())),
               matrix_function(f, abs_value(z)) + matrix_function(f, abs_value(z.adjoint())));
}

double sinh_holder(TrialContext& c) {
  const double p = pickd(c.rng, {1.5, 2.0, 3.0});
  const double q = p / (p - 1.0);
  const std::size_t m = 1 + c.rng.below(3);
  Matrix sab(c.n, c.n), sa(c.n, c.n), sb(c.n, c.n);
  for (std::size_t i = 0; i < m; ++i) {
    // each pair commutes: shared eigenbasis
    Matrix qmat = gen::unitary(c.rng, c.n);
    std::vector<double> da(c.n), db(c.n);
    for (auto& v : da) v = c.rng.uniform(0.0, 1.2);
    for (auto& v : db) v = c.rng.uniform(0.0, 1.2);
    Matrix ai = hermitian_part(qmat * Matrix::diag(da) * qmat.adjoint());
    Matrix bi = hermitian_part(qmat * Matrix::diag(db) * qmat.adjoint());
    sab += ai * bi;
    sa += powm(ai, p);
    sb += powm(bi, q);
  }
  auto sh = [](double t) { return std::sinh(t); };
  Matrix lhs = matrix_function(sh, hermitian_part(sab));
  Matrix ra = matrix_function(sh, hermitian_part(sa));
  Matrix rb = matrix_function(sh, hermitian_part(sb));
  auto ml = singular_values(lhs);
  auto ma = singular_values(ra);
  auto mb = singular_values(rb);
  double worst = 1e300;
  for (const auto& id : norm_catalog(c.n)) {
    const double l = norm_from_singvals(id, ml);
    const double r = std::pow(norm_from_singvals(id, ma), 1.0 / p) *
                     std::pow(norm_from_singvals(id, mb), 1.0 / q);
    worst = std::min(worst, scalar(l, r));
  }
  return worst;
}

double trlog_convex(TrialContext& c) {
  const std::size_t m = 2 + c.rng.below(2);
  std::vector<Matrix> a(m), x(m);
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = psd_in(c.rng, c.n, 0.5, 2.0);
    x[i] = gen::ginibre(c.rng, c.n, c.n) + Matrix::identity(c.n) * 2.0;  // invertible
  }
  auto phi = [&](const std::vector<double>& t) {
    Matrix sum(c.n, c.n);
    for (std::size_t i = 0; i < m; ++i) sum += x[i].adjoint() * powm(a[i], t[i]) * x[i];
    Matrix lg = matrix_function([](double u) { return std::log(std::max(u, 1e-300)); },
                                hermitian_part(sum));
    return lg.trace().real();
  };
  std::vector<double> s(m), t(m), mid(m);
  for (std::size_t i = 0; i < m; ++i) {
    s[i] = c.rng.uniform(-1.5, 1.5);
    t[i] = c.rng.uniform(-1.5, 1.5);
    mid[i] = 0.5 * (s[i] + t[i]);
  }
  return scalar(phi(mid), 0.5 * (phi(s) + phi(t)));
}

// ----- log-majorization and log-convexity family -----------------------

struct ArakiInstance {
  Matrix a, b;
  double p;
};

ArakiInstance araki_draw(TrialContext& c) {
  ArakiInstance inst;
  inst.a = psd_in(c.rng, c.n, 0.5, 2.0);
  inst.b = psd_in(c.rng, c.n, 0.5, 2.0);
  inst.p = pickd(c.rng, {1.0, 1.5, 2.0});
  return inst;
}

double logconv_2var(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix b = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix z = gen::ginibre(c.rng, c.n, c.n);
  const double alpha = pickd(c.rng, {0.7, 1.0, 2.0});
  const std::vector<double> ps = {0.5, 1.125, 1.75, 2.375, 3.0};
  const std::vector<double> ts = {0.25, 0.6875, 1.125, 1.5625, 2.0};
  auto cat = norm_catalog(c.n);
  // F[i][j][norm] = log || |A^{t/p} Z B^{t/p}|^{alpha p} ||
  std::vector<std::vector<std::vector<double>>> f(
      ps.size(), std::vector<std::vector<double>>(ts.size()));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const double e = ts[j] / ps[i];
      auto mu = singular_values(powm(a, e) * z * powm(b, e));
      auto powed = pow_vals(mu, alpha * ps[i]);
      f[i][j].reserve(cat.size());
      for (const auto& id : cat)
        f[i][j].push_back(std::log(std::max(norm_from_singvals(id, powed), 1e-300)));
    }
  double worst = 1e300;
  for (std::size_t i1 = 0; i1 < ps.size(); ++i1)
    for (std::size_t j1 = 0; j1 < ts.size(); ++j1)
      for (std::size_t i2 = i1; i2 < ps.size(); ++i2)
        for (std::size_t j2 = 0; j2 < ts.size(); ++j2) {
          if ((i1 + i2) % 2 || (j1 + j2) % 2) continue;
          const std::size_t im = (i1 + i2) / 2, jm = (j1 + j2) / 2;
          for (std::size_t k = 0; k < cat.size(); ++k)
            worst = std::min(worst,
                             0.5 * (f[i1][j1][k] + f[i2][j2][k]) - f[im][jm][k]);
        }
  return worst;
}

double araki_norm(TrialContext& c) {
  auto inst = araki_draw(c);
  Matrix z = bounded_contraction(c.rng, c.n);
  const double alpha = pickd(c.rng, {0.5, 1.0, 2.0});
  Matrix core = hermitian_part(inst.a * z.adjoint() * inst.b * z * inst.a);
  Matrix corep = hermitian_part(powm(inst.a, inst.p) * z.adjoint() * powm(inst.b, inst.p) * z *
                                powm(inst.a, inst.p));
  auto lhs = pow_vals(eig_of(core), alpha * inst.p);
  auto rhs = pow_vals(eig_of(corep), alpha);
  double worst = 1e300;
  for (const auto& id : norm_catalog(c.n)) {
    std::sort(lhs.rbegin(), lhs.rend());
    std::sort(rhs.rbegin(), rhs.rend());
    worst = std::min(worst, scalar(norm_from_singvals(id, lhs), norm_from_singvals(id, rhs)));
  }
  return worst;
}

double araki_contract(TrialContext& c) {
  auto inst = araki_draw(c);
  Matrix z = bounded_contraction(c.rng, c.n);
  c.put("A", inst.a);
  c.put("B", inst.b);
  c.put("Z", z);
  c.put_value("p", inst.p);
  Matrix core = hermitian_part(inst.a * z.adjoint() * inst.b * z * inst.a);
  Matrix corep = hermitian_part(powm(inst.a, inst.p) * z.adjoint() * powm(inst.b, inst.p) * z *
                                powm(inst.a, inst.p));
  Matrix lhs = powm(core, inst.p);
  double m = wlog_values(pow_vals(eig_of(core), inst.p), eig_of(corep));
  if (m >= -tol::maj) {
    // Ky Fan transfer cross-check: a passing weak-log report orders every
    // symmetric norm in the catalog.
    auto rep = majorize(MajOrder::weak_log, lhs, corep);
    for (const auto& cmp : kyfan_transfer(rep, lhs, corep))
      m = std::min(m, scalar(cmp.lhs, cmp.rhs) + tol::eq);
  }
  return m;
}

double araki_expansive(TrialContext& c) {
  auto inst = araki_draw(c);
  Matrix z = bounded_expansive(c.rng, c.n);
  Matrix core = hermitian_part(inst.a * z.adjoint() * inst.b * z * inst.a);
  Matrix corep = hermitian_part(powm(inst.a, inst.p) * z.adjoint() * powm(inst.b, inst.p) * z *
                                powm(inst.a, inst.p));
  return margin::superwlog_values(pow_vals(eig_of(core), inst.p), eig_of(corep));
}

double trace_econvex(TrialContext& c) {
  auto inst = araki_draw(c);
  const double alpha = pickd(c.rng, {0.5, 1.0, 2.0});
  // contraction with e-convex nondecreasing f
  Matrix z = bounded_contraction(c.rng, c.n);
  Matrix core = hermitian_part(inst.a * z.adjoint() * inst.b * z * inst.a);
  Matrix corep = hermitian_part(powm(inst.a, inst.p) * z.adjoint() * powm(inst.b, inst.p) * z *
                                powm(inst.a, inst.p));
  FunctionSpec f = fn::e_convex_log1p_pow(alpha);
  double tl = 0.0, tr = 0.0;
  for (double v : pow_vals(eig_of(core), inst.p)) tl += f.evaluator(v);
  for (double v : eig_of(corep)) tr += f.evaluator(v);
  double m1 = scalar(tl, tr);
  // expansive with e-concave nondecreasing g: inequality reverses
  Matrix ze = bounded_expansive(c.rng, c.n);
  Matrix core2 = hermitian_part(inst.a * ze.adjoint() * inst.b * ze * inst.a);
  Matrix corep2 = hermitian_part(powm(inst.a, inst.p) * ze.adjoint() * powm(inst.b, inst.p) *
                                 ze * powm(inst.a, inst.p));
  // log(t^a/(t+1)) is nondecreasing only for a >= 1
  FunctionSpec g = fn::e_concave_log_ratio(pickd(c.rng, {1.0, 1.5, 2.0}));
  double sl = 0.0, sr = 0.0;
  for (double v : pow_vals(eig_of(core2), inst.p)) sl += g.evaluator(std::max(v, 1e-300));
  for (double v : eig_of(corep2)) sr += g.evaluator(std::max(v, 1e-300));
  return std::min(m1, scalar(sr, sl));
}

double lim_mono(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix b = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix z = bounded_contraction(c.rng, c.n);
  const std::vector<double> ps = {1.0, 1.5, 2.0, 3.0};
  std::vector<double> seq;
  for (double p : ps) {
    Matrix m = hermitian_part(powm(a, p) * z.adjoint() * powm(b, p) * z * powm(a, p));
    seq.push_back(std::pow(eig_of(m).front(), 1.0 / p));
  }
  double worst = 1e300;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    worst = std::min(worst, scalar(seq[i], seq[i + 1]));
  return worst;
}

double posmap_araki(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix b = psd_in(c.rng, c.n, 0.5, 2.0);
  const double p = pickd(c.rng, {1.0, 1.5, 2.0});
  auto phi = gen::subunital_kraus_map(c.rng, c.n, 2);
  Matrix lhs_core = hermitian_part(a * phi.apply(b) * a);
  Matrix rhs = hermitian_part(powm(a, p) * phi.apply(powm(b, p)) * powm(a, p));
  return wlog_values(pow_vals(eig_of(lhs_core), p), eig_of(rhs));
}

double schur_araki(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix b = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix cc = gen::correlation(c.rng, c.n);
  const double p = pickd(c.rng, {1.0, 1.5, 2.0});
  Matrix lhs_core = hermitian_part(a * cc.schur(b) * a);
  Matrix rhs = hermitian_part(powm(a, p) * cc.schur(powm(b, p)) * powm(a, p));
  return wlog_values(pow_vals(eig_of(lhs_core), p), eig_of(rhs));
}

double normal_posmap(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix nmat = gen::normal_matrix(c.rng, c.n);
  auto phi = gen::subunital_kraus_map(c.rng, c.n, 2);
  const double p = pickd(c.rng, {1.0, 1.5, 2.0});
  Matrix lhs = abs_value(a * phi.apply(nmat) * a);
  Matrix rhs = hermitian_part(powm(a, p) * phi.apply(powm(abs_value(nmat), p)) * powm(a, p));
  return wlog_values(pow_vals(eig_of(lhs), p), eig_of(rhs));
}

double multi_normal(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  const std::size_t m = 2 + c.rng.below(2);
  const double p = pickd(c.rng, {1.0, 1.5, 2.0});
  Matrix sum(c.n, c.n), sum_abs(c.n, c.n);
  for (std::size_t k = 0; k < m; ++k) {
    Matrix x = gen::normal_matrix(c.rng, c.n);
    sum += x;
    sum_abs += powm(abs_value(x), p);
  }
  Matrix lhs = abs_value(a * sum * a);
  Matrix rhs = hermitian_part(powm(a, p) * sum_abs * powm(a, p)) *
               std::pow(static_cast<double>(m), p - 1.0);
  return wlog_values(pow_vals(eig_of(lhs), p), eig_of(rhs));
}

double cartesian_2p(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix x = herm_in(c.rng, c.n, -1.5, 1.5);
  Matrix y = herm_in(c.rng, c.n, -1.5, 1.5);
  const double p = pickd(c.rng, {1.0, 1.5, 2.0});
  Matrix z = x + y * cpx(0.0, 1.0);
  Matrix lhs = abs_value(a * z * a);
  Matrix rhs = hermitian_part(powm(a, p) * (powm(abs_value(x), p) + powm(abs_value(y), p)) *
                              powm(a, p)) *
               std::pow(2.0, p - 1.0);
  return wlog_values(pow_vals(eig_of(lhs), p), eig_of(rhs));
}

double exp_family(TrialContext& c) {
  Matrix a = gen::ginibre(c.rng, c.n, c.n) * 0.6;
  Matrix b = gen::ginibre(c.rng, c.n, c.n) * 0.6;
  c.put("A", a);
  c.put("B", b);
  Matrix rea = hermitian_part(a), reb = hermitian_part(b);
  auto expf = [](double t) { return std::exp(t); };
  Matrix half = matrix_function(expf, rea * 0.5);
  Matrix rhs = hermitian_part(half * matrix_function(expf, reb) * half);
  Matrix lhs = abs_value(expm(a + b));
  double m1 = margin::log_values(eig_of(lhs), eig_of(rhs));
  // Hermitian special case with both classical consequences
  Matrix lhs_h = matrix_function(expf, hermitian_part(rea + reb));
  double m2 = margin::log_values(eig_of(lhs_h), eig_of(rhs));
  // metric increase: ||A - B|| <= || log(e^{A/2} e^{-B} e^{A/2}) ||
  Matrix mid = hermitian_part(half * matrix_function([](double t) { return std::exp(-t); }, reb) *
                              half);
  Matrix logm = matrix_function([](double t) { return std::log(std::max(t, 1e-300)); }, mid);
  double m3 = norms(rea - reb, logm);
  return std::min({m1, m2, m3});
}

double t_tstar(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix t = gen::ginibre(c.rng, c.n, c.n);
  const double p = pickd(c.rng, {1.0, 1.5, 2.0});
  Matrix lhs = abs_value(a * hermitian_part(t) * a);
  Matrix rhs = hermitian_part(
      powm(a, p) * ((powm(abs_value(t), p) + powm(abs_value(t.adjoint()), p)) * 0.5) *
      powm(a, p));
  return wlog_values(pow_vals(eig_of(lhs), p), eig_of(rhs));
}

double schur_normal(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix x = gen::normal_matrix(c.rng, c.n);
  Matrix y = gen::normal_matrix(c.rng, c.n);
  const double p = pickd(c.rng, {1.0, 1.5, 2.0});
  Matrix lhs = abs_value(a * x.schur(y) * a);
  Matrix rhs = hermitian_part(powm(a, p) *
                              powm(abs_value(x), p).schur(powm(abs_value(y), p)) * powm(a, p));
  return wlog_values(pow_vals(eig_of(lhs), p), eig_of(rhs));
}

double schur_tt(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix t = gen::ginibre(c.rng, c.n, c.n);
  const double p = pickd(c.rng, {1.0, 1.5, 2.0});
  Matrix lhs = abs_value(a * t.schur(t.adjoint()) * a);
  Matrix rhs = hermitian_part(
      powm(a, p) * powm(abs_value(t), p).schur(powm(abs_value(t.adjoint()), p)) * powm(a, p));
  return wlog_values(pow_vals(eig_of(lhs), p), eig_of(rhs));
}

double lowner_heinz(TrialContext& c) {
  Matrix b = gen::psd(c.rng, c.n);
  Matrix a = hermitian_part(b + gen::psd(c.rng, c.n));
  const double p = pickd(c.rng, {0.3, 0.5, 0.8});
  return psd_gap(powm(b, p), powm(a, p));
}

double kosaki_holder(TrialContext& c) {
  Matrix x = gen::ginibre(c.rng, c.n, c.n);
  Matrix y = gen::ginibre(c.rng, c.n, c.n);
  const double p = pickd(c.rng, {1.5, 2.0, 3.0});
  const double q = p / (p - 1.0);
  const double alpha = pickd(c.rng, {0.5, 1.0, 2.0});
  auto mxy = pow_vals(singular_values(x * y), alpha);
  auto mx = pow_vals(singular_values(x), alpha * p);
  auto my = pow_vals(singular_values(y), alpha * q);
  double worst = 1e300;
  for (const auto& id : norm_catalog(c.n)) {
    const double l = norm_from_singvals(id, mxy);
    const double r = std::pow(norm_from_singvals(id, mx), 1.0 / p) *
                     std::pow(norm_from_singvals(id, my), 1.0 / q);
    worst = std::min(worst, scalar(l, r));
  }
  return worst;
}

double littlewood(TrialContext& c) {
  const std::size_t m = 2 + c.rng.below(4);
  std::vector<double> a(m), w(m);
  for (auto& v : a) v = c.rng.uniform(0.1, 3.0);
  for (auto& v : w) v = c.rng.uniform(0.1, 2.0);
  auto lp = [&](double p) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += w[i] * std::pow(a[i], p);
    return std::pow(s, 1.0 / p);
  };
  const double p = c.rng.uniform(0.3, 2.0), q = c.rng.uniform(0.3, 2.0);
  const double theta = c.rng.uniform(0.1, 0.9);
  const double lhs = lp(1.0 / (theta * p + (1.0 - theta) * q));
  const double rhs = std::pow(lp(1.0 / p), theta) * std::pow(lp(1.0 / q), 1.0 - theta);
  return scalar(lhs, rhs);
}

double poslin_logconv(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  auto phi = gen::subunital_kraus_map(c.rng, c.n, 2);
  const double alpha = pickd(c.rng, {0.5, 1.0});
  const std::vector<double> ps = {0.5, 1.0, 1.5, 2.0, 2.5};
  const std::vector<double> ts = {-1.0, -0.25, 0.5, 1.25, 2.0};
  auto cat = norm_catalog(c.n);
  std::vector<std::vector<std::vector<double>>> f(
      ps.size(), std::vector<std::vector<double>>(ts.size()));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) {
      Matrix inner = hermitian_part(phi.apply(powm(a, ts[j] / ps[i])));
      auto lam = pow_vals(eig_of(inner), alpha * ps[i]);
      for (const auto& id : cat)
        f[i][j].push_back(std::log(std::max(norm_from_singvals(id, lam), 1e-300)));
    }
  double worst = 1e300;
  for (std::size_t i1 = 0; i1 < ps.size(); ++i1)
    for (std::size_t j1 = 0; j1 < ts.size(); ++j1)
      for (std::size_t i2 = i1; i2 < ps.size(); ++i2)
        for (std::size_t j2 = 0; j2 < ts.size(); ++j2) {
          if ((i1 + i2) % 2 || (j1 + j2) % 2) continue;
          for (std::size_t k = 0; k < cat.size(); ++k)
            worst = std::min(worst, 0.5 * (f[i1][j1][k] + f[i2][j2][k]) -
                                        f[(i1 + i2) / 2][(j1 + j2) / 2][k]);
        }
  return worst;
}

double schur_interp(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix b = psd_in(c.rng, c.n, 0.5, 2.0);
  const double w = c.rng.uniform(0.5, 1.5);
  const double dp = c.rng.uniform(0.0, 0.5), dr = c.rng.uniform(0.0, 1.0) * dp;
  const double p = w + dp, q = w - dp, r = w + dr, s = w - dr;
  const double alpha = pickd(c.rng, {0.5, 1.0});
  auto val = [&](double e1, double e2) {
    auto lam = pow_vals(eig_of(hermitian_part(powm(a, e1).schur(powm(b, e2)))), alpha);
    std::sort(lam.rbegin(), lam.rend());
    return lam;
  };
  auto rs1 = val(r, s), rs2 = val(s, r), pq1 = val(p, q), pq2 = val(q, p);
  double worst = 1e300;
  for (const auto& id : norm_catalog(c.n)) {
    const double l1 = norm_from_singvals(id, rs1), l2 = norm_from_singvals(id, rs2);
    const double r1 = norm_from_singvals(id, pq1), r2 = norm_from_singvals(id, pq2);
    worst = std::min(worst, scalar(l1 * l2, r1 * r2));
    worst = std::min(worst, scalar(l1 + l2, r1 + r2));
  }
  return worst;
}

double perspective_p(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix b = psd_in(c.rng, c.n, 0.5, 2.0);
  Matrix z = gen::ginibre(c.rng, c.n, c.n);
  const double alpha = pickd(c.rng, {0.5, 1.0});
  const std::vector<double> ps = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  auto cat = norm_catalog(c.n);
  std::vector<std::vector<double>> f(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto mu = pow_vals(singular_values(powm(a, 1.0 / ps[i]) * z * powm(b, 1.0 / ps[i])), alpha);
    for (const auto& id : cat)
      f[i].push_back(ps[i] * std::log(std::max(norm_from_singvals(id, mu), 1e-300)));
  }
  double worst = 1e300;
  for (std::size_t i1 = 0; i1 < ps.size(); ++i1)
    for (std::size_t i2 = i1; i2 < ps.size(); ++i2) {
      if ((i1 + i2) % 2) continue;
      for (std::size_t k = 0; k < cat.size(); ++k)
        worst = std::min(worst, 0.5 * (f[i1][k] + f[i2][k]) - f[(i1 + i2) / 2][k]);
    }
  return worst;
}

double comp_avg(TrialContext& c) {
  Matrix nmat = gen::normal_matrix(c.rng, c.n);
  auto phi = gen::subunital_kraus_map(c.rng, c.n, 2);
  Matrix pn = abs_value(phi.apply(nmat));
  Matrix pan = hermitian_part(phi.apply(abs_value(nmat)));
  const double m1 = dominance_offset(pn, pan * 0.5, pan * 0.5);
  const double m2 = dominance_offset(pn, pan, pan * 0.25);
  return std::min(m1, m2);
}

double russo_dye_improved(TrialContext& c) {
  Matrix z = bounded_contraction(c.rng, c.n);
  auto phi = gen::subunital_kraus_map(c.rng, c.n, 2);
  Matrix pz = abs_value(phi.apply(z));
  Matrix pid = hermitian_part(phi.apply_identity(c.n));
  return dominance_offset(pz, pid * 0.5, pid * 0.5);
}

double schur_eig3(TrialContext& c) {
  const std::size_t n = std::max<std::size_t>(c.n, 3);
  Matrix s = gen::psd(c.rng, n);
  Matrix z = bounded_contraction(c.rng, n);
  auto lam = eig_of(abs_value(s.schur(z)));
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = s(i, i).real();
  std::sort(diag.rbegin(), diag.rend());
  return scalar(lam[2], diag[1]);
}

// ----- unitary-orbit inequalities ---------------------------------------

FunctionSpec pick_convex_general(Rng& rng) {
  // convex on the whole real line (Hermitian arguments)
  switch (rng.below(4)) {
    case 0: return fn::square();
    case 1: return fn::abs();
    case 2: return fn::shifted_square(0.5);
    default: return fn::expm1();
  }
}

double jensen_orbit(TrialContext& c) {
  Matrix a = herm_in(c.rng, c.n, -2.0, 2.0);
  auto phi = gen::unital_kraus_map(c.rng, c.n, 2);
  FunctionSpec f = pick_convex_general(c.rng);
  c.put("A", a);
  Matrix phia = hermitian_part(phi.apply(a));
  c.put("PhiA", phia);
  Matrix m = hermitian_part(phi.apply(matrix_function(f, a)));
  Matrix fc = matrix_function(f, phia);
  auto orbits = orbit_two_sided(f, phia, m);
  Matrix avg = (orbits.u * m * orbits.u.adjoint() + orbits.v * m * orbits.v.adjoint()) * 0.5;
  const double m1 = psd_gap(fc, avg);
  const double m2 = weyl_two_orbit(fc * 2.0, m, m);
  return std::min(m1, m2);
}

double jensen_avg(TrialContext& c) {
  Matrix a = herm_in(c.rng, c.n, -2.0, 2.0);
  Matrix b = herm_in(c.rng, c.n, -2.0, 2.0);
  FunctionSpec f = pick_convex_general(c.rng);
  Matrix mid = (a + b) * 0.5;
  Matrix m = (matrix_function(f, a) + matrix_function(f, b)) * 0.5;
  auto orbits = orbit_two_sided(f, mid, m);
  Matrix avg = (orbits.u * m * orbits.u.adjoint() + orbits.v * m * orbits.v.adjoint()) * 0.5;
  return psd_gap(matrix_function(f, mid), avg);
}

double jensen_cstar(TrialContext& c) {
  const std::size_t m_terms = 2 + c.rng.below(2);
  auto phi = gen::unital_kraus_map(c.rng, c.n, m_terms);
  FunctionSpec f = pick_convex_general(c.rng);
  Matrix csum(c.n, c.n), msum(c.n, c.n);
  for (std::size_t i = 0; i < m_terms; ++i) {
    Matrix ai = herm_in(c.rng, c.n, -2.0, 2.0);
    csum += phi.ops[i].adjoint() * ai * phi.ops[i];
    msum += phi.ops[i].adjoint() * matrix_function(f, ai) * phi.ops[i];
  }
  csum = hermitian_part(csum);
  msum = hermitian_part(msum);
  auto orbits = orbit_two_sided(f, csum, msum);
  Matrix avg =
      (orbits.u * msum * orbits.u.adjoint() + orbits.v * msum * orbits.v.adjoint()) * 0.5;
  return psd_gap(matrix_function(f, csum), avg);
}

double jensen_contract(TrialContext& c) {
  Matrix a = gen::psd(c.rng, c.n);
  Matrix z = bounded_contraction(c.rng, c.n);
  FunctionSpec f = pick_concave(c.rng);
  Matrix inner = hermitian_part(z.adjoint() * a * z);
  Matrix zfz = hermitian_part(z.adjoint() * matrix_function(f, a) * z);
  // unital extension absorbs f(0)(I - Z^*Z) >= 0
  const double f0 = f.evaluator(0.0);
  Matrix mhat = zfz + (Matrix::identity(c.n) - hermitian_part(z.adjoint() * z)) * f0;
  auto orbits = orbit_two_sided_concave(f, inner, mhat);
  Matrix avg = (orbits.u * zfz * orbits.u.adjoint() + orbits.v * zfz * orbits.v.adjoint()) * 0.5;
  return psd_gap(avg, matrix_function(f, inner));
}

double jensen_trace(TrialContext& c) {
  const std::size_t m_terms = 2 + c.rng.below(2);
  auto phi = gen::unital_kraus_map(c.rng, c.n, m_terms);
  FunctionSpec f = pick_convex_general(c.rng);
  Matrix csum(c.n, c.n), msum(c.n, c.n);
  for (std::size_t i = 0; i < m_terms; ++i) {
    Matrix ai = herm_in(c.rng, c.n, -2.0, 2.0);
    csum += phi.ops[i].adjoint() * ai * phi.ops[i];
    msum += phi.ops[i].adjoint() * matrix_function(f, ai) * phi.ops[i];
  }
  const double m1 = scalar(matrix_function(f, hermitian_part(csum)).trace().real(),
                           msum.trace().real());
  // single contraction with f(0) <= 0
  Matrix a = herm_in(c.rng, c.n, -2.0, 2.0);
  Matrix z = bounded_contraction(c.rng, c.n);
  FunctionSpec gz = fn::abs();
  Matrix inner = hermitian_part(z.adjoint() * a * z);
  const double m2 = scalar(matrix_function(gz, inner).trace().real(),
                           (z.adjoint() * matrix_function(gz, a) * z).trace().real());
  return std::min(m1, m2);
}

double jensen_schur(TrialContext& c) {
  Matrix zc = gen::correlation(c.rng, c.n);
  Matrix a = gen::psd(c.rng, c.n);
  FunctionSpec f = pick_concave(c.rng);
  Matrix inner = hermitian_part(zc.schur(a));
  Matrix zfa = hermitian_part(zc.schur(matrix_function(f, a)));
  const double f0 = f.evaluator(0.0);
  Matrix diag_def = Matrix::identity(c.n);
  for (std::size_t i = 0; i < c.n; ++i) diag_def(i, i) -= zc(i, i);
  Matrix mhat = zfa + diag_def * f0;
  auto orbits = orbit_two_sided_concave(f, inner, mhat);
  Matrix avg = (orbits.u * zfa * orbits.u.adjoint() + orbits.v * zfa * orbits.v.adjoint()) * 0.5;
  return psd_gap(avg, matrix_function(f, inner));
}

double jensen_schur_det(TrialContext& c) {
  Matrix zc = gen::correlation(c.rng, c.n);
  Matrix a = gen::psd(c.rng, c.n);
  FunctionSpec f = pick_concave(c.rng);
  auto det_of = [](const Matrix& h) {
    double s = 1.0;
    for (double v : eig_of(h)) s *= std::max(v, 0.0);
    return s;
  };
  const double lhs = det_of(matrix_function(f, hermitian_part(zc.schur(a))));
  const double rhs = det_of(hermitian_part(zc.schur(matrix_function(f, a))));
  return scalar(rhs, lhs);
}

double antinorm_super(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.3, 2.0);
  Matrix b = psd_in(c.rng, c.n, 0.3, 2.0);
  const double p = pickd(c.rng, {-0.5, -1.0, -2.0});
  auto lam_ab = pow_vals(eig_of(a + b), p);
  auto lam_a = pow_vals(eig_of(a), p);
  auto lam_b = pow_vals(eig_of(b), p);
  std::sort(lam_ab.rbegin(), lam_ab.rend());
  std::sort(lam_a.rbegin(), lam_a.rend());
  std::sort(lam_b.rbegin(), lam_b.rend());
  double worst = 1e300;
  for (const auto& id : norm_catalog(c.n)) {
    const double l = std::pow(norm_from_singvals(id, lam_ab), 1.0 / p);
    const double r = std::pow(norm_from_singvals(id, lam_a), 1.0 / p) +
                     std::pow(norm_from_singvals(id, lam_b), 1.0 / p);
    worst = std::min(worst, scalar(r, l));
  }
  return worst;
}

double abs_sum(TrialContext& c) {
  Matrix a = gen::ginibre(c.rng, c.n, c.n);
  Matrix b = gen::ginibre(c.rng, c.n, c.n);
  Matrix sum_abs = (abs_value(a) + abs_value(b)) * 0.5;
  Matrix sum_abs_adj = (abs_value(a.adjoint()) + abs_value(b.adjoint())) * 0.5;
  Matrix lhs = abs_value(a + b);
  const double m1 = dominance_offset(lhs, sum_abs, sum_abs_adj);
  // constructive: W from the polar factor of A+B
  Matrix w = polar(a + b).partial_isometry;
  Matrix rhs = sum_abs + hermitian_part(w.adjoint() * sum_abs_adj * w);
  const double m2 = psd_gap(lhs, rhs);
  return std::min(m1, m2);
}

double pospart(TrialContext& c) {
  Matrix a = herm_in(c.rng, c.n, -2.0, 2.0);
  Matrix b = herm_in(c.rng, c.n, -2.0, 2.0);
  auto pos = [](double t) { return t > 0.0 ? t : 0.0; };
  Matrix sum_pos = matrix_function(pos, hermitian_part(a + b));
  Matrix m = hermitian_part(matrix_function(pos, a) + matrix_function(pos, b));
  Matrix e = range_projection(sum_pos);
  Matrix w = e * 2.0 - Matrix::identity(c.n);
  const double core = psd_gap(sum_pos, (m + w * m * w.adjoint()) * 0.5);
  FunctionSpec f = fn::square();  // nondecreasing convex on [0, inf)
  const double necessary =
      weyl_two_orbit(matrix_function(f, sum_pos) * 2.0, matrix_function(f, m),
                     matrix_function(f, m));
  return std::min(core, necessary);
}

double eig_odd(TrialContext& c) {
  const std::size_t m_terms = 2;
  auto phi = gen::unital_kraus_map(c.rng, c.n, m_terms);
  FunctionSpec f = pick_convex_general(c.rng);
  Matrix csum(c.n, c.n), msum(c.n, c.n);
  for (std::size_t i = 0; i < m_terms; ++i) {
    Matrix ai = herm_in(c.rng, c.n, -2.0, 2.0);
    csum += phi.ops[i].adjoint() * ai * phi.ops[i];
    msum += phi.ops[i].adjoint() * matrix_function(f, ai) * phi.ops[i];
  }
  auto lf = eig_of(matrix_function(f, hermitian_part(csum)));
  auto lm = eig_of(hermitian_part(msum));
  double scale = 1e-6, worst = 1e300;
  for (double v : lm) scale = std::max(scale, std::abs(v));
  for (std::size_t k = 0; 2 * k < lf.size(); ++k)
    worst = std::min(worst, (lm[k] - lf[2 * k]) / scale);
  return worst;
}

double subadd_orbit(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  c.put("A", a);
  c.put("B", b);
  auto orbits = subadditive_orbit(f, a, b);
  Matrix fa = matrix_function(f, a), fb = matrix_function(f, b);
  Matrix rhs = orbits.u * fa * orbits.u.adjoint() + orbits.v * fb * orbits.v.adjoint();
  Matrix lhs = matrix_function(f, hermitian_part(a + b));
  const double m1 = psd_gap(lhs, rhs);
  const double m2 = weyl_two_orbit(lhs, fa, fb);
  return std::min(m1, m2);
}

double superadd_orbit(TrialContext& c) {
  FunctionSpec g = pick_convex_zero(c.rng);
  if (g.monotonicity_switch) g = fn::power(1.5);  // need monotone with g(0) = 0
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  auto orbits = superadditive_orbit(g, a, b);
  Matrix rhs = orbits.u * matrix_function(g, a) * orbits.u.adjoint() +
               orbits.v * matrix_function(g, b) * orbits.v.adjoint();
  return psd_gap(rhs, matrix_function(g, hermitian_part(a + b)));
}

double diff_orbit(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  Matrix absdiff = abs_value(hermitian_part(a - b));
  Matrix mid = hermitian_part(absdiff + b);
  const double m1 = dominance(matrix_function(f, a), matrix_function(f, mid));
  auto orbits = subadditive_orbit(f, absdiff, b);
  Matrix rhs = orbits.u * matrix_function(f, absdiff) * orbits.u.adjoint() +
               orbits.v * matrix_function(f, b) * orbits.v.adjoint();
  const double m2 = psd_gap(matrix_function(f, mid), rhs);
  return std::min(m1, m2);
}

double block_norm_corlee(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix h = gen::psd(c.rng, 2 * c.n);
  Matrix fa = matrix_function(f, hermitian_part(h.block(0, c.n, 0, c.n)));
  Matrix fb = matrix_function(f, hermitian_part(h.block(c.n, 2 * c.n, c.n, 2 * c.n)));
  auto fh = singular_values(matrix_function(f, h));
  double worst = 1e300;
  auto ma = singular_values(fa);
  auto mb = singular_values(fb);
  for (const auto& id : norm_catalog(c.n)) {
    NormId big = id;
    if (big.tag == NormId::Tag::KyFan || big.tag == NormId::Tag::KyFanNormalized) continue;
    worst = std::min(worst, scalar(norm_from_singvals(big, fh),
                                   norm_from_singvals(big, ma) + norm_from_singvals(big, mb)));
  }
  // Ky Fan norms need matching k on both sides
  for (std::size_t k = 1; k <= c.n; ++k) {
    double l = 0.0, ra = 0.0, rb = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      l += fh[j];
      ra += ma[j];
      rb += mb[j];
    }
    worst = std::min(worst, scalar(l, ra + rb));
  }
  return worst;
}

double det_superadd(TrialContext& c) {
  FunctionSpec g = pick_convex_zero(c.rng);
  if (g.monotonicity_switch) g = fn::t_log1p();
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  auto root_det = [&](const Matrix& h) {
    double s = 0.0;
    for (double v : eig_of(h)) s += std::log(std::max(v, 1e-300));
    return std::exp(s / static_cast<double>(c.n));
  };
  const double lhs = root_det(matrix_function(g, hermitian_part(a + b)));
  const double rhs =
      root_det(matrix_function(g, a)) + root_det(matrix_function(g, b));
  return scalar(rhs, lhs);
}

double diag_rank1(TrialContext& c) {
  // f(A) <= sum f(a_ii) E_i for rank-one projections E_i built from the
  // one-by-one positive splitting plus the iterated subadditive bound.
  FunctionSpec f = pick_concave(c.rng);
  Matrix a = gen::psd(c.rng, c.n);
  auto split = split_positive_multi(a, std::vector<std::size_t>(c.n, 1));
  std::vector<Matrix> parts;
  for (const auto& t : split.terms)
    parts.push_back(hermitian_part(t.factor * t.middle * t.factor.adjoint()));
  Matrix bound = iterated_orbit_bound(f, parts, false);
  const double m1 = psd_gap(matrix_function(f, a), bound);
  // trace consequence
  double fd = 0.0;
  for (std::size_t i = 0; i < c.n; ++i) fd += f.evaluator(std::max(a(i, i).real(), 0.0));
  const double m2 = scalar(matrix_function(f, a).trace().real(), fd);
  return std::min(m1, m2);
}

double key_split(TrialContext& c) {
  Matrix h = gen::psd(c.rng, 2 * c.n);
  auto cert = split_positive_2x2(h, c.n);
  return -std::max(cert.residual, cert.factor_orthonormality());
}

struct ClarksonParts {
  Matrix sum_p, s, t;  // (|A|^p + |B|^p)/2, |(A+B)/2|^p, |(A-B)/2|^p
  Matrix x, y;         // |(A+B)/2|^2, |(A-B)/2|^2
};

ClarksonParts clarkson_draw(TrialContext& c, double p) {
  ClarksonParts parts;
  Matrix a = gen::ginibre(c.rng, c.n, c.n);
  Matrix b = gen::ginibre(c.rng, c.n, c.n);
  Matrix plus = (a + b) * 0.5, minus = (a - b) * 0.5;
  parts.x = hermitian_part(plus.adjoint() * plus);
  parts.y = hermitian_part(minus.adjoint() * minus);
  parts.s = powm(parts.x, p / 2.0);
  parts.t = powm(parts.y, p / 2.0);
  parts.sum_p = (powm(abs_value(a), p) + powm(abs_value(b), p)) * 0.5;
  return parts;
}

double clarkson_p(TrialContext& c) {
  const double p = pickd(c.rng, {2.5, 3.0, 4.0});
  c.put_value("p", p);
  auto parts = clarkson_draw(c, p);
  c.put("SumP", parts.sum_p);
  // chain: U S U^* + V T V^*  <=  ((X+Y))^{p/2}  <=  W (2^{p/2-1}(|A|^p+|B|^p)) W^*
  FunctionSpec g = fn::power(p / 2.0);
  auto orbits = superadditive_orbit(g, parts.x, parts.y);
  Matrix sum_orbits = hermitian_part(orbits.u * parts.s * orbits.u.adjoint() +
                                     orbits.v * parts.t * orbits.v.adjoint());
  Matrix mid = powm(hermitian_part(parts.x + parts.y), p / 2.0);
  const double m1 = psd_gap(sum_orbits, mid);
  const double m2 = dominance(mid, parts.sum_p);
  return std::min(m1, m2);
}

double clarkson_min_sums(TrialContext& c) {
  const double p = pickd(c.rng, {2.5, 3.0});
  auto parts = clarkson_draw(c, p);
  auto lm = eig_of(parts.sum_p);
  auto ls = eig_of(parts.s);
  auto lt = eig_of(parts.t);
  std::sort(lm.begin(), lm.end());
  std::sort(ls.begin(), ls.end());
  std::sort(lt.begin(), lt.end());
  double scale = std::max(1e-6, *std::max_element(lm.begin(), lm.end()));
  double worst = 1e300, pm = 0.0, pst = 0.0;
  for (std::size_t k = 0; k < lm.size(); ++k) {
    pm += lm[k];
    pst += ls[k] + lt[k];
    worst = std::min(worst, (pm - pst) / scale);
  }
  return worst;
}

double clarkson_min_prods(TrialContext& c) {
  const double p = pickd(c.rng, {2.5, 3.0});
  auto parts = clarkson_draw(c, p);
  auto lm = eig_of(parts.sum_p);
  auto ls = eig_of(parts.s);
  auto lt = eig_of(parts.t);
  std::sort(lm.begin(), lm.end());
  std::sort(ls.begin(), ls.end());
  std::sort(lt.begin(), lt.end());
  double scale = std::max(1e-6, lm.back());
  double worst = 1e300;
  double gm = 1.0, gs = 1.0, gt = 1.0;
  for (std::size_t k = 0; k < lm.size(); ++k) {
    gm *= std::max(lm[k], 0.0);
    gs *= std::max(ls[k], 0.0);
    gt *= std::max(lt[k], 0.0);
    const double kk = 1.0 / static_cast<double>(k + 1);
    worst = std::min(worst,
                     (std::pow(gm, kk) - std::pow(gs, kk) - std::pow(gt, kk)) / scale);
  }
  return worst;
}

double clarkson_weyl(TrialContext& c) {
  const double p = pickd(c.rng, {2.5, 3.0});
  auto parts = clarkson_draw(c, p);
  auto lm = eig_of(parts.sum_p);                  // descending
  auto ls = eig_of(parts.s);
  auto lt = eig_of(parts.t);
  std::vector<double> lt_up(lt.rbegin(), lt.rend());  // ascending
  double scale = std::max(1e-6, lm.front());
  double worst = 1e300;
  const std::size_t n = lm.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; j + k + 1 <= n; ++k)
      worst = std::min(worst, (lm[j] - ls[j + k] - lt_up[k]) / scale);
  return worst;
}

double clarkson_q(TrialContext& c) {
  const double q = pickd(c.rng, {0.5, 1.0, 1.5});
  auto parts = clarkson_draw(c, q);
  // chain: (|A|^q+|B|^q)/2  <=  W ((X+Y))^{q/2} W^*  <=  W (U S U^* + V T V^*) W^*
  FunctionSpec f = fn::power(q / 2.0);
  auto orbits = subadditive_orbit(f, parts.x, parts.y);
  Matrix bound = hermitian_part(orbits.u * parts.s * orbits.u.adjoint() +
                                orbits.v * parts.t * orbits.v.adjoint());
  Matrix mid = powm(hermitian_part(parts.x + parts.y), q / 2.0);
  const double m1 = psd_gap(mid, bound);
  const double m2 = dominance(parts.sum_p, mid);
  return std::min(m1, m2);
}

double clarkson_weyl_q(TrialContext& c) {
  const double q = pickd(c.rng, {0.5, 1.0, 1.5});
  auto parts = clarkson_draw(c, q);
  auto lm = eig_of(parts.sum_p);  // descending
  auto ls = eig_of(parts.s);
  auto lt = eig_of(parts.t);
  double scale = std::max({1e-6, lm.front(), ls.front() + lt.front()});
  double worst = 1e300;
  const std::size_t n = lm.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; j + k + 1 <= n; ++k)
      worst = std::min(worst, (ls[j] + lt[k] - lm[j + k]) / scale);
  return worst;
}

// ----- midpoint mixes and doubly stochastic weights ---------------------

double hh1(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  const double x = 0.1 + 0.8 * c.rng.uniform();
  c.put("A", a);
  c.put("B", b);
  c.put_value("x", x);
  auto hh = hh_decomposition(f, a, b, x);
  Matrix lhs = direct_sum(matrix_function(f, a), matrix_function(f, b));
  Matrix f1 = matrix_function(f, hh.mix1), f2 = matrix_function(f, hh.mix2);
  Matrix rhs = hh.u * f1 * hh.u.adjoint() + hh.v * f2 * hh.v.adjoint();
  const double m1 = psd_gap(lhs, rhs);
  const double m2 = weyl_two_orbit(lhs, direct_sum(f1, Matrix(c.n, c.n)),
                                   direct_sum(f2, Matrix(c.n, c.n)));
  return std::min(m1, m2);
}

double hh2(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  auto w = gen::commuting_normal_weights(c.rng, c.n);
  auto hh = hh_decomposition_weighted(f, a, b, w.x, w.y);
  Matrix lhs = direct_sum(matrix_function(f, a), matrix_function(f, b));
  Matrix rhs = hh.u * matrix_function(f, hh.mix1) * hh.u.adjoint() +
               hh.v * matrix_function(f, hh.mix2) * hh.v.adjoint();
  return psd_gap(lhs, rhs);
}

double hh_eigen1(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  const double x = 0.1 + 0.8 * c.rng.uniform();
  Matrix mix1 = hermitian_part(a * (1.0 - x) + b * x);
  Matrix mix2 = hermitian_part(a * x + b * (1.0 - x));
  auto lab = eig_of(direct_sum(matrix_function(f, a), matrix_function(f, b)));
  auto l1 = eig_of(matrix_function(f, mix1));
  auto l2 = eig_of(matrix_function(f, mix2));
  auto lsum = eig_of(hermitian_part(matrix_function(f, mix1) + matrix_function(f, mix2)));
  auto lmid = eig_of(matrix_function(f, hermitian_part((a + b) * 0.5)));
  double scale = std::max(1e-6, lab.front());
  double worst = 1e300;
  for (std::size_t j = 0; 2 * j < lab.size() && j < l1.size(); ++j)
    worst = std::min(worst, (l1[j] + l2[j] - lab[2 * j]) / scale);
  for (std::size_t j = 0; j < lsum.size(); ++j)
    worst = std::min(worst, (2.0 * lmid[j] - lsum[j]) / scale);
  return worst;
}

double hh_schatt1(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  const double x = 0.1 + 0.8 * c.rng.uniform();
  const double p = pickd(c.rng, {1.0, 1.5, 2.0, 3.0});
  Matrix mix1 = hermitian_part(a * (1.0 - x) + b * x);
  Matrix mix2 = hermitian_part(a * x + b * (1.0 - x));
  auto np = [&](const Matrix& h) { return norm(NormId::schatten(p), matrix_function(f, h)); };
  const double lhs = std::pow(std::pow(np(a), p) + std::pow(np(b), p), 1.0 / p);
  return scalar(lhs, np(mix1) + np(mix2));
}

double hh_trace1(TrialContext& c) {
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  const double x = 0.1 + 0.8 * c.rng.uniform();
  const double p = pickd(c.rng, {1.0, 1.5, 2.0});
  const double q = pickd(c.rng, {0.3, 0.7, 1.0});
  Matrix mix1 = hermitian_part(a * (1.0 - x) + b * x);
  Matrix mix2 = hermitian_part(a * x + b * (1.0 - x));
  auto tr_pq = [&](const Matrix& h) {
    double s = 0.0;
    for (double v : eig_of(h)) s += std::pow(std::max(v, 0.0), p * q);
    return s;
  };
  const double lhs = std::pow(tr_pq(a) + tr_pq(b), 1.0 / p);
  const double rhs = std::pow(tr_pq(mix1), 1.0 / p) + std::pow(tr_pq(mix2), 1.0 / p);
  return scalar(lhs, rhs);
}

double hh_convex(TrialContext& c) {
  // convex mirror through the negated concave certificate
  FunctionSpec g = fn::power(pickd(c.rng, {1.5, 2.0}));
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  const double x = 0.1 + 0.8 * c.rng.uniform();
  FunctionSpec f = g;
  f.evaluator = [g](double t) { return -g.evaluator(t); };
  f.name = "-" + g.name;
  std::swap(f.convex, f.concave);
  std::swap(f.nondecreasing, f.nonincreasing);
  auto hh = hh_decomposition(f, a, b, x);
  Matrix lhs = direct_sum(matrix_function(g, a), matrix_function(g, b));
  Matrix rhs = hh.u * matrix_function(g, hh.mix1) * hh.u.adjoint() +
               hh.v * matrix_function(g, hh.mix2) * hh.v.adjoint();
  return psd_gap(rhs, lhs);
}

double hh_schatt2(TrialContext& c) {
  FunctionSpec g = fn::power(pickd(c.rng, {1.5, 2.0}));
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  const double x = 0.1 + 0.8 * c.rng.uniform();
  const double q = pickd(c.rng, {0.3, 0.5, 0.8});
  Matrix mix1 = hermitian_part(a * (1.0 - x) + b * x);
  Matrix mix2 = hermitian_part(a * x + b * (1.0 - x));
  auto nq = [&](const Matrix& h) {
    double s = 0.0;
    for (double v : eig_of(matrix_function(g, h))) s += std::pow(std::max(v, 0.0), q);
    return std::pow(s, 1.0 / q);
  };
  const double lhs = std::pow(std::pow(nq(a), q) + std::pow(nq(b), q), 1.0 / q);
  return scalar(nq(mix1) + nq(mix2), lhs);
}

double hh_eigen2(TrialContext& c) {
  FunctionSpec f = pick_concave(c.rng);
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  auto lab = eig_of(direct_sum(matrix_function(f, a), matrix_function(f, b)));
  // composite Simpson on [0,1], 33 symmetric nodes, positive weights
  const int segments = 16;
  std::vector<double> integral(c.n, 0.0);
  double wsum = 0.0;
  for (int i = 0; i <= 2 * segments; ++i) {
    const double x = static_cast<double>(i) / (2.0 * segments);
    double w = (i == 0 || i == 2 * segments) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    auto lx = eig_of(matrix_function(f, hermitian_part(a * x + b * (1.0 - x))));
    for (std::size_t j = 0; j < c.n; ++j) integral[j] += w * lx[j];
    wsum += w;
  }
  for (auto& v : integral) v /= wsum;
  double scale = std::max(1e-6, lab.front());
  double worst = 1e300;
  for (std::size_t j = 0; 2 * j < lab.size() && j < integral.size(); ++j)
    worst = std::min(worst, (2.0 * integral[j] - lab[2 * j]) / scale);
  return worst;
}

double ds_trace(TrialContext& c) {
  auto w = gen::ds_weight_pair(c.rng, c.n);
  Matrix a = herm_in(c.rng, c.n, -2.0, 2.0);
  Matrix b = herm_in(c.rng, c.n, -2.0, 2.0);
  FunctionSpec g = pick_convex_general(c.rng);
  Matrix mix1 = hermitian_part(w.x.adjoint() * a * w.x + w.y.adjoint() * b * w.y);
  Matrix mix2 = hermitian_part(w.y.adjoint() * a * w.y + w.x.adjoint() * b * w.x);
  const double lhs = matrix_function(g, mix1).trace().real() +
                     matrix_function(g, mix2).trace().real();
  const double rhs = matrix_function(g, a).trace().real() +
                     matrix_function(g, b).trace().real();
  return scalar(lhs, rhs);
}

double ds_orbit(TrialContext& c) {
  auto w = gen::ds_weight_pair(c.rng, c.n);
  Matrix a = herm_in(c.rng, c.n, -2.0, 2.0);
  Matrix b = herm_in(c.rng, c.n, -2.0, 2.0);
  Matrix mix1 = hermitian_part(w.x.adjoint() * a * w.x + w.y.adjoint() * b * w.y);
  Matrix mix2 = hermitian_part(w.y.adjoint() * a * w.y + w.x.adjoint() * b * w.x);
  Matrix s = direct_sum(mix1, mix2);
  Matrix ab = direct_sum(a, b);
  c.put("A", a);
  c.put("B", b);
  c.put("X", w.x);
  c.put("Y", w.y);
  auto cert = majorize_average(s, ab);  // throws NotMajorized on failure
  return -cert.residual;
}

double ds_det(TrialContext& c) {
  auto w = gen::ds_weight_pair(c.rng, c.n);
  Matrix a = psd_in(c.rng, c.n, 0.2, 2.0), b = psd_in(c.rng, c.n, 0.2, 2.0);
  Matrix mix1 = hermitian_part(w.x.adjoint() * a * w.x + w.y.adjoint() * b * w.y);
  Matrix mix2 = hermitian_part(w.y.adjoint() * a * w.y + w.x.adjoint() * b * w.x);
  auto det_of = [](const Matrix& h) {
    double s = 0.0;
    for (double v : eig_of(h)) s += std::log(std::max(v, 1e-300));
    return s;
  };
  return scalar(det_of(a) + det_of(b), det_of(mix1) + det_of(mix2)) ;
}

double ds_norms(TrialContext& c) {
  auto w = gen::ds_weight_pair(c.rng, c.n);
  Matrix a = psd_in(c.rng, c.n, 0.0, 2.0), b = psd_in(c.rng, c.n, 0.0, 2.0);
  Matrix mix1 = hermitian_part(w.x.adjoint() * a * w.x + w.y.adjoint() * b * w.y);
  Matrix mix2 = hermitian_part(w.y.adjoint() * a * w.y + w.x.adjoint() * b * w.x);
  FunctionSpec f = pick_concave(c.rng);
  FunctionSpec g = pick_convex_zero(c.rng);
  Matrix mixes_f = direct_sum(matrix_function(f, mix1), matrix_function(f, mix2));
  Matrix ab_f = direct_sum(matrix_function(f, a), matrix_function(f, b));
  Matrix mixes_g = direct_sum(matrix_function(g, mix1), matrix_function(g, mix2));
  Matrix ab_g = direct_sum(matrix_function(g, a), matrix_function(g, b));
  double worst = norms(mixes_g, ab_g);
  for (const auto& id : antinorm_catalog(2 * c.n))
    worst = std::min(worst, scalar(antinorm(id, ab_f), antinorm(id, mixes_f)));
  return worst;
}

double hh_quad(TrialContext& c) {
  Matrix a = psd_in(c.rng, c.n, 0.0, 2.0), b = psd_in(c.rng, c.n, 0.0, 2.0);
  FunctionSpec f = pick_concave(c.rng);
  FunctionSpec g = pick_convex_zero(c.rng);
  const int segments = 8;
  Matrix int_f(c.n, c.n), int_g(c.n, c.n);
  double wsum = 0.0;
  for (int i = 0; i <= 2 * segments; ++i) {
    const double x = static_cast<double>(i) / (2.0 * segments);
    double w = (i == 0 || i == 2 * segments) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    Matrix mix = hermitian_part(a * (1.0 - x) + b * x);
    int_f += matrix_function(f, mix) * w;
    int_g += matrix_function(g, mix) * w;
    wsum += w;
  }
  int_f = int_f * (1.0 / wsum);
  int_g = int_g * (1.0 / wsum);
  Matrix mid = hermitian_part((a + b) * 0.5);
  double worst = norms(matrix_function(g, mid), int_g);
  Matrix fmid = matrix_function(f, mid);
  for (const auto& id : antinorm_catalog(c.n))
    worst = std::min(worst, scalar(antinorm(id, hermitian_part(int_f)), antinorm(id, fmid)));
  return worst;
}

// ----- partial trace and block matrices ---------------------------------

double block_four(TrialContext& c) {
  Matrix h = gen::herm_offdiag_block(c.rng, c.n);
  auto cert = hermitian_offdiag_halves(h);
  Matrix sum = hermitian_part(h.block(0, c.n, 0, c.n) + h.block(c.n, 2 * c.n, c.n, 2 * c.n));
  const double m1 = -std::max(cert.residual, cert.factor_orthonormality());
  const double m2 = norms(h, direct_sum(sum, Matrix(c.n, c.n)));
  return std::min(m1, m2);
}

double block_direct(TrialContext& c) {
  // beta = 4 stays affordable only for small block sizes
  const std::size_t beta = c.n <= 2 && c.param("beta", 4.0) >= 4.0 && c.rng.below(2) == 0 ? 4 : 2;
  Matrix h = gen::psd_hermitian_blocks(c.rng, beta, c.n);
  c.put("H", h);
  auto cert = clifford_partial_trace(h, beta);
  return -std::max(cert.residual, cert.factor_orthonormality());
}

double hiroshima(TrialContext& c) {
  const double alpha_param = c.param("alpha", 0.0);
  const std::size_t alpha = alpha_param >= 2.0 ? static_cast<std::size_t>(alpha_param)
                                               : 2 + c.rng.below(2);  // non-dyadic included
  Matrix h = gen::psd_hermitian_blocks(c.rng, alpha, c.n);
  c.put("H", h);
  Matrix delta(c.n, c.n);
  for (std::size_t s = 0; s < alpha; ++s)
    delta += h.block(s * c.n, (s + 1) * c.n, s * c.n, (s + 1) * c.n);
  auto lh = eig_of(h);
  auto ld = eig_of(hermitian_part(delta));
  ld.resize(lh.size(), 0.0);  // pad
  double scale = std::max(1e-6, ld.front());
  double worst = 1e300, ph = 0.0, pd = 0.0;
  for (std::size_t k = 0; k < lh.size(); ++k) {
    ph += lh[k];
    pd += ld[k];
    worst = std::min(worst, (pd - ph) / scale);
  }
  return worst;
}

double block_eig1(TrialContext& c) {
  const std::size_t alpha = 2 + c.rng.below(3);
  std::size_t beta = 1;
  while (beta < alpha) beta *= 2;
  Matrix h = gen::psd_hermitian_blocks(c.rng, alpha, c.n);
  Matrix delta(c.n, c.n);
  for (std::size_t s = 0; s < alpha; ++s)
    delta += h.block(s * c.n, (s + 1) * c.n, s * c.n, (s + 1) * c.n);
  auto lh = eig_of(h);
  auto ld = eig_of(hermitian_part(delta));
  double scale = std::max(1e-6, ld.front());
  double worst = 1e300;
  for (std::size_t k = 0; k < c.n; ++k) {
    if (beta * k >= lh.size()) break;
    worst = std::min(worst, (ld[k] - lh[beta * k]) / scale);
  }
  return worst;
}

double block_eigc(TrialContext& c) {
  const std::size_t alpha = 2;
  const std::size_t beta = 2;
  Matrix h = gen::psd_hermitian_blocks(c.rng, alpha, c.n);
  Matrix delta(c.n, c.n);
  for (std::size_t s = 0; s < alpha; ++s)
    delta += h.block(s * c.n, (s + 1) * c.n, s * c.n, (s + 1) * c.n);
  auto lh = eig_of(h);
  auto ld = eig_of(hermitian_part(delta));
  double scale = std::max(1e-6, ld.front());
  double worst = 1e300;
  for (std::size_t k = 0; beta * k < lh.size(); ++k) {
    // random compositions k1 + k2 = beta k
    for (int rep = 0; rep < 4; ++rep) {
      const std::size_t k1 = c.rng.below(beta * k + 1);
      const std::size_t k2 = beta * k - k1;
      const double r1 = k1 < ld.size() ? ld[k1] : 0.0;
      const double r2 = k2 < ld.size() ? ld[k2] : 0.0;
      worst = std::min(worst, ((r1 + r2) / beta - lh[beta * k]) / scale);
    }
  }
  return worst;
}

double block_rearr(TrialContext& c) {
  const std::size_t alpha = 2 + c.rng.below(2);
  Matrix q = gen::unitary(c.rng, c.n);
  Matrix t = gen::psd(c.rng, c.n);
  Matrix lhs(c.n, c.n), rhs(c.n, c.n);
  std::vector<Matrix> s(alpha);
  for (std::size_t i = 0; i < alpha; ++i) {
    std::vector<double> d(c.n);
    for (auto& v : d) v = c.rng.gauss();
    s[i] = hermitian_part(q * Matrix::diag(d) * q.adjoint());
    lhs += s[i] * t * t * s[i];
    rhs += t * s[i] * s[i] * t;
  }
  return norms(hermitian_part(lhs), hermitian_part(rhs));
}

double block_rearr2(TrialContext& c) {
  const std::size_t alpha = 3;
  const std::size_t beta = 4;  // smallest dyadic above alpha
  Matrix q = gen::unitary(c.rng, c.n);
  Matrix t = gen::psd(c.rng, c.n);
  Matrix lhs(c.n, c.n), rhs(c.n, c.n);
  for (std::size_t i = 0; i < alpha; ++i) {
    std::vector<double> d(c.n);
    for (auto& v : d) v = c.rng.gauss();
    Matrix s = hermitian_part(q * Matrix::diag(d) * q.adjoint());
    lhs += s * t * t * s;
    rhs += t * s * s * t;
  }
  auto ll = eig_of(hermitian_part(lhs));
  auto lr = eig_of(hermitian_part(rhs));
  double scale = std::max(1e-6, lr.front());
  double worst = 1e300;
  for (std::size_t k = 0; beta * k < ll.size(); ++k)
    worst = std::min(worst, (lr[k] - ll[beta * k]) / scale);
  return worst;
}

double block_rot(TrialContext& c) {
  const std::size_t alpha = 2 + c.rng.below(2);
  Matrix h = gen::psd_hermitian_blocks(c.rng, alpha, c.n);
  FunctionSpec f = pick_concave(c.rng);
  const double shift = c.rng.uniform(0.0, 0.5);
  auto fval = [&](double t) { return f.evaluator(t) + shift; };
  Matrix delta(c.n, c.n);
  double diag_terms = 0.0;
  for (std::size_t s = 0; s < alpha; ++s) {
    Matrix blk = hermitian_part(h.block(s * c.n, (s + 1) * c.n, s * c.n, (s + 1) * c.n));
    delta += blk;
    diag_terms += matrix_function(fval, blk).trace().real();
  }
  const double tr_h = matrix_function(fval, h).trace().real();
  const double tr_delta = matrix_function(fval, hermitian_part(delta)).trace().real();
  // ambient dimensions differ; the small side picks up f(0) padding terms
  const double pad = (static_cast<double>(alpha * c.n) - c.n) * fval(0.0);
  const double m1 = scalar(tr_delta + pad, tr_h);
  const double m2 = scalar(tr_h, diag_terms);
  return std::min(m1, m2);
}

double block_det(TrialContext& c) {
  Matrix h = gen::herm_offdiag_block(c.rng, c.n);
  Matrix a = hermitian_part(h.block(0, c.n, 0, c.n));
  Matrix b = hermitian_part(h.block(c.n, 2 * c.n, c.n, 2 * c.n));
  auto logdet_ip = [&](const Matrix& m) {
    double s = 0.0;
    for (double v : eig_of(m)) s += std::log1p(std::max(v, -0.999999));
    return s;
  };
  const double dh = logdet_ip(h);
  const double dab = logdet_ip(hermitian_part(a + b)) ;
  const double dsep = logdet_ip(a) + logdet_ip(b);
  return std::min(scalar(dab, dh), scalar(dh, dsep));
}

double nr_upper(TrialContext& c) {
  Matrix h = gen::psd(c.rng, 2 * c.n);
  c.put("H", h);
  Matrix x = h.block(0, c.n, c.n, 2 * c.n);
  Matrix sum = hermitian_part(h.block(0, c.n, 0, c.n) + h.block(c.n, 2 * c.n, c.n, 2 * c.n));
  auto prof = support_profile(x, 180);
  double width = 1e300;
  for (std::size_t k = 0; k < 90; ++k)
    width = std::min(width, prof.support[k] + prof.support[k + 90]);
  return norms(h, direct_sum(sum + Matrix::identity(c.n) * width, Matrix(c.n, c.n)));
}

double nr_lower(TrialContext& c) {
  Matrix h = gen::psd(c.rng, 2 * c.n);
  Matrix x = h.block(0, c.n, c.n, 2 * c.n);
  Matrix sum = hermitian_part(h.block(0, c.n, 0, c.n) + h.block(c.n, 2 * c.n, c.n, 2 * c.n));
  auto prof = support_profile(x, 180);
  double neg = -1e300;
  for (double hv : prof.support) neg = std::max(neg, -hv);
  const double d = std::max(0.0, neg);
  Matrix lower = direct_sum(sum * 0.5 + Matrix::identity(c.n) * d,
                            sum * 0.5 - Matrix::identity(c.n) * d);
  return norms(lower, h);
}

double nr_diam(TrialContext& c) {
  Matrix h = gen::psd(c.rng, 2 * c.n);
  Matrix x = h.block(0, c.n, c.n, 2 * c.n);
  Matrix sum = hermitian_part(h.block(0, c.n, 0, c.n) + h.block(c.n, 2 * c.n, c.n, 2 * c.n));
  auto prof = support_profile(x, 180);
  double neg = -1e300;
  for (double hv : prof.support) neg = std::max(neg, -hv);
  const double d = std::max(0.0, neg);
  auto lh = eig_of(h);
  auto ls = eig_of(sum * 0.5);
  const double diam_h = lh.front() - lh.back();
  const double diam_s = ls.front() - ls.back();
  return scalar(2.0 * d, diam_h - diam_s);
}

double nr_det(TrialContext& c) {
  Matrix h = gen::psd(c.rng, 2 * c.n);
  Matrix x = h.block(0, c.n, c.n, 2 * c.n);
  Matrix sum = hermitian_part(h.block(0, c.n, 0, c.n) + h.block(c.n, 2 * c.n, c.n, 2 * c.n));
  auto prof = support_profile(x, 180);
  double neg = -1e300;
  for (double hv : prof.support) neg = std::max(neg, -hv);
  const double d = std::max(0.0, neg);
  Matrix half = sum * 0.5;
  Matrix lhs_mat = hermitian_part(half * half - Matrix::identity(c.n) * (d * d));
  double lhs = 1.0, rhs = 1.0;
  for (double v : eig_of(lhs_mat)) lhs *= std::max(v, 0.0);
  for (double v : eig_of(h)) rhs *= std::max(v, 0.0);
  const double scale = std::max({1.0, lhs, rhs});
  return (lhs - rhs) / scale;
}

// ----- numerical range and eigenvalue steps -----------------------------

double delta2_upper(const Matrix& x) {
  auto prof = support_profile(x, 360);
  double width = 1e300;
  for (std::size_t k = 0; k < 180; ++k)
    width = std::min(width, prof.support[k] + prof.support[k + 180]);
  return std::min(width, dist_to_scalars(x).value);
}

double thinner(TrialContext& c) {
  // exact at n = 2, certified upper bound for larger n
  const bool exact = c.n == 2;
  Matrix x = gen::ginibre(c.rng, c.n, c.n);
  Matrix h = gen::psd_with_offdiag(c.rng, x);
  c.put("X", x);
  c.put("H", h);
  const double d2 = exact ? ellipse_2x2(x).minor_axis : delta2_upper(x);
  Matrix sum = hermitian_part(h.block(0, c.n, 0, c.n) + h.block(c.n, 2 * c.n, c.n, 2 * c.n));
  auto lh = eig_of(h);
  auto ls = eig_of(sum);
  double scale = std::max(1e-6, lh.front());
  double worst = 1e300;
  for (std::size_t j = 0; 2 * j < lh.size() && j < ls.size(); ++j)
    worst = std::min(worst, (ls[j] + d2 - lh[2 * j]) / scale);
  return worst;
}

double pertu1(TrialContext& c) {
  Matrix x = gen::ginibre(c.rng, c.n, c.n);
  Matrix h = gen::psd_with_offdiag(c.rng, x);
  const double d = dist_to_scalars(x).value;
  Matrix sum = hermitian_part(h.block(0, c.n, 0, c.n) + h.block(c.n, 2 * c.n, c.n, 2 * c.n));
  auto lh = eig_of(h);
  auto ls = eig_of(sum);
  double scale = std::max(1e-6, lh.front());
  double worst = 1e300;
  for (std::size_t j = 0; 2 * j < lh.size() && j < ls.size(); ++j)
    worst = std::min(worst, (ls[j] + d - lh[2 * j]) / scale);
  return worst;
}

double inradius_normal1(TrialContext& c) {
  // normal N with spectrum in a disc of radius r
  const double r = c.rng.uniform(0.2, 1.5);
  const cpx center(c.rng.gauss(), c.rng.gauss());
  Matrix q = gen::unitary(c.rng, c.n);
  std::vector<cpx> z(c.n);
  for (auto& v : z) {
    double rad = r * std::sqrt(c.rng.uniform());
    double ang = c.rng.uniform(0.0, 6.283185307179586);
    v = center + std::polar(rad, ang);
  }
  Matrix nmat = q * Matrix::diag(z) * q.adjoint();
  Matrix h = gen::psd_with_offdiag(c.rng, nmat);
  Matrix sum = hermitian_part(h.block(0, c.n, 0, c.n) + h.block(c.n, 2 * c.n, c.n, 2 * c.n));
  auto lh = eig_of(h);
  auto ls = eig_of(sum);
  double scale = std::max(1e-6, lh.front());
  double worst = 1e300;
  for (std::size_t j = 0; 2 * j < lh.size() && j < ls.size(); ++j)
    worst = std::min(worst, (ls[j] + r - lh[2 * j]) / scale);
  return worst;
}

double inradius_cor0(TrialContext& c) {
  Matrix a = gen::ginibre(c.rng, c.n, c.n);
  Matrix b = gen::ginibre(c.rng, c.n, c.n);
  Matrix lhs = hermitian_part(a.adjoint() * a + b.adjoint() * b);
  Matrix rhs = hermitian_part(a * a.adjoint() + b * b.adjoint());
  const double d2 = c.n == 2 ? ellipse_2x2(a * b.adjoint()).minor_axis
                             : delta2_upper(a * b.adjoint());
  auto ll = eig_of(lhs);
  auto lr = eig_of(rhs);
  double scale = std::max(1e-6, ll.front());
  double worst = 1e300;
  for (std::size_t j = 0; 2 * j < ll.size() && j < lr.size(); ++j)
    worst = std::min(worst, (lr[j] + d2 - ll[2 * j]) / scale);
  return worst;
}

double inradius_cor01(TrialContext& c) {
  // commuting Hermitian H, K with spread(HK) <= 2, X Hermitian invertible
  Matrix q = gen::unitary(c.rng, c.n);
  std::vector<double> dh(c.n), dk(c.n);
  for (auto& v : dh) v = c.rng.uniform(-1.5, 1.5);
  for (auto& v : dk) v = c.rng.uniform(-1.5, 1.5);
  // scale so the product spread stays within 2 (scalar perturbation of a contraction)
  std::vector<double> prod(c.n);
  for (std::size_t i = 0; i < c.n; ++i) prod[i] = dh[i] * dk[i];
  const double spread =
      *std::max_element(prod.begin(), prod.end()) - *std::min_element(prod.begin(), prod.end());
  if (spread > 2.0) {
    const double f = std::sqrt(2.0 / spread);
    for (auto& v : dh) v *= f;
    for (auto& v : dk) v *= f;
  }
  Matrix hmat = hermitian_part(q * Matrix::diag(dh) * q.adjoint());
  Matrix kmat = hermitian_part(q * Matrix::diag(dk) * q.adjoint());
  Matrix x = psd_in(c.rng, c.n, 0.4, 1.8);
  Matrix xinv = pseudo_power(x, -1.0);
  const double lhs = opnorm(hermitian_part(x * hmat * hmat * x + xinv * kmat * kmat * xinv));
  const double rhs = opnorm(hermitian_part(hmat * x * x * hmat + kmat * xinv * xinv * kmat));
  return scalar(lhs, rhs + 1.0);
}

double inradius_corcomp(TrialContext& c) {
  Matrix x = gen::ginibre(c.rng, c.n, c.n);
  const double s = pickd(c.rng, {0.25, 0.5, 0.75});
  Matrix ax = abs_value(x), axs = abs_value(x.adjoint());
  Matrix fxa = powm(ax, 2.0 * s), gxa = powm(ax, 2.0 - 2.0 * s);
  Matrix fxs = powm(axs, 2.0 * s);
  const double bound = opnorm(fxa + gxa) - opnorm(fxs + gxa);
  const double d2 = c.n == 2 ? ellipse_2x2(x).minor_axis : delta2_upper(x);
  return scalar(bound, d2);
}

double inradius_simple(TrialContext& c) {
  Matrix x = gen::ginibre(c.rng, c.n, c.n);
  const cpx a(c.rng.gauss(), c.rng.gauss());
  Matrix shifted = x;
  for (std::size_t i = 0; i < c.n; ++i) shifted(i, i) -= a;
  const double bound =
      opnorm(shifted) -
      opnorm((abs_value(shifted) + abs_value(shifted.adjoint())) * 0.5);
  double eps;
  if (c.n == 2) {
    eps = ellipse_2x2(x).minor_axis / 2.0;
  } else {
    auto geo = geometry(support_profile(x, 360));
    eps = geo.inradius;
  }
  return scalar(bound, eps);
}

double thcomp(TrialContext& c) {
  Matrix x = gen::ginibre(c.rng, c.n, c.n);
  const double floor = 2.0 * opnorm(x) - opnorm(abs_value(x) + abs_value(x.adjoint()));
  const double d2 = c.n == 2 ? ellipse_2x2(x).minor_axis : delta2_upper(x);
  return scalar(floor, d2);
}

double prop1_normal(TrialContext& c) {
  Matrix nmat = gen::normal_matrix(c.rng, c.n);
  Matrix h = c.rng.below(2) == 0 ? gen::psd_with_offdiag(c.rng, nmat) : [&] {
    Matrix an = abs_value(nmat);
    Matrix ans = abs_value(nmat.adjoint());
    Matrix hh(2 * c.n, 2 * c.n);
    hh.set_block(0, 0, ans + gen::psd(c.rng, c.n) * 0.3);
    hh.set_block(0, c.n, nmat);
    hh.set_block(c.n, 0, nmat.adjoint());
    hh.set_block(c.n, c.n, an + gen::psd(c.rng, c.n) * 0.3);
    return hh;
  }();
  Matrix sum = hermitian_part(h.block(0, c.n, 0, c.n) + h.block(c.n, 2 * c.n, c.n, 2 * c.n));
  return scalar(h.frobenius(), sum.frobenius());
}

double prop1_converse(TrialContext& c) {
  // nonnormal X: the block [|X*| X; X* |X|] violates the Frobenius bound
  Matrix x;
  if (c.rng.below(4) == 0) {
    x = Matrix(2, 2);
    x(0, 1) = 1.0;
  } else {
    x = gen::ginibre(c.rng, c.n, c.n);
  }
  Matrix ax = abs_value(x), axs = abs_value(x.adjoint());
  Matrix h(2 * x.rows(), 2 * x.rows());
  h.set_block(0, 0, axs);
  h.set_block(0, x.rows(), x);
  h.set_block(x.rows(), 0, x.adjoint());
  h.set_block(x.rows(), x.rows(), ax);
  c.put("X", x);
  const double lhs2 = h.frobenius() * h.frobenius();
  Matrix sum = hermitian_part(ax + axs);
  const double rhs2 = sum.frobenius() * sum.frobenius();
  // violation found: margin is the (positive) excess
  return (lhs2 - rhs2) / std::max(1.0, rhs2);
}

// ----- square decompositions of partitioned matrices --------------------

PartitionedMatrix random_compatible_partition(TrialContext& c) {
  PartitionedMatrix pa;
  const std::size_t d = 2 + c.rng.below(4), d2 = 2 + c.rng.below(4);
  pa.base = gen::ginibre(c.rng, d, d2);
  const bool by_cols = c.rng.below(2) == 0;
  auto cuts = [&](std::size_t len) {
    std::vector<std::size_t> cs = {0, len};
    if (len >= 2 && c.rng.below(2)) cs.push_back(1 + c.rng.below(len - 1));
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
  };
  const auto outer = cuts(by_cols ? d2 : d);
  for (std::size_t g = 0; g + 1 < outer.size(); ++g) {
    const auto inner = cuts(by_cols ? d : d2);
    for (std::size_t i = 0; i + 1 < inner.size(); ++i) {
      BlockRect b;
      if (by_cols) {
        b.col_start = outer[g];
        b.col_end = outer[g + 1];
        b.row_start = inner[i];
        b.row_end = inner[i + 1];
      } else {
        b.row_start = outer[g];
        b.row_end = outer[g + 1];
        b.col_start = inner[i];
        b.col_end = inner[i + 1];
      }
      pa.blocks.push_back(b);
    }
  }
  return pa;
}

PartitionedMatrix random_four_block(TrialContext& c) {
  PartitionedMatrix pa;
  const std::size_t d = 3 + c.rng.below(3), d2 = 3 + c.rng.below(3);
  pa.base = gen::ginibre(c.rng, d, d2);
  const std::size_t cut_col = 1 + c.rng.below(d2 - 1);
  const std::size_t r_left = 1 + c.rng.below(d - 1);
  const std::size_t r_right = 1 + c.rng.below(d - 1);
  pa.blocks = {{0, r_left, 0, cut_col},
               {r_left, d, 0, cut_col},
               {0, r_right, cut_col, d2},
               {r_right, d, cut_col, d2}};
  return pa;
}

double pyth(TrialContext& c) {
  auto pa = random_compatible_partition(c);
  c.put("A", pa.base);
  auto cert = pythagoras(pa);
  const double m1 = -std::max(cert.residual, cert.factor_orthonormality());
  // exact trace identity
  double tr_sum = 0.0;
  for (const auto& t : cert.terms) tr_sum += t.middle.trace().real();
  const double tr_full = (pa.base.adjoint() * pa.base).trace().real();
  const double m2 = -std::abs(tr_sum - tr_full) / std::max(1.0, tr_full);
  return std::min(m1, m2);
}

double pyth_four(TrialContext& c) {
  auto pa = random_four_block(c);
  auto cert = pythagoras(pa);
  return -std::max(cert.residual, cert.factor_orthonormality());
}

double pyth_sing(TrialContext& c) {
  auto pa = random_four_block(c);
  std::vector<std::vector<double>> mus;
  for (std::size_t k = 0; k < pa.blocks.size(); ++k)
    mus.push_back(singular_values(pa.block_matrix(k)));
  auto mu = singular_values(pa.base);
  double scale = std::max(1e-6, mu.front() * mu.front());
  double worst = 1e300;
  for (int rep = 0; rep < 8; ++rep) {
    std::size_t total = 0;
    double rhs = 0.0;
    for (const auto& m : mus) {
      const std::size_t j = c.rng.below(3);
      total += j;
      rhs += j < m.size() ? m[j] * m[j] : 0.0;
    }
    const double lhs = total < mu.size() ? mu[total] * mu[total] : 0.0;
    worst = std::min(worst, (rhs - lhs) / scale);
  }
  return worst;
}

double pyth_bk(TrialContext& c) {
  auto pa = random_compatible_partition(c);
  const double q = pickd(c.rng, {1.0, 2.0, 3.0, 4.0});
  const double r = static_cast<double>(pa.blocks.size());
  auto nq = [&](const Matrix& m) {
    double s = 0.0;
    for (double v : singular_values(m)) s += std::pow(v, q);
    return std::pow(s, 2.0 / q);
  };
  double sum = 0.0;
  for (std::size_t k = 0; k < pa.blocks.size(); ++k) sum += nq(pa.block_matrix(k));
  const double full = nq(pa.base);
  if (q >= 2.0)
    return std::min(scalar(std::pow(r, 2.0 / q - 1.0) * sum, full), scalar(full, sum));
  return std::min(scalar(full, std::pow(r, 2.0 / q - 1.0) * sum), scalar(sum, full));
}

double pyth_hyper(TrialContext& c) {
  Matrix a = gen::ginibre(c.rng, c.n, c.n);
  Matrix h = gen::ginibre(c.rng, c.n, 1);
  double norm_h = 0.0;
  for (std::size_t i = 0; i < c.n; ++i) norm_h += std::norm(h(i, 0));
  h = h * (1.0 / std::sqrt(norm_h));
  Matrix u = complete_to_unitary(h);
  Matrix frame = u.block(0, c.n, 1, c.n);  // basis of the hyperplane
  Matrix a_s = frame.adjoint() * a * frame;
  const double ah2 = (a * h).frobenius() * (a * h).frobenius();
  const double ash2 = (a.adjoint() * h).frobenius() * (a.adjoint() * h).frobenius();
  const cpx hah = (h.adjoint() * a * h)(0, 0);
  const double beta = std::min(ah2, ash2) - std::norm(hah);
  auto mu = singular_values(a);
  auto mus = singular_values(a_s);
  double scale = std::max(1e-6, mu.front() * mu.front());
  double worst = 1e300;
  for (std::size_t j = 0; j + 1 < mu.size(); ++j) {
    worst = std::min(worst, (mu[j] * mu[j] - mus[j] * mus[j]) / scale);
    worst = std::min(worst, (mus[j] * mus[j] - mu[j + 1] * mu[j + 1] + beta) / scale);
  }
  return worst;
}

double pyth_normal(TrialContext& c) {
  Matrix a = gen::normal_matrix(c.rng, c.n);
  Matrix h = gen::ginibre(c.rng, c.n, 1);
  double norm_h = 0.0;
  for (std::size_t i = 0; i < c.n; ++i) norm_h += std::norm(h(i, 0));
  h = h * (1.0 / std::sqrt(norm_h));
  Matrix u = complete_to_unitary(h);
  Matrix frame = u.block(0, c.n, 1, c.n);
  Matrix a_s = frame.adjoint() * a * frame;
  const double ah2 = (a * h).frobenius() * (a * h).frobenius();
  const cpx hah = (h.adjoint() * a * h)(0, 0);
  const double beta = ah2 - std::norm(hah);
  auto mu = singular_values(a);
  auto mus = singular_values(a_s);
  double scale = std::max(1e-6, mu.front() * mu.front());
  double worst = 1e300;
  for (std::size_t j = 0; j + 1 < mu.size(); ++j) {
    worst = std::min(worst, (mu[j] * mu[j] - mus[j] * mus[j]) / scale);
    worst = std::min(worst, (mus[j] * mus[j] - mu[j + 1] * mu[j + 1] + beta) / scale);
  }
  return worst;
}

double pyth_var(TrialContext& c) {
  auto pa = random_four_block(c);
  auto mu = singular_values(pa.base);
  std::vector<std::vector<double>> mus;
  for (std::size_t k = 0; k < pa.blocks.size(); ++k)
    mus.push_back(singular_values(pa.block_matrix(k)));
  double scale = std::max(1e-6, mu.front() * mu.front());
  double worst = 1e300;
  for (std::size_t k = 0; k < mus.size(); ++k) {
    double others = 0.0;
    for (std::size_t l = 0; l < mus.size(); ++l)
      if (l != k) others += mus[l].front() * mus[l].front();
    for (std::size_t j = 0; j < mu.size(); ++j) {
      const double block_j = j < mus[k].size() ? mus[k][j] * mus[k][j] : 0.0;
      worst = std::min(worst, (block_j + others - mu[j] * mu[j]) / scale);
    }
  }
  return worst;
}

double pyth_comp(TrialContext& c) {
  Matrix a = gen::ginibre(c.rng, c.n, c.n);
  Matrix h = gen::ginibre(c.rng, c.n, 1);
  double norm_h = 0.0;
  for (std::size_t i = 0; i < c.n; ++i) norm_h += std::norm(h(i, 0));
  h = h * (1.0 / std::sqrt(norm_h));
  Matrix u = complete_to_unitary(h);
  Matrix frame = u.block(0, c.n, 1, c.n);
  Matrix a_s = frame.adjoint() * a * frame;
  const double ah2 = (a * h).frobenius() * (a * h).frobenius();
  const double ash2 = (a.adjoint() * h).frobenius() * (a.adjoint() * h).frobenius();
  const cpx hah = (h.adjoint() * a * h)(0, 0);
  const double bound = ah2 + ash2 - std::norm(hah);
  auto mu = singular_values(a);
  auto mus = singular_values(a_s);
  double scale = std::max(1e-6, mu.front() * mu.front());
  double worst = 1e300;
  for (std::size_t j = 0; j + 1 < mu.size(); ++j)
    worst = std::min(worst, (bound - mu[j] * mu[j] + mus[j] * mus[j]) / scale);
  return worst;
}

double pyth_four2(TrialContext& c) {
  auto pa = random_four_block(c);
  const double p = pickd(c.rng, {2.5, 3.0});
  auto cert = pythagoras(pa);
  Matrix msum(pa.base.cols(), pa.base.cols());
  for (const auto& t : cert.terms)
    msum += t.factor * powm(t.middle, p / 2.0) * t.factor.adjoint();
  Matrix gram = hermitian_part(pa.base.adjoint() * pa.base);
  // 2^{2-p}|A|^p sits below an orbit of the block sum
  Matrix scaled_lhs = powm(gram, p / 2.0) * std::pow(2.0, 2.0 - p);
  const double m1 = dominance(scaled_lhs, hermitian_part(msum));
  // reversed for 0 < p < 2
  const double q = pickd(c.rng, {0.5, 1.0, 1.5});
  Matrix msum_q(pa.base.cols(), pa.base.cols());
  for (const auto& t : cert.terms)
    msum_q += t.factor * powm(t.middle, q / 2.0) * t.factor.adjoint();
  Matrix scaled_lhs_q = powm(gram, q / 2.0) * std::pow(2.0, 2.0 - q);
  const double m2 = dominance(hermitian_part(msum_q), scaled_lhs_q);
  return std::min(m1, m2);
}

double revtriangle(TrialContext& c) {
  auto pa = random_four_block(c);
  auto cert = pythagoras(pa);
  Matrix msum(pa.base.cols(), pa.base.cols());
  for (const auto& t : cert.terms)
    msum += t.factor * powm(t.middle, 0.5) * t.factor.adjoint();
  Matrix lhs = powm(hermitian_part(pa.base.adjoint() * pa.base), 0.5) * 2.0;
  return dominance(hermitian_part(msum), lhs);
}

std::vector<Matrix> orbit_terms_from_cert(const DecompositionCertificate& cert) {
  std::vector<Matrix> out;
  for (const auto& t : cert.terms)
    out.push_back(hermitian_part(t.factor * t.middle * t.factor.adjoint()));
  return out;
}

double pyth_convex(TrialContext& c) {
  auto pa = random_compatible_partition(c);
  const double p = pickd(c.rng, {2.5, 3.0, 4.0});
  FunctionSpec g = fn::power(p / 2.0);
  auto cert = pythagoras(pa);
  auto parts = orbit_terms_from_cert(cert);
  Matrix total(pa.base.cols(), pa.base.cols());
  for (const auto& m : parts) total += m;
  Matrix bound = iterated_orbit_bound(g, parts, true);
  return psd_gap(bound, matrix_function(g, hermitian_part(total)));
}

double pyth_concave(TrialContext& c) {
  auto pa = random_compatible_partition(c);
  const double q = pickd(c.rng, {0.5, 1.0, 1.5});
  FunctionSpec f = fn::power(q / 2.0);
  auto cert = pythagoras(pa);
  auto parts = orbit_terms_from_cert(cert);
  Matrix total(pa.base.cols(), pa.base.cols());
  for (const auto& m : parts) total += m;
  Matrix bound = iterated_orbit_bound(f, parts, false);
  return psd_gap(matrix_function(f, hermitian_part(total)), bound);
}

double pyth_grid(TrialContext& c) {
  // m x m family of square blocks: |A|^q below / |A|^p above a sum of
  // conjugated block powers (q <= 2 <= p)
  const std::size_t m = 2;
  PartitionedMatrix pa;
  pa.base = gen::ginibre(c.rng, m * c.n, m * c.n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      pa.blocks.push_back({i * c.n, (i + 1) * c.n, j * c.n, (j + 1) * c.n});
  auto cert = pythagoras(pa);
  auto parts = orbit_terms_from_cert(cert);
  Matrix gram = hermitian_part(pa.base.adjoint() * pa.base);
  const double q = pickd(c.rng, {0.5, 1.0, 1.5});
  Matrix bound_q = iterated_orbit_bound(fn::power(q / 2.0), parts, false);
  const double m1 = psd_gap(powm(gram, q / 2.0), bound_q);
  const double p = pickd(c.rng, {2.5, 3.0});
  Matrix bound_p = iterated_orbit_bound(fn::power(p / 2.0), parts, true);
  const double m2 = psd_gap(bound_p, powm(gram, p / 2.0));
  return std::min(m1, m2);
}

double pyth_cor2(TrialContext& c) {
  // m x m grid of n x n blocks, trace form, 0 < q <= 2, s >= 1
  const std::size_t m = 2;
  PartitionedMatrix pa;
  pa.base = gen::ginibre(c.rng, m * c.n, m * c.n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      pa.blocks.push_back({i * c.n, (i + 1) * c.n, j * c.n, (j + 1) * c.n});
  const double q = pickd(c.rng, {0.5, 1.0, 2.0});
  const double s = pickd(c.rng, {1.0, 1.5, 2.0});
  auto tr_qs = [&](const Matrix& mat) {
    double sum = 0.0;
    for (double v : singular_values(mat)) sum += std::pow(v, q * s);
    return std::pow(sum, 1.0 / s);
  };
  double rhs = 0.0;
  for (std::size_t k = 0; k < pa.blocks.size(); ++k) rhs += tr_qs(pa.block_matrix(k));
  const double m1 = scalar(tr_qs(pa.base), rhs);
  // p >= 2, 0 <= s <= 1 mirror
  const double p = pickd(c.rng, {2.0, 3.0});
  const double s2 = pickd(c.rng, {0.5, 1.0});
  auto tr_ps = [&](const Matrix& mat) {
    double sum = 0.0;
    for (double v : singular_values(mat)) sum += std::pow(v, p * s2);
    return std::pow(sum, 1.0 / s2);
  };
  double rhs2 = 0.0;
  for (std::size_t k = 0; k < pa.blocks.size(); ++k) rhs2 += tr_ps(pa.block_matrix(k));
  const double m2 = scalar(rhs2, tr_ps(pa.base));
  return std::min(m1, m2);
}

double pyth_cor3(TrialContext& c) {
  // columns: |A|^q below a sum of scaled rank-one projections (q <= 2);
  // rows: |A|^p above one (p >= 2). Constructive through the column/row
  // partitions; the trace consequences come along as scalar checks.
  Matrix a = gen::ginibre(c.rng, c.n, c.n);
  const double q = pickd(c.rng, {0.5, 1.0, 2.0});
  const double p = pickd(c.rng, {2.0, 3.0});
  PartitionedMatrix cols;
  cols.base = a;
  for (std::size_t k = 0; k < c.n; ++k) cols.blocks.push_back({0, c.n, k, k + 1});
  auto cert_c = pythagoras(cols);
  auto parts_c = orbit_terms_from_cert(cert_c);
  Matrix gram = hermitian_part(a.adjoint() * a);
  FunctionSpec fq = fn::power(q / 2.0);
  if (q >= 2.0) {  // affine boundary case counts as concave
    fq.convex = false;
    fq.concave = true;
  }
  Matrix bound_q = iterated_orbit_bound(fq, parts_c, false);
  const double m1 = psd_gap(powm(gram, q / 2.0), bound_q);
  PartitionedMatrix rows;
  rows.base = a;
  for (std::size_t k = 0; k < c.n; ++k) rows.blocks.push_back({k, k + 1, 0, c.n});
  auto cert_r = pythagoras(rows);
  auto parts_r = orbit_terms_from_cert(cert_r);
  Matrix bound_p = iterated_orbit_bound(fn::power(p / 2.0), parts_r, true);
  const double m2 = psd_gap(bound_p, powm(gram, p / 2.0));
  // trace consequences against the plain column/row norms
  double colq_sum = 0.0;
  for (std::size_t k = 0; k < c.n; ++k) {
    double cn = 0.0;
    for (std::size_t i = 0; i < c.n; ++i) cn += std::norm(a(i, k));
    colq_sum += std::pow(cn, q / 2.0);
  }
  double trq = 0.0;
  for (double v : singular_values(a)) trq += std::pow(v, q);
  const double m3 = scalar(trq, colq_sum);
  return std::min({m1, m2, m3});
}

double sqrt3_orbit(TrialContext& c) {
  // three-line partition: sqrt(3) |A| dominates the block orbit sum
  PartitionedMatrix pa;
  const std::size_t d = 3;
  pa.base = gen::ginibre(c.rng, d, 2 + c.rng.below(3));
  for (std::size_t i = 0; i < d; ++i)
    pa.blocks.push_back({i, i + 1, 0, pa.base.cols()});
  auto cert = pythagoras(pa);
  Matrix msum(pa.base.cols(), pa.base.cols());
  for (const auto& t : cert.terms)
    msum += t.factor * powm(t.middle, 0.5) * t.factor.adjoint();
  Matrix lhs = powm(hermitian_part(pa.base.adjoint() * pa.base), 0.5) * std::sqrt(3.0);
  return dominance(hermitian_part(msum), lhs);
}

double subadd_nomono_probe(TrialContext& c) {
  // concave but non-monotone f: only the necessary margins are probed
  Matrix a = gen::psd(c.rng, c.n), b = gen::psd(c.rng, c.n);
  const double top = opnorm(hermitian_part(a + b));
  FunctionSpec f = fn::concave_hat(c.rng.uniform(0.2, 0.8) * top);
  Matrix fa = matrix_function(f, a), fb = matrix_function(f, b);
  Matrix fab = matrix_function(f, hermitian_part(a + b));
  return weyl_two_orbit(fab, fa, fb);
}

const std::vector<TheoremDef>& catalog_storage() {
  static const std::vector<TheoremDef> defs = {
      {"REARRANGE_HS", "Hilbert-Schmidt rearrangement for monotone pairs", rearrange_hs, true},
      {"PROJ_NORM", "operator norm of AEB vs EAB for projections", proj_norm, true},
      {"SEMI_SQRT2", "sqrt(2) bound for semi-unitary middle factors", semi_sqrt2, true},
      {"COMPRESS_SV", "singular values of AEB dominated by EAB", compress_sv, true},
      {"POSMAP_MONOTONE", "unital positive maps on monotone products", posmap_monotone, true},
      {"SUBADD_NORM", "norm subadditivity of concave functions", subadd_norm, true},
      {"EXPANSIVE_TRACE", "expansive congruence, concave functions", expansive_trace, true},
      {"JOT_SUM", "concave functions of expansive congruence sums", jot_sum, true},
      {"JOT_CONVEX", "convex mirror of the congruence-sum bound", jot_convex, true},
      {"NORMAL_SUBADD", "concave norms for sums of normal matrices", normal_subadd, true},
      {"CARTESIAN", "Cartesian parts bound concave norms", cartesian, true},
      {"ZPLUSZSTAR", "f(|Z+Z*|) against f(|Z|)+f(|Z*|)", zpluszstar, true},
      {"SINH_HOLDER", "sinh Hoelder inequality for commuting pairs", sinh_holder, true},
      {"TRLOG_CONVEX", "joint convexity of the trace-log functional", trlog_convex, true},
      {"LOGCONV_2VAR", "joint log-convexity in (p, t)", logconv_2var, true},
      {"ARAKI_NORM", "norm form of the contraction interpolation", araki_norm, true},
      {"ARAKI_CONTRACT", "weak log-majorization with a contraction", araki_contract, true},
      {"ARAKI_EXPANSIVE", "super weak log-majorization with expansives", araki_expansive, true},
      {"TRACE_ECONVEX", "e-convex/e-concave trace transfer", trace_econvex, true},
      {"LIM_MONO", "monotone lambda_1^(1/p) sequence", lim_mono, true},
      {"POSMAP_ARAKI", "sub-unital maps inside the majorization", posmap_araki, true},
      {"SCHUR_ARAKI", "Schur multipliers with unit diagonal", schur_araki, true},
      {"NORMAL_POSMAP", "normal argument through a sub-unital map", normal_posmap, true},
      {"MULTI_NORMAL", "m-term normal sums with the m^(p-1) constant", multi_normal, true},
      {"CARTESIAN_2P", "Cartesian decomposition with constant 2^(p-1)", cartesian_2p, true},
      {"EXP_FAMILY", "exponential log-majorization family", exp_family, true},
      {"T_TSTAR", "symmetrized middle factor (T+T*)/2", t_tstar, true},
      {"SCHUR_NORMAL", "Schur product of normal matrices", schur_normal, true},
      {"SCHUR_TT", "Schur product with the adjoint", schur_tt, true},
      {"LOWNER_HEINZ", "operator monotonicity of fractional powers", lowner_heinz, true},
      {"KOSAKI_HOLDER", "Hoelder inequality with a parameter", kosaki_holder, true},
      {"LITTLEWOOD", "weighted scalar l^(1/p) log-convexity", littlewood, true},
      {"POSLIN_LOGCONV", "positive maps keep joint log-convexity", poslin_logconv, true},
      {"SCHUR_INTERP", "Schur power interpolation", schur_interp, true},
      {"PERSPECTIVE_P", "log-convexity of the p-scaled norm", perspective_p, true},
      {"COMP_AVG", "two-orbit average bound for positive maps", comp_avg, true},
      {"RUSSO_DYE_IMPROVED", "improved Russo-Dye for contractions", russo_dye_improved, true},
      {"SCHUR_EIG3", "third eigenvalue vs second diagonal entry", schur_eig3, true},
      {"JENSEN_ORBIT", "two-orbit Jensen bound for unital maps", jensen_orbit, true},
      {"JENSEN_AVG", "two-orbit Jensen bound for midpoints", jensen_avg, true},
      {"JENSEN_CSTAR", "C*-convex combinations", jensen_cstar, true},
      {"JENSEN_CONTRACT", "concave bound under a contraction", jensen_contract, true},
      {"JENSEN_TRACE", "Jensen trace inequalities", jensen_trace, true},
      {"JENSEN_SCHUR", "Schur multiplier Jensen bound", jensen_schur, true},
      {"JENSEN_SCHUR_DET", "determinant form of the Schur bound", jensen_schur_det, true},
      {"ANTINORM_SUPER", "superadditivity of derived antinorms", antinorm_super, true},
      {"ABS_SUM", "triangle bound with the adjoint moduli", abs_sum, true},
      {"POSPART", "positive parts under nondecreasing convex maps", pospart, true},
      {"EIG_ODD", "odd-index eigenvalue bound", eig_odd, true},
      {"SUBADD_ORBIT", "subadditivity with two unitary orbits", subadd_orbit, true},
      {"SUPERADD_ORBIT", "superadditivity with two unitary orbits", superadd_orbit, true},
      {"DIFF_ORBIT", "orbit difference bound via |A-B|", diff_orbit, true},
      {"BLOCK_NORM", "norms of positive block matrices", block_norm_corlee, true},
      {"DET_SUPERADD", "Minkowski superadditivity through convex maps", det_superadd, true},
      {"DIAG_RANK1", "diagonal entries dominate concave spectra", diag_rank1, true},
      {"KEY_SPLIT", "two-block positive splitting certificate", key_split, true},
      {"CLARKSON_P", "uniform convexity orbit form, p > 2", clarkson_p, true},
      {"CLARKSON_MIN_SUMS", "smallest-eigenvalue partial sums", clarkson_min_sums, true},
      {"CLARKSON_MIN_PRODS", "smallest-eigenvalue partial products", clarkson_min_prods, true},
      {"CLARKSON_WEYL", "Weyl-paired eigenvalue form, p > 2", clarkson_weyl, true},
      {"CLARKSON_Q", "reversed orbit form, 0 < q < 2", clarkson_q, true},
      {"CLARKSON_WEYL_Q", "Weyl-paired eigenvalue form, q < 2", clarkson_weyl_q, true},
      {"HH1", "two-isometry midpoint decomposition", hh1, true},
      {"HH2", "commuting normal weights variant", hh2, true},
      {"HH_EIGEN1", "eigenvalue forms of the midpoint bound", hh_eigen1, true},
      {"HH_SCHATT1", "Schatten p-norm estimates", hh_schatt1, true},
      {"HH_TRACE1", "trace power form", hh_trace1, true},
      {"HH_CONVEX", "convex mirror of the midpoint bound", hh_convex, true},
      {"HH_SCHATT2", "quasi-norm mirror", hh_schatt2, true},
      {"HH_EIGEN2", "integrated eigenvalue bound", hh_eigen2, true},
      {"DS_TRACE", "doubly stochastic weight trace bound", ds_trace, true},
      {"DS_ORBIT", "doubly stochastic average certificate", ds_orbit, true},
      {"DS_DET", "determinant product bound", ds_det, true},
      {"DS_NORMS", "norm and antinorm transfer", ds_norms, true},
      {"HH_QUAD", "quadrature forms of the midpoint bound", hh_quad, true},
      {"BLOCK_FOUR", "Hermitian off-diagonal two-halves certificate", block_four, true},
      {"BLOCK_DIRECT", "dyadic partial-trace certificate", block_direct, true},
      {"HIROSHIMA", "partial trace dominates every symmetric norm", hiroshima, true},
      {"BLOCK_EIG1", "lambda_(1+beta k) eigenvalue steps", block_eig1, true},
      {"BLOCK_EIGC", "composition-averaged eigenvalue steps", block_eigc, true},
      {"BLOCK_REARR", "commuting family rearrangement", block_rearr, true},
      {"BLOCK_REARR2", "eigenvalue rearrangement steps", block_rearr2, true},
      {"BLOCK_ROT", "trace sandwich for concave functions", block_rot, true},
      {"BLOCK_DET", "det(I+.) sandwich", block_det, true},
      {"NR_UPPER", "width-augmented partial trace upper bound", nr_upper, true},
      {"NR_LOWER", "distance-split lower bound", nr_lower, true},
      {"NR_DIAM", "numerical range diameter gap", nr_diam, true},
      {"NR_DET", "determinant gap with the distance", nr_det, true},
      {"THINNER", "elliptical width eigenvalue steps", thinner, true},
      {"PERTU1", "scalar-distance eigenvalue steps", pertu1, true},
      {"INRADIUS_NORMAL1", "normal off-diagonal block, disc radius", inradius_normal1, true},
      {"INRADIUS_COR0", "Gram order with the product compression", inradius_cor0, true},
      {"INRADIUS_COR01", "inverse-pair norm bound", inradius_cor01, true},
      {"INRADIUS_CORCOMP", "lower bounds from the two moduli", inradius_corcomp, true},
      {"INRADIUS_SIMPLE", "shifted modulus lower bound", inradius_simple, true},
      {"THCOMP", "2||X|| - || |X|+|X*| || floor", thcomp, true},
      {"PROP1", "Frobenius bound for normal off-diagonal blocks", prop1_normal, true},
      {"PROP1_CONVERSE", "nonnormal witness violates the Frobenius bound", prop1_converse,
       true},
      {"PYTH", "compatible-partition square decomposition", pyth, true},
      {"PYTH_FOUR", "four-block square decomposition", pyth_four, true},
      {"PYTH_SING", "singular value composition bound", pyth_sing, true},
      {"PYTH_BK", "Schatten block sums both ways", pyth_bk, true},
      {"PYTH_HYPER", "hyperplane interlacing for singular values", pyth_hyper, true},
      {"PYTH_NORMAL", "hyperplane interlacing, normal input", pyth_normal, true},
      {"PYTH_VAR", "single block versus the rest", pyth_var, true},
      {"PYTH_COMP", "compression defect bound", pyth_comp, true},
      {"PYTH_FOUR2", "2^(2-p) power form on four blocks", pyth_four2, true},
      {"REVTRIANGLE", "reverse triangle with constant 2", revtriangle, true},
      {"PYTH_CONVEX", "psi(sqrt t) convex block bound", pyth_convex, true},
      {"PYTH_CONCAVE", "phi(sqrt t) concave block bound", pyth_concave, true},
      {"PYTH_GRID", "block-grid power bounds both ways", pyth_grid, true},
      {"PYTH_COR2", "trace power forms on block grids", pyth_cor2, true},
      {"PYTH_COR3", "column and row norm dominance", pyth_cor3, true},
      {"SQRT3", "sqrt(3) three-block orbit bound", sqrt3_orbit, true},
      {"SUBADD_ORBIT_NOMONO", "probe: subadditivity without monotonicity",
       subadd_nomono_probe, false},
  };
  return defs;
}

}  // namespace

const std::vector<TheoremDef>& theorem_catalog() { return catalog_storage(); }

}  // namespace mxa
