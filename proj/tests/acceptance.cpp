// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every tolerance is pinned here; nothing defers to later calibration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "mxa/decomp.hpp"
#include "mxa/generators.hpp"
#include "mxa/hunt.hpp"
#include "mxa/norms.hpp"
#include "mxa/numrange.hpp"
#include "mxa/theorems.hpp"

using namespace mxa;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %d %-34s %s  (%s)\n", number, name.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1: title identity -------------------------------------------------

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  Matrix a{{1.0, 4.0, 5.0}, {2.0, 6.0, 7.0}, {3.0, 8.0, 9.0}};
  PartitionedMatrix pa;
  pa.base = a;
  pa.blocks = {{0, 3, 0, 1}, {0, 1, 1, 3}, {1, 3, 1, 3}};
  auto cert = pythagoras(pa);
  double trace_sum = 0.0;
  for (const auto& t : cert.terms) trace_sum += t.middle.trace().real();
  const double elapsed = seconds_since(t0);
  const bool pass = cert.residual <= 1e-10 && trace_sum == 285.0 && elapsed < 0.1;
  char buf[160];
  std::snprintf(buf, sizeof buf, "residual %.2e, trace %g = 285, %.3fs", cert.residual,
                trace_sum, elapsed);
  report(1, "title 3x3 square decomposition", pass, buf);
}

// ---- 2: numerical range witnesses --------------------------------------

Matrix make_ma(double a) {
  Matrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 0) = a;
  return m;
}

void criterion2() {
  const double astar = 2.0 * std::sqrt(2.0);
  const double norm3 = opnorm(make_ma(astar));
  const bool norm_ok = std::abs(norm3 - 3.0) <= 1e-12;

  // bisection on the containment flip of the unit disc in W(M_a)
  auto contained = [](double a) {
    return disc_contained(support_profile(make_ma(a), 720), 0.0, 1.0);
  };
  double lo = 2.0, hi = 3.5;
  for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    (contained(mid) ? hi : lo) = mid;
  }
  const double flip = 0.5 * (lo + hi);
  const bool flip_ok = std::abs(flip - astar) <= 1e-4 && !contained(2.0) &&
                       contained(astar + 1e-9);
  char buf[160];
  std::snprintf(buf, sizeof buf, "norm %.14g, flip at %.8f vs %.8f", norm3, flip, astar);
  report(2, "disc containment flip at 2 sqrt 2", norm_ok && flip_ok, buf);
}

// ---- 3: decomposition suites -------------------------------------------

void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_residual = 0.0, worst_orth = 0.0;
  std::string worst_where = "none";
  auto track = [&](const DecompositionCertificate& cert, const char* where) {
    if (cert.residual > worst_residual) {
      worst_residual = cert.residual;
      worst_where = where;
    }
    worst_orth = std::max(worst_orth, cert.factor_orthonormality());
  };

  const int trials = 500;
  Rng rng(2024);
  for (int t = 0; t < trials; ++t) {
    const std::size_t n = 2 + rng.below(3);
    track(split_positive_2x2(gen::psd(rng, 2 * n), n), "split2");
    std::vector<std::size_t> sizes = {n, 1 + rng.below(n)};
    track(split_positive_multi(gen::psd(rng, n + sizes[1]), sizes), "splitmulti");
    track(hermitian_offdiag_halves(gen::herm_offdiag_block(rng, n)), "hermhalves");
  }
  for (int t = 0; t < trials; ++t) {
    // alternate compatible and four-block layouts
    const std::size_t d = 3 + rng.below(3), d2 = 3 + rng.below(3);
    PartitionedMatrix pa;
    pa.base = gen::ginibre(rng, d, d2);
    if (t % 2 == 0) {
      const std::size_t cut = 1 + rng.below(d2 - 1);
      const std::size_t r1 = 1 + rng.below(d - 1);
      pa.blocks = {{0, d, 0, cut}, {0, r1, cut, d2}, {r1, d, cut, d2}};
    } else {
      const std::size_t cut = 1 + rng.below(d2 - 1);
      const std::size_t r1 = 1 + rng.below(d - 1), r2 = 1 + rng.below(d - 1);
      pa.blocks = {{0, r1, 0, cut}, {r1, d, 0, cut}, {0, r2, cut, d2}, {r2, d, cut, d2}};
    }
    track(pythagoras(pa), "pythagoras");
  }
  const std::size_t betas[] = {2, 4};
  const std::size_t ns[] = {1, 2, 3};
  for (int t = 0; t < trials; ++t) {
    const std::size_t beta = betas[t % 2];
    const std::size_t n = ns[(t / 2) % 3];
    track(clifford_partial_trace(gen::psd_hermitian_blocks(rng, beta, n), beta), "clifford");
  }
  const double elapsed = seconds_since(t0);
  const bool pass = worst_residual <= 1e-9 && worst_orth <= 1e-10 && elapsed < 60.0;
  char buf[200];
  std::snprintf(buf, sizeof buf, "worst residual %.2e (%s), worst orth %.2e, %.1fs",
                worst_residual, worst_where.c_str(), worst_orth, elapsed);
  report(3, "decomposition suites, 500 trials", pass, buf);
}

// ---- 4: theorem suite ---------------------------------------------------

void criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  TrialConfig cfg;
  cfg.trials = 200;
  cfg.dims = {2, 3, 4, 5};
  cfg.seed = 0;
  cfg.threads = 0;
  auto res = run_suite({}, cfg);
  double worst = 0.0;
  std::string worst_id = "none";
  for (const auto& rep : res.reports) {
    if (!rep.proven) continue;
    if (rep.worst_margin < worst) {
      worst = rep.worst_margin;
      worst_id = rep.theorem;
    }
  }

  // equality cases
  double eq_worst = 0.0;
  {
    // commuting A, B with the identity middle factor
    Rng rng(99);
    Matrix q = gen::unitary(rng, 4);
    std::vector<double> da(4), db(4);
    for (auto& v : da) v = rng.uniform(0.2, 2.0);
    for (auto& v : db) v = rng.uniform(0.2, 2.0);
    Matrix a = hermitian_part(q * Matrix::diag(da) * q.adjoint());
    Matrix b = hermitian_part(q * Matrix::diag(db) * q.adjoint());
    Matrix core = hermitian_part(a * b * a);
    Matrix corep = hermitian_part(pseudo_power(a, 2.0) * pseudo_power(b, 2.0) *
                                  pseudo_power(a, 2.0));
    std::vector<double> lhs = eigvals(core);
    for (auto& v : lhs) v = v * v;
    eq_worst = std::max(eq_worst, std::abs(margin::wlog_values(lhs, eigvals(corep))));
  }
  {
    // identical-row three-line matrix reaches sqrt 3 exactly
    Matrix m(3, 3);
    for (int j = 0; j < 3; ++j) {
      const cpx v(0.3 + 0.4 * j, 0.1 * j);
      for (int i = 0; i < 3; ++i) m(i, j) = v;
    }
    double sum = 0.0, full = 0.0;
    for (int i = 0; i < 3; ++i) {
      Matrix row = m.block(i, i + 1, 0, 3);
      for (double v : singular_values(row)) sum += v;
    }
    for (double v : singular_values(m)) full += v;
    eq_worst = std::max(eq_worst, std::abs(sum / full - std::sqrt(3.0)));
  }
  {
    // four identical blocks reach the constant 2 exactly
    Rng rng(7);
    Matrix a = gen::ginibre(rng, 2, 2);
    Matrix m(4, 4);
    m.set_block(0, 0, a);
    m.set_block(0, 2, a);
    m.set_block(2, 0, a);
    m.set_block(2, 2, a);
    double sum = 0.0, full = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (double v : singular_values(m.block(2 * i, 2 * i + 2, 2 * j, 2 * j + 2))) sum += v;
    for (double v : singular_values(m)) full += v;
    eq_worst = std::max(eq_worst, std::abs(sum / full - 2.0));
  }
  {
    // 2x2 shifted-modulus equality at the normalized trace
    Rng rng(13);
    Matrix x = gen::ginibre(rng, 2, 2);
    const cpx tau = x.trace() * 0.5;
    Matrix shifted = x;
    for (int i = 0; i < 2; ++i) shifted(i, i) -= tau;
    const double bound =
        opnorm(shifted) - opnorm((abs_value(shifted) + abs_value(shifted.adjoint())) * 0.5);
    const double eps = ellipse_2x2(x).minor_axis / 2.0;
    eq_worst = std::max(eq_worst, std::abs(eps - bound));
  }

  const double elapsed = seconds_since(t0);
  const bool pass = res.failed_proven == 0 && worst >= -1e-8 && eq_worst <= 1e-9;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%zu checkers, worst margin %.2e (%s), equality defect %.2e, %.1fs",
                res.reports.size(), worst, worst_id.c_str(), eq_worst, elapsed);
  report(4, "theorem suite, 200 trials per id", pass, buf);
}

// ---- 5: majorization machinery ------------------------------------------

void criterion5() {
  Rng rng(555);
  double worst_residual = 0.0, worst_diag = 0.0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + rng.below(3);
    Matrix b = gen::hermitian(rng, n);
    Matrix u = gen::unitary(rng, n);
    Matrix conj = u * b * u.adjoint();
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = conj(i, i);
    a = hermitian_part(u.adjoint() * a * u);  // pinching of b in the u basis
    auto cert = majorize_average(a, b);
    worst_residual = std::max(worst_residual, cert.residual);

    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = conj(i, i).real();
    Matrix w = schur_horn(b, d);
    Matrix rotated = w * b * w.adjoint();
    for (std::size_t i = 0; i < n; ++i)
      worst_diag = std::max(worst_diag, std::abs(rotated(i, i).real() - d[i]));
  }
  const bool pass = worst_residual <= 1e-8 && worst_diag <= 1e-8;
  char buf[160];
  std::snprintf(buf, sizeof buf, "avg residual worst %.2e, diagonal error worst %.2e",
                worst_residual, worst_diag);
  report(5, "majorization machinery, 200 pairs", pass, buf);
}

// ---- 6: sharp-constant probes -------------------------------------------

void criterion6() {
  SearchConfig cfg;
  cfg.seed = 0;
  cfg.restarts = 4;
  cfg.steps = 300;
  cfg.dims = {2, 3};
  auto p1 = probe_constant("CARTESIAN_2P", cfg);
  auto p2 = probe_constant("SQRT3", cfg);
  auto p3 = probe_constant("FOURBLOCK_2", cfg);
  const double d1 = std::abs(p1.best_ratio - 2.0);
  const double d2 = std::abs(p2.best_ratio - std::sqrt(3.0));
  const double d3 = std::abs(p3.best_ratio - 2.0);
  const bool pass = d1 <= 1e-3 && d2 <= 1e-3 && d3 <= 1e-3 && !p1.sanity_violated &&
                    !p2.sanity_violated && !p3.sanity_violated;
  char buf[160];
  std::snprintf(buf, sizeof buf, "2^(p-1): %.6f, sqrt3: %.6f, four-block: %.6f",
                p1.best_ratio, p2.best_ratio, p3.best_ratio);
  report(6, "sharp constants reached", pass, buf);
}

// ---- 7: Frobenius converse witness --------------------------------------

void criterion7() {
  // the canonical nonnormal block violates the Frobenius bound
  Matrix x(2, 2);
  x(0, 1) = 1.0;
  Matrix ax = abs_value(x), axs = abs_value(x.adjoint());
  Matrix h(4, 4);
  h.set_block(0, 0, axs);
  h.set_block(0, 2, x);
  h.set_block(2, 0, x.adjoint());
  h.set_block(2, 2, ax);
  const double lhs = h.frobenius();
  const double rhs = hermitian_part(ax + axs).frobenius();
  const bool violated = lhs > rhs + 1e-9 && is_psd(h);

  // 500 random normal trials for the positive direction
  Rng rng(777);
  double worst = 1e300;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + rng.below(3);
    Matrix nm = gen::normal_matrix(rng, n);
    Matrix hh = gen::psd_with_offdiag(rng, nm);
    Matrix sum = hermitian_part(hh.block(0, n, 0, n) + hh.block(n, 2 * n, n, 2 * n));
    worst = std::min(worst, (sum.frobenius() - hh.frobenius()) /
                                std::max(1.0, sum.frobenius()));
  }
  const bool pass = violated && worst >= -1e-8;
  char buf[160];
  std::snprintf(buf, sizeof buf, "witness excess %.4f > 0, normal-direction worst %.2e",
                lhs - rhs, worst);
  report(7, "Frobenius converse witness", pass, buf);
}

// ---- 8: hunter sanity ----------------------------------------------------

void criterion8() {
  SearchConfig cfg;
  cfg.seed = 0;
  cfg.restarts = 2;
  cfg.steps = 5000;  // 10^4 total
  cfg.dims = {4, 6};
  auto rep = search("CONJ_A", cfg);
  auto rep2 = search("CONJ_A", cfg);
  const bool deterministic = rep.to_json().dump() == rep2.to_json().dump();
  const bool pass = !rep.sanity_violated && rep.best_ratio <= 8.0 && deterministic;
  char buf[160];
  std::snprintf(buf, sizeof buf, "best ratio %.6f <= 8, byte-identical reports: %s",
                rep.best_ratio, deterministic ? "yes" : "no");
  report(8, "hunter sanity ceiling", pass, buf);
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  report(9, "no infinite-dimensional content", true, "nothing referenced by construction");
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
