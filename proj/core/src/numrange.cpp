#include "mxa/numrange.hpp"

#include <algorithm>
#include <cmath>

#include "mxa/rng.hpp"

namespace mxa {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Matrix rotated_real_part(const Matrix& x, double theta) {
  const cpx w = std::exp(cpx(0.0, -theta));
  return hermitian_part(x * w);
}

}  // namespace

SupportProfile support_profile(const Matrix& x, std::size_t grid) {
  x.require_square("support_profile");
  if (grid < 8) throw Error(Errc::BadParameter, "support_profile: grid < 8");
  const std::size_t n = x.rows();
  SupportProfile p;
  p.angles.resize(grid);
  p.support.resize(grid);
  p.extreme_vectors = Matrix(n, grid);
  for (std::size_t k = 0; k < grid; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(grid);
    p.angles[k] = theta;
    auto eg = hermitian_eig(rotated_real_part(x, theta));
    p.support[k] = eg.eigenvalues.front();
    for (std::size_t i = 0; i < n; ++i) p.extreme_vectors(i, k) = eg.frame(i, 0);
  }
  return p;
}

namespace {

struct LpConstraint {
  double ax, ay, b;  // ax*cx + ay*cy + r <= b
};

// Exact 3-variable LP  max r  s.t.  cos(t_k) cx + sin(t_k) cy + r <= h_k.
// Vertex enumeration over the tightest constraints, globally verified.
void inscribed_disc(const std::vector<double>& angles, const std::vector<double>& h,
                    double scale, double* best_r, cpx* best_c) {
  const std::size_t n = angles.size();
  std::vector<LpConstraint> cons(n);
  for (std::size_t k = 0; k < n; ++k)
    cons[k] = {std::cos(angles[k]), std::sin(angles[k]), h[k]};

  const double feas_slack = 1e-11 * std::max(1.0, scale);
  auto feasible = [&](double cx, double cy, double r) {
    for (const auto& c : cons)
      if (c.ax * cx + c.ay * cy + r > c.b + feas_slack) return false;
    return true;
  };

  // Start from the axis-aligned interior guess and grow the candidate set.
  double gx = 0.0, gy = 0.0;
  {
    double right = 1e300, left = 1e300, up = 1e300, down = 1e300;
    for (std::size_t k = 0; k < n; ++k) {
      const double c = std::cos(angles[k]), s = std::sin(angles[k]);
      if (c > 0.9) right = std::min(right, h[k]);
      if (c < -0.9) left = std::min(left, h[k]);
      if (s > 0.9) up = std::min(up, h[k]);
      if (s < -0.9) down = std::min(down, h[k]);
    }
    gx = (right - left) / 2.0;
    gy = (up - down) / 2.0;
  }

  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double sa = cons[a].b - cons[a].ax * gx - cons[a].ay * gy;
    const double sb = cons[b].b - cons[b].ax * gx - cons[b].ay * gy;
    return sa < sb;
  });

  double r_best = -1e300;
  double cx_best = gx, cy_best = gy;
  for (std::size_t subset = std::min<std::size_t>(48, n);; subset = std::min(subset * 2, n)) {
    for (std::size_t a = 0; a + 2 < subset; ++a)
      for (std::size_t b = a + 1; b + 1 < subset; ++b)
        for (std::size_t c = b + 1; c < subset; ++c) {
          const LpConstraint &ca = cons[order[a]], &cb = cons[order[b]], &cc = cons[order[c]];
          // Solve the 3x3 active system.
          const double d = ca.ax * (cb.ay - cc.ay) - ca.ay * (cb.ax - cc.ax) +
                           (cb.ax * cc.ay - cc.ax * cb.ay);
          if (std::abs(d) < 1e-9) continue;
          const double rhs1 = ca.b, rhs2 = cb.b, rhs3 = cc.b;
          // Cramer on [ax ay 1; ...] [cx cy r]^T = b
          const double dx = rhs1 * (cb.ay - cc.ay) - ca.ay * (rhs2 - rhs3) +
                            (rhs2 * cc.ay - rhs3 * cb.ay);
          const double dy = ca.ax * (rhs2 - rhs3) - rhs1 * (cb.ax - cc.ax) +
                            (cb.ax * rhs3 - cc.ax * rhs2);
          const double dr = ca.ax * (cb.ay * rhs3 - cc.ay * rhs2) -
                            ca.ay * (cb.ax * rhs3 - cc.ax * rhs2) +
                            rhs1 * (cb.ax * cc.ay - cc.ax * cb.ay);
          const double cx = dx / d, cy = dy / d, r = dr / d;
          if (r <= r_best) continue;
          if (feasible(cx, cy, r)) {
            r_best = r;
            cx_best = cx;
            cy_best = cy;
          }
        }
    if (r_best > -1e300 || subset == n) break;
  }
  if (r_best <= -1e300) {
    // All triples singular (cannot happen on a uniform grid of >= 8 angles,
    // kept as a safe fallback).
    r_best = 0.0;
  }
  *best_r = r_best;
  *best_c = cpx(cx_best, cy_best);
}

}  // namespace

RangeGeometry geometry(const SupportProfile& profile) {
  const std::size_t n = profile.angles.size();
  if (n % 2 != 0) throw Error(Errc::BadParameter, "geometry needs an even grid");
  const std::size_t half = n / 2;
  RangeGeometry g;
  double scale = 0.0;
  for (double h : profile.support) scale = std::max(scale, std::abs(h));

  double wmin = 1e300, wmax = -1e300;
  for (std::size_t k = 0; k < half; ++k) {
    const double w = profile.support[k] + profile.support[k + half];
    wmin = std::min(wmin, w);
    wmax = std::max(wmax, w);
  }
  g.width = wmin;
  g.diameter = wmax;

  double neg = -1e300;
  for (double h : profile.support) neg = std::max(neg, -h);
  g.dist0 = std::max(0.0, neg);

  if (wmax <= tol::eq * std::max(1.0, scale)) {
    // W is a single point: locate it from two orthogonal supports.
    g.degenerate = true;
    g.width = 0.0;
    g.diameter = 0.0;
    g.inradius = 0.0;
    g.indiameter = 0.0;
    const double px = profile.support[0];
    const double py = profile.support[n / 4];  // quarter turn
    g.center = cpx(px, py);
    g.dist0 = std::abs(g.center);
    return g;
  }

  double r = 0.0;
  cpx c = 0.0;
  inscribed_disc(profile.angles, profile.support, scale, &r, &c);
  g.inradius = std::max(0.0, r);
  g.indiameter = 2.0 * g.inradius;
  g.center = c;
  return g;
}

Ellipse2x2 ellipse_2x2(const Matrix& x) {
  if (x.rows() != 2 || x.cols() != 2) throw Error(Errc::DimensionMismatch, "ellipse_2x2");
  const cpx tr = x(0, 0) + x(1, 1);
  const cpx det = x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0);
  const cpx disc = std::sqrt(tr * tr - 4.0 * det);
  Ellipse2x2 e;
  e.focus1 = (tr + disc) * 0.5;
  e.focus2 = (tr - disc) * 0.5;
  double m2 = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m2 += std::norm(x(i, j));
  m2 -= std::norm(e.focus1) + std::norm(e.focus2);
  e.minor_axis = std::sqrt(std::max(0.0, m2));
  e.major_axis = std::sqrt(std::max(0.0, m2) + std::norm(e.focus1 - e.focus2));
  return e;
}

namespace {

Matrix orthonormal_2frame(const Matrix& raw) {
  // Gram-Schmidt on two columns.
  const std::size_t n = raw.rows();
  Matrix f(n, 2);
  double n0 = 0.0;
  for (std::size_t i = 0; i < n; ++i) n0 += std::norm(raw(i, 0));
  n0 = std::sqrt(n0);
  for (std::size_t i = 0; i < n; ++i) f(i, 0) = raw(i, 0) / n0;
  cpx dot = 0.0;
  for (std::size_t i = 0; i < n; ++i) dot += std::conj(f(i, 0)) * raw(i, 1);
  double n1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    f(i, 1) = raw(i, 1) - dot * f(i, 0);
    n1 += std::norm(f(i, 1));
  }
  n1 = std::sqrt(n1);
  for (std::size_t i = 0; i < n; ++i) f(i, 1) /= n1;
  return f;
}

double compression_minor(const Matrix& x, const Matrix& frame) {
  return ellipse_2x2(frame.adjoint() * x * frame).minor_axis;
}

}  // namespace

EllipticalWidth elliptical_width(const Matrix& x, std::size_t budget, std::uint64_t seed) {
  x.require_square("elliptical_width");
  const std::size_t n = x.rows();
  if (n < 2) throw Error(Errc::BadParameter, "elliptical_width needs n >= 2");

  EllipticalWidth out;
  if (n == 2) {
    out.lower = ellipse_2x2(x).minor_axis;
    out.witness = Matrix::identity(2);
    auto prof = support_profile(x, 720);
    auto geo = geometry(prof);
    out.upper = std::max(out.lower, std::min(geo.width, dist_to_scalars(x).value));
    return out;
  }

  Rng rng(mix64(seed));
  double best = 0.0;
  Matrix best_frame;
  for (std::size_t trial = 0; trial < std::max<std::size_t>(budget, 1); ++trial) {
    Matrix raw(n, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < 2; ++j) raw(i, j) = cpx(rng.gauss(), rng.gauss());
    Matrix f = orthonormal_2frame(raw);
    const double minor = compression_minor(x, f);
    if (minor > best || best_frame.empty()) {
      best = minor;
      best_frame = f;
    }
  }
  // Local refinement from the best sample.
  double scale = 0.05;
  for (int step = 0; step < 50; ++step) {
    Matrix raw = best_frame;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        raw(i, j) += scale * cpx(rng.gauss(), rng.gauss());
    Matrix f = orthonormal_2frame(raw);
    const double minor = compression_minor(x, f);
    if (minor > best) {
      best = minor;
      best_frame = f;
    } else {
      scale = std::max(scale * 0.5, 1e-4);
    }
  }

  // Certified floor: 2||X|| - || |X| + |X*| ||.
  const double floor = 2.0 * opnorm(x) - opnorm(abs_value(x) + abs_value(x.adjoint()));
  out.lower = std::max(best, std::max(0.0, floor));
  out.witness = best_frame;

  auto geo = geometry(support_profile(x, 720));
  out.upper = std::min(geo.width, dist_to_scalars(x).value);
  out.lower = std::min(out.lower, out.upper + tol::eq);
  return out;
}

namespace {

double golden_min(const std::function<double(double)>& f, double lo, double hi, double eps) {
  constexpr double phi = 0.6180339887498948482;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > eps) {
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

}  // namespace

ScalarDistance dist_to_scalars(const Matrix& x) {
  x.require_square("dist_to_scalars");
  const std::size_t n = x.rows();
  ScalarDistance out;
  if (n == 0) return out;
  if (n == 1) {
    out.argmin = x(0, 0);
    out.value = 0.0;
    return out;
  }
  const double R = 2.0 * opnorm(x) + 1e-9;
  auto cost = [&](double re, double im) {
    Matrix shifted = x;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= cpx(re, im);
    return opnorm(shifted);
  };
  auto inner_min = [&](double re) {
    const double im = golden_min([&](double t) { return cost(re, t); }, -R, R, 1e-8 * (R + 1.0));
    return std::pair<double, double>(cost(re, im), im);
  };
  const double re = golden_min([&](double t) { return inner_min(t).first; }, -R, R,
                               1e-8 * (R + 1.0));
  auto [value, im] = inner_min(re);

  // Final bracketing pass certifying 1e-6 absolute.
  double bre = re, bim = im, bval = value;
  const double step = 2.5e-7;
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j) {
      const double v = cost(re + i * step, im + j * step);
      if (v < bval) {
        bval = v;
        bre = re + i * step;
        bim = im + j * step;
      }
    }
  out.value = bval;
  out.argmin = cpx(bre, bim);
  return out;
}

bool disc_contained(const SupportProfile& profile, cpx center, double radius, double slack) {
  double scale = 1.0;
  for (double h : profile.support) scale = std::max(scale, std::abs(h));
  const double tol_abs = slack * scale;
  for (std::size_t k = 0; k < profile.angles.size(); ++k) {
    const double proj = center.real() * std::cos(profile.angles[k]) +
                        center.imag() * std::sin(profile.angles[k]);
    if (proj + radius > profile.support[k] + tol_abs) return false;
  }
  return true;
}

}  // namespace mxa
