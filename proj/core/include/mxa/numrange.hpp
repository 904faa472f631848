#pragma once
//
// Numerical range geometry via the rotation method: support function
// h(theta) = lambda_max(Re(e^{-i theta} X)) on a uniform angle grid, then
// width, diameter, distance from zero, largest inscribed disc (exact small
// LP), 2x2 ellipse analytics, elliptical width bounds, and the operator-norm
// distance to the scalar line.
//

#include <cstdint>
#include <vector>

#include "mxa/eig.hpp"

namespace mxa {

struct SupportProfile {
  std::vector<double> angles;   // uniform on [0, 2pi), size N
  std::vector<double> support;  // h(theta_k)
  Matrix extreme_vectors;       // n x N, column k attains h(theta_k)
};

SupportProfile support_profile(const Matrix& x, std::size_t grid = 720);

struct RangeGeometry {
  double width = 0.0;      // min over theta of h(theta) + h(theta+pi)
  double diameter = 0.0;   // max over theta of h(theta) + h(theta+pi)
  double dist0 = 0.0;      // distance from 0 to W(X)
  double inradius = 0.0;
  double indiameter = 0.0;  // 2 * inradius
  cpx center = 0.0;         // center of the largest inscribed disc
  bool degenerate = false;  // W(X) is numerically a single point
};

RangeGeometry geometry(const SupportProfile& profile);

struct Ellipse2x2 {
  cpx focus1 = 0.0;
  cpx focus2 = 0.0;
  double minor_axis = 0.0;  // full axis length
  double major_axis = 0.0;
};

// W of a 2x2 matrix is the elliptical disc with foci at the eigenvalues and
// minor axis sqrt(tr(X^*X) - |l1|^2 - |l2|^2).
Ellipse2x2 ellipse_2x2(const Matrix& x);

struct EllipticalWidth {
  double lower = 0.0;   // best sampled/refined two-dimensional compression
  double upper = 0.0;   // min(width, dist to scalars) - always sound
  Matrix witness;       // n x 2 orthonormal frame attaining the lower bound
};

// The lower bound is a documented heuristic (random 2-frames plus local
// refinement, floored by 2||X|| - || |X|+|X*| ||); the upper bound is
// certified and is what inequality checkers should use.
EllipticalWidth elliptical_width(const Matrix& x, std::size_t budget, std::uint64_t seed);

struct ScalarDistance {
  double value = 0.0;
  cpx argmin = 0.0;
};

// min over complex lambda of ||X - lambda I||, certified to 1e-6 absolute by
// a final local grid bracket.
ScalarDistance dist_to_scalars(const Matrix& x);

// Convex containment via support dominance on the grid.
bool disc_contained(const SupportProfile& profile, cpx center, double radius,
                    double slack = tol::eq);

}  // namespace mxa
