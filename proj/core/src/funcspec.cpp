#include <cmath>

#include "mxa/eig.hpp"

namespace mxa {

void FunctionSpec::validate() const {
  if (convex && concave) throw Error(Errc::FlagViolation, name + ": both convex and concave");
  if (nondecreasing && nonincreasing)
    throw Error(Errc::FlagViolation, name + ": both monotone flags");
  if (monotonicity_switch) {
    // Spot-check monotonicity on each side of the switch.
    const double r = *monotonicity_switch;
    const double lo = std::max(domain_lo, r - 8.0);
    const double hi = std::min(domain_hi, r + 8.0);
    auto check = [&](double a, double b, bool expect_rising) {
      double prev = evaluator(a);
      for (int i = 1; i <= 16; ++i) {
        double t = a + (b - a) * i / 16.0;
        double cur = evaluator(t);
        double d = cur - prev;
        if (expect_rising ? d < -1e-9 : d > 1e-9)
          throw Error(Errc::FlagViolation, name + ": not monotone beside switch");
        prev = cur;
      }
    };
    if (r - lo > 1e-9) check(lo, r, concave);
    if (hi - r > 1e-9) check(r, hi, convex);
  }
}

namespace fn {

FunctionSpec identity() {
  FunctionSpec f;
  f.evaluator = [](double t) { return t; };
  f.name = "id";
  f.convex = true;  // affine; treated as weakly convex and monotone
  f.nondecreasing = true;
  f.domain_lo = -1e300;
  return f;
}

FunctionSpec sqrt() {
  FunctionSpec f;
  f.evaluator = [](double t) { return std::sqrt(std::max(t, 0.0)); };
  f.name = "sqrt";
  f.concave = true;
  f.nondecreasing = true;
  return f;
}

FunctionSpec power(double p) {
  FunctionSpec f;
  f.evaluator = [p](double t) { return std::pow(std::max(t, 0.0), p); };
  f.name = "t^" + std::to_string(p);
  if (p > 0.0 && p < 1.0) f.concave = true;
  if (p >= 1.0) f.convex = true;
  f.nondecreasing = true;
  return f;
}

FunctionSpec log1p() {
  FunctionSpec f;
  f.evaluator = [](double t) { return std::log1p(std::max(t, 0.0)); };
  f.name = "log1p";
  f.concave = true;
  f.nondecreasing = true;
  return f;
}

FunctionSpec t_over_1pt() {
  FunctionSpec f;
  f.evaluator = [](double t) { return t / (1.0 + t); };
  f.name = "t/(1+t)";
  f.concave = true;
  f.nondecreasing = true;
  return f;
}

FunctionSpec square() {
  FunctionSpec f;
  f.evaluator = [](double t) { return t * t; };
  f.name = "t^2";
  f.convex = true;
  f.monotonicity_switch = 0.0;
  f.domain_lo = -1e300;
  return f;
}

FunctionSpec expm1() {
  FunctionSpec f;
  f.evaluator = [](double t) { return std::expm1(t); };
  f.name = "e^t-1";
  f.convex = true;
  f.nondecreasing = true;
  f.domain_lo = -1e300;
  return f;
}

FunctionSpec t_log1p() {
  FunctionSpec f;
  f.evaluator = [](double t) { return t * std::log1p(std::max(t, 0.0)); };
  f.name = "t*log1p";
  f.convex = true;
  f.nondecreasing = true;
  return f;
}

FunctionSpec abs() {
  FunctionSpec f;
  f.evaluator = [](double t) { return std::abs(t); };
  f.name = "abs";
  f.convex = true;
  f.monotonicity_switch = 0.0;
  f.domain_lo = -1e300;
  return f;
}

FunctionSpec shifted_square(double r) {
  FunctionSpec f;
  f.evaluator = [r](double t) { return (t - r) * (t - r); };
  f.name = "(t-r)^2";
  f.convex = true;
  f.monotonicity_switch = r;
  f.value_at_zero_sign = r == 0.0 ? 0 : 1;
  f.domain_lo = -1e300;
  return f;
}

FunctionSpec concave_hat(double s) {
  FunctionSpec f;
  f.evaluator = [s](double t) { return 2.0 * s * t - t * t; };
  f.name = "2st-t^2";
  f.concave = true;
  f.monotonicity_switch = s;
  f.domain_lo = -1e300;
  return f;
}

FunctionSpec neg_power(double p) {
  FunctionSpec f;
  f.evaluator = [p](double t) { return std::pow(t, p); };
  f.name = "t^" + std::to_string(p);
  f.convex = true;
  f.nonincreasing = true;
  f.domain_lo = 1e-300;
  return f;
}

FunctionSpec e_convex_log1p_pow(double alpha) {
  FunctionSpec f;
  f.evaluator = [alpha](double t) { return std::log1p(std::pow(std::max(t, 0.0), alpha)); };
  f.name = "log(1+t^a)";
  f.e_convex = true;
  f.nondecreasing = true;
  return f;
}

FunctionSpec e_concave_log_ratio(double alpha) {
  FunctionSpec f;
  f.evaluator = [alpha](double t) {
    t = std::max(t, 1e-300);
    return alpha * std::log(t) - std::log(t + 1.0);
  };
  f.name = "log(t^a/(t+1))";
  f.e_concave = true;
  f.nondecreasing = true;
  f.domain_lo = 1e-300;
  return f;
}

}  // namespace fn

}  // namespace mxa
