#include "carriergame/efficiency.hpp"

#include <cmath>
#include <string>

namespace carriergame {

EfficiencyFunction::EfficiencyFunction(int m, EfficiencyFamily family)
    : m_(m), family_(family) {
  if (m < 1) {
    throw std::invalid_argument("frame length m must be >= 1, got " +
                                std::to_string(m));
  }
}

namespace {

void check_gamma(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw std::domain_error("gamma must be finite and nonnegative");
  }
}

}  // namespace

double EfficiencyFunction::eval(double gamma) const {
  check_gamma(gamma);
  // -expm1(-g) is 1 - e^-g without cancellation near zero.
  return std::pow(-std::expm1(-gamma), m_);
}

double EfficiencyFunction::deriv(double gamma) const {
  check_gamma(gamma);
  const double base = -std::expm1(-gamma);
  // pow(0, 0) = 1 handles m = 1 at gamma = 0, where the derivative is 1.
  return static_cast<double>(m_) * std::pow(base, m_ - 1) * std::exp(-gamma);
}

namespace {

double residual_at(const EfficiencyFunction& f, double gamma) {
  return f.eval(gamma) - gamma * f.deriv(gamma);
}

}  // namespace

GammaStar gamma_star(const EfficiencyFunction& f) {
  if (f.m() < 2) {
    throw NoPositiveRootError(
        "f(gamma) = gamma f'(gamma) has no positive root for m = " +
        std::to_string(f.m()));
  }
  double lo = 1e-6;
  double hi = 1e3;
  const double flo = residual_at(f, lo);
  const double fhi = residual_at(f, hi);
  // For large m both terms underflow at lo and flo is an exact 0; that still
  // brackets the root, so only sign agreement is fatal.
  if (flo > 0.0 || fhi <= 0.0) {
    throw BracketFailureError("no sign change on [1e-6, 1e3] for m = " +
                              std::to_string(f.m()));
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (residual_at(f, mid) <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  GammaStar gs;
  gs.value = 0.5 * (lo + hi);
  gs.residual = residual_at(f, gs.value);
  if (std::fabs(gs.residual) > 1e-12) {
    throw BracketFailureError("residual above 1e-12 for m = " +
                              std::to_string(f.m()));
  }
  return gs;
}

}  // namespace carriergame
