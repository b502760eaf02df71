#pragma once

#include <stdexcept>

namespace carriergame {

// Only one family ships; the solver below touches nothing but eval/deriv,
// so adding another S-shaped family does not disturb it.
enum class EfficiencyFamily {
  kExponentialPower,  // f(gamma) = (1 - e^(-gamma))^M
};

// Packet success rate of an M-symbol frame as a function of SINR.
// f(0) = 0, f(inf) = 1, strictly increasing; S-shaped for M >= 2, which is
// what makes f(gamma)/gamma peak at a unique interior point.
class EfficiencyFunction {
 public:
  explicit EfficiencyFunction(
      int m, EfficiencyFamily family = EfficiencyFamily::kExponentialPower);

  // Both throw std::domain_error on negative or non-finite gamma.
  double eval(double gamma) const;
  double deriv(double gamma) const;

  int m() const { return m_; }
  EfficiencyFamily family() const { return family_; }

 private:
  int m_;
  EfficiencyFamily family_;
};

struct GammaStar {
  double value = 0.0;     // root of f(gamma) = gamma * f'(gamma)
  double residual = 0.0;  // f(value) - value * f'(value) at the returned root
};

struct GammaStarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// m = 1 forces e^gamma = 1 + gamma, whose only solution is gamma = 0; a zero
// SINR target would zero every power downstream, so it is rejected.
struct NoPositiveRootError : GammaStarError {
  using GammaStarError::GammaStarError;
};
struct BracketFailureError : GammaStarError {
  using GammaStarError::GammaStarError;
};

// Unique positive root of f(gamma) = gamma * f'(gamma), the bits/joule
// optimal SINR. Bisection on [1e-6, 1e3], residual tolerance 1e-12; the
// bracket excludes gamma = 0, which solves the equation trivially.
GammaStar gamma_star(const EfficiencyFunction& f);

}  // namespace carriergame
