#include <chrono>
#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "carriergame/efficiency.hpp"

#include "test_util.hpp"

using carriergame::EfficiencyFunction;
using carriergame::GammaStar;
using carriergame::gamma_star;
using carriergame::NoPositiveRootError;

// Frozen from a 60-digit mpmath solve of e^g = 1 + m*g (nearest doubles).
constexpr double kGamma2 = 1.2564312086261697;
constexpr double kGamma5 = 2.660399058463685;
constexpr double kGamma10 = 3.6149504270875306;
constexpr double kGamma80 = 6.210236376614954;

TEST_CASE("eval matches the closed form at frozen points") {
  EfficiencyFunction f(2);
  // (1 - e^-1)^2, frozen from mpmath.
  CHECK(f.eval(1.0) == doctest::Approx(0.39957640089372803).epsilon(1e-15));
  CHECK(f.eval(0.0) == 0.0);
  CHECK(f.eval(50.0) == doctest::Approx(1.0).epsilon(1e-12));
  EfficiencyFunction f1(1);
  CHECK(f1.eval(2.0) == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-15));
}

TEST_CASE("deriv matches the closed form and the m=1 origin limit") {
  EfficiencyFunction f(2);
  // 2 (1 - e^-1) e^-1, frozen from mpmath.
  CHECK(f.deriv(1.0) == doctest::Approx(0.46508831586965926).epsilon(1e-15));
  CHECK(f.deriv(0.0) == 0.0);
  EfficiencyFunction f1(1);
  CHECK(f1.deriv(0.0) == 1.0);
}

TEST_CASE("deriv agrees with a central difference away from the origin") {
  for (int m : {2, 5, 10, 80}) {
    EfficiencyFunction f(m);
    for (double g : {0.5, 1.0, 3.0, 7.0}) {
      const double eps = 1e-6;
      const double numeric = (f.eval(g + eps) - f.eval(g - eps)) / (2 * eps);
      CHECK(f.deriv(g) == doctest::Approx(numeric).epsilon(1e-7));
    }
  }
}

TEST_CASE("eval and deriv reject bad arguments") {
  EfficiencyFunction f(2);
  CHECK_THROWS_AS(f.eval(-0.5), std::domain_error);
  CHECK_THROWS_AS(f.deriv(-0.5), std::domain_error);
  CHECK_THROWS_AS(f.eval(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(EfficiencyFunction(0), std::invalid_argument);
  CHECK_THROWS_AS(EfficiencyFunction(-3), std::invalid_argument);
}

TEST_CASE("gamma_star hits the frozen roots with tiny residuals") {
  struct Row {
    int m;
    double root;
  };
  for (const Row& row : {Row{2, kGamma2}, Row{5, kGamma5}, Row{10, kGamma10},
                         Row{80, kGamma80}}) {
    EfficiencyFunction f(row.m);
    const GammaStar gs = gamma_star(f);
    CHECK(gs.value == doctest::Approx(row.root).epsilon(1e-12));
    CHECK(std::abs(gs.residual) <= 1e-12);
    // Independent residual formula, written without expm1.
    CHECK(std::abs(testutil::oracle_residual(row.m, gs.value)) <= 1e-10);
  }
}

TEST_CASE("gamma_star agrees with the independent bisection oracle") {
  for (int m : {2, 3, 5, 10, 40, 80}) {
    EfficiencyFunction f(m);
    CHECK(gamma_star(f).value ==
          doctest::Approx(testutil::oracle_gamma_star(m)).epsilon(1e-9));
  }
}

TEST_CASE("gamma_star rejects m below 2") {
  EfficiencyFunction f(1);
  CHECK_THROWS_AS(gamma_star(f), NoPositiveRootError);
}

TEST_CASE("gamma_star is fast enough for per-config solves") {
  EfficiencyFunction warm(2);
  (void)gamma_star(warm);
  for (int m : {2, 80}) {
    EfficiencyFunction f(m);
    const auto t0 = std::chrono::steady_clock::now();
    (void)gamma_star(f);
    const auto dt = std::chrono::steady_clock::now() - t0;
    CHECK(std::chrono::duration<double, std::milli>(dt).count() < 10.0);
  }
}
