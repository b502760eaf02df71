#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace carriergame {

// Identifies the draw source recorded in output files so exact replays are
// possible across implementations: mt19937_64 seeded directly with the
// 64-bit seed, uniforms from the top 53 bits, exponentials by inverse CDF.
inline constexpr const char* kGeneratorId = "mt19937_64/u53-invcdf";

// Every random draw in the library flows through this wrapper. The standard
// specifies mt19937_64 bit-exactly, and the transforms below avoid the
// implementation-defined std::*_distribution adapters, so a seed pins the
// whole stream on any conforming toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Exp(1) via -ln(1 - u). The u == 0 output (probability 2^-53) is redrawn
  // so sampled path gains are strictly positive.
  double exp1() {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    return -std::log1p(-u);
  }

  // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
  int uniform_int(int n) {
    const auto un = static_cast<std::uint64_t>(n);
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t reject = (max % un + 1) % un;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = engine_();
      if (reject == 0 || x <= max - reject) return static_cast<int>(x % un);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace carriergame
