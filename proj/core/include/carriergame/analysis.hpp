#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "carriergame/game.hpp"

namespace carriergame {

// Which carrier each user occupies at an equilibrium candidate.
// For two users on two carriers the conventional labels apply:
// "(12,)" both on carrier 1, "(,12)" both on carrier 2, "(1,2)" user 1 on
// carrier 1 and user 2 on carrier 2, "(2,1)" the swap. Other shapes get the
// 1-based assignment joined by commas, with "-" for an idle user.
struct EquilibriumStructure {
  std::vector<int> assignment;  // 0-based carrier per user, -1 when idle
  std::string label;
};

std::string structure_label(const std::vector<int>& assignment,
                            int n_carriers);

// No unilateral deviation improves any user's utility by more than tol.
// The deviation oracle is the analytic best response, which maximizes the
// row's utility exactly; the brute-force grid lives in the test suite.
bool is_nash(const ChannelRealization& ch, const GameConfig& cfg,
             const PowerProfile& prof, double tol);

enum class InfeasibleReason {
  kNone,
  kNonpositivePower,
  kExceedsPMax,
  kSingularSystem,
};

std::string to_string(InfeasibleReason reason);

struct EquilibriumPowers {
  bool feasible = false;
  InfeasibleReason reason = InfeasibleReason::kNone;
  PowerProfile profile;  // meaningful only when feasible
};

// Solves the per-carrier linear balance system
//   h[k][c] p_k - gamma* sum_{j on c, j != k} g[j][k][c] p_j = gamma* sigma2
// for the users assigned to each carrier, zero elsewhere. Infeasible when a
// solved power is nonpositive, exceeds p_max, or the system is singular.
EquilibriumPowers equilibrium_powers(const ChannelRealization& ch,
                                     const GameConfig& cfg,
                                     const std::vector<int>& assignment);

// One candidate structure of the 2x2 case analysis, with the reason it was
// rejected when it was. rejected_by names the first failed gate: "infeasible",
// "eta1", "eta2", "best_carrier:user1", "best_carrier:user2", "nash".
struct StructureVerdict {
  EquilibriumStructure structure;
  bool admitted = false;
  bool feasible = false;
  InfeasibleReason infeasible_reason = InfeasibleReason::kNone;
  PowerProfile powers;
  std::string rejected_by;
};

struct ClassifyResult {
  // Fixed order: (12,), (,12), (1,2), (2,1).
  std::array<StructureVerdict, 4> verdicts;
  std::vector<EquilibriumStructure> admitted;
};

// Checks all four 2x2 structures. Shared-carrier candidates must keep each
// user's fixed-point power below its eta bound (the condition for the other
// user to stay put); split candidates must pass the best-carrier path-gain
// test for both users. Every candidate finally has to pass is_nash at
// tol 1e-9. An empty admitted set is a legal result and is recorded as such.
ClassifyResult classify_2x2(const ChannelRealization& ch,
                            const GameConfig& cfg);

inline constexpr double kNashTol = 1e-9;
inline constexpr double kLgdpEps = 1e-12;

struct LgdpReport {
  int points_tested = 0;
  long long pairs_tested = 0;
  double delta = 0.0;
  double min_dot = std::numeric_limits<double>::infinity();
  long long violations = 0;  // pairs with dot < -kLgdpEps
  // JSON dumps of the first few violations, channel included, for replay.
  std::vector<std::string> dumps;
};

// Samples base profiles a uniformly from [0, p_max]^(N x D) with
// lambda(a) != a, where lambda is the simultaneous best-response map, then
// pairs (b, c) uniformly from the delta-ball around a intersected with the
// strategy polytope, and records the smallest inner product
// (lambda(b) - b) . (lambda(c) - c) seen.
LgdpReport check_lgdp(const ChannelRealization& ch, const GameConfig& cfg,
                      int n_points, int n_pairs, double delta,
                      std::uint64_t seed);

}  // namespace carriergame
