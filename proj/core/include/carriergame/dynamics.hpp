#pragma once

#include <vector>

#include "carriergame/game.hpp"

namespace carriergame {

class Rng;

// Iterate record of one game. profiles[0] is the initial profile; each later
// entry is the state after one recorded step (one user update under
// Gauss-Seidel and asynchronous play, one simultaneous sweep under Jacobi).
// iterations counts individual user updates regardless of scheme, so counts
// compare across schemes.
struct Trajectory {
  std::vector<PowerProfile> profiles;
  // One entry per profile: the active carrier of each user (argmax power,
  // lowest index on equal rows, -1 for an all-zero row).
  std::vector<std::vector<int>> carrier_assignments;
  bool converged = false;
  int iterations = 0;
  // Flags accumulate over applied updates only, not over the fixed-point
  // probes run by the convergence check.
  bool clamped_ever = false;
  bool tie_ever = false;
};

// All users reply simultaneously to prof.
PowerProfile step_jacobi(const ChannelRealization& ch,
                         const PowerProfile& prof, const GameConfig& cfg);

// Users reply one after the other in the given order, each seeing the
// partially updated profile. order must be a permutation of 0..N-1.
PowerProfile step_gauss_seidel(const ChannelRealization& ch,
                               const PowerProfile& prof, const GameConfig& cfg,
                               const std::vector<int>& order);

// One uniformly random user replies; everyone else holds.
PowerProfile step_async(const ChannelRealization& ch, const PowerProfile& prof,
                        const GameConfig& cfg, Rng& rng);

// Runs cfg.scheme from initial until the profile is stable for
// cfg.stable_rounds recorded steps and every user's row sits within
// cfg.tol_power of its current best response, or cfg.max_iters user updates
// elapse (converged = false then; non-convergence is a result).
// rng is consulted only by the asynchronous scheme and must be non-null
// there. order applies only to Gauss-Seidel; empty means 0..N-1.
Trajectory run(const ChannelRealization& ch, const GameConfig& cfg,
               const PowerProfile& initial, Rng* rng = nullptr,
               const std::vector<int>& order = {});

// The per-profile active-carrier vector described on Trajectory.
std::vector<int> active_carriers(const PowerProfile& prof);

}  // namespace carriergame
