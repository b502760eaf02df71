#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "carriergame/dynamics.hpp"

namespace carriergame {

// One Monte-Carlo experiment. Game i runs with seed base_seed + i; a single
// generator per game draws the channel first, then one initial carrier per
// user in index order, and the asynchronous scheme keeps consuming the same
// stream. That order is the replay contract.
struct BatchSpec {
  long long n_games = 100000;
  int n_users = 2;
  int n_carriers = 2;
  double sigma2 = 1.0;
  double p_max = 1000.0;
  double initial_power = 100.0;
  UpdateScheme scheme = UpdateScheme::kGaussSeidel;
  int m = 2;
  std::uint64_t base_seed = 0;

  void validate() const;
};

struct IterationStats {
  long long min = 0;
  long long max = 0;
  double mean = 0.0;
  long long p50 = 0;
  long long p90 = 0;
  long long p99 = 0;
};

// Aggregate of a batch. A pure function of the spec: thread count never
// shows up in the numbers. The structure histogram covers converged,
// unclamped, untied games only. Every converged game is re-verified as a
// Nash point; every 100th game is audited further, against the 2x2
// classifier where applicable and with a small direction-preservation
// sweep, which is what lgdp_violations counts.
struct BatchReport {
  long long games_run = 0;
  long long games_converged = 0;
  long long games_clamped = 0;
  long long games_tied = 0;
  long long nash_checked = 0;
  long long nash_failed = 0;
  long long audit_games = 0;
  long long audit_structure_mismatches = 0;
  long long lgdp_violations = 0;
  std::map<std::string, long long> structure_histogram;
  IterationStats iteration_stats;  // over converged games
  std::vector<std::string> anomalies;  // capped JSON dumps for replay
};

struct GameResult {
  ChannelRealization channel;
  Trajectory trajectory;
};

// The configuration a batch runs under; exposed so callers replaying many
// single games can share one gamma_star solve.
GameConfig make_config(const BatchSpec& spec);

// One full game under the batch protocol: channel, random initial carriers
// at spec.initial_power, dynamics until convergence or the iteration cap.
// cfg must come from make_config(spec).
GameResult play_game(const BatchSpec& spec, std::uint64_t seed);
GameResult play_game(const BatchSpec& spec, const GameConfig& cfg,
                     std::uint64_t seed);

// Runs spec.n_games games. CARRIERGAME_THREADS caps the worker count
// (0 or 1 means sequential, unset means hardware concurrency); the reduction
// is order-insensitive, so the report does not depend on it.
BatchReport run_batch(const BatchSpec& spec);

// Writes the per-iterate power CSV (header iter,user,carrier,power) to path.
void emit_trajectory(const Trajectory& traj, const std::string& path);

}  // namespace carriergame
