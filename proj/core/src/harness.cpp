#include "carriergame/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <utility>

#include "carriergame/analysis.hpp"
#include "carriergame/io.hpp"
#include "carriergame/rng.hpp"

namespace carriergame {

void BatchSpec::validate() const {
  if (n_games < 1) throw std::invalid_argument("n_games must be >= 1");
  if (n_users < 1 || n_carriers < 1) {
    throw std::invalid_argument("dimensions must be positive");
  }
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
  if (!(p_max > 0.0)) throw std::invalid_argument("p_max must be positive");
  if (!(initial_power >= 0.0) || initial_power > p_max) {
    throw std::invalid_argument("initial_power must lie in [0, p_max]");
  }
}

GameConfig make_config(const BatchSpec& spec) {
  GameConfig cfg(spec.m);
  cfg.p_max = spec.p_max;
  cfg.scheme = spec.scheme;
  return cfg;
}

GameResult play_game(const BatchSpec& spec, std::uint64_t seed) {
  return play_game(spec, make_config(spec), seed);
}

GameResult play_game(const BatchSpec& spec, const GameConfig& cfg,
                     std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  GameResult result;
  result.channel =
      sample_channel(spec.n_users, spec.n_carriers, spec.sigma2, rng);
  result.channel.seed = seed;
  PowerProfile initial = PowerProfile::zeros(spec.n_users, spec.n_carriers);
  for (int k = 0; k < spec.n_users; ++k) {
    initial.p[k][rng.uniform_int(spec.n_carriers)] = spec.initial_power;
  }
  result.trajectory = run(result.channel, cfg, initial, &rng);
  return result;
}

namespace {

constexpr long long kAuditInterval = 100;
constexpr int kAuditLgdpPoints = 10;
constexpr int kAuditLgdpPairs = 10;
constexpr double kAuditLgdpDelta = 1e-3;
constexpr std::uint64_t kAuditSeedSalt = 0x9e3779b97f4a7c15ull;
constexpr std::size_t kMaxAnomalies = 8;

struct Partial {
  BatchReport report;
  std::vector<long long> iters;  // converged games only
};

void note_anomaly(Partial& part, std::string text) {
  if (part.report.anomalies.size() < kMaxAnomalies) {
    part.report.anomalies.push_back(std::move(text));
  }
}

void run_range(const BatchSpec& spec, const GameConfig& cfg, long long begin,
               long long end, Partial& part) {
  BatchReport& r = part.report;
  for (long long idx = begin; idx < end; ++idx) {
    const std::uint64_t seed = spec.base_seed + static_cast<std::uint64_t>(idx);
    const GameResult game = play_game(spec, cfg, seed);
    const Trajectory& traj = game.trajectory;
    ++r.games_run;
    if (traj.clamped_ever) ++r.games_clamped;
    if (traj.tie_ever) ++r.games_tied;
    const bool clean = !traj.clamped_ever && !traj.tie_ever;
    std::string label;
    if (traj.converged) {
      ++r.games_converged;
      part.iters.push_back(traj.iterations);
      ++r.nash_checked;
      const bool nash =
          is_nash(game.channel, cfg, traj.profiles.back(), kNashTol);
      if (!nash) {
        ++r.nash_failed;
        note_anomaly(part, anomaly_json("nash-failure", seed, game.channel));
      }
      if (clean) {
        label = structure_label(traj.carrier_assignments.back(),
                                spec.n_carriers);
        ++r.structure_histogram[label];
      }
    }
    if (idx % kAuditInterval == 0) {
      ++r.audit_games;
      if (traj.converged && clean && spec.n_users == 2 &&
          spec.n_carriers == 2) {
        const ClassifyResult cls = classify_2x2(game.channel, cfg);
        bool contained = false;
        for (const auto& s : cls.admitted) contained |= s.label == label;
        if (!contained) {
          ++r.audit_structure_mismatches;
          note_anomaly(
              part, anomaly_json("classifier-mismatch", seed, game.channel));
        }
      }
      const LgdpReport lgdp =
          check_lgdp(game.channel, cfg, kAuditLgdpPoints, kAuditLgdpPairs,
                     kAuditLgdpDelta, seed ^ kAuditSeedSalt);
      r.lgdp_violations += lgdp.violations;
      for (const auto& d : lgdp.dumps) note_anomaly(part, d);
    }
  }
}

int thread_budget(long long n_games) {
  long long threads = -1;
  if (const char* env = std::getenv("CARRIERGAME_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) threads = v;
  }
  if (threads < 0) {
    threads = static_cast<long long>(std::thread::hardware_concurrency());
  }
  threads = std::min(threads, n_games);
  return static_cast<int>(std::clamp<long long>(threads, 1, 256));
}

long long percentile(const std::vector<long long>& sorted, double q) {
  const auto n = static_cast<long long>(sorted.size());
  const auto rank =
      static_cast<long long>(std::ceil(q * static_cast<double>(n)));
  return sorted[static_cast<std::size_t>(std::clamp(rank - 1, 0ll, n - 1))];
}

}  // namespace

BatchReport run_batch(const BatchSpec& spec) {
  spec.validate();
  const GameConfig cfg = make_config(spec);
  cfg.validate();

  const int threads = thread_budget(spec.n_games);
  std::vector<Partial> parts(threads);
  if (threads == 1) {
    run_range(spec, cfg, 0, spec.n_games, parts[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      const long long begin = spec.n_games * t / threads;
      const long long end = spec.n_games * (t + 1) / threads;
      workers.emplace_back(
          [&, t, begin, end] { run_range(spec, cfg, begin, end, parts[t]); });
    }
    for (auto& w : workers) w.join();
  }

  BatchReport out;
  std::vector<long long> iters;
  for (Partial& part : parts) {
    const BatchReport& r = part.report;
    out.games_run += r.games_run;
    out.games_converged += r.games_converged;
    out.games_clamped += r.games_clamped;
    out.games_tied += r.games_tied;
    out.nash_checked += r.nash_checked;
    out.nash_failed += r.nash_failed;
    out.audit_games += r.audit_games;
    out.audit_structure_mismatches += r.audit_structure_mismatches;
    out.lgdp_violations += r.lgdp_violations;
    for (const auto& [label, count] : r.structure_histogram) {
      out.structure_histogram[label] += count;
    }
    for (const auto& a : r.anomalies) {
      if (out.anomalies.size() < kMaxAnomalies) out.anomalies.push_back(a);
    }
    iters.insert(iters.end(), part.iters.begin(), part.iters.end());
  }
  if (!iters.empty()) {
    std::sort(iters.begin(), iters.end());
    IterationStats& s = out.iteration_stats;
    s.min = iters.front();
    s.max = iters.back();
    double sum = 0.0;
    for (long long v : iters) sum += static_cast<double>(v);
    s.mean = sum / static_cast<double>(iters.size());
    s.p50 = percentile(iters, 0.50);
    s.p90 = percentile(iters, 0.90);
    s.p99 = percentile(iters, 0.99);
  }
  return out;
}

void emit_trajectory(const Trajectory& traj, const std::string& path) {
  if (traj.profiles.empty()) {
    throw std::invalid_argument("trajectory is empty");
  }
  write_text_file(path, trajectory_csv(traj));
}

}  // namespace carriergame
