#include "carriergame/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "carriergame/rng.hpp"

namespace carriergame {

namespace {

void update_user(const ChannelRealization& ch, PowerProfile& prof,
                 const GameConfig& cfg, int user, bool& clamped, bool& tie) {
  BestResponse br = best_response(ch, prof, cfg, user);
  clamped = clamped || br.clamped;
  tie = tie || br.tie;
  prof.p[user] = std::move(br.powers);
}

void check_order(const std::vector<int>& order, int n_users) {
  if (static_cast<int>(order.size()) != n_users) {
    throw std::invalid_argument("order must list every user exactly once");
  }
  std::vector<char> seen(n_users, 0);
  for (int k : order) {
    if (k < 0 || k >= n_users || seen[k]) {
      throw std::invalid_argument("order is not a permutation of users");
    }
    seen[k] = 1;
  }
}

double max_abs_diff(const PowerProfile& a, const PowerProfile& b) {
  double worst = 0.0;
  for (int k = 0; k < a.n_users(); ++k) {
    for (int l = 0; l < a.n_carriers(); ++l) {
      worst = std::max(worst, std::fabs(a.p[k][l] - b.p[k][l]));
    }
  }
  return worst;
}

// A stable window alone cannot distinguish a fixed point from a user that
// simply was not asked to move (asynchronous play) or is parked at gamma*
// on the wrong carrier, so convergence additionally demands that every row
// already equals its best response.
bool at_fixed_point(const ChannelRealization& ch, const PowerProfile& prof,
                    const GameConfig& cfg) {
  for (int k = 0; k < ch.n_users; ++k) {
    const BestResponse br = best_response(ch, prof, cfg, k);
    for (int l = 0; l < ch.n_carriers; ++l) {
      if (std::fabs(prof.p[k][l] - br.powers[l]) > cfg.tol_power) return false;
    }
  }
  return true;
}

}  // namespace

PowerProfile step_jacobi(const ChannelRealization& ch,
                         const PowerProfile& prof, const GameConfig& cfg) {
  PowerProfile next = prof;
  bool clamped = false;
  bool tie = false;
  for (int k = 0; k < ch.n_users; ++k) {
    BestResponse br = best_response(ch, prof, cfg, k);
    clamped = clamped || br.clamped;
    tie = tie || br.tie;
    next.p[k] = std::move(br.powers);
  }
  return next;
}

PowerProfile step_gauss_seidel(const ChannelRealization& ch,
                               const PowerProfile& prof, const GameConfig& cfg,
                               const std::vector<int>& order) {
  check_order(order, ch.n_users);
  PowerProfile next = prof;
  bool clamped = false;
  bool tie = false;
  for (int k : order) update_user(ch, next, cfg, k, clamped, tie);
  return next;
}

PowerProfile step_async(const ChannelRealization& ch, const PowerProfile& prof,
                        const GameConfig& cfg, Rng& rng) {
  PowerProfile next = prof;
  bool clamped = false;
  bool tie = false;
  update_user(ch, next, cfg, rng.uniform_int(ch.n_users), clamped, tie);
  return next;
}

std::vector<int> active_carriers(const PowerProfile& prof) {
  std::vector<int> active(prof.n_users(), -1);
  for (int k = 0; k < prof.n_users(); ++k) {
    double best = 0.0;
    for (int l = 0; l < prof.n_carriers(); ++l) {
      if (prof.p[k][l] > best) {
        best = prof.p[k][l];
        active[k] = l;
      }
    }
  }
  return active;
}

Trajectory run(const ChannelRealization& ch, const GameConfig& cfg,
               const PowerProfile& initial, Rng* rng,
               const std::vector<int>& order) {
  cfg.validate();
  check_profile(ch, initial, cfg.p_max);
  if (cfg.scheme == UpdateScheme::kTotallyAsynchronous && rng == nullptr) {
    throw std::invalid_argument("asynchronous play needs an rng");
  }
  std::vector<int> gs_order(order);
  if (gs_order.empty()) {
    gs_order.resize(ch.n_users);
    for (int k = 0; k < ch.n_users; ++k) gs_order[k] = k;
  }
  check_order(gs_order, ch.n_users);

  Trajectory traj;
  traj.profiles.push_back(initial);
  traj.carrier_assignments.push_back(active_carriers(initial));

  int stable = 0;
  int gs_pos = 0;
  auto record = [&](PowerProfile&& next) {
    const double diff = max_abs_diff(next, traj.profiles.back());
    traj.profiles.push_back(std::move(next));
    traj.carrier_assignments.push_back(active_carriers(traj.profiles.back()));
    stable = diff < cfg.tol_power ? stable + 1 : 0;
  };

  while (traj.iterations < cfg.max_iters) {
    PowerProfile next = traj.profiles.back();
    switch (cfg.scheme) {
      case UpdateScheme::kJacobi: {
        const PowerProfile& base = traj.profiles.back();
        for (int k = 0; k < ch.n_users; ++k) {
          BestResponse br = best_response(ch, base, cfg, k);
          traj.clamped_ever = traj.clamped_ever || br.clamped;
          traj.tie_ever = traj.tie_ever || br.tie;
          next.p[k] = std::move(br.powers);
        }
        traj.iterations += ch.n_users;
        break;
      }
      case UpdateScheme::kGaussSeidel: {
        update_user(ch, next, cfg, gs_order[gs_pos], traj.clamped_ever,
                    traj.tie_ever);
        gs_pos = (gs_pos + 1) % ch.n_users;
        traj.iterations += 1;
        break;
      }
      case UpdateScheme::kTotallyAsynchronous: {
        update_user(ch, next, cfg, rng->uniform_int(ch.n_users),
                    traj.clamped_ever, traj.tie_ever);
        traj.iterations += 1;
        break;
      }
    }
    record(std::move(next));
    if (stable >= cfg.stable_rounds - 1 &&
        at_fixed_point(ch, traj.profiles.back(), cfg)) {
      traj.converged = true;
      break;
    }
  }
  return traj;
}

}  // namespace carriergame
