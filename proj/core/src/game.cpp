#include "carriergame/game.hpp"

#include <stdexcept>
#include <string>

namespace carriergame {

PowerProfile PowerProfile::zeros(int n_users, int n_carriers) {
  PowerProfile prof;
  prof.p.assign(n_users, std::vector<double>(n_carriers, 0.0));
  return prof;
}

std::string to_string(UpdateScheme scheme) {
  switch (scheme) {
    case UpdateScheme::kJacobi:
      return "jacobi";
    case UpdateScheme::kGaussSeidel:
      return "gauss-seidel";
    case UpdateScheme::kTotallyAsynchronous:
      return "async";
  }
  throw std::invalid_argument("unknown scheme value");
}

UpdateScheme parse_scheme(const std::string& name) {
  if (name == "jacobi") return UpdateScheme::kJacobi;
  if (name == "gauss-seidel") return UpdateScheme::kGaussSeidel;
  if (name == "async") return UpdateScheme::kTotallyAsynchronous;
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected jacobi, gauss-seidel or async)");
}

GameConfig::GameConfig(int m)
    : efficiency(m), gamma_star(carriergame::gamma_star(efficiency)) {}

void GameConfig::validate() const {
  if (!(rate > 0.0)) throw std::invalid_argument("rate must be positive");
  if (!(p_max > 0.0)) throw std::invalid_argument("p_max must be positive");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(tol_power > 0.0)) {
    throw std::invalid_argument("tol_power must be positive");
  }
  if (stable_rounds < 1) {
    throw std::invalid_argument("stable_rounds must be >= 1");
  }
  if (!(gamma_star.value > 0.0)) {
    throw std::invalid_argument("gamma_star must be positive");
  }
}

namespace {

void check_indices(const ChannelRealization& ch, int user, int carrier) {
  if (user < 0 || user >= ch.n_users) {
    throw std::out_of_range("user index " + std::to_string(user));
  }
  if (carrier < 0 || carrier >= ch.n_carriers) {
    throw std::out_of_range("carrier index " + std::to_string(carrier));
  }
}

}  // namespace

void check_profile(const ChannelRealization& ch, const PowerProfile& prof,
                   double p_max) {
  if (prof.n_users() != ch.n_users || prof.n_carriers() != ch.n_carriers) {
    throw std::invalid_argument("profile shape does not match channel");
  }
  for (const auto& row : prof.p) {
    if (static_cast<int>(row.size()) != ch.n_carriers) {
      throw std::invalid_argument("profile is ragged");
    }
    for (double v : row) {
      if (!(v >= 0.0) || v > p_max) {
        throw std::invalid_argument("power outside [0, p_max]");
      }
    }
  }
}

double interference(const ChannelRealization& ch, const PowerProfile& prof,
                    int user, int carrier) {
  check_indices(ch, user, carrier);
  double sum = 0.0;
  for (int j = 0; j < ch.n_users; ++j) {
    if (j == user) continue;
    sum += ch.g[j][user][carrier] * prof.p[j][carrier];
  }
  return sum;
}

double sinr(const ChannelRealization& ch, const PowerProfile& prof, int user,
            int carrier) {
  check_indices(ch, user, carrier);
  const double own = prof.p[user][carrier];
  if (own == 0.0) return 0.0;
  return ch.h[user][carrier] * own /
         (ch.sigma2 + interference(ch, prof, user, carrier));
}

double utility(const ChannelRealization& ch, const PowerProfile& prof,
               const GameConfig& cfg, int user) {
  check_indices(ch, user, 0);
  double total_power = 0.0;
  double throughput = 0.0;
  for (int l = 0; l < ch.n_carriers; ++l) {
    total_power += prof.p[user][l];
    throughput += cfg.efficiency.eval(sinr(ch, prof, user, l));
  }
  if (total_power == 0.0) return 0.0;
  return cfg.rate * throughput / total_power;
}

double required_power(const ChannelRealization& ch, const PowerProfile& prof,
                      const GameConfig& cfg, int user, int carrier) {
  check_indices(ch, user, carrier);
  return cfg.gamma_star.value *
         (ch.sigma2 + interference(ch, prof, user, carrier)) /
         ch.h[user][carrier];
}

BestResponse best_response(const ChannelRealization& ch,
                           const PowerProfile& prof, const GameConfig& cfg,
                           int user) {
  check_indices(ch, user, 0);
  BestResponse br;
  br.powers.assign(ch.n_carriers, 0.0);
  std::vector<double> required(ch.n_carriers);
  for (int l = 0; l < ch.n_carriers; ++l) {
    required[l] = required_power(ch, prof, cfg, user, l);
  }
  br.carrier = 0;
  for (int l = 1; l < ch.n_carriers; ++l) {
    if (required[l] < required[br.carrier]) br.carrier = l;
  }
  for (int l = 0; l < ch.n_carriers; ++l) {
    if (l != br.carrier && required[l] == required[br.carrier]) br.tie = true;
  }
  const double r = required[br.carrier];
  br.clamped = r > cfg.p_max;
  br.powers[br.carrier] = br.clamped ? cfg.p_max : r;
  return br;
}

bool best_carrier_condition(const ChannelRealization& ch,
                            const PowerProfile& prof, const GameConfig&,
                            int user, int carrier) {
  check_indices(ch, user, carrier);
  const double denom_l = ch.sigma2 + interference(ch, prof, user, carrier);
  for (int i = 0; i < ch.n_carriers; ++i) {
    if (i == carrier) continue;
    const double denom_i = ch.sigma2 + interference(ch, prof, user, i);
    if (!(ch.h[user][carrier] * denom_i > ch.h[user][i] * denom_l)) {
      return false;
    }
  }
  return true;
}

}  // namespace carriergame
