#pragma once

#include <string>
#include <vector>

#include "carriergame/channel.hpp"
#include "carriergame/efficiency.hpp"

namespace carriergame {

// Joint strategy: p[k][l] is user k's transmit power on carrier l.
// Entries live in [0, p_max] per the strategy set.
struct PowerProfile {
  std::vector<std::vector<double>> p;

  static PowerProfile zeros(int n_users, int n_carriers);
  int n_users() const { return static_cast<int>(p.size()); }
  int n_carriers() const {
    return p.empty() ? 0 : static_cast<int>(p[0].size());
  }
};

enum class UpdateScheme { kJacobi, kGaussSeidel, kTotallyAsynchronous };

std::string to_string(UpdateScheme scheme);
// Accepts "jacobi", "gauss-seidel", "async"; throws std::invalid_argument.
UpdateScheme parse_scheme(const std::string& name);

// Everything about the game that is not the channel: the common rate R, the
// power cap, the SINR target derived from f, and the dynamics knobs.
struct GameConfig {
  // Computes gamma_star from the family at construction so the two can
  // never drift apart.
  explicit GameConfig(int m = 2);

  double rate = 1.0;
  double p_max = 1000.0;
  UpdateScheme scheme = UpdateScheme::kGaussSeidel;
  int max_iters = 10000;
  double tol_power = 1e-9;
  int stable_rounds = 3;
  EfficiencyFunction efficiency;
  GammaStar gamma_star;

  // Throws std::invalid_argument on out-of-range knobs.
  void validate() const;
};

// Throws std::invalid_argument if prof is not n_users x n_carriers with
// entries in [0, p_max].
void check_profile(const ChannelRealization& ch, const PowerProfile& prof,
                   double p_max);

// Co-channel interference seen by user k on carrier l,
// sum over j != k of g[j][k][l] * p[j][l].
double interference(const ChannelRealization& ch, const PowerProfile& prof,
                    int user, int carrier);

// gamma_kl = h_kl p_kl / (sigma2 + interference). Zero at zero own power.
double sinr(const ChannelRealization& ch, const PowerProfile& prof, int user,
            int carrier);

// Bits/joule: R * sum_l f(gamma_kl) / sum_l p_kl. An all-zero row gets
// utility 0, the continuous limit of the ratio for m >= 2.
double utility(const ChannelRealization& ch, const PowerProfile& prof,
               const GameConfig& cfg, int user);

// Power user k needs on carrier l to hit gamma_star against the
// interference in prof: gamma_star * (sigma2 + I_kl) / h_kl.
double required_power(const ChannelRealization& ch, const PowerProfile& prof,
                      const GameConfig& cfg, int user, int carrier);

struct BestResponse {
  std::vector<double> powers;  // one entry per carrier, single nonzero
  int carrier = -1;            // the chosen L_k
  bool clamped = false;        // required power exceeded p_max
  bool tie = false;            // argmin was not unique; lowest index taken
};

// Single-carrier reply: all power on the carrier with the least required
// power, min(required, p_max) there and 0 elsewhere.
BestResponse best_response(const ChannelRealization& ch,
                           const PowerProfile& prof, const GameConfig& cfg,
                           int user);

// Path-gain test for carrier l being user k's strict best at prof:
// h_kl (sigma2 + I_ki) > h_ki (sigma2 + I_kl) for every i != l. The cross
// multiplied form sidesteps dividing by small interference-free terms.
bool best_carrier_condition(const ChannelRealization& ch,
                            const PowerProfile& prof, const GameConfig& cfg,
                            int user, int carrier);

}  // namespace carriergame
