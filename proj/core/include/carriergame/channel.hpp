#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace carriergame {

class Rng;

// Flat-per-carrier gains for one game instance. h[k][l] is user k's own
// uplink gain on carrier l; g[j][k][l] is the cross gain from transmitter j
// into receiver k on carrier l, with the j == k diagonal unused and stored
// as zero. All gains are strictly positive off that diagonal.
struct ChannelRealization {
  int n_users = 0;
  int n_carriers = 0;
  double sigma2 = 0.0;
  std::vector<std::vector<double>> h;
  std::vector<std::vector<std::vector<double>>> g;
  // Present when the realization was drawn rather than hand-built.
  std::optional<std::uint64_t> seed;
  std::optional<std::string> generator;
};

// Draws i.i.d. Exp(1) gains (Rayleigh fading in power). Draw order is part
// of the reproducibility contract: all h first (users outer, carriers
// inner), then g (tx outer, rx next, carriers inner), skipping tx == rx.
ChannelRealization sample_channel(int n_users, int n_carriers, double sigma2,
                                  Rng& rng);

// Wraps explicit gain tables, validating shapes and positivity.
ChannelRealization from_gains(std::vector<std::vector<double>> h,
                              std::vector<std::vector<std::vector<double>>> g,
                              double sigma2);

}  // namespace carriergame
