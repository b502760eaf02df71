#include "carriergame/channel.hpp"

#include <stdexcept>
#include <string>

#include "carriergame/rng.hpp"

namespace carriergame {

ChannelRealization sample_channel(int n_users, int n_carriers, double sigma2,
                                  Rng& rng) {
  if (n_users < 1 || n_carriers < 1) {
    throw std::invalid_argument("channel dimensions must be positive");
  }
  if (sigma2 <= 0.0) {
    throw std::invalid_argument("sigma2 must be positive");
  }
  ChannelRealization ch;
  ch.n_users = n_users;
  ch.n_carriers = n_carriers;
  ch.sigma2 = sigma2;
  ch.h.assign(n_users, std::vector<double>(n_carriers));
  for (int k = 0; k < n_users; ++k) {
    for (int l = 0; l < n_carriers; ++l) ch.h[k][l] = rng.exp1();
  }
  ch.g.assign(n_users, std::vector<std::vector<double>>(
                           n_users, std::vector<double>(n_carriers, 0.0)));
  for (int j = 0; j < n_users; ++j) {
    for (int k = 0; k < n_users; ++k) {
      if (j == k) continue;
      for (int l = 0; l < n_carriers; ++l) ch.g[j][k][l] = rng.exp1();
    }
  }
  ch.generator = kGeneratorId;
  return ch;
}

ChannelRealization from_gains(std::vector<std::vector<double>> h,
                              std::vector<std::vector<std::vector<double>>> g,
                              double sigma2) {
  const auto n_users = static_cast<int>(h.size());
  if (n_users < 1) throw std::invalid_argument("h must be non-empty");
  const auto n_carriers = static_cast<int>(h[0].size());
  if (n_carriers < 1) throw std::invalid_argument("h rows must be non-empty");
  if (sigma2 <= 0.0) throw std::invalid_argument("sigma2 must be positive");
  for (int k = 0; k < n_users; ++k) {
    if (static_cast<int>(h[k].size()) != n_carriers) {
      throw std::invalid_argument("h is ragged at user " + std::to_string(k));
    }
    for (int l = 0; l < n_carriers; ++l) {
      if (!(h[k][l] > 0.0)) {
        throw std::invalid_argument("h must be strictly positive");
      }
    }
  }
  if (static_cast<int>(g.size()) != n_users) {
    throw std::invalid_argument("g must have one slab per transmitter");
  }
  for (int j = 0; j < n_users; ++j) {
    if (static_cast<int>(g[j].size()) != n_users) {
      throw std::invalid_argument("g slab " + std::to_string(j) +
                                  " has wrong receiver count");
    }
    for (int k = 0; k < n_users; ++k) {
      if (static_cast<int>(g[j][k].size()) != n_carriers) {
        throw std::invalid_argument("g is ragged at pair (" +
                                    std::to_string(j) + ", " +
                                    std::to_string(k) + ")");
      }
      for (int l = 0; l < n_carriers; ++l) {
        if (j == k) {
          // Diagonal is meaningless; force the canonical zero so two
          // realizations with equal physics compare equal.
          g[j][k][l] = 0.0;
        } else if (!(g[j][k][l] > 0.0)) {
          throw std::invalid_argument("cross gains must be strictly positive");
        }
      }
    }
  }
  ChannelRealization ch;
  ch.n_users = n_users;
  ch.n_carriers = n_carriers;
  ch.sigma2 = sigma2;
  ch.h = std::move(h);
  ch.g = std::move(g);
  return ch;
}

}  // namespace carriergame
