#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "carriergame/analysis.hpp"
#include "carriergame/harness.hpp"

namespace carriergame {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// {n_users, n_carriers, sigma2, h, g, seed?, generator?}; optional fields
// are omitted when unknown. Parsing enforces the same invariants as
// from_gains and reports mismatched declared dimensions.
std::string channel_to_json(const ChannelRealization& ch);
ChannelRealization channel_from_json(const std::string& text);

// CSV with header iter,user,carrier,power; iter is the profile index, so
// row 0 is the initial profile.
std::string trajectory_csv(const Trajectory& traj);

// Per-iterate state rows: game_id,iter,user,carrier,power,sinr,utility.
// The utility column repeats the row owner's utility on each of its
// carrier rows.
std::string state_csv(long long game_id, const ChannelRealization& ch,
                      const GameConfig& cfg, const Trajectory& traj);

std::string run_summary_json(const ChannelRealization& ch,
                             const GameConfig& cfg, const Trajectory& traj,
                             std::uint64_t seed);
std::string batch_report_json(const BatchSpec& spec,
                              const BatchReport& report);
std::string classify_json(const ChannelRealization& ch, const GameConfig& cfg,
                          const ClassifyResult& result);
std::string lgdp_report_json(const ChannelRealization& ch,
                             const LgdpReport& report, std::uint64_t seed);
std::string lgdp_violation_json(const ChannelRealization& ch,
                                const PowerProfile& a, const PowerProfile& b,
                                const PowerProfile& c, double dot);
std::string anomaly_json(const std::string& kind, std::uint64_t seed,
                         const ChannelRealization& ch);

}  // namespace carriergame
