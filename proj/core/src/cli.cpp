#include "carriergame/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "carriergame/analysis.hpp"
#include "carriergame/harness.hpp"
#include "carriergame/io.hpp"
#include "carriergame/rng.hpp"

namespace carriergame {

namespace {

struct RunFlags {
  std::uint64_t seed = 0;
  int users = 2;
  int carriers = 2;
  std::string scheme = "gauss-seidel";
  double sigma2 = 1.0;
  double p_max = 1000.0;
  double init = 100.0;
  int m = 2;
};

BatchSpec spec_from(const RunFlags& flags) {
  BatchSpec spec;
  spec.n_users = flags.users;
  spec.n_carriers = flags.carriers;
  spec.sigma2 = flags.sigma2;
  spec.p_max = flags.p_max;
  spec.initial_power = flags.init;
  spec.scheme = parse_scheme(flags.scheme);
  spec.m = flags.m;
  spec.base_seed = flags.seed;
  return spec;
}

void add_game_flags(CLI::App* cmd, RunFlags& flags) {
  cmd->add_option("--seed", flags.seed, "base seed, 64-bit")->required();
  cmd->add_option("--users", flags.users, "number of users");
  cmd->add_option("--carriers", flags.carriers, "number of carriers");
  cmd->add_option("--scheme", flags.scheme, "update scheme")
      ->check(CLI::IsMember({"jacobi", "gauss-seidel", "async"}));
  cmd->add_option("--sigma2", flags.sigma2, "noise variance");
  cmd->add_option("--pmax", flags.p_max, "per-user power cap");
  cmd->add_option("--init", flags.init, "starting power on the drawn carrier");
  cmd->add_option("--m", flags.m, "frame length of the efficiency function");
}

int do_gamma_star(int m) {
  const GammaStar gs = gamma_star(EfficiencyFunction(m));
  std::printf("%.17g\n", gs.value);
  return 0;
}

int do_run(const RunFlags& flags, const std::string& out_path) {
  const BatchSpec spec = spec_from(flags);
  const GameConfig cfg = make_config(spec);
  const GameResult game = play_game(spec, cfg, flags.seed);
  if (!out_path.empty()) emit_trajectory(game.trajectory, out_path);
  std::cout << run_summary_json(game.channel, cfg, game.trajectory,
                                flags.seed)
            << "\n";
  return 0;
}

int do_montecarlo(const RunFlags& flags, long long games,
                  const std::string& report_path) {
  BatchSpec spec = spec_from(flags);
  spec.n_games = games;
  const BatchReport report = run_batch(spec);
  const std::string text = batch_report_json(spec, report);
  if (!report_path.empty()) write_text_file(report_path, text + "\n");
  std::cout << text << "\n";
  return 0;
}

int do_classify(const std::string& channel_path) {
  const ChannelRealization ch = channel_from_json(read_text_file(channel_path));
  const GameConfig cfg;
  const ClassifyResult result = classify_2x2(ch, cfg);
  std::cout << classify_json(ch, cfg, result) << "\n";
  return 0;
}

int do_check_lgdp(std::uint64_t seed, int points, int pairs, double delta) {
  Rng rng(seed);
  ChannelRealization ch = sample_channel(2, 2, 1.0, rng);
  ch.seed = seed;
  const GameConfig cfg;
  // The sweep gets its own stream so adding sampling rounds never perturbs
  // the channel.
  const std::uint64_t sweep_seed = seed + 1;
  const LgdpReport report =
      check_lgdp(ch, cfg, points, pairs, delta, sweep_seed);
  std::cout << lgdp_report_json(ch, report, sweep_seed) << "\n";
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Noncooperative power control on multicarrier channels"};
  app.require_subcommand(1);

  auto* gamma_cmd =
      app.add_subcommand("gamma-star", "Print the target SINR gamma*");
  int gamma_m = 2;
  gamma_cmd->add_option("--m", gamma_m, "frame length")->required();

  auto* run_cmd = app.add_subcommand("run", "Play one seeded game");
  RunFlags run_flags;
  std::string out_path;
  add_game_flags(run_cmd, run_flags);
  run_cmd->add_option("--out", out_path, "write the iterate CSV here");

  auto* mc_cmd =
      app.add_subcommand("montecarlo", "Run a seeded batch of games");
  RunFlags mc_flags;
  long long mc_games = 0;
  std::string report_path;
  mc_cmd->add_option("--games", mc_games, "number of games")->required();
  add_game_flags(mc_cmd, mc_flags);
  mc_cmd->add_option("--report", report_path, "write the report JSON here");

  auto* classify_cmd =
      app.add_subcommand("classify", "Classify the equilibria of a channel");
  std::string channel_path;
  classify_cmd->add_option("--channel", channel_path, "channel JSON path")
      ->required();

  auto* lgdp_cmd = app.add_subcommand(
      "check-lgdp", "Sample the direction-preservation property");
  std::uint64_t lgdp_seed = 0;
  int lgdp_points = 0;
  int lgdp_pairs = 0;
  double lgdp_delta = 0.0;
  lgdp_cmd->add_option("--seed", lgdp_seed, "seed, 64-bit")->required();
  lgdp_cmd->add_option("--points", lgdp_points, "base points")->required();
  lgdp_cmd->add_option("--pairs", lgdp_pairs, "pairs per point")->required();
  lgdp_cmd->add_option("--delta", lgdp_delta, "neighborhood radius")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gamma_cmd->parsed()) return do_gamma_star(gamma_m);
    if (run_cmd->parsed()) return do_run(run_flags, out_path);
    if (mc_cmd->parsed()) return do_montecarlo(mc_flags, mc_games, report_path);
    if (classify_cmd->parsed()) return do_classify(channel_path);
    if (lgdp_cmd->parsed()) {
      return do_check_lgdp(lgdp_seed, lgdp_points, lgdp_pairs, lgdp_delta);
    }
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace carriergame
