#include <cstdio>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "carriergame/harness.hpp"
#include "carriergame/io.hpp"
#include "carriergame/rng.hpp"

#include "test_util.hpp"

using namespace carriergame;
using nlohmann::json;

namespace {

struct TempFile {
  TempFile() {
    char buf[] = "/tmp/carriergame_test_XXXXXX";
    const int fd = mkstemp(buf);
    REQUIRE(fd >= 0);
    close(fd);
    path = buf;
  }
  ~TempFile() { std::remove(path.c_str()); }
  std::string path;
};

}  // namespace

TEST_CASE("text files round-trip and missing files raise IoError") {
  TempFile tmp;
  write_text_file(tmp.path, "hello\nworld\n");
  CHECK(read_text_file(tmp.path) == "hello\nworld\n");
  CHECK_THROWS_AS(read_text_file("/nonexistent/dir/nofile.txt"), IoError);
}

TEST_CASE("channels survive a JSON round trip bit for bit") {
  Rng rng(404);
  ChannelRealization ch = sample_channel(2, 3, 1.5, rng);
  ch.seed = 404;
  const std::string text = channel_to_json(ch);
  const ChannelRealization back = channel_from_json(text);
  CHECK(back.n_users == ch.n_users);
  CHECK(back.n_carriers == ch.n_carriers);
  CHECK(back.sigma2 == ch.sigma2);
  CHECK(back.h == ch.h);
  CHECK(back.g == ch.g);
  REQUIRE(back.seed.has_value());
  CHECK(*back.seed == 404);
  REQUIRE(back.generator.has_value());
  CHECK(*back.generator == kGeneratorId);
}

TEST_CASE("channel parsing rejects malformed documents") {
  CHECK_THROWS_AS(channel_from_json("{ not json"), ParseError);
  CHECK_THROWS_AS(channel_from_json("{}"), ParseError);
  Rng rng(11);
  ChannelRealization ch = sample_channel(2, 2, 1.0, rng);
  json j = json::parse(channel_to_json(ch));
  j["n_carriers"] = 5;
  CHECK_THROWS_AS(channel_from_json(j.dump()), ParseError);
  json bad = json::parse(channel_to_json(ch));
  bad["h"][0][1] = -2.0;
  CHECK_THROWS_AS(channel_from_json(bad.dump()), ParseError);
}

TEST_CASE("trajectory CSV lists every profile row under the header") {
  BatchSpec spec;
  const GameResult game = play_game(spec, 9);
  const std::string csv = trajectory_csv(game.trajectory);
  REQUIRE(csv.rfind("iter,user,carrier,power\n", 0) == 0);
  long long rows = -1;  // header
  for (char c : csv)
    if (c == '\n') ++rows;
  CHECK(rows == static_cast<long long>(game.trajectory.profiles.size()) * 4);
  CHECK(csv.find("0,0,0,") != std::string::npos);
}

TEST_CASE("state CSV carries the game id and per-carrier telemetry") {
  BatchSpec spec;
  const GameResult game = play_game(spec, 9);
  const GameConfig cfg = make_config(spec);
  const std::string csv = state_csv(9, game.channel, cfg, game.trajectory);
  REQUIRE(csv.rfind("game_id,iter,user,carrier,power,sinr,utility\n", 0) == 0);
  CHECK(csv.find("\n9,0,0,0,") != std::string::npos);
}

TEST_CASE("run summaries expose the reproducibility fields") {
  BatchSpec spec;
  const GameResult game = play_game(spec, 12);
  const GameConfig cfg = make_config(spec);
  const json j =
      json::parse(run_summary_json(game.channel, cfg, game.trajectory, 12));
  CHECK(j["seed"] == 12);
  CHECK(j["generator"] == kGeneratorId);
  CHECK(j["users"] == 2);
  CHECK(j["carriers"] == 2);
  CHECK(j["m"] == 2);
  CHECK(j["scheme"] == "gauss-seidel");
  CHECK(j["converged"].is_boolean());
  CHECK(j["iterations"].is_number_integer());
  CHECK(j["final_profile"].is_array());
  CHECK(j["structure"].is_string());
  CHECK(j["gamma_star"].is_number());
  CHECK(j["p_max"] == 1000.0);
}

TEST_CASE("batch report JSON echoes the spec and nulls empty stats") {
  // Seed 26 is the no-equilibrium cycler: a one-game batch never converges,
  // so the iteration statistics have no support.
  BatchSpec spec;
  spec.n_games = 1;
  spec.base_seed = 26;
  const BatchReport rep = run_batch(spec);
  CHECK(rep.games_converged == 0);
  const json j = json::parse(batch_report_json(spec, rep));
  CHECK(j["spec"]["n_games"] == 1);
  CHECK(j["spec"]["base_seed"] == 26);
  CHECK(j["spec"]["scheme"] == "gauss-seidel");
  CHECK(j["generator"] == kGeneratorId);
  CHECK(j["games_run"] == 1);
  CHECK(j["games_converged"] == 0);
  CHECK(j["iteration_stats"].is_null());
  CHECK(j["structure_histogram"].is_object());
  CHECK(j["structure_histogram"].empty());
}

TEST_CASE("classify JSON reports all four verdicts in order") {
  GameConfig cfg(2);
  const ChannelRealization ch =
      testutil::make_2x2_uniform_g(2.0, 0.4, 2.0, 0.4, 0.1, 1.0);
  const ClassifyResult cls = classify_2x2(ch, cfg);
  const json j = json::parse(classify_json(ch, cfg, cls));
  REQUIRE(j["verdicts"].is_array());
  REQUIRE(j["verdicts"].size() == 4);
  CHECK(j["verdicts"][0]["label"] == "(12,)");
  CHECK(j["verdicts"][1]["label"] == "(,12)");
  CHECK(j["verdicts"][2]["label"] == "(1,2)");
  CHECK(j["verdicts"][3]["label"] == "(2,1)");
  CHECK(j["verdicts"][0]["admitted"] == true);
  CHECK(j["admitted"].size() == 1);
  CHECK(j["admitted"][0] == "(12,)");
  CHECK(j["gamma_star"].is_number());
}

TEST_CASE("lgdp report JSON nulls min_dot when nothing was sampled") {
  GameConfig cfg(2);
  Rng rng(2);
  const ChannelRealization ch = sample_channel(2, 2, 1.0, rng);
  const LgdpReport rep = check_lgdp(ch, cfg, 5, 0, 1e-3, 1);
  const json j = json::parse(lgdp_report_json(ch, rep, 1));
  CHECK(j["pairs_tested"] == 0);
  CHECK(j["min_dot"].is_null());
  const LgdpReport real = check_lgdp(ch, cfg, 5, 3, 1e-3, 1);
  const json j2 = json::parse(lgdp_report_json(ch, real, 1));
  CHECK(j2["min_dot"].is_number());
  CHECK(j2["violations"] == 0);
}

TEST_CASE("violation and anomaly dumps embed the channel for replay") {
  Rng rng(3);
  const ChannelRealization ch = sample_channel(2, 2, 1.0, rng);
  const PowerProfile a = PowerProfile::zeros(2, 2);
  const json v =
      json::parse(lgdp_violation_json(ch, a, a, a, -1.0));
  CHECK(v["kind"] == "lgdp-violation");
  CHECK(v["dot"] == -1.0);
  CHECK(v["channel"]["h"].is_array());
  const json an = json::parse(anomaly_json("nash-failure", 7, ch));
  CHECK(an["kind"] == "nash-failure");
  CHECK(an["seed"] == 7);
  CHECK(an["channel"]["sigma2"] == 1.0);
}

TEST_CASE("emit_trajectory writes the CSV to disk") {
  BatchSpec spec;
  const GameResult game = play_game(spec, 14);
  TempFile tmp;
  emit_trajectory(game.trajectory, tmp.path);
  const std::string content = read_text_file(tmp.path);
  CHECK(content.rfind("iter,user,carrier,power\n", 0) == 0);
  CHECK(content == trajectory_csv(game.trajectory));
}
