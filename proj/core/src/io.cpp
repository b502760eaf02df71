#include "carriergame/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "carriergame/rng.hpp"

namespace carriergame {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed on " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failed on " + path);
}

namespace {

json channel_json(const ChannelRealization& ch) {
  json j;
  j["n_users"] = ch.n_users;
  j["n_carriers"] = ch.n_carriers;
  j["sigma2"] = ch.sigma2;
  j["h"] = ch.h;
  j["g"] = ch.g;
  if (ch.seed) j["seed"] = *ch.seed;
  if (ch.generator) j["generator"] = *ch.generator;
  return j;
}

json profile_json(const PowerProfile& prof) { return json(prof.p); }

// snprintf keeps CSV numbers round-trip exact without dragging iostream
// locale state into the format.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string channel_to_json(const ChannelRealization& ch) {
  return channel_json(ch).dump(2);
}

ChannelRealization channel_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad channel JSON: ") + e.what());
  }
  try {
    const auto h = j.at("h").get<std::vector<std::vector<double>>>();
    const auto g =
        j.at("g").get<std::vector<std::vector<std::vector<double>>>>();
    const double sigma2 = j.at("sigma2").get<double>();
    ChannelRealization ch = from_gains(h, g, sigma2);
    if (j.at("n_users").get<int>() != ch.n_users ||
        j.at("n_carriers").get<int>() != ch.n_carriers) {
      throw ParseError("declared dimensions disagree with gain shapes");
    }
    if (j.contains("seed")) ch.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("generator")) {
      ch.generator = j["generator"].get<std::string>();
    }
    return ch;
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad channel JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad channel JSON: ") + e.what());
  }
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "iter,user,carrier,power\n";
  for (std::size_t i = 0; i < traj.profiles.size(); ++i) {
    const PowerProfile& prof = traj.profiles[i];
    for (int k = 0; k < prof.n_users(); ++k) {
      for (int l = 0; l < prof.n_carriers(); ++l) {
        out += std::to_string(i);
        out += ',';
        out += std::to_string(k);
        out += ',';
        out += std::to_string(l);
        out += ',';
        out += fmt(prof.p[k][l]);
        out += '\n';
      }
    }
  }
  return out;
}

std::string state_csv(long long game_id, const ChannelRealization& ch,
                      const GameConfig& cfg, const Trajectory& traj) {
  std::string out = "game_id,iter,user,carrier,power,sinr,utility\n";
  for (std::size_t i = 0; i < traj.profiles.size(); ++i) {
    const PowerProfile& prof = traj.profiles[i];
    for (int k = 0; k < prof.n_users(); ++k) {
      const double u = utility(ch, prof, cfg, k);
      for (int l = 0; l < prof.n_carriers(); ++l) {
        out += std::to_string(game_id);
        out += ',';
        out += std::to_string(i);
        out += ',';
        out += std::to_string(k);
        out += ',';
        out += std::to_string(l);
        out += ',';
        out += fmt(prof.p[k][l]);
        out += ',';
        out += fmt(sinr(ch, prof, k, l));
        out += ',';
        out += fmt(u);
        out += '\n';
      }
    }
  }
  return out;
}

std::string run_summary_json(const ChannelRealization& ch,
                             const GameConfig& cfg, const Trajectory& traj,
                             std::uint64_t seed) {
  json j;
  j["seed"] = seed;
  j["generator"] = kGeneratorId;
  j["users"] = ch.n_users;
  j["carriers"] = ch.n_carriers;
  j["sigma2"] = ch.sigma2;
  j["m"] = cfg.efficiency.m();
  j["gamma_star"] = cfg.gamma_star.value;
  j["p_max"] = cfg.p_max;
  j["rate"] = cfg.rate;
  j["scheme"] = to_string(cfg.scheme);
  j["converged"] = traj.converged;
  j["iterations"] = traj.iterations;
  j["clamped"] = traj.clamped_ever;
  j["tie"] = traj.tie_ever;
  j["final_profile"] = profile_json(traj.profiles.back());
  j["structure"] =
      structure_label(traj.carrier_assignments.back(), ch.n_carriers);
  return j.dump(2);
}

namespace {

json parsed_or_string(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) return json(text);
  return j;
}

}  // namespace

std::string batch_report_json(const BatchSpec& spec,
                              const BatchReport& report) {
  json j;
  j["spec"]["n_games"] = spec.n_games;
  j["spec"]["n_users"] = spec.n_users;
  j["spec"]["n_carriers"] = spec.n_carriers;
  j["spec"]["sigma2"] = spec.sigma2;
  j["spec"]["p_max"] = spec.p_max;
  j["spec"]["initial_power"] = spec.initial_power;
  j["spec"]["scheme"] = to_string(spec.scheme);
  j["spec"]["m"] = spec.m;
  j["spec"]["base_seed"] = spec.base_seed;
  j["generator"] = kGeneratorId;
  j["games_run"] = report.games_run;
  j["games_converged"] = report.games_converged;
  j["games_clamped"] = report.games_clamped;
  j["games_tied"] = report.games_tied;
  j["nash_checked"] = report.nash_checked;
  j["nash_failed"] = report.nash_failed;
  j["audit_games"] = report.audit_games;
  j["audit_structure_mismatches"] = report.audit_structure_mismatches;
  j["lgdp_violations"] = report.lgdp_violations;
  j["structure_histogram"] = report.structure_histogram;
  if (report.games_converged > 0) {
    json s;
    s["min"] = report.iteration_stats.min;
    s["max"] = report.iteration_stats.max;
    s["mean"] = report.iteration_stats.mean;
    s["p50"] = report.iteration_stats.p50;
    s["p90"] = report.iteration_stats.p90;
    s["p99"] = report.iteration_stats.p99;
    j["iteration_stats"] = s;
  } else {
    j["iteration_stats"] = nullptr;
  }
  j["anomalies"] = json::array();
  for (const auto& a : report.anomalies) {
    j["anomalies"].push_back(parsed_or_string(a));
  }
  return j.dump(2);
}

std::string classify_json(const ChannelRealization& ch, const GameConfig& cfg,
                          const ClassifyResult& result) {
  json j;
  j["channel"] = channel_json(ch);
  j["m"] = cfg.efficiency.m();
  j["gamma_star"] = cfg.gamma_star.value;
  j["p_max"] = cfg.p_max;
  j["admitted"] = json::array();
  for (const auto& s : result.admitted) j["admitted"].push_back(s.label);
  j["verdicts"] = json::array();
  for (const auto& v : result.verdicts) {
    json vj;
    vj["label"] = v.structure.label;
    vj["assignment"] = v.structure.assignment;
    vj["admitted"] = v.admitted;
    vj["feasible"] = v.feasible;
    vj["infeasible_reason"] = to_string(v.infeasible_reason);
    vj["rejected_by"] = v.rejected_by;
    if (v.feasible) vj["powers"] = profile_json(v.powers);
    j["verdicts"].push_back(vj);
  }
  return j.dump(2);
}

std::string lgdp_report_json(const ChannelRealization& ch,
                             const LgdpReport& report, std::uint64_t seed) {
  json j;
  j["channel"] = channel_json(ch);
  j["seed"] = seed;
  j["generator"] = kGeneratorId;
  j["delta"] = report.delta;
  j["points_tested"] = report.points_tested;
  j["pairs_tested"] = report.pairs_tested;
  j["violations"] = report.violations;
  if (report.pairs_tested > 0) {
    j["min_dot"] = report.min_dot;
  } else {
    j["min_dot"] = nullptr;
  }
  j["dumps"] = json::array();
  for (const auto& d : report.dumps) j["dumps"].push_back(parsed_or_string(d));
  return j.dump(2);
}

std::string lgdp_violation_json(const ChannelRealization& ch,
                                const PowerProfile& a, const PowerProfile& b,
                                const PowerProfile& c, double dot) {
  json j;
  j["kind"] = "lgdp-violation";
  j["channel"] = channel_json(ch);
  j["a"] = profile_json(a);
  j["b"] = profile_json(b);
  j["c"] = profile_json(c);
  j["dot"] = dot;
  return j.dump();
}

std::string anomaly_json(const std::string& kind, std::uint64_t seed,
                         const ChannelRealization& ch) {
  json j;
  j["kind"] = kind;
  j["seed"] = seed;
  j["channel"] = channel_json(ch);
  return j.dump();
}

}  // namespace carriergame
