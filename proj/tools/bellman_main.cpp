#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bellman/campaign.hpp"
#include "bellman/errors.hpp"

namespace {

using namespace bellman;

constexpr int kUsageError = 1;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(path + ": cannot open output file");
  out << text;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream in(csv);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t env_seed(std::uint64_t fallback) {
  const char* raw = std::getenv("BELLMAN_SEED");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw ConfigError(std::string("BELLMAN_SEED is not an unsigned integer: ") + raw);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-instance verification of operator Bellman inequalities and their reverses"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials, jobs;
  std::string checks, out_path, format;
  std::optional<double> tol_abs, tol_rel;

  auto* run = app.add_subcommand("run", "run a random campaign");
  run->add_option("--config", config_path, "JSON configuration file");
  run->add_option("--seed", seed, "campaign seed");
  run->add_option("--trials", trials, "trials per check");
  run->add_option("--checks", checks, "comma-separated check ids");
  run->add_option("--out", out_path, "report path (default stdout)");
  run->add_option("--format", format, "json, csv or text");
  run->add_option("--tol-abs", tol_abs, "absolute tolerance");
  run->add_option("--tol-rel", tol_rel, "relative tolerance");
  run->add_option("--jobs", jobs, "worker threads");

  auto* constants = app.add_subcommand("constants", "closed-form constants against the numerical oracle");
  constants->add_option("--config", config_path, "JSON configuration file (grids)");
  constants->add_option("--out", out_path, "report path (default stdout)");
  constants->add_option("--format", format, "json, csv or text");

  std::string witness_path;
  auto* replay_cmd = app.add_subcommand("replay", "re-run a check from a witness file");
  replay_cmd->add_option("witness", witness_path, "witness JSON")->required();

  auto* list = app.add_subcommand("list", "print the check registry");
  list->add_option("--format", format, "json or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*run || *constants) {
      bool seed_given = false;
      CampaignConfig cfg = config_path.empty() ? CampaignConfig{} : load_config(config_path, &seed_given);
      if (seed) {
        cfg.seed = *seed;
      } else if (!seed_given) {
        cfg.seed = env_seed(cfg.seed);
      }
      if (trials) cfg.trials = *trials;
      if (jobs) cfg.jobs = *jobs;
      if (!checks.empty()) cfg.checks = split_list(checks);
      if (!out_path.empty()) cfg.out_path = out_path;
      if (!format.empty()) cfg.format = format_from_string(format);
      if (tol_abs) cfg.tolerance.atol = *tol_abs;
      if (tol_rel) cfg.tolerance.rtol = *tol_rel;
      validate(cfg);

      if (*constants) {
        const ConstantsReport report = verify_constants(cfg);
        emit(render(report, cfg.format), cfg.out_path);
        return report.ok ? 0 : 2;
      }
      const auto start = std::chrono::steady_clock::now();
      const CampaignReport report = run_campaign(cfg);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit(render(report, cfg.format), cfg.out_path);
      std::cerr << "campaign finished in " << seconds << " s, " << report.violations << " violation(s)\n";
      return exit_code(report);
    }

    if (*replay_cmd) {
      std::ifstream in(witness_path, std::ios::binary);
      if (!in) throw ConfigError(witness_path + ": cannot open witness file");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw SchemaError(witness_path + ": malformed JSON: " + e.what());
      }
      const Witness w = witness_from_json(j);
      const Replay r = replay(w);
      Json out = to_json(r.outcome);
      out["recorded_slack"] = w.recorded.slack;
      out["slack_diff"] = r.slack_diff;
      out["reproduced"] = r.reproduced;
      std::cout << out.dump(2) << "\n";
      if (!r.reproduced) return kUsageError;
      return r.outcome.status == Status::violated ? 2 : 0;
    }

    if (*list) {
      if (format.empty() || format == "json") {
        std::cout << registry_json().dump(2) << "\n";
      } else if (format == "text") {
        for (const auto& info : registry()) {
          std::cout << info.id << "  [" << to_string(info.group) << "]  " << info.statement << "\n";
        }
      } else {
        throw ConfigError("list supports json or text output");
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
