#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellman/inequalities.hpp"
#include "bellman/serialize.hpp"

namespace bellman {

enum class Format { json, csv, text };

std::string to_string(Format format);
Format format_from_string(std::string_view name);

struct CampaignConfig {
  int trials = 1000;  // per check, spread round-robin over its cells
  std::vector<int> dims{1, 2, 3, 4, 5, 6};
  std::vector<int> n_values{1, 2, 3};
  std::vector<std::pair<double, double>> intervals{{0.1, 0.9}, {0.5, 2.0}, {0.25, 4.0}};
  std::vector<double> p_grid{0.25, 0.5, 0.75};
  std::vector<double> lambda_grid{0.3, 0.7};
  std::vector<std::string> means{"geom:0.5", "arith:0.3", "geom:0.25"};
  std::vector<std::string> maps{"id", "compress:2", "unitary-mix:3", "pinch:2", "block-avg:2", "weighted:2"};
  std::vector<std::string> checks;  // empty: every registered check
  std::uint64_t seed = 20240917;
  Tolerance tolerance;
  std::string out_path;  // empty: stdout
  Format format = Format::json;
  double margin = 1e-6;
  int max_rejects = 1000;
  int jobs = 1;
  int max_witnesses = 3;  // violation witnesses embedded per cell
};

/// Throws ConfigError describing the first invalid field.
void validate(const CampaignConfig& cfg);

/// Every configured check id, or the full registry when none are listed.
std::vector<std::string> selected_checks(const CampaignConfig& cfg);

Json to_json(const CampaignConfig& cfg);

/// Parses JSON text, fills defaults and validates. Errors are ConfigError
/// with "source:line: message"; unknown keys are rejected. seed_given
/// reports whether the text set the seed explicitly.
CampaignConfig parse_config(std::string_view text, std::string_view source = "config", bool* seed_given = nullptr);
CampaignConfig load_config(const std::string& path, bool* seed_given = nullptr);

struct CellReport {
  CheckParams params;
  int trials = 0;
  int holds = 0;
  int violations = 0;
  int not_applicable = 0;
  std::optional<double> min_slack;
  std::optional<double> median_normalized_slack;
  int argmin_trial = -1;
  std::uint64_t argmin_subseed = 0;
  std::map<std::string, int> guards;
  std::map<std::string, double> min_link_slack;
  std::vector<Witness> witnesses;
};

struct CheckReport {
  CheckInfo info;
  std::vector<CellReport> cells;
  std::map<std::string, int> skipped_cells;  // reason -> count
  int trials = 0;
  int holds = 0;
  int violations = 0;
  int not_applicable = 0;
  std::optional<double> min_slack;
  std::string warning;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<CheckReport> checks;
  int violations = 0;
};

/// Parameter cells of one check: the product of the axes it reads. Cells the
/// statement cannot host are counted in `skipped` by reason.
std::vector<CheckParams> cells_for(const CheckInfo& info, const CampaignConfig& cfg,
                                   std::map<std::string, int>* skipped = nullptr);

/// Subseed of trial `trial` of check `id`; independent of check order.
std::uint64_t trial_seed(std::uint64_t seed, std::string_view id, int trial);

/// Runs every selected check. Deterministic for a fixed config regardless
/// of cfg.jobs.
CampaignReport run_campaign(const CampaignConfig& cfg);

/// 0 when nothing was violated, 2 otherwise.
int exit_code(const CampaignReport& report);

Json to_json(const CampaignReport& report);
std::string to_csv(const CampaignReport& report);
std::string to_text(const CampaignReport& report);
std::string render(const CampaignReport& report, Format format);

// -- constant verification ------------------------------------------------------

struct ConstantRow {
  std::string name;
  Json params;
  double closed_form = 0.0;
  double oracle = 0.0;
  double rel_diff = 0.0;
  bool ok = true;
};

struct ConstantsReport {
  std::vector<ConstantRow> rows;
  double threshold = 1e-9;
  double max_rel_diff = 0.0;
  bool ok = true;
};

/// Closed forms against the grid + golden-section oracle over the config's
/// intervals, p_grid and lambda_grid.
ConstantsReport verify_constants(const CampaignConfig& cfg, double threshold = 1e-9);

Json to_json(const ConstantsReport& report);
std::string render(const ConstantsReport& report, Format format);

/// Registry as JSON: id, group, statement, hypothesis, axes.
Json registry_json();

}  // namespace bellman
