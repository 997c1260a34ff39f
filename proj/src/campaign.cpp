#include "bellman/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "bellman/constants.hpp"
#include "bellman/errors.hpp"
#include "bellman/means.hpp"

#ifndef BELLMAN_VERSION
#define BELLMAN_VERSION "0.0.0"
#endif

namespace bellman {

namespace {

using Problem = std::optional<std::pair<std::string, std::string>>;

template <class T, class Pred>
bool all_of(const std::vector<T>& v, Pred pred) {
  return std::all_of(v.begin(), v.end(), pred);
}

Problem first_problem(const CampaignConfig& cfg) {
  auto bad = [](const char* key, std::string msg) -> Problem { return std::make_pair(std::string(key), msg); };
  if (cfg.trials < 1) return bad("trials", "must be >= 1");
  if (cfg.dims.empty() || !all_of(cfg.dims, [](int d) { return d >= 1 && d <= 64; })) {
    return bad("dims", "must be a nonempty list of integers in [1, 64]");
  }
  if (cfg.n_values.empty() || !all_of(cfg.n_values, [](int n) { return n >= 1 && n <= 32; })) {
    return bad("n_values", "must be a nonempty list of integers in [1, 32]");
  }
  if (cfg.intervals.empty() || !all_of(cfg.intervals, [](const auto& iv) {
        return std::isfinite(iv.first) && std::isfinite(iv.second) && iv.first >= 0.0 && iv.first < iv.second;
      })) {
    return bad("intervals", "must be a nonempty list of [m, M] with 0 <= m < M");
  }
  if (cfg.p_grid.empty() || !all_of(cfg.p_grid, [](double p) { return p > 0.0 && p < 1.0; })) {
    return bad("p_grid", "values must lie in (0, 1)");
  }
  if (cfg.lambda_grid.empty() || !all_of(cfg.lambda_grid, [](double l) { return l > 0.0 && l < 1.0; })) {
    return bad("lambda_grid", "values must lie in (0, 1)");
  }
  if (cfg.means.empty()) return bad("means", "must be nonempty");
  for (const auto& id : cfg.means) {
    try {
      MeanSpec::parse(id);
    } catch (const Error& e) {
      return bad("means", "'" + id + "' is not a mean: " + e.what());
    }
  }
  if (cfg.maps.empty()) return bad("maps", "must be nonempty");
  for (const auto& id : cfg.maps) {
    try {
      Rng rng(0);
      random_map(id, 2, rng);
    } catch (const Error& e) {
      return bad("maps", e.what());
    }
  }
  for (const auto& id : cfg.checks) {
    try {
      check_info(id);
    } catch (const Error& e) {
      return bad("checks", e.what());
    }
  }
  try {
    validate(cfg.tolerance);
  } catch (const Error& e) {
    return bad("tolerance", e.what());
  }
  if (!(cfg.margin > 0.0)) return bad("margin", "must be positive");
  if (cfg.max_rejects < 1) return bad("max_rejects", "must be >= 1");
  if (cfg.jobs < 1 || cfg.jobs > 256) return bad("jobs", "must lie in [1, 256]");
  if (cfg.max_witnesses < 0) return bad("max_witnesses", "must be >= 0");
  return std::nullopt;
}

int line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

int line_of_key(std::string_view text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  return pos == std::string_view::npos ? 1 : line_of(text, pos);
}

template <class T>
T read(const Json& j, const char* key) {
  return j.at(key).get<T>();
}

std::string number_text(double x) {
  if (!std::isfinite(x)) return "nan";
  return format_number(x);
}

Json optional_number(const std::optional<double>& x) {
  return x && std::isfinite(*x) ? Json(*x) : Json(nullptr);
}

Json cell_params(const CheckInfo& info, const CheckParams& par) {
  Json out{{"dim", par.dim}};
  if (info.axes.n) out["n"] = par.n;
  if (info.axes.interval) out["interval"] = Json::array({par.m, par.M});
  if (info.axes.p) out["p"] = par.p;
  if (info.axes.lambda) out["lambda"] = par.lambda;
  if (info.axes.mean) out["mean"] = par.mean;
  if (info.axes.map) out["map"] = par.map;
  if (info.axes.k) out["k"] = par.k;
  return out;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct TrialResult {
  int cell = 0;
  std::uint64_t subseed = 0;
  CheckOutcome outcome;
  std::optional<Witness> witness;
};

TrialResult run_trial(const std::string& id, const std::vector<CheckParams>& cells, const CampaignConfig& cfg,
                      int trial) {
  TrialResult r;
  r.cell = trial % static_cast<int>(cells.size());
  r.subseed = trial_seed(cfg.seed, id, trial);
  const CheckParams& par = cells[r.cell];
  Rng rng(r.subseed);
  Generated g = generate(id, par, rng, GenOptions{cfg.margin, cfg.max_rejects});
  if (auto* rej = std::get_if<Rejection>(&g)) {
    r.outcome.id = id;
    r.outcome.status = Status::not_applicable;
    r.outcome.guard = "generator_rejected";
    (void)rej;
    return r;
  }
  auto& inst = std::get<InstanceFamily>(g);
  inst.subseed = r.subseed;
  r.outcome = check(id, inst, par, cfg.tolerance);
  if (r.outcome.status == Status::violated) r.witness = Witness{id, par, cfg.tolerance, std::move(inst), r.outcome};
  return r;
}

std::vector<TrialResult> run_trials(const std::string& id, const std::vector<CheckParams>& cells,
                                    const CampaignConfig& cfg) {
  std::vector<TrialResult> results(cfg.trials);
  const int workers = std::min(cfg.jobs, cfg.trials);
  if (workers <= 1) {
    for (int k = 0; k < cfg.trials; ++k) results[k] = run_trial(id, cells, cfg, k);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int k = next++; k < cfg.trials; k = next++) results[k] = run_trial(id, cells, cfg, k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

CheckReport fold(const CheckInfo& info, std::vector<CheckParams> cells, std::map<std::string, int> skipped,
                 std::vector<TrialResult> results, const CampaignConfig& cfg) {
  CheckReport rep;
  rep.info = info;
  rep.skipped_cells = std::move(skipped);
  rep.cells.resize(cells.size());
  std::vector<std::vector<double>> normalized(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) rep.cells[c].params = cells[c];

  for (int k = 0; k < static_cast<int>(results.size()); ++k) {
    TrialResult& r = results[k];
    CellReport& cell = rep.cells[r.cell];
    ++cell.trials;
    const CheckOutcome& out = r.outcome;
    if (out.status == Status::not_applicable) {
      ++cell.not_applicable;
      ++cell.guards[out.guard];
      continue;
    }
    if (out.status == Status::holds) {
      ++cell.holds;
    } else {
      ++cell.violations;
      if (r.witness && static_cast<int>(cell.witnesses.size()) < cfg.max_witnesses) {
        cell.witnesses.push_back(std::move(*r.witness));
      }
    }
    if (!cell.min_slack || out.slack < *cell.min_slack) {
      cell.min_slack = out.slack;
      cell.argmin_trial = k;
      cell.argmin_subseed = r.subseed;
    }
    normalized[r.cell].push_back(out.normalized_slack());
    for (const auto& l : out.links) {
      auto it = cell.min_link_slack.find(l.name);
      if (it == cell.min_link_slack.end()) {
        cell.min_link_slack.emplace(l.name, l.slack);
      } else {
        it->second = std::min(it->second, l.slack);
      }
    }
  }

  for (std::size_t c = 0; c < cells.size(); ++c) {
    CellReport& cell = rep.cells[c];
    if (!normalized[c].empty()) cell.median_normalized_slack = median(normalized[c]);
    rep.trials += cell.trials;
    rep.holds += cell.holds;
    rep.violations += cell.violations;
    rep.not_applicable += cell.not_applicable;
    if (cell.min_slack && (!rep.min_slack || *cell.min_slack < *rep.min_slack)) rep.min_slack = cell.min_slack;
  }
  if (cells.empty()) {
    rep.warning = "no parameter cell is compatible with this check";
  } else if (2 * rep.not_applicable > rep.trials) {
    rep.warning = "more than half of the trials were not applicable; generator needs tuning for this grid";
  }
  return rep;
}

}  // namespace

std::string to_string(Format format) {
  switch (format) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "?";
}

Format format_from_string(std::string_view name) {
  for (auto f : {Format::json, Format::csv, Format::text}) {
    if (to_string(f) == name) return f;
  }
  throw ConfigError("format must be json, csv or text, got '" + std::string(name) + "'");
}

void validate(const CampaignConfig& cfg) {
  if (auto problem = first_problem(cfg)) throw ConfigError(problem->first + ": " + problem->second);
}

std::vector<std::string> selected_checks(const CampaignConfig& cfg) {
  if (!cfg.checks.empty()) return cfg.checks;
  std::vector<std::string> ids;
  for (const auto& info : registry()) ids.push_back(info.id);
  return ids;
}

Json to_json(const CampaignConfig& cfg) {
  Json intervals = Json::array();
  for (const auto& [m, M] : cfg.intervals) intervals.push_back(Json::array({m, M}));
  return Json{{"trials", cfg.trials},
              {"dims", cfg.dims},
              {"n_values", cfg.n_values},
              {"intervals", intervals},
              {"p_grid", cfg.p_grid},
              {"lambda_grid", cfg.lambda_grid},
              {"means", cfg.means},
              {"maps", cfg.maps},
              {"checks", cfg.checks},
              {"seed", cfg.seed},
              {"tolerance", to_json(cfg.tolerance)},
              {"out_path", cfg.out_path},
              {"format", to_string(cfg.format)},
              {"margin", cfg.margin},
              {"max_rejects", cfg.max_rejects},
              {"jobs", cfg.jobs},
              {"max_witnesses", cfg.max_witnesses}};
}

CampaignConfig parse_config(std::string_view text, std::string_view source, bool* seed_given) {
  if (seed_given) *seed_given = false;
  CampaignConfig cfg;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return cfg;

  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ConfigError(std::string(source) + ":" + std::to_string(line_of(text, at)) + ": malformed JSON");
  }
  if (!j.is_object()) throw ConfigError(std::string(source) + ":1: configuration must be a JSON object");

  const std::string src(source);
  auto fail = [&](const std::string& key, const std::string& msg) {
    throw ConfigError(src + ":" + std::to_string(line_of_key(text, key)) + ": " + key + ": " + msg);
  };

  static const std::set<std::string> known{"trials", "dims",  "n_values",  "intervals", "p_grid",
                                           "lambda_grid", "means", "maps",      "checks",    "seed",
                                           "tolerance",   "out_path", "format", "margin",    "max_rejects",
                                           "jobs",        "max_witnesses"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) fail(key, "unknown key");
    try {
      if (key == "trials") cfg.trials = read<int>(j, "trials");
      if (key == "dims") cfg.dims = read<std::vector<int>>(j, "dims");
      if (key == "n_values") cfg.n_values = read<std::vector<int>>(j, "n_values");
      if (key == "intervals") {
        cfg.intervals.clear();
        for (const auto& iv : value) {
          if (!iv.is_array() || iv.size() != 2) fail(key, "each interval must be [m, M]");
          cfg.intervals.emplace_back(iv[0].get<double>(), iv[1].get<double>());
        }
      }
      if (key == "p_grid") cfg.p_grid = read<std::vector<double>>(j, "p_grid");
      if (key == "lambda_grid") cfg.lambda_grid = read<std::vector<double>>(j, "lambda_grid");
      if (key == "means") cfg.means = read<std::vector<std::string>>(j, "means");
      if (key == "maps") cfg.maps = read<std::vector<std::string>>(j, "maps");
      if (key == "checks") cfg.checks = read<std::vector<std::string>>(j, "checks");
      if (key == "seed") {
        if (!value.is_number_unsigned()) fail(key, "must be a nonnegative integer");
        cfg.seed = value.get<std::uint64_t>();
        if (seed_given) *seed_given = true;
      }
      if (key == "tolerance") {
        if (!value.is_object()) fail(key, "must be an object with atol and rtol");
        for (const auto& [tk, tv] : value.items()) {
          if (tk != "atol" && tk != "rtol") fail(key, "unknown field '" + tk + "'");
        }
        if (value.contains("atol")) cfg.tolerance.atol = value.at("atol").get<double>();
        if (value.contains("rtol")) cfg.tolerance.rtol = value.at("rtol").get<double>();
      }
      if (key == "out_path") cfg.out_path = read<std::string>(j, "out_path");
      if (key == "format") cfg.format = format_from_string(read<std::string>(j, "format"));
      if (key == "margin") cfg.margin = read<double>(j, "margin");
      if (key == "max_rejects") cfg.max_rejects = read<int>(j, "max_rejects");
      if (key == "jobs") cfg.jobs = read<int>(j, "jobs");
      if (key == "max_witnesses") cfg.max_witnesses = read<int>(j, "max_witnesses");
    } catch (const Json::exception&) {
      fail(key, "wrong type");
    } catch (const ConfigError& e) {
      if (std::string_view(e.what()).starts_with(src + ":")) throw;
      fail(key, e.what());
    }
  }
  if (auto problem = first_problem(cfg)) fail(problem->first, problem->second);
  return cfg;
}

CampaignConfig load_config(const std::string& path, bool* seed_given) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open configuration file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path, seed_given);
}

std::vector<CheckParams> cells_for(const CheckInfo& info, const CampaignConfig& cfg,
                                   std::map<std::string, int>* skipped) {
  const Axes& ax = info.axes;
  const CheckParams base;
  const std::vector<int> ns = ax.n ? cfg.n_values : std::vector<int>{1};
  const auto intervals = ax.interval ? cfg.intervals : std::vector<std::pair<double, double>>{{base.m, base.M}};
  const std::vector<double> ps = ax.p ? cfg.p_grid : std::vector<double>{base.p};
  const std::vector<double> lambdas = ax.lambda ? cfg.lambda_grid : std::vector<double>{base.lambda};
  const std::vector<std::string> means = ax.mean ? cfg.means : std::vector<std::string>{base.mean};
  const std::vector<std::string> maps = ax.map ? cfg.maps : std::vector<std::string>{base.map};

  std::vector<CheckParams> cells;
  // dim varies fastest so that a short campaign still sweeps every dimension
  for (int n : ns) {
    for (const auto& [m, M] : intervals) {
      for (double p : ps) {
        for (double lambda : lambdas) {
          for (const auto& mean : means) {
            for (const auto& map : maps) {
              const int k_max = ax.k ? std::max(1, n - 1) : 1;
              for (int k = 1; k <= k_max; ++k) {
                for (int dim : cfg.dims) {
                  CheckParams par{dim, n, m, M, p, lambda, mean, map, k};
                  if (auto reason = incompatible(info.id, par)) {
                    if (skipped) ++(*skipped)[*reason];
                    continue;
                  }
                  cells.push_back(std::move(par));
                }
              }
            }
          }
        }
      }
    }
  }
  return cells;
}

std::uint64_t trial_seed(std::uint64_t seed, std::string_view id, int trial) {
  return derive_seed(seed ^ fnv1a(id), static_cast<std::uint64_t>(trial));
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  CampaignReport report;
  report.config = cfg;
  for (const auto& id : selected_checks(cfg)) {
    const CheckInfo& info = check_info(id);
    std::map<std::string, int> skipped;
    std::vector<CheckParams> cells = cells_for(info, cfg, &skipped);
    std::vector<TrialResult> results;
    if (!cells.empty()) results = run_trials(id, cells, cfg);
    report.checks.push_back(fold(info, std::move(cells), std::move(skipped), std::move(results), cfg));
    report.violations += report.checks.back().violations;
  }
  return report;
}

int exit_code(const CampaignReport& report) { return report.violations > 0 ? 2 : 0; }

Json to_json(const CampaignReport& report) {
  Json config = to_json(report.config);
  // I/O and scheduling settings do not change results
  config.erase("out_path");
  config.erase("format");
  config.erase("jobs");

  Json checks = Json::array();
  int trials = 0, holds = 0, na = 0;
  for (const auto& rep : report.checks) {
    trials += rep.trials;
    holds += rep.holds;
    na += rep.not_applicable;
    Json cells = Json::array();
    for (const auto& cell : rep.cells) {
      Json c{{"params", cell_params(rep.info, cell.params)},
             {"trials", cell.trials},
             {"holds", cell.holds},
             {"violations", cell.violations},
             {"not_applicable", cell.not_applicable},
             {"min_slack", optional_number(cell.min_slack)},
             {"median_normalized_slack", optional_number(cell.median_normalized_slack)}};
      c["argmin"] = cell.argmin_trial >= 0 ? Json{{"trial", cell.argmin_trial}, {"subseed", cell.argmin_subseed}}
                                           : Json(nullptr);
      if (!cell.guards.empty()) c["guards"] = cell.guards;
      if (!cell.min_link_slack.empty()) c["min_link_slack"] = cell.min_link_slack;
      if (!cell.witnesses.empty()) {
        Json w = Json::array();
        for (const auto& x : cell.witnesses) w.push_back(to_json(x));
        c["witnesses"] = std::move(w);
      }
      cells.push_back(std::move(c));
    }
    Json r{{"id", rep.info.id},
           {"group", to_string(rep.info.group)},
           {"statement", rep.info.statement},
           {"hypothesis", rep.info.hypothesis},
           {"trials", rep.trials},
           {"holds", rep.holds},
           {"violations", rep.violations},
           {"not_applicable", rep.not_applicable},
           {"min_slack", optional_number(rep.min_slack)},
           {"skipped_cells", rep.skipped_cells},
           {"cells", std::move(cells)}};
    if (!rep.warning.empty()) r["warning"] = rep.warning;
    checks.push_back(std::move(r));
  }
  return Json{{"tool", "bellman"},
              {"version", BELLMAN_VERSION},
              {"config", std::move(config)},
              {"summary",
               {{"checks", report.checks.size()},
                {"trials", trials},
                {"holds", holds},
                {"violations", report.violations},
                {"not_applicable", na}}},
              {"checks", std::move(checks)}};
}

std::string to_csv(const CampaignReport& report) {
  std::ostringstream out;
  out << "check,group,dim,n,m,M,p,lambda,mean,map,k,trials,holds,violations,not_applicable,min_slack,"
         "median_normalized_slack\n";
  for (const auto& rep : report.checks) {
    const Axes& ax = rep.info.axes;
    for (const auto& cell : rep.cells) {
      const CheckParams& p = cell.params;
      out << rep.info.id << ',' << to_string(rep.info.group) << ',' << p.dim << ',';
      out << (ax.n ? std::to_string(p.n) : "") << ',';
      out << (ax.interval ? number_text(p.m) : "") << ',' << (ax.interval ? number_text(p.M) : "") << ',';
      out << (ax.p ? number_text(p.p) : "") << ',' << (ax.lambda ? number_text(p.lambda) : "") << ',';
      out << (ax.mean ? p.mean : "") << ',' << (ax.map ? p.map : "") << ',' << (ax.k ? std::to_string(p.k) : "")
          << ',';
      out << cell.trials << ',' << cell.holds << ',' << cell.violations << ',' << cell.not_applicable << ',';
      out << (cell.min_slack ? number_text(*cell.min_slack) : "") << ',';
      out << (cell.median_normalized_slack ? number_text(*cell.median_normalized_slack) : "") << '\n';
    }
  }
  return out.str();
}

std::string to_text(const CampaignReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-22s %-8s %7s %7s %6s %6s %6s %12s\n", "check", "group", "cells", "trials", "holds",
                "viol", "n/a", "min_slack");
  out << line;
  for (const auto& rep : report.checks) {
    std::snprintf(line, sizeof line, "%-22s %-8s %7zu %7d %6d %6d %6d %12.3g\n", rep.info.id.c_str(),
                  to_string(rep.info.group).c_str(), rep.cells.size(), rep.trials, rep.holds, rep.violations,
                  rep.not_applicable, rep.min_slack ? *rep.min_slack : std::nan(""));
    out << line;
    if (!rep.warning.empty()) out << "  warning: " << rep.warning << '\n';
  }
  out << (report.violations ? "VIOLATIONS: " + std::to_string(report.violations) : std::string("no violations"))
      << '\n';
  return out.str();
}

std::string render(const CampaignReport& report, Format format) {
  switch (format) {
    case Format::json: return to_json(report).dump(2) + "\n";
    case Format::csv: return to_csv(report);
    case Format::text: return to_text(report);
  }
  return {};
}

ConstantsReport verify_constants(const CampaignConfig& cfg, double threshold) {
  ConstantsReport report;
  report.threshold = threshold;
  auto add = [&](std::string name, Json params, double closed, double oracle) {
    ConstantRow row{std::move(name), std::move(params), closed, oracle, 0.0, true};
    const double scale = std::max(std::abs(closed), std::abs(oracle));
    row.rel_diff = scale > 0.0 ? std::abs(closed - oracle) / scale : 0.0;
    row.ok = row.rel_diff <= threshold && std::isfinite(closed) && std::isfinite(oracle);
    report.max_rel_diff = std::max(report.max_rel_diff, row.rel_diff);
    report.ok = report.ok && row.ok;
    report.rows.push_back(std::move(row));
  };

  auto intervals = cfg.intervals;
  if (std::find(intervals.begin(), intervals.end(), std::make_pair(0.0, 1.0)) == intervals.end()) {
    intervals.emplace_back(0.0, 1.0);
  }
  for (const auto& [m, M] : intervals) {
    const Json iv = Json::array({m, M});
    if (m > 0.0) {
      for (double lambda : cfg.lambda_grid) {
        add("gamma_affine", {{"interval", iv}, {"lambda", lambda}}, 1.0,
            ratio_constant(RepresentingFunction::arithmetic(lambda), m, M).value);
      }
      const auto log_form = log_gap_constant(m, M);
      const auto log_oracle = gap_constant(RepresentingFunction::log(), m, M);
      add("beta_log", {{"interval", iv}}, log_form.value, log_oracle.value);
      add("beta_log_argmax", {{"interval", iv}}, log_form.argmax, log_oracle.argmax);
    }
    for (double p : cfg.p_grid) {
      const Json par{{"interval", iv}, {"p", p}};
      if (m > 0.0) {
        add("gamma_power", par, power_ratio_constant(m, M, p).value,
            ratio_constant(RepresentingFunction::power(p), m, M).value);
        add("zeta", par, aczel_gap_constant(m, M, p).value, gap_constant(RepresentingFunction::power(p), m, M).value);
        for (double lambda : cfg.lambda_grid) {
          const auto f = RepresentingFunction::arithmetic(lambda);
          add("delta_affine_power", {{"interval", iv}, {"p", p}, {"lambda", lambda}},
              affine_power_ratio_constant(lambda, m, M, p).value,
              ratio_constant(RepresentingFunction::power(p), f(m), f(M)).value);
        }
      }
      if (M <= 1.0) {
        const auto oracle = gap_constant(RepresentingFunction::complement_power(p), m, M);
        add("delta_bellman", par, bellman_gap_constant(m, M, p).value, oracle.value);
        add("t0_bellman", par, bellman_gap_argmax(m, M, p), oracle.argmax);
      }
    }
  }
  for (double p : cfg.p_grid) {
    add("delta_unit_interval", {{"p", p}}, bellman_gap_constant(0.0, 1.0, p).value,
        (1.0 - p) * std::pow(p, p / (1.0 - p)));
  }
  return report;
}

Json to_json(const ConstantsReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(Json{{"name", r.name},
                        {"params", r.params},
                        {"closed_form", r.closed_form},
                        {"oracle", r.oracle},
                        {"rel_diff", r.rel_diff},
                        {"ok", r.ok}});
  }
  return Json{{"threshold", report.threshold}, {"max_rel_diff", report.max_rel_diff}, {"ok", report.ok},
              {"rows", std::move(rows)}};
}

std::string render(const ConstantsReport& report, Format format) {
  std::ostringstream out;
  if (format == Format::json) return to_json(report).dump(2) + "\n";
  if (format == Format::csv) {
    out << "name,params,closed_form,oracle,rel_diff,ok\n";
    for (const auto& r : report.rows) {
      out << r.name << ",\"" << r.params.dump() << "\"," << number_text(r.closed_form) << ','
          << number_text(r.oracle) << ',' << number_text(r.rel_diff) << ',' << (r.ok ? "true" : "false") << '\n';
    }
    return out.str();
  }
  char line[256];
  for (const auto& r : report.rows) {
    std::snprintf(line, sizeof line, "%-20s %-44s %22.16g %22.16g %9.2e %s\n", r.name.c_str(), r.params.dump().c_str(),
                  r.closed_form, r.oracle, r.rel_diff, r.ok ? "ok" : "MISMATCH");
    out << line;
  }
  std::snprintf(line, sizeof line, "max relative difference %.3e (threshold %.1e)\n", report.max_rel_diff,
                report.threshold);
  out << line;
  return out.str();
}

Json registry_json() {
  Json out = Json::array();
  for (const auto& info : registry()) {
    Json axes = Json::array({"dim"});
    if (info.axes.n) axes.push_back("n");
    if (info.axes.interval) axes.push_back("interval");
    if (info.axes.p) axes.push_back("p");
    if (info.axes.lambda) axes.push_back("lambda");
    if (info.axes.mean) axes.push_back("mean");
    if (info.axes.map) axes.push_back("map");
    if (info.axes.k) axes.push_back("k");
    out.push_back(Json{{"id", info.id},
                       {"group", to_string(info.group)},
                       {"statement", info.statement},
                       {"hypothesis", info.hypothesis},
                       {"axes", std::move(axes)}});
  }
  return out;
}

}  // namespace bellman
