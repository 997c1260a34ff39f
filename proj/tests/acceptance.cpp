#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bellman/campaign.hpp"
#include "bellman/constants.hpp"
#include "bellman/inequalities.hpp"
#include "scalar_oracle.hpp"

using namespace bellman;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

CampaignConfig group_campaign(Group group, int trials) {
  CampaignConfig cfg;
  cfg.trials = trials;
  for (const auto& info : registry()) {
    if (info.group == group) cfg.checks.push_back(info.id);
  }
  return cfg;
}

// Every check of the group saw `needed` applicable trials and no violation.
Verdict sweep(Group group, int trials, int needed) {
  const CampaignReport report = run_campaign(group_campaign(group, trials));
  Verdict v;
  std::ostringstream out;
  int total = 0;
  int na = 0;
  for (const auto& check : report.checks) {
    const int applicable = check.holds + check.violations;
    total += applicable;
    na += check.not_applicable;
    if (check.violations > 0 || applicable < needed) {
      v.ok = false;
      out << check.info.id << ": " << applicable << " applicable, " << check.violations << " violated; ";
    }
  }
  out << report.checks.size() << " checks, " << total << " applicable, " << na << " not applicable, "
      << report.violations << " violations";
  v.detail = out.str();
  return v;
}

Verdict criterion1() {
  Verdict v;
  double worst_gamma = 0.0;
  double worst_delta = 0.0;
  for (double lambda : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (auto [m, M] : {std::pair{0.1, 0.9}, {0.5, 2.0}, {0.25, 4.0}, {1.0, 10.0}}) {
      const double g = ratio_constant(RepresentingFunction::arithmetic(lambda), m, M).value;
      worst_gamma = std::max(worst_gamma, std::abs(g - 1.0));
    }
  }
  for (int i = 1; i <= 9; ++i) {
    const double p = i / 10.0;
    const double expected = (1 - p) * std::pow(p, p / (1 - p));
    worst_delta = std::max(worst_delta, std::abs(bellman_gap_constant(0.0, 1.0, p).value - expected));
  }
  v.ok = worst_gamma <= 1e-12 && worst_delta <= 1e-12;
  std::ostringstream out;
  out << "20 affine ratio constants within " << worst_gamma << " of 1; 9 unit-interval gaps within " << worst_delta;
  v.detail = out.str();
  return v;
}

Verdict criterion2() {
  Rng rng(20240917);
  std::map<std::string, double> worst;
  auto record = [&](const std::string& name, double closed, double oracle) {
    worst[name] = std::max(worst[name], rel_diff(closed, oracle));
  };
  for (int cell = 0; cell < 100; ++cell) {
    const double m = uniform(rng, 0.05, 0.9);
    const double M = m * uniform(rng, 1.2, 20.0);
    const double p = uniform(rng, 0.05, 0.95);
    const double lambda = uniform(rng, 0.05, 0.95);
    const double lo = uniform(rng, 0.0, 0.5);
    const double hi = uniform(rng, 0.55, 1.0);

    record("gamma_h", power_ratio_constant(m, M, p).value, ratio_constant(RepresentingFunction::power(p), m, M).value);
    const auto affine = RepresentingFunction::arithmetic(lambda);
    record("delta_affine", affine_power_ratio_constant(lambda, m, M, p).value,
           ratio_constant(RepresentingFunction::power(p), affine(m), affine(M)).value);
    const auto oracle = gap_constant(RepresentingFunction::complement_power(p), lo, hi);
    record("delta_unit", bellman_gap_constant(lo, hi, p).value, oracle.value);
    record("t0", bellman_gap_argmax(lo, hi, p), oracle.argmax);
    record("zeta", aczel_gap_constant(m, M, lambda).value,
           gap_constant(RepresentingFunction::power(lambda), m, M).value);
    record("beta_log", log_gap_constant(m, M).value, gap_constant(RepresentingFunction::log(), m, M).value);
  }
  Verdict v;
  std::ostringstream out;
  out << "100 cells, max relative difference:";
  for (const auto& [name, diff] : worst) {
    out << " " << name << " " << diff;
    v.ok = v.ok && diff <= 1e-9;
  }
  v.detail = out.str();
  return v;
}

Verdict criterion5() {
  Verdict v = sweep(Group::chain, 500, 500);
  std::ostringstream out;
  out << v.detail;

  // every split point gets trials
  CampaignConfig cfg = group_campaign(Group::chain, 500);
  std::set<std::pair<int, int>> splits;
  for (const auto& cell : cells_for(check_info("thm33"), cfg)) splits.insert({cell.n, cell.k});
  for (int n : cfg.n_values) {
    for (int k = 1; k <= n - 1; ++k) {
      if (!splits.count({n, k})) {
        v.ok = false;
        out << "; split n=" << n << " k=" << k << " missing";
      }
    }
  }
  out << "; " << splits.size() << " split points";

  // 0/1 weights: all ones collapse the base link, all zeros the upper link,
  // mixed ones reduce to a permuted split.
  const Tolerance tol;
  int collapses = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    CheckParams par;
    par.n = 2 + trial % 2;
    par.dim = 1 + trial % 6;
    par.p = cfg.p_grid[trial % cfg.p_grid.size()];
    par.mean = cfg.means[trial % cfg.means.size()];
    Rng rng(derive_seed(cfg.seed, trial));
    auto inst = std::get<InstanceFamily>(generate("thm34", par, rng));
    const int pattern = trial % 3;
    auto& t = inst.scalars[0];
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = pattern == 0 ? 1.0 : pattern == 1 ? 0.0 : double(j % 2);
    const auto outcome = check("thm34", inst, par, tol);
    if (outcome.status != Status::holds) {
      v.ok = false;
      out << "; 0/1 weights violated at trial " << trial;
      continue;
    }
    if (pattern == 2) continue;
    const ChainLink& link = outcome.links[pattern == 0 ? 3 : 1];
    worst = std::max(worst, std::abs(link.slack));
    if (std::abs(link.slack) > tol.bound(link.scale)) {
      v.ok = false;
      out << "; collapse " << link.name << " off by " << link.slack;
    }
    ++collapses;
  }
  out << "; " << collapses << " collapses within " << worst;
  v.detail = out.str();
  return v;
}

CheckParams oracle_cell(const CheckInfo& info, int trial) {
  static const std::vector<std::string> means{"geom:0.5", "arith:0.3", "geom:0.25"};
  static const std::vector<double> ps{0.25, 0.5, 0.75};
  static const std::vector<std::pair<double, double>> intervals{{0.5, 2.0}, {0.25, 4.0}, {0.1, 0.9}};
  CheckParams par;
  par.dim = 1;
  par.map = "id";
  par.n = 1 + trial % 3;
  par.p = ps[trial % ps.size()];
  par.lambda = trial % 2 ? 0.3 : 0.7;
  par.mean = means[(trial / 3) % means.size()];
  if (info.id == "thm33") {
    par.n = 2 + trial % 2;
    par.k = 1 + (trial / 2) % (par.n - 1);
  }
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    std::tie(par.m, par.M) = intervals[(trial + i) % intervals.size()];
    if (!incompatible(info.id, par)) break;
  }
  return par;
}

Verdict criterion7() {
  Verdict v;
  std::ostringstream out;
  int checks = 0;
  double worst = 0.0;
  for (const auto& info : registry()) {
    if (info.group == Group::scalar) continue;
    ++checks;
    int agreed = 0;
    for (int trial = 0; agreed < 100 && trial < 1000; ++trial) {
      const CheckParams par = oracle_cell(info, trial);
      Rng rng(derive_seed(7, trial));
      const Generated g = generate(info.id, par, rng);
      if (!std::holds_alternative<InstanceFamily>(g)) continue;
      const auto& inst = std::get<InstanceFamily>(g);
      const CheckOutcome lib = check(info.id, inst, par);
      if (lib.status == Status::not_applicable) continue;
      const auto ref = oracle::evaluate(info.id, inst, par);
      if (!ref) {
        v.ok = false;
        out << info.id << ": no scalar form; ";
        break;
      }
      const double diff = std::abs(lib.slack - ref->slack);
      worst = std::max(worst, diff / (1.0 + ref->scale));
      if (diff > 1e-12 * (1.0 + ref->scale)) {
        v.ok = false;
        out << info.id << " trial " << trial << ": " << lib.slack << " vs " << ref->slack << "; ";
        break;
      }
      ++agreed;
    }
    if (agreed < 100) {
      v.ok = false;
      out << info.id << ": only " << agreed << " instances compared; ";
    }
  }
  out << checks << " operator checks x 100 instances, max scaled difference " << worst;
  v.detail = out.str();
  return v;
}

Verdict criterion8() {
  const CampaignConfig cfg;
  const CampaignReport first = run_campaign(cfg);
  const CampaignReport second = run_campaign(cfg);
  const std::string a = render(first, Format::json);
  const std::string b = render(second, Format::json);
  Verdict v;
  v.ok = a == b && exit_code(first) == 0;
  std::ostringstream out;
  out << "reports " << (a == b ? "byte-identical" : "differ") << " (" << a.size() << " bytes), exit code "
      << exit_code(first) << ", " << first.violations << " violations";
  v.detail = out.str();
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    double time_limit;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "constant reproduction", 1.0, criterion1},
      {2, "closed forms against oracle", 10.0, criterion2},
      {3, "forward inequalities", 60.0, [] { return sweep(Group::forward, 1000, 1000); }},
      {4, "reverse inequalities", 120.0, [] { return sweep(Group::reverse, 500, 500); }},
      {5, "refinement chains", 1e9, criterion5},
      {6, "scalar suite", 1e9, [] { return sweep(Group::scalar, 10000, 10000); }},
      {7, "1x1 scalar equivalence", 1e9, criterion7},
      {8, "determinism", 1e9, criterion8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.time_limit) {
      v.ok = false;
      v.detail += "; over time limit";
    }
    if (!v.ok) ++failed;
    std::printf("[%s] criterion %d: %s (%.2f s) %s\n", v.ok ? "PASS" : "FAIL", c.number, c.name.c_str(), seconds,
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
