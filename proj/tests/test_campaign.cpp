#include <gtest/gtest.h>

#include "bellman/campaign.hpp"
#include "bellman/errors.hpp"

using namespace bellman;

TEST(Config, EmptyTextGivesDefaults) {
  bool seeded = true;
  const auto cfg = parse_config("", "empty", &seeded);
  EXPECT_FALSE(seeded);
  EXPECT_EQ(to_json(cfg), to_json(CampaignConfig{}));
  EXPECT_EQ(to_json(parse_config("{}")), to_json(CampaignConfig{}));
}

TEST(Config, RoundTripsThroughJson) {
  CampaignConfig cfg;
  cfg.trials = 17;
  cfg.dims = {2, 5};
  cfg.checks = {"thm33", "aczel"};
  cfg.tolerance.atol = 1e-9;
  bool seeded = false;
  const auto back = parse_config(to_json(cfg).dump(2), "cfg", &seeded);
  EXPECT_TRUE(seeded);
  EXPECT_EQ(to_json(back), to_json(cfg));
}

TEST(Config, ErrorsNameLineAndKey) {
  try {
    parse_config("{\n  \"trials\": 10,\n  \"p_grid\": [0.5, 1.5]\n}", "bad.json");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("bad.json:3: p_grid:", 0), 0u) << e.what();
  }
  EXPECT_THROW(parse_config("{\"trails\": 3}"), ConfigError);
  EXPECT_THROW(parse_config("{\"trials\": 3,"), ConfigError);
  EXPECT_THROW(parse_config("{\"checks\": [\"nope\"]}"), ConfigError);
  EXPECT_THROW(parse_config("{\"intervals\": [[2, 1]]}"), ConfigError);
  EXPECT_THROW(parse_config("{\"tolerance\": {\"atol\": -1}}"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Cells, DimVariesFastestAndSkipsAreCounted) {
  CampaignConfig cfg;
  cfg.dims = {1, 2};
  const auto cells = cells_for(check_info("gamma_mond1"), cfg);
  ASSERT_GE(cells.size(), 2u);
  EXPECT_EQ(cells[0].dim, 1);
  EXPECT_EQ(cells[1].dim, 2);
  std::map<std::string, int> skipped;
  cells_for(check_info("cor28"), cfg, &skipped);
  EXPECT_FALSE(skipped.empty());
}

TEST(Campaign, SingleTrialSingleCell) {
  CampaignConfig cfg;
  cfg.trials = 1;
  cfg.dims = {1};
  cfg.n_values = {1};
  cfg.p_grid = {0.5};
  cfg.maps = {"id"};
  cfg.checks = {"bell_forward"};
  const auto report = run_campaign(cfg);
  ASSERT_EQ(report.checks.size(), 1u);
  EXPECT_EQ(report.checks[0].trials, 1);
  EXPECT_EQ(report.checks[0].holds, 1);
  EXPECT_EQ(exit_code(report), 0);
}

TEST(Campaign, DeterministicAcrossJobs) {
  CampaignConfig cfg;
  cfg.trials = 40;
  cfg.dims = {1, 3};
  cfg.checks = {"gamma_main", "thm34", "mp1"};
  const std::string one = to_json(run_campaign(cfg)).dump();
  cfg.jobs = 3;
  EXPECT_EQ(to_json(run_campaign(cfg)).dump(), one);
  cfg.seed += 1;
  EXPECT_NE(to_json(run_campaign(cfg)).dump(), one);
}

TEST(Campaign, RenderFormats) {
  CampaignConfig cfg;
  cfg.trials = 5;
  cfg.checks = {"aczel"};
  const auto report = run_campaign(cfg);
  EXPECT_NE(render(report, Format::csv).find("aczel"), std::string::npos);
  EXPECT_NE(render(report, Format::text).find("aczel"), std::string::npos);
  EXPECT_TRUE(Json::parse(render(report, Format::json)).contains("summary"));
}

TEST(Campaign, TrialSeedsDependOnCheck) {
  EXPECT_NE(trial_seed(1, "thm33", 0), trial_seed(1, "thm34", 0));
  EXPECT_EQ(trial_seed(1, "thm33", 5), trial_seed(1, "thm33", 5));
}

// With an affine mean the complement reverse is an equality, so at zero
// tolerance it fails on rounding alone: a genuine violation to replay.
TEST(Witness, RoundingViolationReplays) {
  CheckParams par;
  par.dim = 3;
  par.mean = "arith:0.3";
  const Tolerance exact{0.0, 0.0};
  std::optional<Witness> found;
  for (std::uint64_t seed = 0; seed < 500 && !found; ++seed) {
    Rng rng(seed);
    const auto inst = std::get<InstanceFamily>(generate("thm21", par, rng));
    const auto out = check("thm21", inst, par, exact);
    if (out.status == Status::violated) found = Witness{"thm21", par, exact, inst, out};
  }
  ASSERT_TRUE(found.has_value());
  EXPECT_LT(found->recorded.slack, 0.0);
  EXPECT_GT(found->recorded.slack, -1e-12);

  const Witness back = witness_from_json(Json::parse(to_json(*found).dump()));
  const Replay r = replay(back);
  EXPECT_TRUE(r.reproduced);
  EXPECT_EQ(r.outcome.status, Status::violated);

  Json corrupted = to_json(*found);
  corrupted["instance"]["A"][0]["re"] = Json::array({1.0});
  EXPECT_THROW(witness_from_json(corrupted), SchemaError);
}

TEST(Constants, VerificationPassesOnDefaults) {
  const auto report = verify_constants(CampaignConfig{});
  EXPECT_TRUE(report.ok);
  EXPECT_LT(report.max_rel_diff, 1e-9);
  EXPECT_FALSE(report.rows.empty());
}
