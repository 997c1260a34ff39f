#include <gtest/gtest.h>

#include <cmath>

#include "bellman/constants.hpp"
#include "bellman/errors.hpp"
#include "bellman/inequalities.hpp"

using namespace bellman;

namespace {

using H = HermitianMatrix;

InstanceFamily single(const H& a, const PositiveMap& map) {
  InstanceFamily inst;
  inst.A = {a};
  inst.weights = {1.0};
  inst.maps = {map};
  return inst;
}

InstanceFamily named(std::initializer_list<std::pair<const std::string, H>> ops) {
  InstanceFamily inst;
  inst.named = ops;
  return inst;
}

}  // namespace

TEST(Registry, IdsAreUniqueAndGrouped) {
  const auto& reg = registry();
  EXPECT_EQ(reg.size(), 30u);
  std::set<std::string> ids;
  for (const auto& info : reg) ids.insert(info.id);
  EXPECT_EQ(ids.size(), reg.size());
  EXPECT_EQ(check_info("thm34").group, Group::chain);
  EXPECT_THROW(check_info("nope"), ParameterError);
}

TEST(Registry, IncompatibleCells) {
  CheckParams par;
  par.m = 1.5;
  par.M = 3.0;
  EXPECT_TRUE(incompatible("thm21", par).has_value());
  EXPECT_TRUE(incompatible("cor28", par).has_value());
  EXPECT_FALSE(incompatible("gamma_main", par).has_value());
  par.n = 1;
  EXPECT_TRUE(incompatible("thm33", par).has_value());
}

TEST(Checks, BellmanForwardEqualityAtZero) {
  CheckParams par;
  par.dim = 2;
  const auto out = check("bell_forward", single(H::zero(2), PositiveMap::identity(2)), par);
  EXPECT_EQ(out.status, Status::holds);
  EXPECT_NEAR(out.slack, 0.0, 1e-15);
}

TEST(Checks, ComplementReverseWithAffineMeanIsEquality) {
  CheckParams par;
  par.dim = 1;
  par.n = 2;
  par.m = 0.5;
  par.M = 2.0;
  par.mean = "arith:0.3";
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const auto inst = std::get<InstanceFamily>(generate("thm21", par, rng));
    const auto out = check("thm21", inst, par);
    EXPECT_EQ(out.status, Status::holds);
    EXPECT_NEAR(out.slack, 0.0, 1e-12);
  }
}

TEST(Checks, ContractionLemmaEdgeCases) {
  CheckParams par;
  par.dim = 2;
  Rng rng(1);
  const H x = random_spectrum_matrix(2, par.m, par.M, rng);
  const auto f = RepresentingFunction::geometric(0.5);
  const double gamma = ratio_constant(f, par.m, par.M).value;

  const auto identity = check("lemma_bomb", named({{"C", H::identity(2)}, {"X", x}}), par);
  EXPECT_EQ(identity.status, Status::holds);
  EXPECT_NEAR(identity.slack, (gamma - 1.0) * std::sqrt(lambda_min(x)), 1e-12);

  const auto zero = check("lemma_bomb", named({{"C", H::zero(2)}, {"X", x}}), par);
  EXPECT_EQ(zero.status, Status::holds);
  EXPECT_NEAR(zero.slack, gamma * std::sqrt(par.m), 1e-12);
}

TEST(Checks, PowerMeanLemmaAtIdentity) {
  CheckParams par;
  Rng rng(2);
  const auto out = check("lemma_bos12", named({{"A", H::identity(2)}, {"B", random_spectrum_matrix(2, 0.6, 1.9, rng)}}),
                         par);
  EXPECT_EQ(out.status, Status::holds);
  EXPECT_GE(out.slack, 0.0);
}

TEST(Checks, ScalarComplementGapEqualsConstant) {
  CheckParams par;
  par.dim = 1;
  par.m = 0.1;
  par.M = 0.9;
  par.p = 0.5;
  const auto out = check("cor28", single(H::scalar(0.4), PositiveMap::identity(1)), par);
  EXPECT_NEAR(out.slack, bellman_gap_constant(0.1, 0.9, 0.5).value, 1e-14);
}

TEST(Checks, LogGapAtScalarMultiple) {
  CheckParams par;
  par.m = 0.5;
  par.M = 2.0;
  const auto out = check("cor210", single(1.3 * H::identity(2), PositiveMap::identity(2)), par);
  EXPECT_NEAR(out.slack, log_gap_constant(0.5, 2.0).value, 1e-14);
}

TEST(Checks, RefinementChainCollapses) {
  CheckParams par;
  par.n = 3;
  par.dim = 2;
  Rng rng(3);
  auto inst = std::get<InstanceFamily>(generate("thm34", par, rng));

  inst.scalars = {{1.0, 1.0, 1.0}};
  auto out = check("thm34", inst, par);
  ASSERT_EQ(out.links.size(), 4u);
  EXPECT_EQ(out.links[3].name, "base_lhs_to_mid");
  EXPECT_NEAR(out.links[3].slack, 0.0, 1e-14);

  inst.scalars = {{0.0, 0.0, 0.0}};
  out = check("thm34", inst, par);
  EXPECT_EQ(out.links[1].name, "mid_to_rhs");
  EXPECT_NEAR(out.links[1].slack, 0.0, 1e-13);
  EXPECT_EQ(out.status, Status::holds);
}

TEST(Checks, SplitChainHoldsForEveryK) {
  CheckParams par;
  par.n = 3;
  par.dim = 3;
  for (int k = 1; k <= 2; ++k) {
    par.k = k;
    Rng rng(10 + k);
    const auto out = check("thm33", std::get<InstanceFamily>(generate("thm33", par, rng)), par);
    EXPECT_EQ(out.status, Status::holds);
    EXPECT_LE(out.slack, out.links[2].slack + 1e-12);
  }
  par.k = 3;
  Rng rng(1);
  const auto inst = std::get<InstanceFamily>(generate("thm33", CheckParams{.dim = 3, .n = 3}, rng));
  EXPECT_THROW(check("thm33", inst, par), ParameterError);
}

TEST(Checks, ViolatedHypothesisIsNotApplicable) {
  CheckParams par;
  const auto out = check("bell_forward", single(2.0 * H::identity(2), PositiveMap::identity(2)), par);
  EXPECT_EQ(out.status, Status::not_applicable);
  EXPECT_EQ(out.guard, "hypothesis_0_le_A_le_I");
}

TEST(Checks, MalformedInstancesThrow) {
  CheckParams par;
  EXPECT_THROW(check("no_such_check", InstanceFamily{}, par), ParameterError);
  EXPECT_THROW(check("superadditivity", InstanceFamily{}, par), SchemaError);
  InstanceFamily mixed;
  mixed.A = {H::identity(2), H::identity(3)};
  mixed.B = {H::identity(2), H::identity(3)};
  EXPECT_THROW(check("superadditivity", mixed, par), DimensionError);
  InstanceFamily unnamed;
  unnamed.A = {H::identity(2)};
  unnamed.B = {H::identity(2)};
  EXPECT_THROW(check("lemma31", unnamed, par), SchemaError);
}

TEST(Checks, ScalarChecksHoldOnGeneratedData) {
  for (const char* id : {"bellman_classical", "aczel", "popoviciu", "mp3", "mp1", "eq3"}) {
    CheckParams par;
    par.n = 3;
    par.dim = 2;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Rng rng(seed);
      const auto out = check(id, std::get<InstanceFamily>(generate(id, par, rng)), par);
      EXPECT_EQ(out.status, Status::holds) << id << " seed " << seed;
    }
  }
}

TEST(Checks, StatusNamesRoundTrip) {
  for (auto s : {Status::holds, Status::violated, Status::not_applicable}) EXPECT_EQ(status_from_string(to_string(s)), s);
}
