#include <gtest/gtest.h>

#include <cmath>

#include "bellman/constants.hpp"
#include "bellman/errors.hpp"
#include "bellman/instance_gen.hpp"
#include "bellman/means.hpp"

using namespace bellman;

namespace {

InstanceFamily family(const Generated& g) {
  EXPECT_TRUE(std::holds_alternative<InstanceFamily>(g));
  return std::get<InstanceFamily>(g);
}

HermitianMatrix sum(const std::vector<HermitianMatrix>& v) {
  HermitianMatrix s = HermitianMatrix::zero(v.front().dim());
  for (const auto& x : v) s = s + x;
  return s;
}

}  // namespace

TEST(InstanceGen, ValidateRejectsBadConfig) {
  GenConfig cfg;
  cfg.m = 3.0;
  EXPECT_THROW(validate(cfg), ParameterError);
  cfg = GenConfig{};
  cfg.p = 1.0;
  EXPECT_THROW(validate(cfg), ParameterError);
  cfg = GenConfig{};
  cfg.dim = 0;
  EXPECT_THROW(validate(cfg), ParameterError);
}

TEST(InstanceGen, SandwichPairHoldsWithMargin) {
  Rng rng(1);
  const auto a = random_spectrum_matrix(4, 0.2, 1.0, rng);
  const auto [x, y] = random_sandwich_pair(a, 0.5, 2.0, rng);
  EXPECT_GT(loewner_leq(0.5 * x, y).slack, 0.0);
  EXPECT_GT(loewner_leq(y, 2.0 * x).slack, 0.0);
}

TEST(InstanceGen, SubidentityFamilyHitsCap) {
  Rng rng(2);
  EXPECT_NEAR(lambda_max(sum(random_subidentity_family(3, 4, rng, 0.8))), 0.8, 1e-12);
}

TEST(InstanceGen, SpectrumFamilyMatchesMapInputs) {
  Rng rng(3);
  GenConfig cfg;
  cfg.n = 2;
  const std::vector<PositiveMap> maps{random_map("compress:2", 2, rng), random_map("id", 2, rng)};
  const auto inst = family(spectrum_family(cfg, 0.5, 2.0, maps, rng));
  EXPECT_EQ(inst.A[0].dim(), 4);
  EXPECT_EQ(inst.A[1].dim(), 2);
  EXPECT_GE(lambda_min(inst.A[0]), 0.5);
  EXPECT_LE(lambda_max(inst.A[0]), 2.0);
}

TEST(InstanceGen, ComplementSandwichHypotheses) {
  Rng rng(4);
  GenConfig cfg;
  cfg.dim = 3;
  cfg.n = 3;
  cfg.m = 0.25;
  cfg.M = 4.0;
  const MeanSpec f = MeanSpec::parse("geom:0.5");
  const double gamma = ratio_constant(f.function(), cfg.m, cfg.M).value;
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = family(thm21_instance(cfg, f, rng));
    for (double g : {gamma, 1.0}) {
      const auto x = HermitianMatrix::identity(3) - g * sum(inst.A);
      const auto y = HermitianMatrix::identity(3) - g * sum(inst.B);
      EXPECT_GE(lambda_min(x), cfg.margin);
      EXPECT_GE(lambda_min(y), cfg.margin);
      EXPECT_GE(loewner_leq(cfg.m * x, y).slack, cfg.margin);
      EXPECT_GE(loewner_leq(y, cfg.M * x).slack, cfg.margin);
    }
  }
}

TEST(InstanceGen, ComplementSandwichRejectsIntervalAboveOne) {
  Rng rng(5);
  GenConfig cfg;
  cfg.m = 1.5;
  cfg.M = 3.0;
  const Generated g = complement_sandwich_instance(cfg, 1.0, rng);
  ASSERT_TRUE(std::holds_alternative<Rejection>(g));
  EXPECT_FALSE(std::get<Rejection>(g).reason.empty());
}

TEST(InstanceGen, DeterministicForFixedSeed) {
  GenConfig cfg;
  Rng r1(77), r2(77);
  const auto a = family(dominated_family(cfg, r1));
  const auto b = family(dominated_family(cfg, r2));
  EXPECT_EQ(a.get("A").max_abs_diff(b.get("A")), 0.0);
  EXPECT_EQ(a.B[1].max_abs_diff(b.B[1]), 0.0);
}

TEST(InstanceGen, DominatedFamilyAndNamedLookup) {
  Rng rng(6);
  const auto inst = family(dominated_family(GenConfig{}, rng));
  EXPECT_GE(loewner_leq(sum(inst.A), inst.get("A")).slack, 1e-6);
  EXPECT_GE(loewner_leq(sum(inst.B), inst.get("B")).slack, 1e-6);
  EXPECT_THROW(inst.get("Z"), SchemaError);
}

TEST(InstanceGen, ContractionPairs) {
  Rng rng(7);
  const auto cx = family(contraction_spectrum_pair(GenConfig{}, rng));
  EXPECT_LE(spectral_norm(cx.get("C")), 1.0);
  const auto ab = family(contraction_sandwich_pair(GenConfig{}, rng));
  EXPECT_LE(lambda_max(ab.get("A")), 1.0);
  EXPECT_GT(lambda_min(ab.get("A")), 0.0);
}

TEST(InstanceGen, ScalarHypotheses) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto bell = scalar_instance(ScalarKind::bellman_classical, 3, 2, 2.0, rng);
    double sa = 0.0;
    for (double x : bell.scalars[1]) sa += x * x;
    EXPECT_GT(bell.scalars[0][0], std::sqrt(sa));

    const auto acz = scalar_instance(ScalarKind::aczel, 3, 1, 2.0, rng);
    double rest = 0.0;
    for (std::size_t j = 1; j < acz.scalars[0].size(); ++j) rest += acz.scalars[0][j] * acz.scalars[0][j];
    EXPECT_GT(acz.scalars[0][0] * acz.scalars[0][0], rest);

    const double p = 0.4;
    const auto mp = scalar_instance(ScalarKind::mp3, 3, 2, p, rng);
    for (std::size_t j = 0; j < mp.scalars[0].size(); ++j) {
      double col = 0.0;
      for (std::size_t i = 1; i < mp.scalars.size(); ++i) col += std::pow(mp.scalars[i][j], 1.0 / p);
      EXPECT_LE(col, 1.0);
    }
  }
  EXPECT_THROW(scalar_instance(ScalarKind::popoviciu, 2, 1, 3.0, rng), ParameterError);
  EXPECT_EQ(scalar_kind_from_string(to_string(ScalarKind::eq3)), ScalarKind::eq3);
}
