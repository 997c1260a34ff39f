#include <gtest/gtest.h>

#include <cmath>

#include "bellman/errors.hpp"
#include "bellman/functions.hpp"

using namespace bellman;

TEST(Functions, AffineValues) {
  const auto f = RepresentingFunction::arithmetic(0.25);
  EXPECT_EQ(f(1.0), 1.0);
  EXPECT_DOUBLE_EQ(f(0.0), 0.75);
  EXPECT_DOUBLE_EQ(f(3.0), 1.5);
  EXPECT_TRUE(f.normalized());
  EXPECT_TRUE(f.operator_monotone());
}

TEST(Functions, PowerAndGeometric) {
  const auto g = RepresentingFunction::geometric(0.5);
  EXPECT_DOUBLE_EQ(g(4.0), 2.0);
  EXPECT_TRUE(g.concave());
  EXPECT_DOUBLE_EQ(g.derivative(4.0), 0.25);
  EXPECT_EQ(g.domain().lo, 0.0);
}

TEST(Functions, LogIsNotAMeanFunction) {
  const auto f = RepresentingFunction::log();
  EXPECT_FALSE(f.normalized());
  EXPECT_TRUE(f.domain().open_lo);
  EXPECT_DOUBLE_EQ(f(std::exp(1.0)), 1.0);
}

TEST(Functions, ComplementPowerDomain) {
  const auto f = RepresentingFunction::complement_power(0.5);
  EXPECT_DOUBLE_EQ(f(0.75), 0.5);
  EXPECT_EQ(f.domain().hi, 1.0);
  EXPECT_FALSE(f.operator_monotone());
  EXPECT_THROW(RepresentingFunction::complement_power(0.0), ParameterError);
}

TEST(Functions, PoweredAndComposedAgree) {
  const auto inner = RepresentingFunction::arithmetic(0.3);
  const auto a = RepresentingFunction::powered(inner, 0.4);
  const auto b = RepresentingFunction::composed(RepresentingFunction::power(0.4), inner);
  for (double t : {0.1, 0.5, 1.0, 2.0, 7.0}) EXPECT_NEAR(a(t), b(t), 1e-15);
  EXPECT_TRUE(a.normalized());
  EXPECT_TRUE(a.operator_monotone());
}

TEST(Functions, ParseRoundTripsLabels) {
  for (const char* id : {"arith:0.3", "geom:0.5", "power:0.25", "log", "cpow:0.5", "powered:geom:0.5:0.3",
                         "composed:power:0.5:arith:0.2"}) {
    const auto f = RepresentingFunction::parse(id);
    EXPECT_EQ(RepresentingFunction::parse(f.label()).label(), f.label()) << id;
  }
}

TEST(Functions, ParseRejectsGarbage) {
  EXPECT_THROW(RepresentingFunction::parse("harmonic"), ParameterError);
  EXPECT_THROW(RepresentingFunction::parse("geom:x"), ParameterError);
  EXPECT_THROW(RepresentingFunction::parse("geom:1.5"), ParameterError);
}

TEST(Functions, HighPrecisionMatchesDouble) {
  const auto f = RepresentingFunction::parse("powered:geom:0.3:0.7");
  for (double t : {0.2, 1.0, 3.5}) EXPECT_NEAR(static_cast<double>(f.eval(HighPrec(t))), f(t), 1e-15);
}

TEST(Functions, MatrixApplyUsesDomain) {
  const auto f = RepresentingFunction::log();
  EXPECT_THROW(f.apply(HermitianMatrix::diagonal({0.0, 1.0})), DomainError);
  EXPECT_NEAR(f.apply(HermitianMatrix::diagonal({1.0, std::exp(2.0)}))(1, 1).real(), 2.0, 1e-14);
}

TEST(Functions, FormatNumberIsShortest) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(parse_number("0.25"), 0.25);
  EXPECT_THROW(parse_number("1e"), ParameterError);
}
