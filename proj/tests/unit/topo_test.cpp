#include <gtest/gtest.h>

#include "gyro/einstein.hpp"
#include "gyro/error.hpp"
#include "gyro/mobius.hpp"
#include "gyro/topo.hpp"

namespace {

using gyro::topo::Verdict;

TEST(Topo, MobiusBallsAreGyrationInvariant) {
  const gyro::mobius::MobiusModel m;
  const std::vector<double> radii = {0.9, 0.5, 0.1};
  const auto r = gyro::topo::strongly_topological_base_check(m, radii, 2000, 1, 1e-12);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.per_radius.size(), 3U);
}

TEST(Topo, EinsteinBallsAreGyrationInvariant) {
  const gyro::einstein::EinsteinModel m(2.0);
  const std::vector<double> radii = {1.8, 0.4};
  EXPECT_TRUE(gyro::topo::strongly_topological_base_check(m, radii, 2000, 1, 1e-9).ok);
}

TEST(Topo, ChainRequiresDecreasingRadiiInside) {
  EXPECT_THROW(gyro::topo::RadiusChain({0.5}, 1.0), gyro::Error);
  EXPECT_THROW(gyro::topo::RadiusChain({1.0, 0.5}, 1.0), gyro::Error);
  EXPECT_THROW(gyro::topo::RadiusChain({0.3, 0.5}, 1.0), gyro::Error);
}

TEST(Topo, HarmonicMobiusChainFailsOnCollinearTriple) {
  const gyro::mobius::MobiusModel m;
  const gyro::topo::RadiusChain chain({1.0 / 2, 1.0 / 3, 1.0 / 4, 1.0 / 5}, 1.0);
  const auto report = gyro::topo::admissible_chain_check(m, chain, 500, 3, 1e-9);
  ASSERT_EQ(report.steps.size(), 3U);
  EXPECT_NEAR(report.steps[0].collinear_modulus, 0.77777777777777777778, 1e-12);
  EXPECT_NEAR(report.steps[1].collinear_modulus, 0.64473684210526315789, 1e-12);
  EXPECT_NEAR(report.steps[2].collinear_modulus, 0.54285714285714285714, 1e-12);
  EXPECT_EQ(report.overall(), Verdict::fail);
}

TEST(Topo, FastShrinkingChainPasses) {
  const gyro::mobius::MobiusModel m;
  const gyro::topo::RadiusChain chain({0.9, 0.2, 0.04, 0.008}, 1.0);
  const auto report = gyro::topo::admissible_chain_check(m, chain, 2000, 3, 1e-9);
  EXPECT_EQ(report.overall(), Verdict::pass);
  for (const auto& s : report.steps) EXPECT_LE(s.worst_modulus, s.collinear_modulus + 1e-12);
}

TEST(Topo, EinsteinCollinearChainValue) {
  const gyro::einstein::EinsteinModel m;
  const gyro::topo::RadiusChain chain({0.9, 0.5}, 1.0);
  const auto report = gyro::topo::admissible_chain_check(m, chain, 200, 0, 1e-9);
  EXPECT_NEAR(report.steps[0].collinear_modulus, 0.92857142857142857143, 1e-12);
  EXPECT_EQ(report.overall(), Verdict::fail);
}

TEST(Topo, BoundaryCaseIsInconclusive) {
  const gyro::mobius::MobiusModel m;
  const double r = 0.2;
  const double composite = m.norm(m.op(m.on_axis(r), m.op(m.on_axis(r), m.on_axis(r))));
  const gyro::topo::RadiusChain chain({composite, r}, 1.0);
  const auto report = gyro::topo::admissible_chain_check(m, chain, 200, 0, 1e-9);
  EXPECT_EQ(report.overall(), Verdict::inconclusive);
}

}  // namespace
