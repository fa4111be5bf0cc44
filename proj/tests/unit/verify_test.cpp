#include <gtest/gtest.h>

#include "gyro/error.hpp"
#include "gyro/finite/constructions.hpp"
#include "gyro/finite/gyrogroup.hpp"
#include "support/fixtures.hpp"

namespace {

using gyro::Axiom;
using gyro::Status;
using gyro::finite::CayleyTable;
using gyro::finite::verify_gyrogroup;

TEST(Verify, TrivialGroup) {
  const auto report = verify_gyrogroup(CayleyTable(std::vector<std::vector<int>>{{0}}));
  EXPECT_TRUE(report.passed());
  EXPECT_TRUE(report.exhaustive);
}

TEST(Verify, EveryGyrogroupFixturePasses) {
  for (const auto& name : gyro::testing::gyrogroup_fixtures()) {
    SCOPED_TRACE(name);
    const auto t = gyro::testing::load_table(name);
    const auto report = verify_gyrogroup(t);
    EXPECT_TRUE(report.passed());
    const auto g = gyro::finite::Gyrogroup::from_table(t);
    EXPECT_EQ(g.gyrations_trivial(), gyro::testing::naive::associative(t));
  }
}

TEST(Verify, NonAssociativeFixturesHaveNontrivialGyrations) {
  for (const char* name : {"gyro8_a", "gyro8_b", "gyro8_c", "gyro8_d", "gyro8_e", "gyro8_f"}) {
    SCOPED_TRACE(name);
    const auto g = gyro::testing::load(name);
    EXPECT_FALSE(gyro::testing::naive::associative(g.table()));
    EXPECT_FALSE(g.gyrations_trivial());
  }
}

TEST(Verify, NonLatinTableFailsFirst) {
  const auto report = verify_gyrogroup(gyro::testing::load_table("nonlatin2"));
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.checks.front().axiom, Axiom::latin);
  EXPECT_EQ(report.checks.front().status, Status::fail);
}

TEST(Verify, LatinSquareFailingG3) {
  // Order 4; no two-sided identity, so 0 is the designated identity.
  const auto report = verify_gyrogroup(gyro::testing::load_table("latin4_g3_fail"));
  EXPECT_EQ(report.at(Axiom::latin).status, Status::pass);
  EXPECT_EQ(report.at(Axiom::g1).status, Status::fail);
  EXPECT_EQ(report.at(Axiom::g1).witness, (std::vector<int>{2}));
  EXPECT_EQ(report.at(Axiom::g3_equation).status, Status::fail);
  EXPECT_EQ(report.at(Axiom::g3_equation).witness, (std::vector<int>{0, 2, 0}));
}

TEST(Verify, LoopFailingTheAutomorphismLaw) {
  const auto report = verify_gyrogroup(gyro::testing::load_table("loop5_aut_fail"));
  EXPECT_EQ(report.at(Axiom::g1).status, Status::pass);
  EXPECT_EQ(report.at(Axiom::g3_equation).witness, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(report.at(Axiom::g3_automorphism).witness, (std::vector<int>{1, 2, 1, 2}));
  EXPECT_THROW(gyro::finite::Gyrogroup::from_table(gyro::testing::load_table("loop5_aut_fail")),
               gyro::Error);
}

TEST(Verify, MissingLeftInversesSkipGyrationChecks) {
  // 0 is a left identity only; element 1 has no left inverse of 0.
  const CayleyTable t({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
  const auto report = verify_gyrogroup(t);
  EXPECT_EQ(report.at(Axiom::g2).status, Status::fail);
  EXPECT_EQ(report.at(Axiom::g4).status, Status::skipped);
}

TEST(Verify, GroupsAndTheirProductsHaveTrivialGyrations) {
  const auto& names = gyro::testing::group_fixtures();
  for (const auto& a : names) {
    for (const auto& b : names) {
      SCOPED_TRACE(a + " x " + b);
      const auto t = gyro::finite::product_gyrogroup(gyro::testing::load(a), gyro::testing::load(b));
      EXPECT_TRUE(verify_gyrogroup(t).passed());
      EXPECT_TRUE(gyro::finite::Gyrogroup::from_table(t).gyrations_trivial());
    }
  }
}

TEST(Verify, GyrationTableOfNonAssociativeFixtureIsAutomorphism) {
  const auto g = gyro::testing::load("gyro8_a");
  bool saw_nontrivial = false;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      const auto map = gyro::finite::gyr_table(g, a, b);
      saw_nontrivial = saw_nontrivial || !map.is_identity();
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
          ASSERT_EQ(map.perm[g.op(x, y)], g.op(map.perm[x], map.perm[y]));
    }
  }
  EXPECT_TRUE(saw_nontrivial);
}

}  // namespace
