#include <algorithm>

#include <gtest/gtest.h>

#include "gyro/error.hpp"
#include "gyro/finite/subgyrogroups.hpp"
#include "support/fixtures.hpp"

namespace {

using gyro::finite::SubsetMask;

TEST(Subgyrogroups, ClosureEnumerationMatchesNaiveFilter) {
  for (const auto& name : gyro::testing::gyrogroup_fixtures()) {
    SCOPED_TRACE(name);
    const auto g = gyro::testing::load(name);
    std::vector<std::uint64_t> found;
    for (const auto& s : gyro::finite::enumerate_subgyrogroups(g)) found.push_back(s.subset.bits());
    std::vector<std::uint64_t> expected = gyro::testing::naive::subgyrogroups(g);
    std::sort(found.begin(), found.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(found, expected);
  }
}

TEST(Subgyrogroups, KnownCounts) {
  auto count = [](const char* name) {
    return gyro::finite::enumerate_subgyrogroups(gyro::testing::load(name)).size();
  };
  EXPECT_EQ(count("z1"), 1U);
  EXPECT_EQ(count("z4"), 3U);
  EXPECT_EQ(count("klein4"), 5U);
  EXPECT_EQ(count("s3"), 6U);
  EXPECT_EQ(count("q8"), 6U);
  EXPECT_EQ(count("d4"), 10U);
}

TEST(Subgyrogroups, GroupSubgroupsAreAllLSubgyrogroups) {
  for (const auto& name : gyro::testing::group_fixtures()) {
    for (const auto& s : gyro::finite::enumerate_subgyrogroups(gyro::testing::load(name)))
      EXPECT_TRUE(s.is_l) << name << " " << s.subset.to_string();
  }
}

TEST(Subgyrogroups, LStatusAgreesWithDefinition) {
  for (const auto& name : gyro::testing::gyrogroup_fixtures()) {
    const auto g = gyro::testing::load(name);
    for (const auto& s : gyro::finite::enumerate_subgyrogroups(g)) {
      bool invariant = true;
      for (int a = 0; a < g.order() && invariant; ++a) {
        s.subset.for_each([&](int h) {
          const auto map = gyro::finite::gyr_table(g, a, h);
          SubsetMask image(g.order());
          s.subset.for_each([&](int x) { image.insert(map.perm[x]); });
          invariant = invariant && image == s.subset;
        });
      }
      EXPECT_EQ(s.is_l, invariant) << name << " " << s.subset.to_string();
    }
  }
}

TEST(Subgyrogroups, Errors) {
  const auto g = gyro::testing::load("z4");
  EXPECT_THROW(gyro::finite::is_subgyrogroup(g, SubsetMask(4)), gyro::Error);
  EXPECT_FALSE(gyro::finite::is_subgyrogroup(g, SubsetMask::of(4, {0, 1})));
  try {
    gyro::finite::is_l_subgyrogroup(g, SubsetMask::of(4, {0, 1}));
    FAIL();
  } catch (const gyro::Error& e) {
    EXPECT_EQ(e.kind(), gyro::ErrorKind::not_a_subgyrogroup);
  }
  EXPECT_THROW(gyro::finite::enumerate_subgyrogroups(g, 3), gyro::Error);
}

TEST(Subgyrogroups, ClosureOfGenerator) {
  const auto g = gyro::testing::load("z6");
  EXPECT_EQ(gyro::finite::subgyrogroup_closure(g, SubsetMask::of(6, {2})).elements(),
            (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(gyro::finite::subgyrogroup_closure(g, SubsetMask::of(6, {2, 3})).size(), 6);
}

}  // namespace
