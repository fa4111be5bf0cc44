#include <complex>

#include <gtest/gtest.h>

#include "gyro/check_axioms.hpp"
#include "gyro/error.hpp"
#include "gyro/mobius.hpp"
#include "gyro/sampling.hpp"

namespace {

using gyro::mobius::DiskPoint;
using gyro::mobius::MobiusModel;

TEST(Mobius, RejectsPointsOutsideTheDisk) {
  EXPECT_THROW(DiskPoint(1.0, 0.0), gyro::Error);
  EXPECT_THROW(DiskPoint(0.8, 0.8), gyro::Error);
  EXPECT_NO_THROW(DiskPoint(0.999, 0.0));
  EXPECT_THROW(gyro::mobius::Ball(1.0), gyro::Error);
}

TEST(Mobius, GuardRejectsNearBoundaryInputs) {
  const DiskPoint near(1.0 - 1e-7, 0.0);
  try {
    gyro::mobius::mobius_add(near, DiskPoint(0.1));
    FAIL() << "expected invalid-element";
  } catch (const gyro::Error& e) {
    EXPECT_EQ(e.kind(), gyro::ErrorKind::invalid_element);
  }
  EXPECT_NO_THROW(gyro::mobius::mobius_add(near, DiskPoint(0.1), 0.0));
}

TEST(Mobius, KnownSums) {
  const DiskPoint s = gyro::mobius::mobius_add(DiskPoint(0.5), DiskPoint(0.5));
  EXPECT_NEAR(s.re(), 0.8, 1e-15);
  EXPECT_NEAR(s.im(), 0.0, 1e-15);
  const DiskPoint z = gyro::mobius::mobius_add(DiskPoint(0.3, -0.2), gyro::mobius::mobius_inv(DiskPoint(0.3, -0.2)));
  EXPECT_NEAR(std::abs(z.value()), 0.0, 1e-16);
}

TEST(Mobius, MultiplierMatchesHighPrecisionValue) {
  // (1 + a conj b) / (1 + conj a b) at a = 1/2, b = i/2 equals 15/17 - 8/17 i.
  const auto m = gyro::mobius::gyration_multiplier(DiskPoint(0.5), DiskPoint(0.0, 0.5));
  EXPECT_NEAR(m.real(), 15.0 / 17.0, 1e-15);
  EXPECT_NEAR(m.imag(), -8.0 / 17.0, 1e-15);
}

TEST(Mobius, ClosedFormAndGenericGyrationAgree) {
  const DiskPoint a(0.5), b(0.0, 0.5), c(0.3);
  const DiskPoint closed = gyro::mobius::mobius_gyr(a, b, c);
  const DiskPoint generic = gyro::gyr_apply(MobiusModel{}, a, b, c);
  EXPECT_NEAR(closed.re(), 0.26470588235294116667, 1e-15);
  EXPECT_NEAR(closed.im(), -0.14117647058823528889, 1e-15);
  EXPECT_NEAR(std::abs(closed.value() - generic.value()), 0.0, 1e-15);
}

TEST(Mobius, SamplersRespectRadius) {
  const MobiusModel m;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = gyro::sample_rng(3, i);
    EXPECT_LE(m.sample_in_ball(rng, 0.95).modulus(), 0.95);
    EXPECT_NEAR(m.sample_on_sphere(rng, 0.5).modulus(), 0.5, 1e-15);
  }
}

TEST(Mobius, SampledAxiomsPassAndAreJobInvariant) {
  const MobiusModel m{0.0};
  auto sampler = [&m](std::mt19937_64& rng) { return m.sample_in_ball(rng, 0.95); };
  const auto one = gyro::check_axioms(m, sampler, {2000, 1e-9, 11, 1});
  const auto three = gyro::check_axioms(m, sampler, {2000, 1e-9, 11, 3});
  EXPECT_TRUE(one.passed());
  ASSERT_EQ(one.checks.size(), three.checks.size());
  for (std::size_t k = 0; k < one.checks.size(); ++k) {
    EXPECT_EQ(one.checks[k].max_residual, three.checks[k].max_residual);
    EXPECT_EQ(one.checks[k].worst_sample, three.checks[k].worst_sample);
  }
  EXPECT_EQ(one.at(gyro::Axiom::lemma4).status, gyro::Status::pass);
}

TEST(Mobius, CheckRejectsZeroSamples) {
  const MobiusModel m;
  auto sampler = [&m](std::mt19937_64& rng) { return m.sample_in_ball(rng, 0.5); };
  EXPECT_THROW(gyro::check_axioms(m, sampler, {0, 1e-9, 0, 1}), gyro::Error);
}

}  // namespace
