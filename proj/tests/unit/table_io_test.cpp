#include <filesystem>

#include <gtest/gtest.h>

#include "gyro/error.hpp"
#include "gyro/finite/table_io.hpp"
#include "support/fixtures.hpp"

namespace {

using gyro::finite::parse_gyro;

std::string parse_error(std::string_view text) {
  try {
    parse_gyro(text);
  } catch (const gyro::Error& e) {
    EXPECT_EQ(e.kind(), gyro::ErrorKind::parse_error);
    return e.what();
  }
  return "";
}

TEST(TableIo, ParsesCommentsAndBlankLines) {
  const auto t = parse_gyro("# Z2\n# second comment\n2\n\n0 1\n1 0\n");
  EXPECT_EQ(t, gyro::testing::cyclic(2));
}

TEST(TableIo, RoundTripsEveryFixture) {
  for (const auto& name : gyro::testing::gyrogroup_fixtures()) {
    const auto t = gyro::testing::load_table(name);
    EXPECT_EQ(parse_gyro(gyro::finite::format_gyro(t, "round trip\nsecond line")), t) << name;
  }
}

TEST(TableIo, ErrorsCarryPositions) {
  EXPECT_EQ(parse_error(""), "line 1, column 1: missing header line with the order n");
  EXPECT_NE(parse_error("2\n0 1\n1 x\n").find("line 3, column 3"), std::string::npos);
  EXPECT_NE(parse_error("2\n0 1\n1 2\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_error("2\n0 1\n").find("line"), std::string::npos);
  EXPECT_NE(parse_error("2\n0 1 0\n1 0\n").find("line 2"), std::string::npos);
  EXPECT_FALSE(parse_error("2\n# late comment\n0 1\n1 0\n").empty());
  EXPECT_FALSE(parse_error("0\n").empty());
}

TEST(TableIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "gyro_table_io_test.gyro";
  gyro::finite::write_gyro_file(path, gyro::testing::cyclic(5), "Z5");
  EXPECT_EQ(gyro::finite::read_gyro_file(path), gyro::testing::cyclic(5));
  std::filesystem::remove(path);
  EXPECT_THROW(gyro::finite::read_gyro_file(path), gyro::Error);
}

}  // namespace
