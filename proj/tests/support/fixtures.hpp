#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gyro/finite/cayley_table.hpp"
#include "gyro/finite/gyrogroup.hpp"
#include "gyro/finite/subset_mask.hpp"
#include "gyro/finite/table_io.hpp"

namespace gyro::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(GYRO_FIXTURE_DIR) / (name + ".gyro");
}

inline finite::CayleyTable load_table(const std::string& name) {
  return finite::read_gyro_file(fixture_path(name));
}

inline finite::Gyrogroup load(const std::string& name) {
  return finite::Gyrogroup::from_table(load_table(name));
}

// Fixtures that are gyrogroups, smallest first.
inline const std::vector<std::string>& gyrogroup_fixtures() {
  static const std::vector<std::string> names = {
      "z1",    "z2",      "z3",      "z4",      "klein4",  "z5",      "s3",
      "z6",    "z7",      "z8",      "z2xz4",   "z2cubed", "d4",      "q8",
      "gyro8_a", "gyro8_b", "gyro8_c", "gyro8_d", "gyro8_e", "gyro8_f"};
  return names;
}

inline const std::vector<std::string>& group_fixtures() {
  static const std::vector<std::string> names = {"z2", "z3", "z4", "klein4", "z5", "s3"};
  return names;
}

inline finite::CayleyTable cyclic(int n) {
  return finite::CayleyTable::generate(n, [n](int a, int b) { return (a + b) % n; });
}

// Reference implementations that share no code with the library's search
// and closure routines.
namespace naive {

inline bool associative(const finite::CayleyTable& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
  return true;
}

inline bool closed(const finite::Gyrogroup& g, std::uint64_t bits) {
  const int n = g.order();
  auto in = [bits](int x) { return ((bits >> x) & 1U) != 0; };
  for (int a = 0; a < n; ++a) {
    if (!in(a)) continue;
    if (!in(g.inv(a))) return false;
    for (int b = 0; b < n; ++b)
      if (in(b) && !in(g.op(a, b))) return false;
  }
  return true;
}

// All nonempty subsets closed under + and -.
inline std::vector<std::uint64_t> subgyrogroups(const finite::Gyrogroup& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t bits = 1; bits < limit; ++bits)
    if (closed(g, bits)) out.push_back(bits);
  return out;
}

}  // namespace naive

}  // namespace gyro::testing
