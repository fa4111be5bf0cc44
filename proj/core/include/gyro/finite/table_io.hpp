#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gyro/finite/cayley_table.hpp"

namespace gyro::finite {

/// Parses the `.gyro` text format:
///
///     # optional comment lines, only before the header
///     n
///     n lines of n space-separated integers in 0..n-1
///
/// Blank lines are ignored. Errors are raised as parse-error with a
/// "line L, column C" prefix (1-based).
CayleyTable parse_gyro(std::string_view text);

/// Throws parse-error when the file cannot be read.
CayleyTable read_gyro_file(const std::filesystem::path& path);

/// Inverse of parse_gyro; `comment` lines are emitted with a "# " prefix.
std::string format_gyro(const CayleyTable& t, std::string_view comment = {});

void write_gyro_file(const std::filesystem::path& path, const CayleyTable& t,
                     std::string_view comment = {});

}  // namespace gyro::finite
