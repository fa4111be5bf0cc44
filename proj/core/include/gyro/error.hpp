#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gyro {

enum class ErrorKind {
  invalid_element,
  malformed_table,
  invalid_table,
  empty_subset,
  not_a_subgyrogroup,
  not_an_l_subgyrogroup,
  order_too_large,
  identity_not_in_subset,
  point_uncovered,
  parse_error,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind; every failure raised by the
/// library is one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gyro
