#include "gyro/error.hpp"

namespace gyro {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_element: return "invalid-element";
    case ErrorKind::malformed_table: return "malformed-table";
    case ErrorKind::invalid_table: return "invalid-table";
    case ErrorKind::empty_subset: return "empty-subset";
    case ErrorKind::not_a_subgyrogroup: return "not-a-subgyrogroup";
    case ErrorKind::not_an_l_subgyrogroup: return "not-an-L-subgyrogroup";
    case ErrorKind::order_too_large: return "order-too-large";
    case ErrorKind::identity_not_in_subset: return "identity-not-in-U";
    case ErrorKind::point_uncovered: return "point-uncovered";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace gyro
