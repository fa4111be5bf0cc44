#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "gyro/finite/cayley_table.hpp"

namespace gyro::finite {

struct SearchOptions {
  unsigned jobs = 1;
  std::uint64_t max_nodes = 0;             // 0: unlimited
  std::chrono::milliseconds time_limit{0};  // 0: unlimited
  bool allow_large = false;                 // permits orders 7 and 8
};

struct SearchResult {
  int order = 0;
  std::vector<CayleyTable> tables;  // canonical forms, ascending
  bool complete = true;             // false when the budget ran out
  std::uint64_t nodes = 0;          // search-tree nodes visited
};

inline constexpr int kDefaultSearchMaxOrder = 6;
inline constexpr int kSearchHardMaxOrder = 8;

/// Every gyrogroup of order n up to relabelings fixing the identity, which is
/// normalised to 0. Backtracks over Latin squares with the identity row and
/// column fixed, propagating inverse pairing and left cancellation, and
/// rejecting a partial table as soon as a fully determined instance of the
/// automorphism law or the left loop property fails.
///
/// Subtrees below each completion of row 1 are distributed over `jobs`
/// workers; the merged output is independent of `jobs`. Throws
/// order-too-large for n outside 1..6 (1..8 with allow_large).
SearchResult search_gyrogroups(int n, const SearchOptions& options = {});

/// Lexicographically smallest relabeling of t fixing 0. Tables whose
/// identity is not 0 are normalised first (see normalize_identity).
CayleyTable canonical_form(const CayleyTable& t);

}  // namespace gyro::finite
