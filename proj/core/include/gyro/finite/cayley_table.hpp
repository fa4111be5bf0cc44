#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gyro::finite {

/// An n x n operation table over {0..n-1}; entry (a, b) encodes a + b.
/// Construction guarantees the table is square with in-range entries; the
/// algebraic properties are checked separately.
class CayleyTable {
 public:
  /// Throws malformed-table on ragged rows, an empty table or an entry
  /// outside {0..n-1}.
  explicit CayleyTable(const std::vector<std::vector<int>>& rows);
  CayleyTable(int order, std::vector<int> cells);

  template <class F>
  static CayleyTable generate(int order, F&& f) {
    std::vector<int> cells;
    cells.reserve(order * order);
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) cells.push_back(f(a, b));
    return CayleyTable(order, std::move(cells));
  }

  int order() const noexcept { return n_; }
  int operator()(int a, int b) const noexcept {
    return cells_[a * n_ + b];
  }
  std::span<const int> row(int a) const noexcept {
    return std::span<const int>(cells_).subspan(a * n_, n_);
  }
  const std::vector<int>& cells() const noexcept { return cells_; }
  std::vector<std::vector<int>> rows() const;

  bool contains(int a) const noexcept { return a >= 0 && a < n_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
  friend std::strong_ordering operator<=>(const CayleyTable& a, const CayleyTable& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  int n_ = 0;
  std::vector<int> cells_;
};

/// A repeated entry in a row (`in_row`) or column: line index and the two
/// positions along it holding the same value.
struct LatinViolation {
  bool in_row = true;
  int line = 0;
  int first = 0;
  int second = 0;
};

std::optional<LatinViolation> find_latin_violation(const CayleyTable& t);
inline bool is_latin(const CayleyTable& t) { return !find_latin_violation(t).has_value(); }

/// The two-sided identity, if any.
std::optional<int> find_identity(const CayleyTable& t);

bool is_associative(const CayleyTable& t);

/// Table of the same operation after renaming each element a to perm[a].
CayleyTable relabel(const CayleyTable& t, std::span<const int> perm);

/// Relabels so that the identity becomes 0 (swapping it with 0). Throws
/// invalid-table when there is no two-sided identity.
CayleyTable normalize_identity(const CayleyTable& t);

}  // namespace gyro::finite
