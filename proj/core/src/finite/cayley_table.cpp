#include "gyro/finite/cayley_table.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gyro/error.hpp"

namespace gyro::finite {

namespace {

std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  std::vector<int> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw Error(ErrorKind::malformed_table, "row " + std::to_string(r) + " has " +
                                                  std::to_string(rows[r].size()) +
                                                  " entries, expected " + std::to_string(n));
    cells.insert(cells.end(), rows[r].begin(), rows[r].end());
  }
  return cells;
}

}  // namespace

CayleyTable::CayleyTable(const std::vector<std::vector<int>>& rows)
    : CayleyTable(static_cast<int>(rows.size()), flatten(rows)) {}

CayleyTable::CayleyTable(int order, std::vector<int> cells) : n_(order), cells_(std::move(cells)) {
  if (n_ < 1) throw Error(ErrorKind::malformed_table, "table order must be at least 1");
  if (cells_.size() != static_cast<std::size_t>(n_) * n_)
    throw Error(ErrorKind::malformed_table, "table of order " + std::to_string(n_) + " needs " +
                                                std::to_string(n_ * n_) + " cells");
  for (int i = 0; i < n_ * n_; ++i) {
    if (cells_[i] < 0 || cells_[i] >= n_)
      throw Error(ErrorKind::malformed_table,
                  "entry (" + std::to_string(i / n_) + ", " + std::to_string(i % n_) + ") = " +
                      std::to_string(cells_[i]) + " is outside 0.." + std::to_string(n_ - 1));
  }
}

std::vector<std::vector<int>> CayleyTable::rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(n_);
  for (int a = 0; a < n_; ++a) out.emplace_back(row(a).begin(), row(a).end());
  return out;
}

std::optional<LatinViolation> find_latin_violation(const CayleyTable& t) {
  const int n = t.order();
  std::vector<int> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int c = 0; c < n; ++c) {
      int& s = seen[t(r, c)];
      if (s >= 0) return LatinViolation{true, r, s, c};
      s = c;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int r = 0; r < n; ++r) {
      int& s = seen[t(r, c)];
      if (s >= 0) return LatinViolation{false, c, s, r};
      s = r;
    }
  }
  return std::nullopt;
}

std::optional<int> find_identity(const CayleyTable& t) {
  const int n = t.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = t(e, a) == a && t(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_associative(const CayleyTable& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
  return true;
}

CayleyTable relabel(const CayleyTable& t, std::span<const int> perm) {
  const int n = t.order();
  if (static_cast<int>(perm.size()) != n)
    throw Error(ErrorKind::invalid_argument, "relabeling has the wrong length");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p])
      throw Error(ErrorKind::invalid_argument, "relabeling is not a permutation");
    hit[p] = true;
  }
  std::vector<int> cells(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      cells[perm[a] * n + perm[b]] = perm[t(a, b)];
  return CayleyTable(n, std::move(cells));
}

CayleyTable normalize_identity(const CayleyTable& t) {
  const auto e = find_identity(t);
  if (!e) throw Error(ErrorKind::invalid_table, "table has no two-sided identity");
  std::vector<int> perm(t.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[*e]);
  return relabel(t, perm);
}

}  // namespace gyro::finite
