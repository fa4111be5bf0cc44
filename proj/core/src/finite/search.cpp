#include "gyro/finite/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "gyro/error.hpp"
#include "gyro/finite/gyrogroup.hpp"

namespace gyro::finite {

namespace {

constexpr int kMaxCells = kSearchHardMaxOrder * kSearchHardMaxOrder;

// Partial table with Latin bookkeeping and an undo trail.
class PartialTable {
 public:
  explicit PartialTable(int n) : n_(n) {
    cells_.fill(-1);
    rows_.fill(0);
    cols_.fill(0);
    inv_.fill(-1);
  }

  int order() const { return n_; }
  int at(int a, int b) const { return cells_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  std::size_t trail_size() const { return trail_.size(); }

  // Assigns (a, b) = v and everything it forces. Returns false on conflict;
  // the caller undoes to its saved trail size either way.
  bool assign(int a, int b, int v) {
    queue_.clear();
    queue_.push_back({a, b, v});
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const auto [x, y, z] = queue_[i];
      if (!place(x, y, z)) return false;
    }
    return true;
  }

  void undo_to(std::size_t size) {
    while (trail_.size() > size) {
      const int idx = trail_.back();
      trail_.pop_back();
      const int a = idx / n_;
      const int b = idx % n_;
      const int v = cells_[idx];
      rows_[a] &= ~(1U << v);
      cols_[b] &= ~(1U << v);
      if (v == 0) inv_[a] = -1;
      cells_[idx] = -1;
    }
  }

  CayleyTable to_table() const {
    return CayleyTable(n_, std::vector<int>(cells_.begin(), cells_.begin() + n_ * n_));
  }

  // Every fully determined instance of the automorphism law, injectivity of
  // gyrations and the left loop property.
  bool determined_instances_hold() const {
    std::array<int, kSearchHardMaxOrder> image{};
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        unsigned hit = 0;
        for (int z = 0; z < n_; ++z) {
          image[z] = gyr(x, y, z);
          if (image[z] < 0) continue;
          if (hit & (1U << image[z])) return false;
          hit |= 1U << image[z];
        }
        for (int z1 = 0; z1 < n_; ++z1) {
          if (image[z1] < 0) continue;
          for (int z2 = 0; z2 < n_; ++z2) {
            if (image[z2] < 0) continue;
            const int s = at(z1, z2);
            if (s < 0 || image[s] < 0) continue;
            const int rhs = at(image[z1], image[z2]);
            if (rhs >= 0 && rhs != image[s]) return false;
          }
        }
        const int xy = at(x, y);
        if (xy < 0) continue;
        for (int z = 0; z < n_; ++z) {
          if (image[z] < 0) continue;
          const int lhs = gyr(xy, y, z);
          if (lhs >= 0 && lhs != image[z]) return false;
        }
      }
    }
    return true;
  }

 private:
  struct Pending {
    int a, b, v;
  };

  int gyr(int a, int b, int z) const {
    const int bz = at(b, z);
    if (bz < 0) return -1;
    const int abz = at(a, bz);
    const int ab = at(a, b);
    if (abz < 0 || ab < 0) return -1;
    const int iab = inv_[ab];
    return iab < 0 ? -1 : at(iab, abz);
  }

  bool place(int a, int b, int v) {
    const int idx = a * n_ + b;
    if (cells_[idx] >= 0) return cells_[idx] == v;
    if ((rows_[a] | cols_[b]) & (1U << v)) return false;
    cells_[idx] = static_cast<std::int8_t>(v);
    rows_[a] |= 1U << v;
    cols_[b] |= 1U << v;
    trail_.push_back(idx);

    if (v == 0) {
      // Inverses are two-sided, and row -a undoes row a.
      inv_[a] = b;
      queue_.push_back({b, a, 0});
      for (int w = 0; w < n_; ++w) {
        const int x = at(a, w);
        if (x >= 0) queue_.push_back({b, x, w});
      }
    } else if (inv_[a] >= 0) {
      queue_.push_back({inv_[a], v, b});
    }
    return true;
  }

  int n_;
  std::array<std::int8_t, kMaxCells> cells_{};
  std::array<unsigned, kSearchHardMaxOrder> rows_{};
  std::array<unsigned, kSearchHardMaxOrder> cols_{};
  std::array<int, kSearchHardMaxOrder> inv_{};
  std::vector<int> trail_;
  std::vector<Pending> queue_;
};

struct Budget {
  std::uint64_t max_nodes;
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};

  // Called once per node; flushes to the shared counter in batches.
  bool charge(std::uint64_t& local) {
    if (++local < 1024) return !exhausted.load(std::memory_order_relaxed);
    return flush(local);
  }

  bool flush(std::uint64_t& local) {
    const std::uint64_t total = nodes.fetch_add(local) + local;
    local = 0;
    if ((max_nodes != 0 && total > max_nodes) ||
        (has_deadline && std::chrono::steady_clock::now() >= deadline))
      exhausted.store(true);
    return !exhausted.load();
  }
};

class Searcher {
 public:
  explicit Searcher(Budget& budget) : budget_(budget) {}

  void run(PartialTable& t) {
    dfs(t);
    budget_.flush(local_nodes_);
  }

  std::set<CayleyTable>& found() { return found_; }

 private:
  void dfs(PartialTable& t) {
    if (!budget_.charge(local_nodes_)) return;
    const int n = t.order();
    int next = -1;
    for (int idx = 0; idx < n * n && next < 0; ++idx)
      if (t.at(idx / n, idx % n) < 0) next = idx;
    if (next < 0) {
      CayleyTable table = t.to_table();
      if (verify_gyrogroup(table).passed()) found_.insert(canonical_form(table));
      return;
    }
    const int a = next / n;
    const int b = next % n;
    for (int v = 0; v < n; ++v) {
      const std::size_t mark = t.trail_size();
      if (t.assign(a, b, v) && t.determined_instances_hold()) dfs(t);
      t.undo_to(mark);
      if (budget_.exhausted.load(std::memory_order_relaxed)) return;
    }
  }

  Budget& budget_;
  std::uint64_t local_nodes_ = 0;
  std::set<CayleyTable> found_;
};

PartialTable identity_frame(int n, bool* ok) {
  PartialTable t(n);
  *ok = true;
  for (int a = 0; a < n && *ok; ++a) *ok = t.assign(0, a, a) && t.assign(a, 0, a);
  return t;
}

// All consistent completions of row 1, each with its forced consequences.
void expand_row_one(PartialTable& t, int col, std::vector<PartialTable>& out, std::uint64_t& nodes) {
  const int n = t.order();
  while (col < n && t.at(1, col) >= 0) ++col;
  if (col == n) {
    out.push_back(t);
    return;
  }
  for (int v = 0; v < n; ++v) {
    ++nodes;
    const std::size_t mark = t.trail_size();
    if (t.assign(1, col, v) && t.determined_instances_hold()) expand_row_one(t, col + 1, out, nodes);
    t.undo_to(mark);
  }
}

}  // namespace

CayleyTable canonical_form(const CayleyTable& input) {
  const CayleyTable t = find_identity(input) == 0 ? input : normalize_identity(input);
  const int n = t.order();
  // from_new[i] is the old label of new element i; to_new is its inverse.
  std::vector<int> from_new(n);
  std::iota(from_new.begin(), from_new.end(), 0);
  std::vector<int> to_new(n);
  std::vector<int> best = t.cells();
  do {
    for (int i = 0; i < n; ++i) to_new[from_new[i]] = i;
    // Compare row-major against the best so far, stopping at the first
    // differing cell.
    int cmp = 0;
    for (int idx = 0; idx < n * n && cmp == 0; ++idx) {
      const int v = to_new[t(from_new[idx / n], from_new[idx % n])];
      cmp = (v > best[idx]) - (v < best[idx]);
    }
    if (cmp < 0) {
      for (int idx = 0; idx < n * n; ++idx)
        best[idx] = to_new[t(from_new[idx / n], from_new[idx % n])];
    }
  } while (std::next_permutation(from_new.begin() + 1, from_new.end()));
  return CayleyTable(n, std::move(best));
}

SearchResult search_gyrogroups(int n, const SearchOptions& options) {
  const int limit = options.allow_large ? kSearchHardMaxOrder : kDefaultSearchMaxOrder;
  if (n < 1 || n > limit)
    throw Error(ErrorKind::order_too_large,
                "search order must lie in 1.." + std::to_string(limit) +
                    (options.allow_large ? "" : " (7 and 8 need an explicit opt-in)"));

  SearchResult result;
  result.order = n;
  if (n == 1) {
    result.tables.push_back(CayleyTable(1, {0}));
    result.nodes = 1;
    return result;
  }

  Budget budget{options.max_nodes,
                std::chrono::steady_clock::now() + options.time_limit,
                options.time_limit.count() > 0};

  bool ok = false;
  PartialTable frame = identity_frame(n, &ok);
  std::vector<PartialTable> prefixes;
  std::uint64_t prefix_nodes = 0;
  if (ok) expand_row_one(frame, 1, prefixes, prefix_nodes);

  const auto jobs = static_cast<unsigned>(std::clamp<std::size_t>(
      options.jobs, 1, std::max<std::size_t>(prefixes.size(), 1)));
  std::vector<Searcher> searchers(jobs, Searcher(budget));
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    for (std::size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
      PartialTable t = prefixes[i];
      searchers[w].run(t);
      if (budget.exhausted.load()) return;
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }

  std::set<CayleyTable> merged;
  for (Searcher& s : searchers) merged.merge(s.found());
  result.tables.assign(merged.begin(), merged.end());
  result.nodes = budget.nodes.load() + prefix_nodes;
  result.complete = !budget.exhausted.load();
  return result;
}

}  // namespace gyro::finite
