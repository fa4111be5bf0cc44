#include "gyro/finite/subgyrogroups.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "gyro/error.hpp"

namespace gyro::finite {

namespace {

void require_same_carrier(const Gyrogroup& g, const SubsetMask& h) {
  if (h.order() != g.order())
    throw Error(ErrorKind::invalid_argument,
                "subset carrier has order " + std::to_string(h.order()) + ", gyrogroup has " +
                    std::to_string(g.order()));
}

SubsetMask left_coset(const Gyrogroup& g, int a, const SubsetMask& h) {
  SubsetMask out(g.order());
  h.for_each([&](int x) { out.insert(g.op(a, x)); });
  return out;
}

}  // namespace

bool is_subgyrogroup(const Gyrogroup& g, const SubsetMask& h) {
  require_same_carrier(g, h);
  if (h.empty()) throw Error(ErrorKind::empty_subset, "subgyrogroup candidate is empty");
  bool closed = true;
  h.for_each([&](int a) {
    if (!closed) return;
    if (!h.contains(g.inv(a))) closed = false;
    h.for_each([&](int b) {
      if (closed && !h.contains(g.op(a, b))) closed = false;
    });
  });
  return closed;
}

bool is_l_subgyrogroup(const Gyrogroup& g, const SubsetMask& h) {
  if (!is_subgyrogroup(g, h))
    throw Error(ErrorKind::not_a_subgyrogroup, h.to_string() + " is not a subgyrogroup");
  for (int a = 0; a < g.order(); ++a) {
    bool invariant = true;
    h.for_each([&](int x) {
      if (!invariant) return;
      const GyrationMap gyr = gyr_table(g, a, x);
      SubsetMask image(g.order());
      h.for_each([&](int z) { image.insert(gyr.perm[z]); });
      invariant = image == h;
    });
    if (!invariant) return false;
  }
  return true;
}

SubsetMask subgyrogroup_closure(const Gyrogroup& g, const SubsetMask& generators) {
  require_same_carrier(g, generators);
  SubsetMask closed = generators;
  closed.insert(g.identity());
  std::vector<int> members = closed.elements();
  // Every new member is combined with every existing one, in both orders.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const int a = members[i];
    auto add = [&](int x) {
      if (!closed.contains(x)) {
        closed.insert(x);
        members.push_back(x);
      }
    };
    add(g.inv(a));
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.op(a, members[j]));
      add(g.op(members[j], a));
    }
  }
  return closed;
}

std::vector<SubgyrogroupInfo> enumerate_subgyrogroups(const Gyrogroup& g, int max_order) {
  if (g.order() > max_order)
    throw Error(ErrorKind::order_too_large,
                "subgyrogroup enumeration is limited to order " + std::to_string(max_order));
  if (g.order() > SubsetMask::kMaxOrder)
    throw Error(ErrorKind::order_too_large, "subsets are limited to order 64");

  std::set<SubsetMask> found;
  std::vector<SubsetMask> frontier{subgyrogroup_closure(g, SubsetMask(g.order()))};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<SubsetMask> next;
    for (const SubsetMask& s : frontier) {
      for (int a = 0; a < g.order(); ++a) {
        if (s.contains(a)) continue;
        SubsetMask grown = s;
        grown.insert(a);
        SubsetMask c = subgyrogroup_closure(g, grown);
        if (found.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }

  std::vector<SubgyrogroupInfo> out;
  out.reserve(found.size());
  for (const SubsetMask& s : found) out.push_back({s, is_l_subgyrogroup(g, s)});
  std::sort(out.begin(), out.end(), [](const SubgyrogroupInfo& a, const SubgyrogroupInfo& b) {
    if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
    return a.subset.bits() < b.subset.bits();
  });
  return out;
}

SubsetMask CosetPartition::preimage(std::uint64_t cell_bits) const {
  SubsetMask out(subgroup.order());
  for (std::size_t a = 0; a < quotient_map.size(); ++a)
    if ((cell_bits >> quotient_map[a]) & 1U) out.insert(static_cast<int>(a));
  return out;
}

CosetPartition coset_partition(const Gyrogroup& g, const SubsetMask& h, bool allow_non_l) {
  if (!is_subgyrogroup(g, h))
    throw Error(ErrorKind::not_a_subgyrogroup, h.to_string() + " is not a subgyrogroup");
  CosetPartition p{h, is_l_subgyrogroup(g, h), {}, {}, {}, {}};
  if (!p.l_subgyrogroup && !allow_non_l)
    throw Error(ErrorKind::not_an_l_subgyrogroup, h.to_string() + " is not an L-subgyrogroup");

  const int n = g.order();
  p.quotient_map.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    const SubsetMask coset = left_coset(g, a, h);
    auto it = std::find(p.cells.begin(), p.cells.end(), coset);
    if (it == p.cells.end()) {
      p.cells.push_back(coset);
      p.representatives.push_back(a);
      it = std::prev(p.cells.end());
    }
    p.quotient_map[a] = static_cast<int>(it - p.cells.begin());
  }

  PartitionValidation& v = p.validation;
  SubsetMask seen(n);
  v.disjoint = true;
  v.equal_sizes = true;
  for (const SubsetMask& c : p.cells) {
    if (!(c & seen).empty()) v.disjoint = false;
    seen = seen | c;
    if (c.size() != h.size()) v.equal_sizes = false;
  }
  v.covers = seen == SubsetMask::full(n);
  v.fiber_identity = true;
  for (int a = 0; a < n && v.fiber_identity; ++a) {
    const SubsetMask fiber = p.preimage(std::uint64_t{1} << p.quotient_map[a]);
    v.fiber_identity = fiber == p.cells[p.quotient_map[a]];
  }
  return p;
}

std::vector<std::uint64_t> quotient_topology(const CosetPartition& partition,
                                             std::span<const SubsetMask> open_sets) {
  const std::size_t k = partition.cells.size();
  if (k > 20)
    throw Error(ErrorKind::order_too_large, "quotient topology is limited to 20 cells");
  const std::set<SubsetMask> open(open_sets.begin(), open_sets.end());
  std::vector<std::uint64_t> out;
  for (std::uint64_t cells = 0; cells < (std::uint64_t{1} << k); ++cells)
    if (open.contains(partition.preimage(cells))) out.push_back(cells);
  return out;
}

}  // namespace gyro::finite
