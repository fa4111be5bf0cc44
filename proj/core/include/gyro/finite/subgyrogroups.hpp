#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gyro/finite/gyrogroup.hpp"
#include "gyro/finite/subset_mask.hpp"

namespace gyro::finite {

/// H is closed under + and -. Throws empty-subset for H = {}.
bool is_subgyrogroup(const Gyrogroup& g, const SubsetMask& h);

/// gyr[a,h](H) = H for every a in G and h in H. Throws not-a-subgyrogroup
/// when H is not a subgyrogroup.
bool is_l_subgyrogroup(const Gyrogroup& g, const SubsetMask& h);

/// Smallest subgyrogroup containing `generators` and the identity.
SubsetMask subgyrogroup_closure(const Gyrogroup& g, const SubsetMask& generators);

struct SubgyrogroupInfo {
  SubsetMask subset;
  bool is_l = false;
};

/// Every subgyrogroup of g, found by closing generating sets rather than
/// filtering all 2^n subsets. Sorted by size, then by bitmask. Throws
/// order-too-large when g.order() > max_order.
std::vector<SubgyrogroupInfo> enumerate_subgyrogroups(const Gyrogroup& g, int max_order = 16);

struct PartitionValidation {
  bool disjoint = false;
  bool covers = false;
  bool equal_sizes = false;
  bool fiber_identity = false;  // pi^-1(pi(a)) = a + H for every a

  bool ok() const noexcept { return disjoint && covers && equal_sizes && fiber_identity; }
};

/// The left cosets a + H with the quotient map pi: G -> G/H.
struct CosetPartition {
  SubsetMask subgroup;
  bool l_subgyrogroup = false;
  std::vector<SubsetMask> cells;     // distinct sets a + H, ordered by representative
  std::vector<int> representatives;  // smallest a producing each cell
  std::vector<int> quotient_map;     // a -> index of the cell a + H
  PartitionValidation validation;

  /// pi^-1 of a set of cells (bit i selects cells[i]).
  SubsetMask preimage(std::uint64_t cell_bits) const;
};

/// Throws not-a-subgyrogroup, or not-an-L-subgyrogroup unless
/// `allow_non_l`; in that case the family is still computed and
/// `validation` records which partition properties hold.
CosetPartition coset_partition(const Gyrogroup& g, const SubsetMask& h, bool allow_non_l = false);

/// Quotient topology on G/H induced by a topology on G (given by its open
/// sets): every set of cells whose preimage is open. Each result is a bitmask
/// over cell indices. Limited to 20 cells.
std::vector<std::uint64_t> quotient_topology(const CosetPartition& partition,
                                             std::span<const SubsetMask> open_sets);

}  // namespace gyro::finite
