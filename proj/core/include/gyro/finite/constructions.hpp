#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gyro/finite/cayley_table.hpp"
#include "gyro/finite/gyrogroup.hpp"
#include "gyro/finite/subset_mask.hpp"

namespace gyro::finite {

/// Coordinatewise product; the pair (i, j) is encoded as i * g2.order() + j.
/// Throws order-too-large when the product exceeds `max_order`.
CayleyTable product_gyrogroup(const Gyrogroup& g1, const Gyrogroup& g2, int max_order = 4096);

/// { a + b : a in A, b in B }
SubsetMask set_oplus(const Gyrogroup& g, const SubsetMask& a, const SubsetMask& b);

/// x + A
SubsetMask left_translate(const Gyrogroup& g, int x, const SubsetMask& a);

/// { -a : a in A }
SubsetMask set_inverse(const Gyrogroup& g, const SubsetMask& a);

inline bool is_symmetric(const Gyrogroup& g, const SubsetMask& u) {
  return set_inverse(g, u) == u;
}

/// The distinct translates x + U, in order of the first x producing each.
/// Throws identity-not-in-U when the identity is not in U.
std::vector<SubsetMask> translate_cover(const Gyrogroup& g, const SubsetMask& u);

/// st(x, cover): union of the members containing x. Throws point-uncovered
/// when no member contains x.
SubsetMask star_of_point(std::span<const SubsetMask> cover, int x);

/// A pair (p, q) with p in st(q, {x + U}) but p outside q + (U + U).
struct StarChainViolation {
  int p = 0;
  int q = 0;
};

/// Checks the star containment for every p, q. U must contain the identity
/// (identity-not-in-U) and be symmetric (invalid-argument).
std::optional<StarChainViolation> find_star_chain_violation(const Gyrogroup& g,
                                                            const SubsetMask& u);

/// First x with x + (A n B) != (x + A) n (x + B).
std::optional<int> find_translate_intersection_violation(const Gyrogroup& g,
                                                         const SubsetMask& a,
                                                         const SubsetMask& b);

}  // namespace gyro::finite
