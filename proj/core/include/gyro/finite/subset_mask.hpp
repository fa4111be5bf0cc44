#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gyro::finite {

/// A subset of the carrier {0..order-1}, stored as a bitmask.
class SubsetMask {
 public:
  static constexpr int kMaxOrder = 64;

  /// Throws order-too-large above kMaxOrder and invalid-argument when
  /// `bits` has members outside the carrier.
  explicit SubsetMask(int order, std::uint64_t bits = 0);

  static SubsetMask of(int order, std::initializer_list<int> elements);
  static SubsetMask of(int order, std::span<const int> elements);
  static SubsetMask full(int order);
  static SubsetMask singleton(int order, int x) { return of(order, {x}); }

  int order() const noexcept { return order_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(int x) const noexcept {
    return x >= 0 && x < order_ && ((bits_ >> x) & 1U) != 0;
  }
  void insert(int x);
  void erase(int x);

  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_subset_of(const SubsetMask& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<int> elements() const;
  /// "{0,2,5}"
  std::string to_string() const;

  SubsetMask operator&(const SubsetMask& o) const { return SubsetMask(order_, bits_ & o.bits_); }
  SubsetMask operator|(const SubsetMask& o) const { return SubsetMask(order_, bits_ | o.bits_); }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
  friend std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  /// Calls f(x) for every member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) f(std::countr_zero(rest));
  }

 private:
  int order_;
  std::uint64_t bits_;
};

}  // namespace gyro::finite
