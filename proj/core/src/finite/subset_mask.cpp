#include "gyro/finite/subset_mask.hpp"

#include "gyro/error.hpp"

namespace gyro::finite {

namespace {

std::uint64_t carrier_bits(int order) {
  return order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
}

}  // namespace

SubsetMask::SubsetMask(int order, std::uint64_t bits) : order_(order), bits_(bits) {
  if (order < 1) throw Error(ErrorKind::invalid_argument, "subset carrier must be nonempty");
  if (order > kMaxOrder)
    throw Error(ErrorKind::order_too_large, "subsets are limited to carriers of order " +
                                                std::to_string(kMaxOrder));
  if ((bits & ~carrier_bits(order)) != 0)
    throw Error(ErrorKind::invalid_argument, "subset has members outside the carrier");
}

SubsetMask SubsetMask::of(int order, std::initializer_list<int> elements) {
  return of(order, std::span<const int>(elements.begin(), elements.size()));
}

SubsetMask SubsetMask::of(int order, std::span<const int> elements) {
  SubsetMask m(order);
  for (int x : elements) m.insert(x);
  return m;
}

SubsetMask SubsetMask::full(int order) {
  SubsetMask m(order);
  m.bits_ = carrier_bits(order);
  return m;
}

void SubsetMask::insert(int x) {
  if (x < 0 || x >= order_)
    throw Error(ErrorKind::invalid_element,
                "element " + std::to_string(x) + " is outside 0.." + std::to_string(order_ - 1));
  bits_ |= std::uint64_t{1} << x;
}

void SubsetMask::erase(int x) {
  if (x >= 0 && x < order_) bits_ &= ~(std::uint64_t{1} << x);
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&out](int x) { out.push_back(x); });
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int x) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  });
  return s + "}";
}

}  // namespace gyro::finite
