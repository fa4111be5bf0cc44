#include "gyro/finite/constructions.hpp"

#include <algorithm>
#include <string>

#include "gyro/error.hpp"

namespace gyro::finite {

namespace {

void require_carrier(const Gyrogroup& g, const SubsetMask& s) {
  if (s.order() != g.order())
    throw Error(ErrorKind::invalid_argument, "subset carrier does not match the gyrogroup");
}

}  // namespace

CayleyTable product_gyrogroup(const Gyrogroup& g1, const Gyrogroup& g2, int max_order) {
  const long long n = static_cast<long long>(g1.order()) * g2.order();
  if (n > max_order)
    throw Error(ErrorKind::order_too_large, "product of order " + std::to_string(n) +
                                                " exceeds the bound " + std::to_string(max_order));
  const int n2 = g2.order();
  return CayleyTable::generate(static_cast<int>(n), [&](int a, int b) {
    return g1.op(a / n2, b / n2) * n2 + g2.op(a % n2, b % n2);
  });
}

SubsetMask set_oplus(const Gyrogroup& g, const SubsetMask& a, const SubsetMask& b) {
  require_carrier(g, a);
  require_carrier(g, b);
  SubsetMask out(g.order());
  a.for_each([&](int x) { b.for_each([&](int y) { out.insert(g.op(x, y)); }); });
  return out;
}

SubsetMask left_translate(const Gyrogroup& g, int x, const SubsetMask& a) {
  g.require_element(x);
  return set_oplus(g, SubsetMask::singleton(g.order(), x), a);
}

SubsetMask set_inverse(const Gyrogroup& g, const SubsetMask& a) {
  require_carrier(g, a);
  SubsetMask out(g.order());
  a.for_each([&](int x) { out.insert(g.inv(x)); });
  return out;
}

std::vector<SubsetMask> translate_cover(const Gyrogroup& g, const SubsetMask& u) {
  require_carrier(g, u);
  if (!u.contains(g.identity()))
    throw Error(ErrorKind::identity_not_in_subset,
                "U = " + u.to_string() + " does not contain the identity");
  std::vector<SubsetMask> cover;
  for (int x = 0; x < g.order(); ++x) {
    SubsetMask t = left_translate(g, x, u);
    if (std::find(cover.begin(), cover.end(), t) == cover.end()) cover.push_back(t);
  }
  return cover;
}

SubsetMask star_of_point(std::span<const SubsetMask> cover, int x) {
  if (cover.empty()) throw Error(ErrorKind::point_uncovered, "cover is empty");
  SubsetMask star(cover.front().order());
  bool covered = false;
  for (const SubsetMask& v : cover) {
    if (v.contains(x)) {
      star = star | v;
      covered = true;
    }
  }
  if (!covered)
    throw Error(ErrorKind::point_uncovered, "no cover member contains " + std::to_string(x));
  return star;
}

std::optional<StarChainViolation> find_star_chain_violation(const Gyrogroup& g,
                                                            const SubsetMask& u) {
  const std::vector<SubsetMask> cover = translate_cover(g, u);
  if (!is_symmetric(g, u))
    throw Error(ErrorKind::invalid_argument, "U = " + u.to_string() + " is not symmetric");
  const SubsetMask uu = set_oplus(g, u, u);
  for (int q = 0; q < g.order(); ++q) {
    const SubsetMask star = star_of_point(cover, q);
    const SubsetMask bound = left_translate(g, q, uu);
    for (int p = 0; p < g.order(); ++p)
      if (star.contains(p) && !bound.contains(p)) return StarChainViolation{p, q};
  }
  return std::nullopt;
}

std::optional<int> find_translate_intersection_violation(const Gyrogroup& g,
                                                         const SubsetMask& a,
                                                         const SubsetMask& b) {
  require_carrier(g, a);
  require_carrier(g, b);
  for (int x = 0; x < g.order(); ++x) {
    if (left_translate(g, x, a & b) != (left_translate(g, x, a) & left_translate(g, x, b)))
      return x;
  }
  return std::nullopt;
}

}  // namespace gyro::finite
