#pragma once

#include <optional>
#include <vector>

#include "gyro/axiom_report.hpp"
#include "gyro/finite/cayley_table.hpp"

namespace gyro::finite {

/// Exhaustive check of a table against the gyrogroup axioms and lemmas.
///
/// The identity is the table's two-sided identity when one exists and 0
/// otherwise; the inverse of a is the unique b with b + a = identity. When
/// some element has no unique left inverse, gyrations are undefined and every
/// check after G2 is reported as skipped. Checks are listed in the order
/// latin, G1, G2, G3-equation, G3-automorphism, G4, lemma-1 .. lemma-5; each
/// failure carries the first failing tuple in lexicographic order.
AxiomReport verify_gyrogroup(const CayleyTable& t);

/// The permutation z -> gyr[a,b](z) of a finite carrier.
struct GyrationMap {
  int a = 0;
  int b = 0;
  std::vector<int> perm;

  bool is_identity() const noexcept;
};

/// A table that passed verify_gyrogroup. Satisfies IndexedGyroModel.
class Gyrogroup {
 public:
  using element_type = int;

  /// Throws invalid-table when verification fails.
  static Gyrogroup from_table(CayleyTable t);

  const CayleyTable& table() const noexcept { return table_; }
  int order() const noexcept { return table_.order(); }
  int identity() const noexcept { return identity_; }
  int op(int a, int b) const noexcept { return table_(a, b); }
  int inv(int a) const noexcept { return inverse_[a]; }
  double distance(int a, int b) const noexcept { return a == b ? 0.0 : 1.0; }
  std::vector<double> coords(int a) const { return {static_cast<double>(a)}; }

  /// Throws invalid-element for elements outside the carrier.
  void require_element(int a) const;

  /// True when every gyration is the identity map, i.e. the table is a group.
  bool gyrations_trivial() const;

 private:
  Gyrogroup(CayleyTable t, int identity, std::vector<int> inverse)
      : table_(std::move(t)), identity_(identity), inverse_(std::move(inverse)) {}

  CayleyTable table_;
  int identity_;
  std::vector<int> inverse_;
};

GyrationMap gyr_table(const Gyrogroup& g, int a, int b);

/// gyr_table without the verification precondition. Needs a unique left
/// inverse for every element (throws invalid-table otherwise).
GyrationMap gyr_table_raw(const CayleyTable& t, int a, int b);

}  // namespace gyro::finite
