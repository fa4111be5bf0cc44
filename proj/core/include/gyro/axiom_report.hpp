#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gyro {

enum class Axiom {
  latin,            // rows and columns are permutations (finite tables only)
  g1,               // two-sided identity
  g2,               // two-sided inverses
  g3_equation,      // x+(y+z) = (x+y)+gyr[x,y](z)
  g3_automorphism,  // gyr[x,y] is an automorphism
  g4,               // left loop property gyr[x+y,y] = gyr[x,y]
  lemma1,           // left cancellation
  lemma2,           // right cancellation
  lemma3,           // (x + gyr[x,y](-y)) + y = x
  lemma4,           // gyr_apply agrees with the model's closed form
  lemma5,           // right-shift law
};

std::string_view to_string(Axiom axiom) noexcept;

enum class Status { pass, fail, skipped };

std::string_view to_string(Status status) noexcept;

struct CheckResult {
  Axiom axiom{};
  Status status = Status::pass;
  // Finite models: the first failing tuple in lexicographic order.
  std::vector<int> witness;
  // Continuous models: the largest distance between the two sides and the
  // sample attaining it (element coordinates in argument order).
  double max_residual = 0.0;
  std::vector<std::vector<double>> worst_sample;
  std::string note;
};

struct AxiomReport {
  std::vector<CheckResult> checks;
  bool exhaustive = false;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;

  /// True when no check failed; skipped checks do not count against it.
  bool passed() const noexcept;

  const CheckResult* find(Axiom axiom) const noexcept;
  const CheckResult& at(Axiom axiom) const;
};

}  // namespace gyro
