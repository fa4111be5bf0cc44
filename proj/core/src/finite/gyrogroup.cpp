#include "gyro/finite/gyrogroup.hpp"

#include <algorithm>
#include <string>

#include "gyro/check_axioms.hpp"
#include "gyro/error.hpp"

namespace gyro::finite {

namespace {

// Raw view of a table with a designated identity and left inverses.
struct TableModel {
  using element_type = int;

  const CayleyTable* t;
  int e;
  std::vector<int> inverse;

  int order() const noexcept { return t->order(); }
  int identity() const noexcept { return e; }
  int op(int a, int b) const noexcept { return (*t)(a, b); }
  int inv(int a) const noexcept { return inverse[a]; }
  double distance(int a, int b) const noexcept { return a == b ? 0.0 : 1.0; }
  std::vector<double> coords(int a) const { return {static_cast<double>(a)}; }
};

int designated_identity(const CayleyTable& t) { return find_identity(t).value_or(0); }

// Unique b with b + a = e for every a; the first element without one is
// returned through `missing`.
std::vector<int> left_inverses(const CayleyTable& t, int e, int* missing) {
  const int n = t.order();
  std::vector<int> inverse(n, -1);
  *missing = -1;
  for (int a = 0; a < n; ++a) {
    int count = 0;
    for (int b = 0; b < n; ++b) {
      if (t(b, a) == e) {
        inverse[a] = b;
        ++count;
      }
    }
    if (count != 1 && *missing < 0) *missing = a;
  }
  return inverse;
}

std::string describe_failure(const AxiomReport& report) {
  for (const CheckResult& c : report.checks) {
    if (c.status != Status::fail) continue;
    std::string s = std::string(to_string(c.axiom)) + " fails at (";
    for (std::size_t i = 0; i < c.witness.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(c.witness[i]);
    }
    return s + ")";
  }
  return "verification failed";
}

}  // namespace

AxiomReport verify_gyrogroup(const CayleyTable& t) {
  const int n = t.order();
  const int e = designated_identity(t);

  CheckResult latin;
  latin.axiom = Axiom::latin;
  if (auto v = find_latin_violation(t)) {
    latin.status = Status::fail;
    latin.max_residual = 1.0;
    latin.witness = {v->line, v->first, v->second};
    latin.note = v->in_row ? "row repeats a value at two columns"
                           : "column repeats a value at two rows";
  }

  int missing = -1;
  std::vector<int> inverse = left_inverses(t, e, &missing);

  AxiomReport report;
  if (missing < 0) {
    report = check_axioms_exhaustive(TableModel{&t, e, std::move(inverse)});
  } else {
    report.exhaustive = true;
    report.sample_count = static_cast<std::uint64_t>(n);
    CheckResult g1;
    g1.axiom = Axiom::g1;
    for (int a = 0; a < n && g1.witness.empty(); ++a)
      if (t(e, a) != a || t(a, e) != a) g1.witness = {a};
    if (!g1.witness.empty()) {
      g1.status = Status::fail;
      g1.max_residual = 1.0;
    }
    report.checks.push_back(std::move(g1));

    CheckResult g2;
    g2.axiom = Axiom::g2;
    g2.status = Status::fail;
    g2.max_residual = 1.0;
    g2.witness = {missing};
    g2.note = "element has no unique left inverse";
    report.checks.push_back(std::move(g2));

    for (Axiom a : kAlgebraicChecks) {
      if (a == Axiom::g1 || a == Axiom::g2) continue;
      CheckResult c;
      c.axiom = a;
      c.status = Status::skipped;
      c.note = "gyrations undefined without unique inverses";
      report.checks.push_back(std::move(c));
    }
  }
  if (const auto* g1 = report.find(Axiom::g1); g1 && g1->status == Status::fail)
    report.checks[0].note = "no two-sided identity; 0 used as the designated identity";
  report.checks.insert(report.checks.begin(), std::move(latin));
  return report;
}

bool GyrationMap::is_identity() const noexcept {
  for (std::size_t z = 0; z < perm.size(); ++z)
    if (perm[z] != static_cast<int>(z)) return false;
  return true;
}

Gyrogroup Gyrogroup::from_table(CayleyTable t) {
  const AxiomReport report = verify_gyrogroup(t);
  if (!report.passed())
    throw Error(ErrorKind::invalid_table, "not a gyrogroup: " + describe_failure(report));
  const int e = designated_identity(t);
  int missing = -1;
  std::vector<int> inverse = left_inverses(t, e, &missing);
  return Gyrogroup(std::move(t), e, std::move(inverse));
}

void Gyrogroup::require_element(int a) const {
  if (!table_.contains(a))
    throw Error(ErrorKind::invalid_element, "element " + std::to_string(a) + " is outside 0.." +
                                                std::to_string(order() - 1));
}

bool Gyrogroup::gyrations_trivial() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (!gyr_table(*this, a, b).is_identity()) return false;
  return true;
}

GyrationMap gyr_table(const Gyrogroup& g, int a, int b) {
  g.require_element(a);
  g.require_element(b);
  GyrationMap map{a, b, std::vector<int>(g.order())};
  for (int z = 0; z < g.order(); ++z) map.perm[z] = gyr_apply(g, a, b, z);
  return map;
}

GyrationMap gyr_table_raw(const CayleyTable& t, int a, int b) {
  if (!t.contains(a) || !t.contains(b))
    throw Error(ErrorKind::invalid_element, "gyration arguments are outside the carrier");
  const int e = designated_identity(t);
  int missing = -1;
  TableModel model{&t, e, left_inverses(t, e, &missing)};
  if (missing >= 0)
    throw Error(ErrorKind::invalid_table,
                "element " + std::to_string(missing) + " has no unique left inverse");
  GyrationMap map{a, b, std::vector<int>(t.order())};
  for (int z = 0; z < t.order(); ++z) map.perm[z] = gyr_apply(model, a, b, z);
  return map;
}

}  // namespace gyro::finite
