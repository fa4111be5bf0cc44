#include "gyro/axiom_report.hpp"

#include <algorithm>

#include "gyro/error.hpp"

namespace gyro {

std::string_view to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::latin: return "latin";
    case Axiom::g1: return "G1";
    case Axiom::g2: return "G2";
    case Axiom::g3_equation: return "G3-equation";
    case Axiom::g3_automorphism: return "G3-automorphism";
    case Axiom::g4: return "G4";
    case Axiom::lemma1: return "lemma-1";
    case Axiom::lemma2: return "lemma-2";
    case Axiom::lemma3: return "lemma-3";
    case Axiom::lemma4: return "lemma-4";
    case Axiom::lemma5: return "lemma-5";
  }
  return "unknown";
}

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

bool AxiomReport::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == Status::fail; });
}

const CheckResult* AxiomReport::find(Axiom axiom) const noexcept {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [axiom](const CheckResult& c) { return c.axiom == axiom; });
  return it == checks.end() ? nullptr : &*it;
}

const CheckResult& AxiomReport::at(Axiom axiom) const {
  if (const CheckResult* c = find(axiom)) return *c;
  throw Error(ErrorKind::invalid_argument,
              "report has no entry for " + std::string(to_string(axiom)));
}

}  // namespace gyro
