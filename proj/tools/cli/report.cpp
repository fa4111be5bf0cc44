#include "cli/report.hpp"

#include <array>
#include <cstdio>

#include <openssl/evp.h>

#include "cli/cli.hpp"
#include "gyro/error.hpp"

namespace gyro::cli {

std::string sha256_digest(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::invalid_argument, "sha256 digest failed");
  std::string hex = "sha256:";
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

Json report_header(std::string_view command, std::string_view input_digest) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = command;
  j["input_digest"] = input_digest;
  return j;
}

Json to_json(const AxiomReport& report) {
  Json j;
  j["passed"] = report.passed();
  j["exhaustive"] = report.exhaustive;
  j["sample_count"] = report.sample_count;
  if (!report.exhaustive) {
    j["seed"] = report.seed;
    j["tolerance"] = report.tolerance;
  }
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json e;
    e["name"] = to_string(c.axiom);
    e["status"] = to_string(c.status);
    if (report.exhaustive) {
      if (!c.witness.empty()) e["witness"] = c.witness;
    } else if (c.status != Status::skipped) {
      e["max_residual"] = c.max_residual;
      e["worst_sample"] = c.worst_sample;
    }
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const finite::CayleyTable& table) { return table.rows(); }

Json to_json(const finite::SubsetMask& subset) { return subset.elements(); }

Json to_json(const finite::CosetPartition& p) {
  Json j;
  j["subset"] = to_json(p.subgroup);
  j["l_subgyrogroup"] = p.l_subgyrogroup;
  Json cells = Json::array();
  for (const auto& c : p.cells) cells.push_back(to_json(c));
  j["cells"] = std::move(cells);
  j["representatives"] = p.representatives;
  j["quotient_map"] = p.quotient_map;
  j["validation"] = {
      {"disjoint", p.validation.disjoint},
      {"covers", p.validation.covers},
      {"equal_sizes", p.validation.equal_sizes},
      {"fiber_identity", p.validation.fiber_identity},
  };
  return j;
}

Json to_json(const topo::ChainReport& report) {
  Json j;
  j["verdict"] = to_string(report.overall());
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["tolerance"] = report.tolerance;
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    Json e;
    e["index"] = s.index;
    e["outer_radius"] = s.outer_radius;
    e["inner_radius"] = s.inner_radius;
    e["worst_modulus"] = s.worst_modulus;
    e["collinear_modulus"] = s.collinear_modulus;
    e["verdict"] = to_string(s.verdict);
    if (s.verdict == topo::Verdict::fail) e["witness"] = s.worst_triple;
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const topo::BaseCheckResult& result) {
  Json j;
  j["ok"] = result.ok;
  j["max_deviation"] = result.max_deviation;
  Json radii = Json::array();
  for (const auto& r : result.per_radius)
    radii.push_back({{"radius", r.radius}, {"ok", r.ok}, {"max_deviation", r.max_deviation}});
  j["per_radius"] = std::move(radii);
  return j;
}

std::string serialize(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace gyro::cli
