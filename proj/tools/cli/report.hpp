#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gyro/axiom_report.hpp"
#include "gyro/finite/cayley_table.hpp"
#include "gyro/finite/subgyrogroups.hpp"
#include "gyro/topo.hpp"

namespace gyro::cli {

using Json = nlohmann::ordered_json;

/// "sha256:<hex>" of the given bytes.
std::string sha256_digest(std::string_view bytes);

/// Report skeleton: tool, version, command and input digest, in that order.
Json report_header(std::string_view command, std::string_view input_digest);

Json to_json(const AxiomReport& report);
Json to_json(const finite::CayleyTable& table);
Json to_json(const finite::SubsetMask& subset);
Json to_json(const finite::CosetPartition& partition);
Json to_json(const topo::ChainReport& report);
Json to_json(const topo::BaseCheckResult& result);

/// Two-space indented JSON followed by a newline.
std::string serialize(const Json& report);

}  // namespace gyro::cli
