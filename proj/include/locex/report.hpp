#pragma once

#include <string>

#include <json.hpp>

#include "locex/extract.hpp"
#include "locex/oracle.hpp"

namespace locex {

/// Canonical JSON views of the result types. Key order is fixed
/// (insertion order) and floats use shortest round-trip formatting, so
/// identical runs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
Json to_json(const ObjectiveSpec& spec);
Json to_json(const CommunityRecord& rec);
Json to_json(const ExtractionReport& rep);
Json to_json(const SweepResult& sweep, const Graph& g);
Json to_json(const SignificanceResult& sig);
Json to_json(const OracleResult& res, const Graph& g);

/// Document envelope: tool/version header, invocation echo, graph
/// summary, payload, warnings.
Json make_document(const std::string& command, const Json& parameters,
                   const Graph& g, const Json& payload,
                   const std::vector<std::string>& warnings);

std::string tool_version();

}  // namespace locex
