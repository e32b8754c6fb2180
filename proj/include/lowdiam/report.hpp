#pragma once

#include <string>

#include "json.hpp"
#include "lowdiam/decompose.hpp"
#include "lowdiam/embed.hpp"
#include "lowdiam/harness.hpp"
#include "lowdiam/htsd.hpp"

namespace lowdiam {

inline constexpr const char* kVersion = "1.0.0";

using Json = nlohmann::ordered_json;

// Fixed 17-significant-digit rendering; integers print without a fraction.
std::string format_number(double x);
// Serializes with format_number for every floating-point value.
std::string dump_json(const Json& j, int indent = 2);

Json to_json(const OracleConfig& cfg);
Json to_json(const CallLedger& ledger);
Json to_json(const Tsd& tsd);
Json to_json(const Htsd& h);
Json to_json(const ProjectedTree& t, const Htsd& h);
Json to_json(const Hst& t, const Htsd& h);
Json to_json(const TrialConfig& cfg);
Json to_json(const TrialStats& stats);

// Header shared by every report: version, seed and the configuration echo.
Json report_header(const std::string& command, std::uint64_t seed, const Json& config);

// edge_id,u,v,length,hits,trials,frequency,lower,upper
std::string cut_frequency_csv(const Graph& g, const TrialStats& stats);
// edge_id,u,v,length,mean_stretch
std::string edge_stretch_csv(const Graph& g, const TrialStats& stats);

// Writes to a sibling temporary and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace lowdiam
