#pragma once

#include <cstdint>
#include <set>
#include <string>

#include <json.hpp>

#include "snark/graph.hpp"

namespace snark {

// Bounds and switches for one analysis pass; field names double as the CLI
// flag and config-file keys.
struct AnalysisOptions {
  int cap = 6;           // perfect matching index cap
  int kmax = 3;          // l search bound
  int tmax = 3;          // l_M / frumious bound
  int family_bound = 5;  // scc families
  int dim_cap = 12;      // cycle space cap
  int sp_tmax = 2;       // sp / sp2 range
  std::uint64_t node_limit = 0;
  int threads = 1;
  std::set<std::string> select;  // analysis names; empty means {"info"}
};

inline const std::set<std::string> kAllAnalyses = {
    "info", "chi", "chie", "l", "lm", "frumious", "scc", "cdc", "fan-raspaud", "sp"};

// One JSON-lines record: schema, input echo, digest, and the selected
// analyses with full witness data. Every positive verdict carries a witness
// that re-validates on load. Sets "indeterminate": true when a node-limited
// solve gave up anywhere.
nlohmann::json analyze_graph(const CubicMultigraph& g, const AnalysisOptions& opts);

// Re-validates every witness in a record without re-running the searches.
// Minimality claims (scc length, chie value) and tightness of recorded cuts
// are certificates of the upper-bound side only and are not re-searched.
bool verify_record(const nlohmann::json& record, std::string* error);

// lossy spreadsheet projection of a record
std::string record_to_csv(const nlohmann::json& record);
std::string csv_header();

}  // namespace snark
