#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lemni/area.hpp"
#include "lemni/metrics.hpp"
#include "lemni/potential.hpp"
#include "lemni/search.hpp"

namespace lemni::io {

// Configuration JSON, either explicit roots
//   {"roots":[{"re":..,"im":..,"mult":..}], "tag":"UNIT_CIRCLE"}
// or the angles shorthand (always unit circle)
//   {"angles_over_2pi":[..], "mults":[..]}
std::string config_to_json(const RootConfiguration& config);
RootConfiguration parse_config(const std::string& text);

// Measure JSON: {"coeffs":[{"k":1,"re":..,"im":..}]}
std::string measure_to_json(const CircleMeasure& measure);
CircleMeasure parse_measure(const std::string& text);

std::string verify_to_json(const std::vector<VerifyReport>& reports);

// CSV schema: spec_id,kind,p,T,seed,radius,mean,stddev
struct AreaRow {
    std::string spec_id;
    std::string kind;  // sampler name
    AreaEstimate estimate;
};
std::string area_csv(const std::vector<AreaRow>& rows);

// CSV schema: candidate_id,angles,q,s,r,area_mean,area_std
// (angles joined by ';' inside one field)
std::string trace_csv(const std::vector<TraceRow>& rows);
std::vector<TraceRow> parse_trace_csv(const std::string& text);

// Report JSON (trace travels separately as CSV; trace_file records where).
std::string report_to_json(const SearchReport& report, const std::string& trace_file = "");
SearchReport parse_report(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::uint64_t fnv1a(const std::string& bytes);

// Run manifest: command line, seed, output file hashes. The timestamp is the
// only non-deterministic field and lives here, never in data outputs.
struct ManifestEntry {
    std::string path;
    std::uint64_t hash = 0;
};
std::string manifest_json(const std::string& command_line, std::uint64_t seed,
                          const std::vector<ManifestEntry>& outputs);

}  // namespace lemni::io
