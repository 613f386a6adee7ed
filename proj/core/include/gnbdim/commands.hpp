#pragma once

// The ingest / density / dimension pipeline behind the gnbdim tool. Each
// command writes its files under the configured output directory, prints a
// JSON document on `out`, diagnostics on `err`, and returns the process exit
// code:
//
//   0  success, including a load iteration that did not converge
//   2  unreadable input, bad format, bad config, window larger than the grid
//   3  infeasible design (negative MAPL, range out of bracket, zero subscribers)

#include <iosfwd>
#include <string>
#include <string_view>

#include "gnbdim/config.hpp"

namespace gnbdim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInfeasible = 3;

std::string_view version() noexcept;

// Reads GNBDIM_LOG (trace|debug|info|warn|error|off) and routes logging to
// stderr.
void configure_logging_from_env();

// Writes records.csv (validated, filtered) when out_dir is set; prints the
// ingest report.
int cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& err);

// Writes grid.csv, grid.geojson and fivegda.geojson; prints the 5GDA.
int cmd_density(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full pipeline. Writes summary.json and sites.geojson next to the density
// outputs, and prints the summary.
int cmd_dimension(const RunConfig& config, std::ostream& out, std::ostream& err);

// Removes the "generated_at" field, the only part of a summary that differs
// between identical runs.
std::string strip_timestamp(std::string_view summary_json);

}  // namespace gnbdim
