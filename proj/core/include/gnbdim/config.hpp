#pragma once

// The run configuration: one JSON document with a section per module.
//
//   {
//     "input": "towers.csv", "out": "out/", "window": "7x7",
//     "filters": {"radio": "LTE", "plmn": "310260", "bbox": [minlon, minlat, maxlon, maxlat]},
//     "grid": {"tile_km": 1.0, "origin_lon": ..., "origin_lat": ..., "n_cols": ..., "n_rows": ...},
//     "nr": {"fr": "FR1", "carrier_ghz": 3.5, "guard_fraction": 0.1,
//            "bwps": [{"mu": 1, "bw_mhz": 100, "purpose": "eMBB"}]},
//     "link_budget": {...}, "propagation": {"kind": "free_space"},
//     "traffic": {...}, "balance": {...}, "cost": {...}
//   }
//
// Unknown keys are rejected so that typos do not silently fall back to
// defaults.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "gnbdim/balance.hpp"
#include "gnbdim/economics.hpp"
#include "gnbdim/opencellid.hpp"
#include "gnbdim/traffic_density.hpp"

namespace gnbdim {

struct Window {
  std::size_t w_cols = 7;
  std::size_t h_rows = 7;
  bool operator==(const Window&) const = default;
};

// "WxH", e.g. "7x7". Throws BadConfig.
Window parse_window(std::string_view text);

struct GridOptions {
  double tile_km = 1.0;
  // Fixed raster; when unset the grid is fitted around the filtered records.
  std::optional<GridSpec> fixed;
};

struct RunConfig {
  std::optional<std::string> input;
  std::optional<std::string> out_dir;
  Window window;
  RecordFilter filters;
  GridOptions grid;
  NrConfig nr;
  LinkBudget link;
  EdgeBandwidth edge = EdgeBandwidth::OnePrb;
  PropagationModel propagation;
  TrafficModel traffic;
  BalanceThresholds balance;
  CostModel cost;
  double duty_fraction = kDefaultDutyFraction;

  double carrier_mhz() const { return nr.range.carrier_ghz * 1000.0; }

  // Runs every section's own validation. Throws on the first failure.
  void validate() const;
};

// NR defaults: FR1 at 3.5 GHz, one 100 MHz eMBB part at mu = 1.
NrConfig default_nr_config();

// Throws BadConfig for malformed JSON or unknown keys, and the owning
// module's error for out-of-range values.
RunConfig parse_run_config(std::string_view json_text);

// Normalized echo; parse_run_config(run_config_to_json(c)) reproduces c.
std::string run_config_to_json(const RunConfig& config);

}  // namespace gnbdim
