#pragma once

// Cell capacity from the NR configuration and the capacity-limited cell range.

#include <cstdint>

#include "gnbdim/nr_model.hpp"

namespace gnbdim {

struct TrafficModel {
  double demand_per_sub_mbps = 1.0;  // busy hour
  double target_load = 0.8;          // (0, 1]
  double se_bps_per_hz = 4.0;
  double overhead_fraction = 0.14;   // control and reference signalling
  double subs_per_weight = 1.0;      // subscribers per crowdsourced sample

  // Throws BadTrafficModel.
  void validate() const;
};

// Sum over BWPs of n_prb * 12 * scs * SE * (1 - overhead), in Mbit/s.
double cell_capacity_mbps(const NrConfig& cfg, const TrafficModel& traffic);

struct CapacityLeg {
  std::uint64_t max_subs_per_cell;
  double cell_area_km2;
  double radius_km;
};

// Throws NonPositiveDensity for rho <= 0 and ZeroSubscribers when a single
// subscriber already exceeds target_load * capacity.
CapacityLeg capacity_radius(double capacity_mbps, const TrafficModel& traffic, double rho_subs_per_km2);

// floor(target_load * capacity / demand), throwing ZeroSubscribers when 0.
std::uint64_t max_subs_per_cell(double capacity_mbps, const TrafficModel& traffic);

// ceil(area * rho / max_subs), at least one site. Throws ZeroSubscribers for
// max_subs == 0.
std::uint64_t sites_for_capacity(double area_km2, double rho_subs_per_km2, std::uint64_t max_subs);

// Offered traffic of one hexagonal cell over its capacity; may exceed 1.
double offered_load(double radius_km, double rho_subs_per_km2, const TrafficModel& traffic, double capacity_mbps);

}  // namespace gnbdim
