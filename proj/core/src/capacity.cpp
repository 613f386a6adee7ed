#include "gnbdim/capacity.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "gnbdim/coverage.hpp"
#include "gnbdim/error.hpp"

namespace gnbdim {

void TrafficModel::validate() const {
  if (!(demand_per_sub_mbps > 0.0) || !std::isfinite(demand_per_sub_mbps)) {
    fail(ErrorCode::BadTrafficModel, "demand_per_sub_mbps must be > 0");
  }
  if (!(target_load > 0.0 && target_load <= 1.0)) fail(ErrorCode::BadTrafficModel, "target_load must be in (0, 1]");
  if (!(se_bps_per_hz > 0.0) || !std::isfinite(se_bps_per_hz)) {
    fail(ErrorCode::BadTrafficModel, "se_bps_per_hz must be > 0");
  }
  if (!(overhead_fraction >= 0.0 && overhead_fraction < 1.0)) {
    fail(ErrorCode::BadTrafficModel, "overhead_fraction must be in [0, 1)");
  }
  if (!(subs_per_weight > 0.0) || !std::isfinite(subs_per_weight)) {
    fail(ErrorCode::NonPositiveScale, "subs_per_weight must be > 0");
  }
}

double cell_capacity_mbps(const NrConfig& cfg, const TrafficModel& traffic) {
  double bps = 0.0;
  for (const auto& bwp : cfg.bwps) {
    bps += bwp.occupied_hz() * traffic.se_bps_per_hz * (1.0 - traffic.overhead_fraction);
  }
  return bps / 1e6;
}

std::uint64_t max_subs_per_cell(double capacity_mbps, const TrafficModel& traffic) {
  const double q = traffic.target_load * capacity_mbps / traffic.demand_per_sub_mbps;
  const double n = std::floor(q * (1.0 + 1e-12));
  if (!(n >= 1.0)) {
    fail(ErrorCode::ZeroSubscribers,
         fmt::format("one subscriber at {} Mbit/s exceeds {} of {:.3f} Mbit/s", traffic.demand_per_sub_mbps,
                     traffic.target_load, capacity_mbps));
  }
  return static_cast<std::uint64_t>(n);
}

CapacityLeg capacity_radius(double capacity_mbps, const TrafficModel& traffic, double rho_subs_per_km2) {
  if (!(rho_subs_per_km2 > 0.0)) {
    fail(ErrorCode::NonPositiveDensity, fmt::format("subscriber density {} must be > 0", rho_subs_per_km2));
  }
  const auto subs = max_subs_per_cell(capacity_mbps, traffic);
  const double area = static_cast<double>(subs) / rho_subs_per_km2;
  return {subs, area, std::sqrt(area / kHexAreaFactor)};
}

std::uint64_t sites_for_capacity(double area_km2, double rho_subs_per_km2, std::uint64_t max_subs) {
  if (max_subs == 0) fail(ErrorCode::ZeroSubscribers, "a cell must serve at least one subscriber");
  const double subs = area_km2 * rho_subs_per_km2;
  const double per_cell = static_cast<double>(max_subs);
  auto n = static_cast<std::uint64_t>(std::ceil(subs / per_cell));
  if (static_cast<double>(n) * per_cell < subs) ++n;
  return std::max<std::uint64_t>(n, 1);
}

double offered_load(double radius_km, double rho_subs_per_km2, const TrafficModel& traffic, double capacity_mbps) {
  return hex_area_km2(radius_km) * rho_subs_per_km2 * traffic.demand_per_sub_mbps / capacity_mbps;
}

}  // namespace gnbdim
