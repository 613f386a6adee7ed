#pragma once

#include <cstdint>
#include <optional>

#include "gnbdim/balance.hpp"

namespace gnbdim {

inline constexpr double kSecondsPerYear = 31'536'000.0;
inline constexpr double kDefaultDutyFraction = 0.35;

struct CostModel {
  double capex_per_site = 100'000.0;
  double capex_amortization_years = 10.0;  // straight line
  double opex_per_site_per_year = 10'000.0;
  double area_multiplier = 1.0;

  // Throws BadCostModel.
  void validate() const;
};

double annual_cost(std::uint64_t n_sites, const CostModel& cost);

struct CostReport {
  double annual_cost = 0.0;
  double annual_bits = 0.0;
  std::optional<double> cost_per_bit;  // absent when no traffic is carried
  double mean_utilization = 0.0;
};

// annual_bits = n_sites * capacity * utilization * duty * seconds/year * 1e6.
CostReport cost_per_bit(std::uint64_t n_sites, double utilization, double capacity_mbps, const CostModel& cost,
                        double duty_fraction = kDefaultDutyFraction);

CostReport cost_per_bit(const DimensioningResult& result, double capacity_mbps, const CostModel& cost,
                        double duty_fraction = kDefaultDutyFraction);

struct AreaComparison {
  bool dense_cheaper;
  double ratio;  // sparse cost per bit / dense cost per bit
};

// Throws UndefinedCost when either report has no cost per bit.
AreaComparison compare_areas(const CostReport& dense, const CostReport& sparse);

}  // namespace gnbdim
