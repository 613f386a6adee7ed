#include "gnbdim/economics.hpp"

#include <cmath>

#include <fmt/format.h>

#include "gnbdim/error.hpp"

namespace gnbdim {

void CostModel::validate() const {
  if (!(capex_per_site >= 0.0) || !(opex_per_site_per_year >= 0.0)) {
    fail(ErrorCode::BadCostModel, "site costs must be >= 0");
  }
  if (!(capex_amortization_years > 0.0)) fail(ErrorCode::BadCostModel, "amortization period must be > 0");
  if (!(area_multiplier > 0.0) || !std::isfinite(area_multiplier)) {
    fail(ErrorCode::BadCostModel, "area multiplier must be > 0");
  }
}

double annual_cost(std::uint64_t n_sites, const CostModel& cost) {
  cost.validate();
  const double per_site = cost.capex_per_site / cost.capex_amortization_years + cost.opex_per_site_per_year;
  return static_cast<double>(n_sites) * per_site * cost.area_multiplier;
}

CostReport cost_per_bit(std::uint64_t n_sites, double utilization, double capacity_mbps, const CostModel& cost,
                        double duty_fraction) {
  if (!(capacity_mbps > 0.0)) fail(ErrorCode::BadCostModel, "capacity must be > 0");
  if (!(duty_fraction > 0.0 && duty_fraction <= 1.0)) fail(ErrorCode::BadCostModel, "duty fraction must be in (0, 1]");
  if (!(utilization >= 0.0)) fail(ErrorCode::BadCostModel, "utilization must be >= 0");

  CostReport report;
  report.annual_cost = annual_cost(n_sites, cost);
  report.mean_utilization = utilization;
  report.annual_bits =
      static_cast<double>(n_sites) * capacity_mbps * utilization * duty_fraction * kSecondsPerYear * 1e6;
  if (report.annual_bits > 0.0) report.cost_per_bit = report.annual_cost / report.annual_bits;
  return report;
}

CostReport cost_per_bit(const DimensioningResult& result, double capacity_mbps, const CostModel& cost,
                        double duty_fraction) {
  return cost_per_bit(result.plan.n_sites_final, result.plan.utilization, capacity_mbps, cost, duty_fraction);
}

AreaComparison compare_areas(const CostReport& dense, const CostReport& sparse) {
  if (!dense.cost_per_bit || !sparse.cost_per_bit) {
    fail(ErrorCode::UndefinedCost, "cost per bit is undefined for an area without traffic");
  }
  return {*dense.cost_per_bit < *sparse.cost_per_bit, *sparse.cost_per_bit / *dense.cost_per_bit};
}

}  // namespace gnbdim
