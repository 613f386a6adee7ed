#pragma once

// Coverage/capacity reconciliation. The only coupling between the two legs is
// the cell load: the coverage leg needs an assumed load for its interference
// margin, the capacity leg produces the actual load. A damped fixed-point
// iteration on that load closes the loop.

#include <cstdint>
#include <string_view>

#include "gnbdim/capacity.hpp"
#include "gnbdim/coverage.hpp"
#include "gnbdim/nr_model.hpp"

namespace gnbdim {

inline constexpr double kDefaultEta = 0.6;

struct BalanceThresholds {
  double eps_radius = 0.10;  // relative
  double eps_load = 0.05;    // absolute
  int max_iter = 100;
  double damping = 0.5;
  double eta = kDefaultEta;  // neighbour coupling in the noise-rise margin

  // Throws BadThresholds.
  void validate() const;
};

enum class Classification { Balanced, UnderDimensioned, OverDimensioned };

std::string_view to_string(Classification c) noexcept;

// -10 log10(1 - eta * load). Throws LoadTooHigh once eta * load >= 1 - 1e-9,
// and for negative load.
double interference_margin_db(double load, double eta = kDefaultEta);

// Balanced iff |r_cov - r_cap| / max(r_cov, r_cap) <= eps_radius; otherwise
// under-dimensioned when the coverage range is the larger one. An infinite
// capacity range (no subscribers) is over-dimensioned against any finite
// coverage range.
Classification classify(double r_cov_km, double r_cap_km, const BalanceThresholds& thresholds);

// Bandwidth over which the cell-edge receiver sensitivity is computed.
enum class EdgeBandwidth { OnePrb, FullBwp };

double edge_bandwidth_hz(const NrConfig& cfg, EdgeBandwidth edge);

struct FinalPlan {
  double deployment_radius_km;
  std::uint64_t max_subs_per_cell;
  std::uint64_t n_sites_coverage;
  std::uint64_t n_sites_capacity;
  std::uint64_t n_sites_final;
  double utilization;  // offered traffic over deployed capacity
};

FinalPlan final_plan(double r_cov_km, double r_cap_km, double area_km2, double rho_subs_per_km2,
                     const TrafficModel& traffic, double capacity_mbps);

struct DimensioningResult {
  double mapl_db = 0.0;
  double interference_margin_db = 0.0;
  double r_cov_km = 0.0;
  double r_cap_km = 0.0;  // +inf when rho == 0
  double assumed_load = 0.0;
  double actual_load = 0.0;
  Classification classification = Classification::Balanced;
  double capacity_mbps = 0.0;
  FinalPlan plan{};
  int iterations = 0;
  bool converged = false;

  std::uint64_t n_sites_final() const noexcept { return plan.n_sites_final; }
};

struct BalanceProblem {
  LinkBudget link;
  PropagationModel model;
  double f_mhz = 3500.0;
  NrConfig nr;
  TrafficModel traffic;
  double rho_subs_per_km2 = 0.0;
  double area_km2 = 49.0;
  EdgeBandwidth edge = EdgeBandwidth::OnePrb;
};

// Non-convergence is reported through `converged`, never thrown.
DimensioningResult iterate_balance(const BalanceProblem& problem, const BalanceThresholds& thresholds);

// One evaluation of the loop body: actual load given an assumed load.
double actual_load_for(const BalanceProblem& problem, double assumed_load, double eta);

}  // namespace gnbdim
