#include "gnbdim/balance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "gnbdim/error.hpp"

namespace gnbdim {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double load_ceiling(double eta) { return eta > 0.0 ? 0.999 / eta : kInf; }

struct Legs {
  double mapl_db;
  double margin_db;
  double r_cov_km;
  double r_cap_km;
  double actual_load;
};

struct CapacitySide {
  double capacity_mbps;
  double r_cap_km;
};

CapacitySide capacity_side(const BalanceProblem& p) {
  const double capacity = cell_capacity_mbps(p.nr, p.traffic);
  // Checked even without subscribers: a plan whose cell cannot carry one
  // subscriber is infeasible regardless of density.
  max_subs_per_cell(capacity, p.traffic);
  const double r_cap = p.rho_subs_per_km2 > 0.0 ? capacity_radius(capacity, p.traffic, p.rho_subs_per_km2).radius_km : kInf;
  return {capacity, r_cap};
}

Legs evaluate(const BalanceProblem& p, const CapacitySide& cap, double edge_hz, double assumed, double eta) {
  LinkBudget link = p.link;
  link.interference_margin_db = interference_margin_db(assumed, eta);
  const double m = mapl(link, edge_hz);
  const double r_cov = invert_to_radius(p.model, p.f_mhz, m);
  const double r = std::min(r_cov, cap.r_cap_km);
  const double actual = offered_load(r, p.rho_subs_per_km2, p.traffic, cap.capacity_mbps);
  return {m, link.interference_margin_db, r_cov, cap.r_cap_km, actual};
}

}  // namespace

void BalanceThresholds::validate() const {
  if (!(eps_radius > 0.0) || !(eps_load > 0.0)) fail(ErrorCode::BadThresholds, "tolerances must be > 0");
  if (max_iter < 1) fail(ErrorCode::BadThresholds, "max_iter must be >= 1");
  if (!(damping > 0.0 && damping <= 1.0)) fail(ErrorCode::BadThresholds, "damping must be in (0, 1]");
  if (!(eta >= 0.0) || !std::isfinite(eta)) fail(ErrorCode::BadThresholds, "eta must be >= 0");
}

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::Balanced: return "Balanced";
    case Classification::UnderDimensioned: return "UnderDimensioned";
    case Classification::OverDimensioned: return "OverDimensioned";
  }
  return "?";
}

double interference_margin_db(double load, double eta) {
  if (!(load >= 0.0)) fail(ErrorCode::LoadTooHigh, fmt::format("cell load {} must be >= 0", load));
  if (eta * load >= 1.0 - 1e-9) {
    fail(ErrorCode::LoadTooHigh, fmt::format("eta*load = {} reaches the noise-rise pole", eta * load));
  }
  return -10.0 * std::log10(1.0 - eta * load);
}

Classification classify(double r_cov_km, double r_cap_km, const BalanceThresholds& thresholds) {
  if (r_cov_km == r_cap_km) return Classification::Balanced;
  if (std::isinf(r_cov_km) || std::isinf(r_cap_km)) {
    return r_cov_km > r_cap_km ? Classification::UnderDimensioned : Classification::OverDimensioned;
  }
  const double rel = std::abs(r_cov_km - r_cap_km) / std::max(r_cov_km, r_cap_km);
  if (rel <= thresholds.eps_radius) return Classification::Balanced;
  return r_cov_km > r_cap_km ? Classification::UnderDimensioned : Classification::OverDimensioned;
}

double edge_bandwidth_hz(const NrConfig& cfg, EdgeBandwidth edge) {
  if (cfg.bwps.empty()) fail(ErrorCode::BadConfig, "NR config needs at least one bandwidth part");
  const auto& bwp = cfg.bwps.front();
  return edge == EdgeBandwidth::OnePrb ? bwp.prb_bandwidth_hz() : bwp.occupied_hz();
}

FinalPlan final_plan(double r_cov_km, double r_cap_km, double area_km2, double rho_subs_per_km2,
                     const TrafficModel& traffic, double capacity_mbps) {
  FinalPlan plan{};
  plan.deployment_radius_km = std::min(r_cov_km, r_cap_km);
  plan.max_subs_per_cell = max_subs_per_cell(capacity_mbps, traffic);
  plan.n_sites_coverage = sites_for_coverage(area_km2, r_cov_km);
  plan.n_sites_capacity = sites_for_capacity(area_km2, rho_subs_per_km2, plan.max_subs_per_cell);
  plan.n_sites_final = std::max(plan.n_sites_coverage, plan.n_sites_capacity);
  const double offered = area_km2 * rho_subs_per_km2 * traffic.demand_per_sub_mbps;
  plan.utilization = offered / (static_cast<double>(plan.n_sites_final) * capacity_mbps);
  return plan;
}

double actual_load_for(const BalanceProblem& problem, double assumed_load, double eta) {
  return evaluate(problem, capacity_side(problem), edge_bandwidth_hz(problem.nr, problem.edge), assumed_load, eta)
      .actual_load;
}

DimensioningResult iterate_balance(const BalanceProblem& problem, const BalanceThresholds& thresholds) {
  thresholds.validate();
  problem.traffic.validate();
  problem.link.validate();
  problem.model.validate();
  if (!(problem.rho_subs_per_km2 >= 0.0)) fail(ErrorCode::NonPositiveDensity, "subscriber density must be >= 0");
  if (!(problem.area_km2 > 0.0)) fail(ErrorCode::NonPositiveArea, "deployment area must be > 0");

  const CapacitySide cap = capacity_side(problem);
  const double edge_hz = edge_bandwidth_hz(problem.nr, problem.edge);
  const double ceiling = load_ceiling(thresholds.eta);

  DimensioningResult result;
  result.capacity_mbps = cap.capacity_mbps;

  double assumed = std::min(problem.traffic.target_load, ceiling);
  Legs legs{};
  for (int it = 1; it <= thresholds.max_iter; ++it) {
    legs = evaluate(problem, cap, edge_hz, assumed, thresholds.eta);
    result.iterations = it;
    result.assumed_load = assumed;
    if (std::abs(legs.actual_load - assumed) <= thresholds.eps_load) {
      result.converged = true;
      break;
    }
    assumed += thresholds.damping * (std::clamp(legs.actual_load, 0.0, ceiling) - assumed);
  }
  if (!result.converged) {
    spdlog::warn("load iteration did not converge in {} steps (assumed {:.4f}, actual {:.4f})", thresholds.max_iter,
                 result.assumed_load, legs.actual_load);
  }

  result.mapl_db = legs.mapl_db;
  result.interference_margin_db = legs.margin_db;
  result.r_cov_km = legs.r_cov_km;
  result.r_cap_km = legs.r_cap_km;
  result.actual_load = legs.actual_load;
  result.classification = classify(legs.r_cov_km, legs.r_cap_km, thresholds);
  result.plan = final_plan(legs.r_cov_km, legs.r_cap_km, problem.area_km2, problem.rho_subs_per_km2, problem.traffic,
                           cap.capacity_mbps);
  spdlog::debug("balance: {} iterations, r_cov={:.4f} km r_cap={:.4f} km load={:.4f}", result.iterations,
                result.r_cov_km, result.r_cap_km, result.actual_load);
  return result;
}

}  // namespace gnbdim
