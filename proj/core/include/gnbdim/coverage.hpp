#pragma once

// Link budget, propagation models and coverage-limited cell range.

#include <cstdint>
#include <string_view>

namespace gnbdim {

// Area of a regular hexagon with unit circumradius.
inline constexpr double kHexAreaFactor = 2.598076211353316;  // 3*sqrt(3)/2

inline double hex_area_km2(double radius_km) { return kHexAreaFactor * radius_km * radius_km; }

// Single, direction-agnostic budget for the cell-edge service.
struct LinkBudget {
  double tx_power_dbm = 43.0;
  double tx_antenna_gain_dbi = 17.0;
  double tx_losses_db = 3.0;
  double rx_antenna_gain_dbi = 0.0;
  double rx_losses_db = 0.0;
  double noise_figure_db = 7.0;
  double required_sinr_db = -1.0;
  double shadow_margin_db = 8.0;
  double penetration_margin_db = 0.0;
  double interference_margin_db = 0.0;  // set from the assumed load

  // Throws BadLinkBudget for negative margins or noise figure.
  void validate() const;
};

// -174 dBm/Hz + 10 log10(bw) + NF. Throws NonPositiveBandwidth.
double noise_floor_dbm(double bw_hz, double noise_figure_db);

// Maximum allowed path loss over `bw_hz` of receiver bandwidth. Throws
// NegativeMapl when the margins exceed the budget.
double mapl(const LinkBudget& link, double bw_hz);

enum class PropagationKind { FreeSpace, Abg };

std::string_view to_string(PropagationKind kind) noexcept;

// Abg: PL = beta_db + alpha * log10(d / 1 m) + 10 * gamma * log10(f / 1 GHz).
struct PropagationModel {
  PropagationKind kind = PropagationKind::FreeSpace;
  double alpha = 0.0;
  double beta_db = 0.0;
  double gamma = 0.0;

  static PropagationModel free_space() { return {}; }
  static PropagationModel abg(double alpha, double beta_db, double gamma) {
    return {PropagationKind::Abg, alpha, beta_db, gamma};
  }

  // Throws BadPropagationModel.
  void validate() const;
};

// Throws NonPositiveDistance (also for a non-positive frequency).
double path_loss_db(const PropagationModel& model, double f_mhz, double d_km);

inline constexpr double kMinRadiusKm = 0.01;
inline constexpr double kMaxRadiusKm = 100.0;
inline constexpr double kRadiusRelTol = 1e-9;

struct RadiusSolve {
  double radius_km;
  int iterations;
};

// Bisects path_loss_db(d) == mapl_db on [0.01, 100] km. Throws OutOfBracket.
RadiusSolve solve_radius(const PropagationModel& model, double f_mhz, double mapl_db);

inline double invert_to_radius(const PropagationModel& model, double f_mhz, double mapl_db) {
  return solve_radius(model, f_mhz, mapl_db).radius_km;
}

// ceil(area / hexagon area); omni sites on a hexagonal tessellation.
std::uint64_t sites_for_coverage(double area_km2, double radius_km);

struct CoverageResult {
  double mapl_db;
  double radius_km;
  double cell_area_km2;
  std::uint64_t n_sites_coverage;
};

CoverageResult dimension_coverage(const LinkBudget& link, double bw_hz, const PropagationModel& model, double f_mhz,
                                  double area_km2);

}  // namespace gnbdim
