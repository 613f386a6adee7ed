#include "gnbdim/coverage.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "gnbdim/error.hpp"

namespace gnbdim {

void LinkBudget::validate() const {
  const double values[] = {tx_power_dbm,     tx_antenna_gain_dbi, tx_losses_db,     rx_antenna_gain_dbi,
                           rx_losses_db,     noise_figure_db,     required_sinr_db, shadow_margin_db,
                           penetration_margin_db, interference_margin_db};
  for (double v : values) {
    if (!std::isfinite(v)) fail(ErrorCode::BadLinkBudget, "link budget contains a non-finite value");
  }
  if (noise_figure_db < 0.0) fail(ErrorCode::BadLinkBudget, "noise figure must be >= 0");
  if (shadow_margin_db < 0.0 || penetration_margin_db < 0.0 || interference_margin_db < 0.0) {
    fail(ErrorCode::BadLinkBudget, "margins must be >= 0");
  }
  if (tx_losses_db < 0.0 || rx_losses_db < 0.0) fail(ErrorCode::BadLinkBudget, "losses must be >= 0");
}

double noise_floor_dbm(double bw_hz, double noise_figure_db) {
  if (!(bw_hz > 0.0)) fail(ErrorCode::NonPositiveBandwidth, fmt::format("bandwidth {} Hz must be > 0", bw_hz));
  return -174.0 + 10.0 * std::log10(bw_hz) + noise_figure_db;
}

double mapl(const LinkBudget& link, double bw_hz) {
  link.validate();
  const double sensitivity = noise_floor_dbm(bw_hz, link.noise_figure_db) + link.required_sinr_db;
  const double eirp = link.tx_power_dbm + link.tx_antenna_gain_dbi - link.tx_losses_db;
  const double value = eirp + link.rx_antenna_gain_dbi - link.rx_losses_db - sensitivity - link.shadow_margin_db -
                       link.penetration_margin_db - link.interference_margin_db;
  if (value < 0.0) fail(ErrorCode::NegativeMapl, fmt::format("link budget leaves {:.2f} dB of path loss", value));
  return value;
}

std::string_view to_string(PropagationKind kind) noexcept {
  return kind == PropagationKind::FreeSpace ? "free_space" : "abg";
}

void PropagationModel::validate() const {
  if (kind == PropagationKind::Abg) {
    if (!(alpha > 0.0) || !(gamma >= 0.0) || !std::isfinite(beta_db) || !std::isfinite(alpha) || !std::isfinite(gamma)) {
      fail(ErrorCode::BadPropagationModel, fmt::format("ABG needs alpha > 0 and gamma >= 0 (alpha={}, gamma={})", alpha, gamma));
    }
  }
}

double path_loss_db(const PropagationModel& model, double f_mhz, double d_km) {
  if (!(d_km > 0.0)) fail(ErrorCode::NonPositiveDistance, fmt::format("distance {} km must be > 0", d_km));
  if (!(f_mhz > 0.0)) fail(ErrorCode::NonPositiveDistance, fmt::format("frequency {} MHz must be > 0", f_mhz));
  switch (model.kind) {
    case PropagationKind::FreeSpace:
      return 32.45 + 20.0 * std::log10(f_mhz) + 20.0 * std::log10(d_km);
    case PropagationKind::Abg:
      return model.beta_db + model.alpha * std::log10(d_km * 1000.0) + model.gamma * 10.0 * std::log10(f_mhz / 1000.0);
  }
  return 0.0;
}

RadiusSolve solve_radius(const PropagationModel& model, double f_mhz, double mapl_db) {
  model.validate();
  double lo = kMinRadiusKm;
  double hi = kMaxRadiusKm;
  const double pl_lo = path_loss_db(model, f_mhz, lo);
  const double pl_hi = path_loss_db(model, f_mhz, hi);
  if (!(mapl_db >= pl_lo && mapl_db <= pl_hi)) {
    fail(ErrorCode::OutOfBracket, fmt::format("MAPL {:.2f} dB outside [{:.2f}, {:.2f}] dB reachable on [{}, {}] km",
                                              mapl_db, pl_lo, pl_hi, kMinRadiusKm, kMaxRadiusKm));
  }
  int it = 0;
  while ((hi - lo) > kRadiusRelTol * lo && it < 200) {
    const double mid = 0.5 * (lo + hi);
    if (path_loss_db(model, f_mhz, mid) < mapl_db) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++it;
  }
  return {0.5 * (lo + hi), it};
}

std::uint64_t sites_for_coverage(double area_km2, double radius_km) {
  if (!(area_km2 > 0.0)) fail(ErrorCode::NonPositiveArea, fmt::format("area {} km^2 must be > 0", area_km2));
  if (!(radius_km > 0.0)) fail(ErrorCode::NonPositiveDistance, fmt::format("radius {} km must be > 0", radius_km));
  const double cell = hex_area_km2(radius_km);
  auto n = static_cast<std::uint64_t>(std::ceil(area_km2 / cell));
  if (static_cast<double>(n) * cell < area_km2) ++n;  // quotient rounded down
  return std::max<std::uint64_t>(n, 1);
}

CoverageResult dimension_coverage(const LinkBudget& link, double bw_hz, const PropagationModel& model, double f_mhz,
                                  double area_km2) {
  const double m = mapl(link, bw_hz);
  const double r = invert_to_radius(model, f_mhz, m);
  return {m, r, hex_area_km2(r), sites_for_coverage(area_km2, r)};
}

}  // namespace gnbdim
