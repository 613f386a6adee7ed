#pragma once

// Independent reimplementation of the load loop used as a test oracle: closed
// form path-loss inverses and a residual scan instead of bisection and damped
// iteration.

#include <cmath>
#include <optional>
#include <random>

#include "gnbdim/balance.hpp"

namespace gnbdim::testing {

inline double oracle_radius_km(const PropagationModel& m, double f_mhz, double pl_db) {
  if (m.kind == PropagationKind::FreeSpace) return std::pow(10.0, (pl_db - 32.45 - 20.0 * std::log10(f_mhz)) / 20.0);
  return std::pow(10.0, (pl_db - m.beta_db - 10.0 * m.gamma * std::log10(f_mhz / 1000.0)) / m.alpha) / 1000.0;
}

struct OracleModel {
  double mapl0_db;  // without interference margin
  double capacity_mbps;
  double r_cap_km;

  explicit OracleModel(const BalanceProblem& p) {
    const auto& l = p.link;
    const auto& bwp = p.nr.bwps.front();
    const double edge_hz = p.edge == EdgeBandwidth::OnePrb ? 12.0 * bwp.numerology.scs_khz() * 1e3
                                                           : bwp.n_prb * 12.0 * bwp.numerology.scs_khz() * 1e3;
    const double sensitivity = -174.0 + 10.0 * std::log10(edge_hz) + l.noise_figure_db + l.required_sinr_db;
    mapl0_db = l.tx_power_dbm + l.tx_antenna_gain_dbi - l.tx_losses_db + l.rx_antenna_gain_dbi - l.rx_losses_db -
               sensitivity - l.shadow_margin_db - l.penetration_margin_db;
    capacity_mbps = 0.0;
    for (const auto& b : p.nr.bwps) {
      capacity_mbps += b.n_prb * 12.0 * b.numerology.scs_khz() * 1e3 * p.traffic.se_bps_per_hz *
                       (1.0 - p.traffic.overhead_fraction) / 1e6;
    }
    const double subs = std::floor(p.traffic.target_load * capacity_mbps / p.traffic.demand_per_sub_mbps + 1e-9);
    r_cap_km = p.rho_subs_per_km2 > 0 ? std::sqrt(subs / p.rho_subs_per_km2 / (3.0 * std::sqrt(3.0) / 2.0))
                                      : INFINITY;
  }

  double r_cov_km(const BalanceProblem& p, double load, double eta) const {
    return oracle_radius_km(p.model, p.f_mhz, mapl0_db + 10.0 * std::log10(1.0 - eta * load));
  }

  double actual_load(const BalanceProblem& p, double load, double eta) const {
    const double r = std::min(r_cov_km(p, load, eta), r_cap_km);
    return 3.0 * std::sqrt(3.0) / 2.0 * r * r * p.rho_subs_per_km2 * p.traffic.demand_per_sub_mbps / capacity_mbps;
  }

  // Grid point of {0, 0.005, ..., 0.995} with the smallest self-consistency
  // residual |actual(L) - L|.
  double scan_min(const BalanceProblem& p, double eta) const {
    double best = 0.0, best_res = INFINITY;
    for (int k = 0; k < 200; ++k) {
      const double L = 0.005 * k;
      const double res = std::abs(actual_load(p, L, eta) - L);
      if (res < best_res) {
        best_res = res;
        best = L;
      }
    }
    return best;
  }

  // Lower end of the grid cell of {0, 0.005, ..., 0.995} in which
  // actual(L) - L changes sign; nullopt when it never does.
  std::optional<double> scan_root(const BalanceProblem& p, double eta) const {
    for (int k = 0; k + 1 < 200; ++k) {
      const double lo = 0.005 * k;
      const double hi = lo + 0.005;
      if (actual_load(p, lo, eta) - lo > 0.0 && actual_load(p, hi, eta) - hi <= 0.0) return lo;
    }
    return std::nullopt;
  }
};

// Random problem whose coverage radius stays inside the solver bracket for
// every load in [0, 1).
inline BalanceProblem random_feasible_problem(std::mt19937_64& rng, double& eta) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  BalanceProblem p;
  p.nr.bwps = {make_bwp(1, u(rng) < 0.5 ? 100 : 40, "eMBB")};
  p.traffic.target_load = 0.3 + 0.5 * u(rng);
  p.traffic.demand_per_sub_mbps = 0.5 + 1.5 * u(rng);
  p.traffic.se_bps_per_hz = 2.0 + 3.0 * u(rng);
  p.rho_subs_per_km2 = std::pow(10.0, 1.0 + 1.7 * u(rng));
  p.area_km2 = 49.0;
  p.f_mhz = 700.0 + 4000.0 * u(rng);
  if (u(rng) < 0.5) {
    p.model = PropagationModel::free_space();
  } else {
    p.model = PropagationModel::abg(30.0 + 10.0 * u(rng), 15.0 + 20.0 * u(rng), 1.5 + u(rng));
  }
  eta = 0.6 * u(rng);
  // Put the zero-load coverage radius between 0.2 and 8 km.
  const double r0 = std::pow(10.0, std::log10(0.2) + std::log10(40.0) * u(rng));
  p.link.penetration_margin_db = 0.0;
  const OracleModel base(p);
  const double target_mapl = path_loss_db(p.model, p.f_mhz, r0);
  p.link.penetration_margin_db = base.mapl0_db - target_mapl;
  if (p.link.penetration_margin_db < 0.0) {
    p.link.tx_power_dbm += -p.link.penetration_margin_db;
    p.link.penetration_margin_db = 0.0;
  }
  return p;
}

}  // namespace gnbdim::testing
