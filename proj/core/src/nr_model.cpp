#include "gnbdim/nr_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <fmt/format.h>

#include "gnbdim/error.hpp"

namespace gnbdim {
namespace {

void check_mu(int mu) {
  if (mu < 0 || mu > kMaxMu) fail(ErrorCode::BadMu, fmt::format("numerology mu={} outside [0, {}]", mu, kMaxMu));
}

}  // namespace

double scs_khz(int mu) {
  check_mu(mu);
  return 15.0 * static_cast<double>(1 << mu);
}

double slot_ms(int mu) {
  check_mu(mu);
  return 1.0 / static_cast<double>(1 << mu);
}

Numerology::Numerology(int mu) : mu_(mu) { check_mu(mu); }

std::string_view to_string(Fr fr) noexcept { return fr == Fr::FR1 ? "FR1" : "FR2"; }

Fr parse_fr(std::string_view text) {
  auto is = [text](std::string_view name) {
    return text.size() == name.size() &&
           std::equal(text.begin(), text.end(), name.begin(), [](char a, char b) { return std::toupper(a) == b; });
  };
  if (is("FR1")) return Fr::FR1;
  if (is("FR2")) return Fr::FR2;
  fail(ErrorCode::BadFrequencyRange, fmt::format("unknown frequency range '{}'", text));
}

void FrequencyRange::validate() const {
  if (!(carrier_ghz > 0.0) || !std::isfinite(carrier_ghz)) {
    fail(ErrorCode::BadFrequencyRange, fmt::format("carrier {} GHz must be > 0", carrier_ghz));
  }
  const bool below = carrier_ghz <= kFr1UpperGhz;
  if ((fr == Fr::FR1) != below) {
    fail(ErrorCode::BadFrequencyRange, fmt::format("carrier {} GHz is not in {}", carrier_ghz, to_string(fr)));
  }
}

void validate_bandwidth(Fr fr, double bw_mhz, const BandwidthSets& sets) {
  const auto& allowed = sets.for_range(fr);
  if (std::find(allowed.begin(), allowed.end(), bw_mhz) == allowed.end()) {
    fail(ErrorCode::UnsupportedBandwidth, fmt::format("{} MHz is not a {} channel bandwidth", bw_mhz, to_string(fr)));
  }
}

int prb_count(double bw_mhz, int mu, double guard_fraction) {
  check_mu(mu);
  if (!(guard_fraction >= 0.0 && guard_fraction < 1.0)) {
    fail(ErrorCode::BadGuardFraction, fmt::format("guard fraction {} outside [0, 1)", guard_fraction));
  }
  if (!(bw_mhz > 0.0) || !std::isfinite(bw_mhz)) {
    fail(ErrorCode::NonPositiveBandwidth, fmt::format("bandwidth {} MHz must be > 0", bw_mhz));
  }
  const double usable_hz = (1.0 - guard_fraction) * bw_mhz * 1e6;
  const double prb_hz = kSubcarriersPerPrb * scs_khz(mu) * 1e3;
  // The 1e-12 nudge keeps exact quotients such as 250.0 from flooring to 249.
  const double n = std::floor(usable_hz / prb_hz * (1.0 + 1e-12));
  if (n < 1.0) {
    fail(ErrorCode::NoPrbFits, fmt::format("no PRB of {} kHz fits {} MHz", prb_hz / 1e3, bw_mhz));
  }
  return static_cast<int>(n);
}

BandwidthPart make_bwp(int mu, double bw_mhz, std::string purpose, double guard_fraction,
                       const PrbOverrides& overrides) {
  BandwidthPart bwp;
  bwp.numerology = Numerology(mu);
  bwp.bw_mhz = bw_mhz;
  bwp.purpose = std::move(purpose);
  if (auto it = overrides.find({bw_mhz, mu}); it != overrides.end()) {
    if (it->second < 1) fail(ErrorCode::NoPrbFits, fmt::format("PRB override for {} MHz mu={} is < 1", bw_mhz, mu));
    bwp.n_prb = it->second;
  } else {
    bwp.n_prb = prb_count(bw_mhz, mu, guard_fraction);
  }
  if (bwp.occupied_hz() > bw_mhz * 1e6) {
    fail(ErrorCode::NoPrbFits, fmt::format("{} PRBs at mu={} overflow {} MHz", bwp.n_prb, mu, bw_mhz));
  }
  return bwp;
}

bool latency_feasible(const BandwidthPart& bwp, double tti_budget_ms) {
  if (!(tti_budget_ms > 0.0)) fail(ErrorCode::BadLatencyBudget, fmt::format("TTI budget {} ms must be > 0", tti_budget_ms));
  return bwp.numerology.slot_ms() <= tti_budget_ms;
}

void NrConfig::validate() const {
  range.validate();
  if (bwps.empty()) fail(ErrorCode::BadConfig, "NR config needs at least one bandwidth part");
  if (symbols_per_slot != 14) fail(ErrorCode::BadConfig, "only normal cyclic prefix (14 symbols/slot) is modelled");
  double sum = 0.0;
  for (const auto& bwp : bwps) {
    validate_bandwidth(range.fr, bwp.bw_mhz, bandwidth_sets);
    if (bwp.n_prb < 1) fail(ErrorCode::NoPrbFits, "bandwidth part without PRBs");
    sum += bwp.bw_mhz;
  }
  double channel = 0.0;
  if (channel_bw_mhz) {
    validate_bandwidth(range.fr, *channel_bw_mhz, bandwidth_sets);
    channel = *channel_bw_mhz;
  } else {
    const auto& allowed = bandwidth_sets.for_range(range.fr);
    channel = allowed.empty() ? 0.0 : *std::max_element(allowed.begin(), allowed.end());
  }
  if (sum > channel) {
    fail(ErrorCode::BwpExceedsChannel, fmt::format("bandwidth parts total {} MHz > channel {} MHz", sum, channel));
  }
}

}  // namespace gnbdim
