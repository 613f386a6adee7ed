#pragma once

// NR numerology, channel bandwidths and bandwidth parts.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gnbdim {

inline constexpr int kMaxMu = 4;
inline constexpr int kSubcarriersPerPrb = 12;
inline constexpr double kFr1UpperGhz = 6.0;

// Subcarrier spacing 15 * 2^mu kHz. Throws BadMu outside [0, 4].
double scs_khz(int mu);
// Slot duration 1 ms / 2^mu; also the TTI. Throws BadMu.
double slot_ms(int mu);

class Numerology {
 public:
  explicit Numerology(int mu);
  int mu() const noexcept { return mu_; }
  double scs_khz() const { return gnbdim::scs_khz(mu_); }
  double slot_ms() const { return gnbdim::slot_ms(mu_); }
  auto operator<=>(const Numerology&) const = default;

 private:
  int mu_;
};

enum class Fr { FR1, FR2 };

std::string_view to_string(Fr fr) noexcept;
Fr parse_fr(std::string_view text);

struct FrequencyRange {
  Fr fr = Fr::FR1;
  double carrier_ghz = 3.5;

  // FR1 iff carrier <= 6 GHz. Throws BadFrequencyRange.
  void validate() const;
};

struct BandwidthSets {
  std::vector<double> fr1_mhz{5, 10, 15, 20, 25, 30, 40, 50, 60, 70, 80, 90, 100};
  std::vector<double> fr2_mhz{50, 100, 200, 400};

  const std::vector<double>& for_range(Fr fr) const { return fr == Fr::FR1 ? fr1_mhz : fr2_mhz; }
};

// Throws UnsupportedBandwidth unless bw_mhz is in the allowed set for `fr`.
void validate_bandwidth(Fr fr, double bw_mhz, const BandwidthSets& sets = {});

inline constexpr double kDefaultGuardFraction = 0.1;

// floor((1 - guard) * bw_hz / (12 * scs_hz)). Throws BadMu, BadGuardFraction,
// NonPositiveBandwidth, or NoPrbFits when the result would be zero.
int prb_count(double bw_mhz, int mu, double guard_fraction = kDefaultGuardFraction);

// Per-(bandwidth, mu) PRB counts that replace the closed form, for users who
// want the standard's transmission-bandwidth tables.
using PrbOverrides = std::map<std::pair<double, int>, int>;

struct BandwidthPart {
  Numerology numerology{0};
  double bw_mhz = 0.0;
  int n_prb = 0;
  std::string purpose;

  double occupied_hz() const { return static_cast<double>(n_prb) * kSubcarriersPerPrb * numerology.scs_khz() * 1e3; }
  double prb_bandwidth_hz() const { return kSubcarriersPerPrb * numerology.scs_khz() * 1e3; }
};

BandwidthPart make_bwp(int mu, double bw_mhz, std::string purpose, double guard_fraction = kDefaultGuardFraction,
                       const PrbOverrides& overrides = {});

// True iff the BWP's slot fits inside the TTI budget (inclusive). Throws
// BadLatencyBudget for a non-positive budget.
bool latency_feasible(const BandwidthPart& bwp, double tti_budget_ms);

struct NrConfig {
  FrequencyRange range;
  std::vector<BandwidthPart> bwps;
  int symbols_per_slot = 14;  // normal cyclic prefix
  double guard_fraction = kDefaultGuardFraction;
  // When unset, BWPs must fit inside the widest allowed channel of the range.
  std::optional<double> channel_bw_mhz;
  BandwidthSets bandwidth_sets;
  PrbOverrides prb_overrides;

  void validate() const;
};

}  // namespace gnbdim
