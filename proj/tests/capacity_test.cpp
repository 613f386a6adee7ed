#include <gtest/gtest.h>

#include <cmath>

#include "gnbdim/capacity.hpp"
#include "gnbdim/coverage.hpp"
#include "gnbdim/error.hpp"

using namespace gnbdim;

namespace {

NrConfig embb_100() {
  NrConfig cfg;
  cfg.bwps = {make_bwp(1, 100, "eMBB")};
  return cfg;
}

}  // namespace

TEST(Capacity, SingleBwp) {
  // 250 PRB * 12 * 30 kHz * 4 b/s/Hz * 0.86
  EXPECT_NEAR(cell_capacity_mbps(embb_100(), TrafficModel{}), 309.6, 1e-9);
}

TEST(Capacity, SumsOverBwps) {
  NrConfig cfg;
  cfg.bwps = {make_bwp(1, 40, "eMBB"), make_bwp(0, 20, "mMTC")};
  TrafficModel t;
  t.se_bps_per_hz = 2.0;
  t.overhead_fraction = 0.0;
  const double expected = (cfg.bwps[0].occupied_hz() + cfg.bwps[1].occupied_hz()) * 2.0 / 1e6;
  EXPECT_NEAR(cell_capacity_mbps(cfg, t), expected, 1e-9);
}

TEST(Capacity, MaxSubsAndRadius) {
  TrafficModel t;
  EXPECT_EQ(max_subs_per_cell(309.6, t), 247u);  // floor(0.8 * 309.6)
  t.target_load = 0.95;
  EXPECT_EQ(max_subs_per_cell(309.6, t), 294u);
  const auto leg = capacity_radius(309.6, t, 100.0);
  EXPECT_EQ(leg.max_subs_per_cell, 294u);
  EXPECT_NEAR(leg.cell_area_km2, 2.94, 1e-12);
  EXPECT_NEAR(leg.radius_km, std::sqrt(2.94 / kHexAreaFactor), 1e-12);
}

TEST(Capacity, ExactMultiplesAreNotRoundedDown) {
  TrafficModel t;
  t.target_load = 0.3;
  t.demand_per_sub_mbps = 0.1;
  // 0.3 * 3 / 0.1 is 8.999999999999998 in binary floating point.
  EXPECT_EQ(max_subs_per_cell(3.0, t), 9u);
}

TEST(Capacity, Rejections) {
  TrafficModel t;
  t.demand_per_sub_mbps = 1000.0;
  try {
    max_subs_per_cell(309.6, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroSubscribers);
  }
  EXPECT_THROW(capacity_radius(309.6, TrafficModel{}, 0.0), Error);
  TrafficModel bad;
  bad.target_load = 1.5;
  EXPECT_THROW(bad.validate(), Error);
  bad = {};
  bad.overhead_fraction = 1.0;
  EXPECT_THROW(bad.validate(), Error);
}

TEST(Capacity, SiteCount) {
  EXPECT_EQ(sites_for_capacity(49.0, 100.0, 294), 17u);  // 4900 / 294 = 16.67
  EXPECT_EQ(sites_for_capacity(49.0, 100.0, 4900), 1u);
  EXPECT_EQ(sites_for_capacity(49.0, 0.0, 10), 1u);
  EXPECT_THROW(sites_for_capacity(49.0, 100.0, 0), Error);
}

TEST(Capacity, SiteCountMonotone) {
  std::uint64_t prev = 0;
  for (double rho = 1.0; rho <= 2000.0; rho *= 1.25) {
    const auto n = sites_for_capacity(49.0, rho, 294);
    EXPECT_GE(n, prev);
    prev = n;
  }
  prev = UINT64_MAX;
  for (std::uint64_t m = 10; m < 5000; m += 37) {
    const auto n = sites_for_capacity(49.0, 100.0, m);
    EXPECT_LE(n, prev);
    prev = n;
  }
}

TEST(Capacity, OfferedLoad) {
  TrafficModel t;
  EXPECT_NEAR(offered_load(1.0, 100.0, t, 309.6), kHexAreaFactor * 100.0 / 309.6, 1e-12);
  EXPECT_EQ(offered_load(1.0, 0.0, t, 309.6), 0.0);
  // At the capacity radius the load is the admitted subscribers over capacity.
  t.target_load = 0.95;
  const auto leg = capacity_radius(309.6, t, 100.0);
  EXPECT_NEAR(offered_load(leg.radius_km, 100.0, t, 309.6), 294.0 / 309.6, 1e-12);
}
