#include <gtest/gtest.h>

#include "gnbdim/config.hpp"
#include "gnbdim/error.hpp"
#include "test_support.hpp"

using namespace gnbdim;
using gnbdim::testing::fixture;

namespace {

ErrorCode config_error(const std::string& json) {
  try {
    parse_run_config(json);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << json;
  return ErrorCode::NonDigit;
}

}  // namespace

TEST(Window, Parse) {
  EXPECT_EQ(parse_window("7x7"), (Window{7, 7}));
  EXPECT_EQ(parse_window("12x3"), (Window{12, 3}));
  EXPECT_THROW(parse_window("7"), Error);
  EXPECT_THROW(parse_window("0x7"), Error);
  EXPECT_THROW(parse_window("ax7"), Error);
}

TEST(RunConfig, Defaults) {
  const auto c = parse_run_config("{}");
  EXPECT_EQ(c.window, (Window{7, 7}));
  ASSERT_EQ(c.nr.bwps.size(), 1u);
  EXPECT_EQ(c.nr.bwps[0].numerology.mu(), 1);
  EXPECT_EQ(c.nr.bwps[0].n_prb, 250);
  EXPECT_DOUBLE_EQ(c.carrier_mhz(), 3500.0);
  EXPECT_EQ(c.edge, EdgeBandwidth::OnePrb);
  EXPECT_EQ(c.propagation.kind, PropagationKind::FreeSpace);
  EXPECT_DOUBLE_EQ(c.traffic.target_load, 0.8);
  EXPECT_DOUBLE_EQ(c.balance.eta, 0.6);
  EXPECT_DOUBLE_EQ(c.duty_fraction, kDefaultDutyFraction);
  EXPECT_FALSE(c.grid.fixed.has_value());
}

TEST(RunConfig, WorkedExampleFixture) {
  const auto c = parse_run_config(read_input_bytes(fixture("worked_example.json")));
  EXPECT_DOUBLE_EQ(c.link.penetration_margin_db, 55.0);
  EXPECT_DOUBLE_EQ(c.traffic.target_load, 0.95);
  ASSERT_TRUE(c.grid.fixed.has_value());
  EXPECT_EQ(c.grid.fixed->n_cols, 7u);
  ASSERT_TRUE(c.filters.plmn.has_value());
  EXPECT_EQ(c.filters.plmn->to_string(), "26201");
}

TEST(RunConfig, RoundTrip) {
  const std::string text = R"({
    "window": {"w_cols": 5, "h_rows": 3},
    "filters": {"radio": "lte", "plmn": "310260", "bbox": [-88, 41, -87, 42]},
    "grid": {"tile_km": 0.5},
    "nr": {"fr": "FR2", "carrier_ghz": 28, "guard_fraction": 0.05, "channel_bw_mhz": 400,
           "prb_overrides": [{"bw_mhz": 200, "mu": 3, "n_prb": 132}],
           "bwps": [{"mu": 3, "bw_mhz": 200, "purpose": "eMBB"}, {"mu": 2, "bw_mhz": 100, "purpose": "URLLC"}]},
    "link_budget": {"tx_power_dbm": 40, "penetration_margin_db": 12.5, "edge_bandwidth": "bwp"},
    "propagation": {"kind": "abg", "alpha": 34.1, "beta_db": 31.4, "gamma": 2.1},
    "traffic": {"target_load": 0.7, "demand_per_sub_mbps": 2},
    "balance": {"eps_radius": 0.2, "eta": 0.4, "damping": 0.8},
    "cost": {"capex_per_site": 50000, "area_multiplier": 1.2, "duty_fraction": 0.5}
  })";
  const auto a = parse_run_config(text);
  EXPECT_EQ(a.window, (Window{5, 3}));
  EXPECT_EQ(a.nr.bwps[0].n_prb, 132);
  EXPECT_EQ(a.nr.bwps[1].n_prb, prb_count(100, 2, 0.05));
  EXPECT_EQ(a.edge, EdgeBandwidth::FullBwp);
  EXPECT_EQ(a.propagation.kind, PropagationKind::Abg);
  EXPECT_DOUBLE_EQ(a.duty_fraction, 0.5);

  const std::string echo = run_config_to_json(a);
  const auto b = parse_run_config(echo);
  EXPECT_EQ(run_config_to_json(b), echo);
  EXPECT_EQ(b.window, a.window);
  EXPECT_EQ(b.filters.plmn, a.filters.plmn);
  EXPECT_EQ(b.filters.bbox, a.filters.bbox);
  EXPECT_EQ(b.nr.bwps.size(), 2u);
  EXPECT_EQ(b.nr.bwps[0].n_prb, 132);
  EXPECT_DOUBLE_EQ(b.link.tx_power_dbm, 40.0);
  EXPECT_DOUBLE_EQ(b.propagation.alpha, 34.1);
  EXPECT_DOUBLE_EQ(b.balance.eta, 0.4);
  EXPECT_DOUBLE_EQ(b.cost.area_multiplier, 1.2);
}

TEST(RunConfig, Rejections) {
  EXPECT_EQ(config_error("{"), ErrorCode::BadConfig);
  EXPECT_EQ(config_error("[]"), ErrorCode::BadConfig);
  EXPECT_EQ(config_error(R"({"traffic": {"target_lod": 0.5}})"), ErrorCode::BadConfig);
  EXPECT_EQ(config_error(R"({"bogus": 1})"), ErrorCode::BadConfig);
  EXPECT_EQ(config_error(R"({"traffic": {"target_load": "high"}})"), ErrorCode::BadConfig);
  EXPECT_EQ(config_error(R"({"traffic": {"target_load": 1.5}})"), ErrorCode::BadTrafficModel);
  EXPECT_EQ(config_error(R"({"nr": {"bwps": [{"mu": 1, "bw_mhz": 33}]}})"), ErrorCode::UnsupportedBandwidth);
  EXPECT_EQ(config_error(R"({"nr": {"fr": "FR1", "carrier_ghz": 28}})"), ErrorCode::BadFrequencyRange);
  EXPECT_EQ(config_error(R"({"nr": {"bwps": [{"mu": 7, "bw_mhz": 100}]}})"), ErrorCode::BadMu);
  EXPECT_EQ(config_error(R"({"propagation": {"kind": "hata"}})"), ErrorCode::BadPropagationModel);
  EXPECT_EQ(config_error(R"({"filters": {"plmn": "31"}})"), ErrorCode::BadLength);
  EXPECT_EQ(config_error(R"({"balance": {"damping": 0}})"), ErrorCode::BadThresholds);
  EXPECT_EQ(config_error(R"({"cost": {"capex_amortization_years": 0}})"), ErrorCode::BadCostModel);
}
