#include <gtest/gtest.h>

#include "gnbdim/economics.hpp"
#include "gnbdim/error.hpp"

using namespace gnbdim;

TEST(Economics, AnnualCost) {
  const CostModel c;
  EXPECT_DOUBLE_EQ(annual_cost(19, c), 19 * (100000.0 / 10.0 + 10000.0));
  CostModel urban = c;
  urban.area_multiplier = 1.5;
  EXPECT_DOUBLE_EQ(annual_cost(19, urban), 1.5 * annual_cost(19, c));
  EXPECT_DOUBLE_EQ(annual_cost(0, c), 0.0);
}

TEST(Economics, CostPerBitByHand) {
  const auto r = cost_per_bit(19, 0.833, 309.6, CostModel{}, 0.35);
  const double bits = 19 * 309.6 * 0.833 * 0.35 * 31536000.0 * 1e6;
  EXPECT_DOUBLE_EQ(r.annual_cost, 380000.0);
  EXPECT_NEAR(r.annual_bits / bits, 1.0, 1e-12);
  ASSERT_TRUE(r.cost_per_bit.has_value());
  EXPECT_NEAR(*r.cost_per_bit, 380000.0 / bits, 1e-24);
  EXPECT_DOUBLE_EQ(r.mean_utilization, 0.833);
}

TEST(Economics, ZeroTrafficHasNoCostPerBit) {
  const auto r = cost_per_bit(3, 0.0, 309.6, CostModel{});
  EXPECT_FALSE(r.cost_per_bit.has_value());
  EXPECT_GT(r.annual_cost, 0.0);
  const auto ok = cost_per_bit(3, 0.5, 309.6, CostModel{});
  EXPECT_THROW(compare_areas(ok, r), Error);
}

TEST(Economics, LowerUtilizationCostsMorePerBit) {
  const auto dense = cost_per_bit(19, 0.83, 309.6, CostModel{});
  const auto sparse = cost_per_bit(11, 0.14, 309.6, CostModel{});
  const auto cmp = compare_areas(dense, sparse);
  EXPECT_TRUE(cmp.dense_cheaper);
  EXPECT_NEAR(cmp.ratio, (11 * 0.83 * 19) / (19 * 0.14 * 11), 1e-9);
}

TEST(Economics, Validation) {
  CostModel c;
  c.capex_amortization_years = 0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.opex_per_site_per_year = -1;
  EXPECT_THROW(c.validate(), Error);
  EXPECT_THROW(cost_per_bit(1, 0.5, 309.6, CostModel{}, 0.0), Error);
  EXPECT_THROW(cost_per_bit(1, 0.5, 309.6, CostModel{}, 1.5), Error);
}
