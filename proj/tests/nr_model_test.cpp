#include <gtest/gtest.h>

#include <cmath>

#include "gnbdim/error.hpp"
#include "gnbdim/nr_model.hpp"

using namespace gnbdim;

TEST(Numerology, Table) {
  const double scs[] = {15, 30, 60, 120, 240};
  const double slot[] = {1.0, 0.5, 0.25, 0.125, 0.0625};
  for (int mu = 0; mu <= kMaxMu; ++mu) {
    EXPECT_EQ(scs_khz(mu), scs[mu]);
    EXPECT_EQ(slot_ms(mu), slot[mu]);
    EXPECT_EQ(scs_khz(mu) * slot_ms(mu), 15.0);
  }
  EXPECT_THROW(scs_khz(5), Error);
  EXPECT_THROW(slot_ms(-1), Error);
  EXPECT_THROW(Numerology(7), Error);
}

TEST(PrbCount, ClosedForm) {
  // floor(0.9 * bw / (12 * scs)) evaluated by hand.
  EXPECT_EQ(prb_count(100, 1), 250);
  EXPECT_EQ(prb_count(20, 0), 100);
  EXPECT_EQ(prb_count(5, 0), 25);
  EXPECT_EQ(prb_count(400, 3), 250);
  EXPECT_EQ(prb_count(100, 1, 0.0), 277);
  EXPECT_EQ(prb_count(50, 2, 0.05), 65);
}

TEST(PrbCount, Oracle) {
  for (int mu = 0; mu <= kMaxMu; ++mu) {
    for (double bw : {5.0, 10.0, 15.0, 20.0, 40.0, 50.0, 100.0, 200.0, 400.0}) {
      for (double g : {0.0, 0.02, 0.1, 0.2}) {
        const long double exact = (1.0L - g) * bw * 1e6L / (12.0L * 15e3L * std::pow(2.0L, mu));
        const long expected = std::lround(std::floor(exact + 1e-9L));
        if (expected < 1) {
          EXPECT_THROW(prb_count(bw, mu, g), Error);
        } else {
          EXPECT_EQ(prb_count(bw, mu, g), expected) << bw << " MHz mu=" << mu << " g=" << g;
        }
      }
    }
  }
}

TEST(PrbCount, MonotoneInBandwidthAndNumerology) {
  for (int mu = 0; mu <= 2; ++mu) {
    int prev = 0;
    for (double bw = 5; bw <= 100; bw += 5) {
      const int n = prb_count(bw, mu);
      EXPECT_GE(n, prev);
      prev = n;
    }
  }
  for (double bw : {50.0, 100.0}) {
    int prev = prb_count(bw, 0);
    for (int mu = 1; mu <= 3; ++mu) {
      const int n = prb_count(bw, mu);
      EXPECT_LE(n, prev);
      prev = n;
    }
  }
}

TEST(PrbCount, Rejections) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::BadConfig;
  };
  EXPECT_EQ(code([] { prb_count(5, 4, 0.5); }), ErrorCode::NoPrbFits);
  EXPECT_EQ(code([] { prb_count(0, 1); }), ErrorCode::NonPositiveBandwidth);
  EXPECT_EQ(code([] { prb_count(100, 1, 1.0); }), ErrorCode::BadGuardFraction);
  EXPECT_EQ(code([] { prb_count(100, 1, -0.1); }), ErrorCode::BadGuardFraction);
  EXPECT_EQ(code([] { prb_count(100, 9); }), ErrorCode::BadMu);
}

TEST(Bandwidth, AllowedSets) {
  EXPECT_NO_THROW(validate_bandwidth(Fr::FR1, 100));
  EXPECT_NO_THROW(validate_bandwidth(Fr::FR2, 400));
  EXPECT_THROW(validate_bandwidth(Fr::FR1, 400), Error);
  EXPECT_THROW(validate_bandwidth(Fr::FR2, 20), Error);
  BandwidthSets custom;
  custom.fr1_mhz.push_back(35);
  EXPECT_NO_THROW(validate_bandwidth(Fr::FR1, 35, custom));
}

TEST(FrequencyRange, CarrierMustMatch) {
  EXPECT_NO_THROW((FrequencyRange{Fr::FR1, 3.5}).validate());
  EXPECT_NO_THROW((FrequencyRange{Fr::FR2, 28.0}).validate());
  EXPECT_THROW((FrequencyRange{Fr::FR1, 28.0}).validate(), Error);
  EXPECT_THROW((FrequencyRange{Fr::FR2, 3.5}).validate(), Error);
  EXPECT_EQ(parse_fr("fr2"), Fr::FR2);
  EXPECT_THROW(parse_fr("FR3"), Error);
}

TEST(Bwp, OccupiedBandwidthAndOverrides) {
  const auto b = make_bwp(1, 100, "eMBB");
  EXPECT_EQ(b.n_prb, 250);
  EXPECT_DOUBLE_EQ(b.occupied_hz(), 250 * 12 * 30e3);
  EXPECT_DOUBLE_EQ(b.prb_bandwidth_hz(), 360e3);

  PrbOverrides table{{{100.0, 1}, 273}};
  EXPECT_EQ(make_bwp(1, 100, "eMBB", 0.1, table).n_prb, 273);
  EXPECT_EQ(make_bwp(0, 100, "eMBB", 0.1, table).n_prb, prb_count(100, 0));
}

TEST(Bwp, Latency) {
  const auto urllc = make_bwp(3, 100, "URLLC");
  EXPECT_TRUE(latency_feasible(urllc, 0.125));
  EXPECT_FALSE(latency_feasible(make_bwp(0, 20, "mMTC"), 0.5));
  EXPECT_TRUE(latency_feasible(make_bwp(0, 20, "mMTC"), 1.0));
  EXPECT_THROW(latency_feasible(urllc, 0.0), Error);
}

TEST(NrConfig, Validation) {
  NrConfig cfg;
  cfg.bwps = {make_bwp(1, 100, "eMBB")};
  EXPECT_NO_THROW(cfg.validate());

  cfg.channel_bw_mhz = 50;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.channel_bw_mhz.reset();

  NrConfig fr2;
  fr2.range = {Fr::FR2, 28.0};
  fr2.bwps = {make_bwp(3, 400, "eMBB")};
  EXPECT_NO_THROW(fr2.validate());
  fr2.bwps = {make_bwp(1, 100, "eMBB"), make_bwp(3, 800, "x")};
  EXPECT_THROW(fr2.validate(), Error);

  NrConfig none;
  EXPECT_THROW(none.validate(), Error);
}
