#pragma once

// Rasterizes tower records into a km grid and finds the deployment window
// (5GDA) of maximum traffic weight.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gnbdim/opencellid.hpp"

namespace gnbdim {

inline constexpr double kEarthRadiusKm = 6371.0088;
inline constexpr std::size_t kMaxGridTiles = 100'000'000;

struct GridSpec {
  double origin_lon = 0.0;  // south-west corner
  double origin_lat = 0.0;
  double tile_km = 1.0;
  std::size_t n_cols = 1;
  std::size_t n_rows = 1;

  // Throws BadGrid.
  void validate() const;
  bool operator==(const GridSpec&) const = default;
};

struct LocalPoint {
  double x_km;
  double y_km;
};

// Local equirectangular projection around the grid origin.
LocalPoint project(double lon, double lat, const GridSpec& spec) noexcept;

struct LonLat {
  double lon;
  double lat;
};

LonLat unproject(double x_km, double y_km, const GridSpec& spec) noexcept;

// Row-major raster, row 0 is the southern edge.
class DensityGrid {
 public:
  explicit DensityGrid(const GridSpec& spec);

  const GridSpec& spec() const noexcept { return spec_; }
  std::size_t n_cols() const noexcept { return spec_.n_cols; }
  std::size_t n_rows() const noexcept { return spec_.n_rows; }

  double weight(std::size_t col, std::size_t row) const { return weight_[row * spec_.n_cols + col]; }
  std::uint64_t towers(std::size_t col, std::size_t row) const { return towers_[row * spec_.n_cols + col]; }
  std::span<const double> weights() const noexcept { return weight_; }

  void add(std::size_t col, std::size_t row, double w, std::uint64_t towers = 1);

  double total_weight() const noexcept;
  std::uint64_t total_towers() const noexcept;

  // Records that projected outside the raster during binning.
  std::size_t dropped = 0;

 private:
  GridSpec spec_;
  std::vector<double> weight_;
  std::vector<std::uint64_t> towers_;
};

DensityGrid bin(std::span<const CellRecord> records, const GridSpec& spec);

// Smallest grid with `tile_km` tiles whose origin is the south-west corner of
// the records' bounding box. Empty input yields a single tile at (0, 0).
GridSpec grid_covering(std::span<const CellRecord> records, double tile_km);

struct DeploymentArea {
  std::size_t col0 = 0;
  std::size_t row0 = 0;
  std::size_t w_cols = 0;
  std::size_t h_rows = 0;
  double total_weight = 0.0;
  double area_km2 = 0.0;

  bool operator==(const DeploymentArea&) const = default;
};

// Maximum-weight w x h window over 2-D prefix sums. Ties go to the smallest
// row0, then the smallest col0. Throws WindowTooLarge.
DeploymentArea find_5gda(const DensityGrid& grid, std::size_t w_cols, std::size_t h_rows);

// Subscribers per km^2 inside the window. Throws NonPositiveScale.
double subscriber_density(const DeploymentArea& area, double subs_per_weight);

}  // namespace gnbdim
