#include "gnbdim/traffic_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

namespace gnbdim {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

}  // namespace

void GridSpec::validate() const {
  if (!(tile_km > 0.0) || !std::isfinite(tile_km)) fail(ErrorCode::BadGrid, fmt::format("tile_km {} must be > 0", tile_km));
  if (n_cols == 0 || n_rows == 0) fail(ErrorCode::BadGrid, "grid needs at least one row and column");
  if (n_cols > kMaxGridTiles / n_rows) {
    fail(ErrorCode::BadGrid, fmt::format("{}x{} grid exceeds {} tiles", n_cols, n_rows, kMaxGridTiles));
  }
  if (!(origin_lon >= -180.0 && origin_lon <= 180.0) || !(origin_lat > -90.0 && origin_lat < 90.0)) {
    fail(ErrorCode::BadGrid, fmt::format("origin ({}, {}) out of range", origin_lon, origin_lat));
  }
}

LocalPoint project(double lon, double lat, const GridSpec& spec) noexcept {
  const double x = kEarthRadiusKm * (lon - spec.origin_lon) * std::cos(spec.origin_lat * kDegToRad) * kDegToRad;
  const double y = kEarthRadiusKm * (lat - spec.origin_lat) * kDegToRad;
  return {x, y};
}

LonLat unproject(double x_km, double y_km, const GridSpec& spec) noexcept {
  const double lon = spec.origin_lon + x_km / (kEarthRadiusKm * std::cos(spec.origin_lat * kDegToRad) * kDegToRad);
  const double lat = spec.origin_lat + y_km / (kEarthRadiusKm * kDegToRad);
  return {lon, lat};
}

DensityGrid::DensityGrid(const GridSpec& spec) : spec_(spec) {
  spec_.validate();
  weight_.assign(spec_.n_cols * spec_.n_rows, 0.0);
  towers_.assign(spec_.n_cols * spec_.n_rows, 0);
}

void DensityGrid::add(std::size_t col, std::size_t row, double w, std::uint64_t towers) {
  const std::size_t i = row * spec_.n_cols + col;
  weight_.at(i) += w;
  towers_.at(i) += towers;
}

double DensityGrid::total_weight() const noexcept { return std::accumulate(weight_.begin(), weight_.end(), 0.0); }

std::uint64_t DensityGrid::total_towers() const noexcept {
  return std::accumulate(towers_.begin(), towers_.end(), std::uint64_t{0});
}

DensityGrid bin(std::span<const CellRecord> records, const GridSpec& spec) {
  DensityGrid grid(spec);
  const double width_km = static_cast<double>(spec.n_cols) * spec.tile_km;
  const double height_km = static_cast<double>(spec.n_rows) * spec.tile_km;
  for (const auto& r : records) {
    const auto p = project(r.lon, r.lat, spec);
    if (!(p.x_km >= 0.0 && p.x_km < width_km && p.y_km >= 0.0 && p.y_km < height_km)) {
      ++grid.dropped;
      continue;
    }
    // Clamp guards the last tile against x/tile rounding up to n.
    const auto col = std::min(static_cast<std::size_t>(std::floor(p.x_km / spec.tile_km)), spec.n_cols - 1);
    const auto row = std::min(static_cast<std::size_t>(std::floor(p.y_km / spec.tile_km)), spec.n_rows - 1);
    grid.add(col, row, static_cast<double>(r.samples));
  }
  return grid;
}

GridSpec grid_covering(std::span<const CellRecord> records, double tile_km) {
  GridSpec spec;
  spec.tile_km = tile_km;
  if (records.empty()) {
    spec.validate();
    return spec;
  }
  double min_lon = records.front().lon, max_lon = min_lon;
  double min_lat = records.front().lat, max_lat = min_lat;
  for (const auto& r : records) {
    min_lon = std::min(min_lon, r.lon);
    max_lon = std::max(max_lon, r.lon);
    min_lat = std::min(min_lat, r.lat);
    max_lat = std::max(max_lat, r.lat);
  }
  spec.origin_lon = min_lon;
  spec.origin_lat = std::clamp(min_lat, -89.0, 89.0);
  const auto extent = project(max_lon, max_lat, spec);
  spec.n_cols = static_cast<std::size_t>(std::floor(extent.x_km / tile_km)) + 1;
  spec.n_rows = static_cast<std::size_t>(std::floor(extent.y_km / tile_km)) + 1;
  spec.validate();
  return spec;
}

DeploymentArea find_5gda(const DensityGrid& grid, std::size_t w_cols, std::size_t h_rows) {
  const std::size_t nc = grid.n_cols();
  const std::size_t nr = grid.n_rows();
  if (w_cols < 1 || h_rows < 1 || w_cols > nc || h_rows > nr) {
    fail(ErrorCode::WindowTooLarge, fmt::format("window {}x{} does not fit a {}x{} grid", w_cols, h_rows, nc, nr));
  }

  // prefix[(r) * (nc + 1) + c] = sum of tiles with row < r and col < c.
  const std::size_t stride = nc + 1;
  std::vector<double> prefix((nr + 1) * stride, 0.0);
  for (std::size_t r = 0; r < nr; ++r) {
    double row_sum = 0.0;
    for (std::size_t c = 0; c < nc; ++c) {
      row_sum += grid.weight(c, r);
      prefix[(r + 1) * stride + (c + 1)] = prefix[r * stride + (c + 1)] + row_sum;
    }
  }

  DeploymentArea best{0, 0, w_cols, h_rows, -1.0, 0.0};
  for (std::size_t r0 = 0; r0 + h_rows <= nr; ++r0) {
    const std::size_t r1 = r0 + h_rows;
    for (std::size_t c0 = 0; c0 + w_cols <= nc; ++c0) {
      const std::size_t c1 = c0 + w_cols;
      const double sum =
          prefix[r1 * stride + c1] - prefix[r0 * stride + c1] - prefix[r1 * stride + c0] + prefix[r0 * stride + c0];
      if (sum > best.total_weight) {
        best.col0 = c0;
        best.row0 = r0;
        best.total_weight = sum;
      }
    }
  }
  const double tile = grid.spec().tile_km;
  best.area_km2 = static_cast<double>(w_cols * h_rows) * tile * tile;
  return best;
}

double subscriber_density(const DeploymentArea& area, double subs_per_weight) {
  if (!(subs_per_weight > 0.0)) fail(ErrorCode::NonPositiveScale, fmt::format("subs_per_weight {} must be > 0", subs_per_weight));
  if (!(area.area_km2 > 0.0)) fail(ErrorCode::NonPositiveArea, "deployment area has zero extent");
  return area.total_weight * subs_per_weight / area.area_km2;
}

}  // namespace gnbdim
