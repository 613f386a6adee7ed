#include "gnbdim/geojson.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

namespace gnbdim {
namespace {

using nlohmann::ordered_json;

ordered_json position(const GridSpec& spec, double x_km, double y_km) {
  const auto p = unproject(x_km, y_km, spec);
  return ordered_json::array({p.lon, p.lat});
}

ordered_json rectangle(const GridSpec& spec, double x0, double y0, double x1, double y1) {
  ordered_json ring = ordered_json::array({position(spec, x0, y0), position(spec, x1, y0), position(spec, x1, y1),
                                           position(spec, x0, y1), position(spec, x0, y0)});
  return ordered_json{{"type", "Polygon"}, {"coordinates", ordered_json::array({ring})}};
}

ordered_json feature_collection(ordered_json features) {
  return ordered_json{{"type", "FeatureCollection"}, {"features", std::move(features)}};
}

}  // namespace

void write_grid_csv(std::ostream& out, const DensityGrid& grid) {
  out << "row,col,weight,towers\n";
  for (std::size_t r = 0; r < grid.n_rows(); ++r) {
    for (std::size_t c = 0; c < grid.n_cols(); ++c) {
      out << fmt::format("{},{},{},{}\n", r, c, grid.weight(c, r), grid.towers(c, r));
    }
  }
}

std::string grid_geojson(const DensityGrid& grid) {
  const auto& spec = grid.spec();
  const double t = spec.tile_km;
  ordered_json features = ordered_json::array();
  for (std::size_t r = 0; r < grid.n_rows(); ++r) {
    for (std::size_t c = 0; c < grid.n_cols(); ++c) {
      const double x0 = static_cast<double>(c) * t;
      const double y0 = static_cast<double>(r) * t;
      features.push_back(ordered_json{
          {"type", "Feature"},
          {"geometry", rectangle(spec, x0, y0, x0 + t, y0 + t)},
          {"properties", {{"row", r}, {"col", c}, {"weight", grid.weight(c, r)}, {"towers", grid.towers(c, r)}}}});
    }
  }
  return feature_collection(std::move(features)).dump(2);
}

std::string deployment_area_geojson(const GridSpec& spec, const DeploymentArea& area) {
  const double t = spec.tile_km;
  const double x0 = static_cast<double>(area.col0) * t;
  const double y0 = static_cast<double>(area.row0) * t;
  const double x1 = x0 + static_cast<double>(area.w_cols) * t;
  const double y1 = y0 + static_cast<double>(area.h_rows) * t;
  ordered_json feature{{"type", "Feature"},
                       {"geometry", rectangle(spec, x0, y0, x1, y1)},
                       {"properties",
                        {{"col0", area.col0},
                         {"row0", area.row0},
                         {"w_cols", area.w_cols},
                         {"h_rows", area.h_rows},
                         {"total_weight", area.total_weight},
                         {"area_km2", area.area_km2}}}};
  return feature_collection(ordered_json::array({feature})).dump(2);
}

std::vector<LocalPoint> hex_lattice(double width_km, double height_km, double radius_km) {
  std::vector<LocalPoint> out;
  if (!(radius_km > 0.0) || !(width_km >= 0.0) || !(height_km >= 0.0)) return out;
  const double dx = std::sqrt(3.0) * radius_km;
  const double dy = 1.5 * radius_km;
  // Keeps points that land exactly on the far edge.
  const double eps = 1e-9 * radius_km;
  for (std::size_t row = 0;; ++row) {
    const double y = static_cast<double>(row) * dy;
    if (y > height_km + eps) break;
    const double offset = (row % 2 == 1) ? dx / 2.0 : 0.0;
    for (std::size_t col = 0;; ++col) {
      const double x = offset + static_cast<double>(col) * dx;
      if (x > width_km + eps) break;
      out.push_back({x, y});
    }
  }
  return out;
}

std::string sites_geojson(const GridSpec& spec, const DeploymentArea& area, double radius_km) {
  const double t = spec.tile_km;
  const double x0 = static_cast<double>(area.col0) * t;
  const double y0 = static_cast<double>(area.row0) * t;
  const auto points = hex_lattice(static_cast<double>(area.w_cols) * t, static_cast<double>(area.h_rows) * t, radius_km);
  ordered_json features = ordered_json::array();
  std::size_t id = 0;
  for (const auto& p : points) {
    features.push_back(ordered_json{{"type", "Feature"},
                                    {"geometry", {{"type", "Point"}, {"coordinates", position(spec, x0 + p.x_km, y0 + p.y_km)}}},
                                    {"properties", {{"site", id++}, {"radius_km", radius_km}}}});
  }
  return feature_collection(std::move(features)).dump(2);
}

}  // namespace gnbdim
