#pragma once

// Exports for GIS tools: tile CSV, tile polygons, the deployment window and a
// hexagonal site lattice. GeoJSON strings are serialized with two-space
// indentation and a stable key order.

#include <iosfwd>
#include <string>
#include <vector>

#include "gnbdim/traffic_density.hpp"

namespace gnbdim {

// "row,col,weight,towers", one line per tile, row-major from the south edge.
void write_grid_csv(std::ostream& out, const DensityGrid& grid);

std::string grid_geojson(const DensityGrid& grid);

std::string deployment_area_geojson(const GridSpec& spec, const DeploymentArea& area);

// Site centres on a hexagonal lattice of pitch sqrt(3) * radius, anchored at
// the window's south-west corner. Offsets are in km from that corner.
std::vector<LocalPoint> hex_lattice(double width_km, double height_km, double radius_km);

std::string sites_geojson(const GridSpec& spec, const DeploymentArea& area, double radius_km);

}  // namespace gnbdim
