#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "geofuse/core.hpp"
#include "geofuse/persistence.hpp"

namespace geofuse {
namespace cli {

struct HeatmapScale {
  double min = 0.0;
  double max = 0.0;
};

/// Matrix heatmap with a linear color scale from the matrix minimum to its
/// maximum; returns the scale bounds for the manifest.
HeatmapScale write_heatmap_svg(const std::filesystem::path& path, const SquareMatrix& m,
                               const std::string& title);

/// 2-d scatter of embedding coordinates (first two axes), points joined in
/// index order to show the trajectory.
void write_scatter_svg(const std::filesystem::path& path,
                       std::span<const double> coordinates, int n_points, int dim,
                       const std::string& title);

/// Birth/death scatter with the diagonal; essential points sit on a marker
/// line above the finite range.
void write_diagram_svg(const std::filesystem::path& path,
                       const PersistenceDiagram& diagram, const std::string& title);

}  // namespace cli
}  // namespace geofuse
