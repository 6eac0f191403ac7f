#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>

#include "geofuse/core.hpp"

namespace geofuse {

/// Shortest round-trip decimal rendering (17 significant digits).
std::string format_double(double v);

/// Matrix CSV: no header, N lines of N comma-separated values, LF endings.
void write_matrix_csv(const std::filesystem::path& path, const SquareMatrix& m);
SquareMatrix read_matrix_csv(const std::filesystem::path& path);

/// Channels CSV: one header line of channel names, then T rows of m scalar
/// values. Vector-valued channels are not representable here.
void write_channels_csv(const std::filesystem::path& path, const MultiTimeSeries& ts);
MultiTimeSeries read_channels_csv(const std::filesystem::path& path);

/// Points CSV: no header, N lines of 3 coordinates.
void write_points_csv(const std::filesystem::path& path,
                      std::span<const std::array<double, 3>> points);

/// Rectangular CSV with no header (MDS coordinates).
void write_rect_csv(const std::filesystem::path& path, std::span<const double> values,
                    int rows, int cols);

}  // namespace geofuse
