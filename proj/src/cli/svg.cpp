#include "geofuse/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace geofuse {
namespace cli {

namespace {

std::ofstream open_svg(const std::filesystem::path& path, int width, int height) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

/// Two-stop linear ramp, dark blue to yellow.
std::string ramp_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(68.0 + t * (253.0 - 68.0)));
  const int g = static_cast<int>(std::lround(1.0 + t * (231.0 - 1.0)));
  const int b = static_cast<int>(std::lround(84.0 + t * (37.0 - 84.0)));
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

void title_text(std::ofstream& out, const std::string& title, int width) {
  out << "<text x=\"" << width / 2
      << "\" y=\"16\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"middle\">"
      << title << "</text>\n";
}

}  // namespace

HeatmapScale write_heatmap_svg(const std::filesystem::path& path, const SquareMatrix& m,
                               const std::string& title) {
  const int n = m.size();
  const int cell = std::max(1, 512 / std::max(1, n));
  const int grid = cell * n;
  const int margin = 24;
  auto out = open_svg(path, grid + 2 * margin, grid + 2 * margin);
  title_text(out, title, grid + 2 * margin);

  HeatmapScale scale;
  scale.min = *std::min_element(m.data().begin(), m.data().end());
  scale.max = *std::max_element(m.data().begin(), m.data().end());
  const double span = scale.max > scale.min ? scale.max - scale.min : 1.0;

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double t = (m(i, j) - scale.min) / span;
      out << "<rect x=\"" << margin + j * cell << "\" y=\"" << margin + i * cell
          << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
          << ramp_color(t) << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return scale;
}

void write_scatter_svg(const std::filesystem::path& path,
                       std::span<const double> coordinates, int n_points, int dim,
                       const std::string& title) {
  if (dim < 2 || n_points < 1)
    fail(ErrorCode::InvalidArgument, "scatter needs at least 2 axes and 1 point");
  const int size = 480;
  const int margin = 40;
  auto out = open_svg(path, size, size);
  title_text(out, title, size);

  double min_x = coordinates[0], max_x = coordinates[0];
  double min_y = coordinates[1], max_y = coordinates[1];
  for (int i = 0; i < n_points; ++i) {
    const double x = coordinates[static_cast<std::size_t>(i) * dim];
    const double y = coordinates[static_cast<std::size_t>(i) * dim + 1];
    min_x = std::min(min_x, x); max_x = std::max(max_x, x);
    min_y = std::min(min_y, y); max_y = std::max(max_y, y);
  }
  const double span_x = max_x > min_x ? max_x - min_x : 1.0;
  const double span_y = max_y > min_y ? max_y - min_y : 1.0;
  const auto sx = [&](double x) {
    return margin + (x - min_x) / span_x * (size - 2 * margin);
  };
  const auto sy = [&](double y) {
    return size - margin - (y - min_y) / span_y * (size - 2 * margin);
  };

  out << "<polyline fill=\"none\" stroke=\"#b0c4de\" stroke-width=\"1\" points=\"";
  for (int i = 0; i < n_points; ++i)
    out << fmt(sx(coordinates[static_cast<std::size_t>(i) * dim])) << ','
        << fmt(sy(coordinates[static_cast<std::size_t>(i) * dim + 1])) << ' ';
  out << "\"/>\n";
  for (int i = 0; i < n_points; ++i)
    out << "<circle cx=\"" << fmt(sx(coordinates[static_cast<std::size_t>(i) * dim]))
        << "\" cy=\"" << fmt(sy(coordinates[static_cast<std::size_t>(i) * dim + 1]))
        << "\" r=\"2.5\" fill=\"#1f5fa8\"/>\n";
  out << "</svg>\n";
}

void write_diagram_svg(const std::filesystem::path& path,
                       const PersistenceDiagram& diagram, const std::string& title) {
  const int size = 480;
  const int margin = 48;
  auto out = open_svg(path, size, size);
  title_text(out, title, size);

  double max_finite = 0.0;
  for (const auto& p : diagram.points) {
    max_finite = std::max(max_finite, p.birth);
    if (!p.essential()) max_finite = std::max(max_finite, p.death);
  }
  if (max_finite <= 0.0) max_finite = 1.0;
  const double top = max_finite * 1.05;
  const double inf_line = max_finite * 1.12;

  const auto sx = [&](double v) { return margin + v / (inf_line * 1.05) * (size - 2 * margin); };
  const auto sy = [&](double v) {
    return size - margin - v / (inf_line * 1.05) * (size - 2 * margin);
  };

  out << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\""
      << fmt(sx(top)) << "\" y2=\"" << fmt(sy(top))
      << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(inf_line)) << "\" x2=\""
      << fmt(sx(top)) << "\" y2=\"" << fmt(sy(inf_line))
      << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";
  out << "<text x=\"" << fmt(sx(0)) << "\" y=\"" << fmt(sy(inf_line) - 4)
      << "\" font-family=\"sans-serif\" font-size=\"10\">inf</text>\n";

  static const char* colors[3] = {"#1f77b4", "#ff7f0e", "#2ca02c"};
  for (const auto& p : diagram.points) {
    const double death = p.essential() ? inf_line : p.death;
    const char* color = colors[std::clamp(p.dim, 0, 2)];
    out << "<circle cx=\"" << fmt(sx(p.birth)) << "\" cy=\"" << fmt(sy(death))
        << "\" r=\"3\" fill=\"" << color << "\" fill-opacity=\"0.75\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace cli
}  // namespace geofuse
