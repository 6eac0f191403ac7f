#include "geofuse/synth.hpp"

#include <cmath>
#include <string>

namespace geofuse {
namespace synth {

void TorusCurveParams::validate() const {
  if (!(outer_radius > inner_radius && inner_radius > 0.0))
    fail(ErrorCode::InvalidArgument, "need outer_radius > inner_radius > 0");
  if (n_points < 3) fail(ErrorCode::InvalidArgument, "need at least 3 points");
}

std::vector<std::array<double, 3>> torus_curve(const TorusCurveParams& params) {
  params.validate();
  std::vector<std::array<double, 3>> points;
  points.reserve(static_cast<std::size_t>(params.n_points));
  for (int n = 0; n < params.n_points; ++n) {
    const double t = 2.0 * M_PI * n / params.n_points;
    const double tube = params.meridian_windings * t + params.meridian_phase;
    const double axis = params.longitude_windings * t + params.longitude_phase;
    const double radial = params.outer_radius + params.inner_radius * std::cos(tube);
    points.push_back({radial * std::cos(axis), radial * std::sin(axis),
                      params.inner_radius * std::sin(tube)});
  }
  return points;
}

DissimilarityMatrix ground_truth_matrix(std::span<const std::array<double, 3>> points) {
  return pairwise_distances(
      std::span<const double>(points.empty() ? nullptr : points.front().data(),
                              points.size() * 3),
      static_cast<int>(points.size()), 3);
}

std::vector<double> apply_sensor(std::span<const std::array<double, 3>> points,
                                 const Sensor& sensor) {
  const auto& v = sensor.vector;
  if (sensor.kind == Sensor::Kind::projection) {
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (std::abs(norm - 1.0) > 1e-12)
      fail(ErrorCode::NonUnitProjection,
           "projection direction has norm " + std::to_string(norm));
  }
  std::vector<double> series;
  series.reserve(points.size());
  for (const auto& p : points) {
    if (sensor.kind == Sensor::Kind::projection) {
      series.push_back(p[0] * v[0] + p[1] * v[1] + p[2] * v[2]);
    } else {
      const double dx = p[0] - v[0];
      const double dy = p[1] - v[1];
      const double dz = p[2] - v[2];
      series.push_back(std::sqrt(dx * dx + dy * dy + dz * dz));
    }
  }
  return series;
}

namespace {

Sensor random_projection(Rng& rng, int index) {
  Sensor s;
  s.kind = Sensor::Kind::projection;
  s.vector = rng.unit_vector3();
  s.name = "proj_" + std::to_string(index);
  return s;
}

Sensor random_basepoint(Rng& rng, int index) {
  Sensor s;
  s.kind = Sensor::Kind::basepoint;
  s.vector = {rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5)};
  s.name = "dist_" + std::to_string(index);
  return s;
}

}  // namespace

Experiment make_experiment(int kind, Seed seed) {
  Rng rng(seed);
  std::vector<Sensor> sensors;
  switch (kind) {
    case 1:
      for (int i = 0; i < 3; ++i) sensors.push_back(random_projection(rng, i + 1));
      break;
    case 2:
      for (int i = 0; i < 3; ++i) sensors.push_back(random_basepoint(rng, i + 1));
      break;
    case 3:
      for (int i = 0; i < 2; ++i) sensors.push_back(random_projection(rng, i + 1));
      for (int i = 0; i < 2; ++i) sensors.push_back(random_basepoint(rng, i + 1));
      break;
    default:
      fail(ErrorCode::InvalidArgument, "experiment kind must be 1, 2, or 3");
  }

  auto points = torus_curve(TorusCurveParams{});
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  for (const Sensor& s : sensors) {
    names.push_back(s.name);
    columns.push_back(apply_sensor(points, s));
  }
  Experiment experiment{
      MultiTimeSeries::from_scalar_columns(std::move(names), columns),
      ground_truth_matrix(points), std::move(sensors), std::move(points)};
  return experiment;
}

}  // namespace synth
}  // namespace geofuse
