#pragma once

#include <array>
#include <span>
#include <vector>

#include "geofuse/core.hpp"
#include "geofuse/rng.hpp"

namespace geofuse {
namespace synth {

/// Closed curve on a torus: the tube angle advances `meridian_windings`
/// times and the axis angle `longitude_windings` times per period.
struct TorusCurveParams {
  double outer_radius = 5.0;  // R
  double inner_radius = 2.0;  // r
  int meridian_windings = 1;
  int longitude_windings = 2;
  double meridian_phase = 0.0;
  double longitude_phase = 0.0;
  int n_points = 100;

  void validate() const;
};

/// Evenly spaced curve samples at t_n = 2*pi*n/N, n = 0..N-1.
std::vector<std::array<double, 3>> torus_curve(const TorusCurveParams& params);

/// Pairwise Euclidean distances between the sampled points.
DissimilarityMatrix ground_truth_matrix(std::span<const std::array<double, 3>> points);

struct Sensor {
  enum class Kind { projection, basepoint };
  Kind kind = Kind::projection;
  std::array<double, 3> vector{1.0, 0.0, 0.0};  // unit direction or basepoint
  std::string name;
};

/// Scalar reading per sample: projection sensors take the inner product with
/// a unit direction; basepoint sensors take the distance to a fixed point.
std::vector<double> apply_sensor(std::span<const std::array<double, 3>> points,
                                 const Sensor& sensor);

struct Experiment {
  MultiTimeSeries series;
  DissimilarityMatrix ground_truth;
  std::vector<Sensor> sensors;
  std::vector<std::array<double, 3>> points;
};

/// The three synthetic setups over the default curve:
///   1: three random unit-direction projections,
///   2: three distances to random points in [-2.5, 2.5]^3,
///   3: two random projections plus two random basepoint distances.
/// Sensors are drawn from the seeded generator in the listed order.
Experiment make_experiment(int kind, Seed seed);

}  // namespace synth
}  // namespace geofuse
