#include <doctest.h>

#include <cmath>

#include "geofuse/synth.hpp"

using namespace geofuse;
using namespace geofuse::synth;

TEST_CASE("torus curve worked points") {
  TorusCurveParams params;
  const auto points = torus_curve(params);
  REQUIRE(points.size() == 100);
  CHECK(points[0][0] == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(points[0][1] == doctest::Approx(0.0));
  CHECK(points[0][2] == doctest::Approx(0.0));

  // Quarter turn: tube angle pi/2 flattens the radius to R, axis angle pi.
  const auto& quarter = points[25];
  CHECK(quarter[0] == doctest::Approx(-5.0).epsilon(1e-12));
  CHECK(std::abs(quarter[1]) < 1e-12);
  CHECK(quarter[2] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("every sample sits on the torus") {
  TorusCurveParams params;
  for (const auto& p : torus_curve(params)) {
    const double ring = std::sqrt(p[0] * p[0] + p[1] * p[1]) - params.outer_radius;
    CHECK(std::abs(ring * ring + p[2] * p[2] -
                   params.inner_radius * params.inner_radius) < 1e-12);
  }
}

TEST_CASE("curve closes after one period") {
  TorusCurveParams params;
  const auto points = torus_curve(params);
  const double t = 2.0 * M_PI;
  const double tube = params.meridian_windings * t;
  const double axis = params.longitude_windings * t;
  const double radial = params.outer_radius + params.inner_radius * std::cos(tube);
  const std::array<double, 3> wrapped{radial * std::cos(axis), radial * std::sin(axis),
                                      params.inner_radius * std::sin(tube)};
  for (int c = 0; c < 3; ++c)
    CHECK(std::abs(points[0][static_cast<std::size_t>(c)] -
                   wrapped[static_cast<std::size_t>(c)]) < 1e-12);
}

TEST_CASE("torus params are validated") {
  TorusCurveParams bad;
  bad.inner_radius = 6.0;
  CHECK_THROWS_AS(torus_curve(bad), Error);
  bad = TorusCurveParams{};
  bad.n_points = 2;
  CHECK_THROWS_AS(torus_curve(bad), Error);
}

TEST_CASE("ground truth matrix invariants") {
  TorusCurveParams params;
  const auto points = torus_curve(params);
  const auto d = ground_truth_matrix(points);
  REQUIRE(d.size() == 100);
  double max_entry = 0.0;
  for (int i = 0; i < 100; ++i) {
    CHECK(d.values(i, i) == 0.0);
    for (int j = 0; j < 100; ++j) {
      CHECK(d.values(i, j) == d.values(j, i));
      max_entry = std::max(max_entry, d.values(i, j));
    }
  }
  CHECK(max_entry <= 2.0 * (params.outer_radius + params.inner_radius));

  const auto& a = points[0];
  const auto& b = points[50];
  const double expected = std::sqrt((a[0] - b[0]) * (a[0] - b[0]) +
                                    (a[1] - b[1]) * (a[1] - b[1]) +
                                    (a[2] - b[2]) * (a[2] - b[2]));
  CHECK(d.values(0, 50) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("apply_sensor projections and basepoints") {
  TorusCurveParams params;
  const auto points = torus_curve(params);

  Sensor x_axis;
  x_axis.vector = {1.0, 0.0, 0.0};
  const auto xs = apply_sensor(points, x_axis);
  CHECK(xs[0] == doctest::Approx(7.0).epsilon(1e-12));

  Sensor z_axis;
  z_axis.vector = {0.0, 0.0, 1.0};
  const auto zs = apply_sensor(points, z_axis);
  for (int n = 0; n < 100; ++n) {
    const double t = 2.0 * M_PI * n / 100.0;
    CHECK(zs[static_cast<std::size_t>(n)] ==
          doctest::Approx(2.0 * std::sin(t)).epsilon(1e-12));
  }

  Sensor at_point;
  at_point.kind = Sensor::Kind::basepoint;
  at_point.vector = points[17];
  const auto ds = apply_sensor(points, at_point);
  CHECK(ds[17] == 0.0);
  for (double v : ds) CHECK(v >= 0.0);

  Sensor skewed;
  skewed.vector = {1.0, 1.0, 0.0};
  CHECK_THROWS_AS(apply_sensor(points, skewed), Error);
}

TEST_CASE("sensors are 1-Lipschitz against the ambient distance") {
  const auto experiment = make_experiment(3, 99);
  const auto& d = experiment.ground_truth;
  for (int c = 0; c < experiment.series.channel_count(); ++c) {
    const auto& values = experiment.series.channel(c).values;
    for (int a = 0; a < 100; ++a)
      for (int b = 0; b < 100; ++b)
        CHECK(std::abs(values[static_cast<std::size_t>(a)] -
                       values[static_cast<std::size_t>(b)]) <=
              d.values(a, b) + 1e-12);
  }
}

TEST_CASE("experiments have the documented channel counts and are seeded") {
  const auto exp1 = make_experiment(1, 7);
  CHECK(exp1.series.channel_count() == 3);
  CHECK(exp1.series.sample_count() == 100);
  for (const auto& s : exp1.sensors) CHECK(s.kind == Sensor::Kind::projection);

  const auto exp2 = make_experiment(2, 7);
  CHECK(exp2.series.channel_count() == 3);
  for (const auto& s : exp2.sensors) {
    CHECK(s.kind == Sensor::Kind::basepoint);
    for (double c : s.vector) {
      CHECK(c >= -2.5);
      CHECK(c <= 2.5);
    }
  }

  const auto exp3 = make_experiment(3, 7);
  CHECK(exp3.series.channel_count() == 4);
  CHECK(exp3.sensors[0].kind == Sensor::Kind::projection);
  CHECK(exp3.sensors[1].kind == Sensor::Kind::projection);
  CHECK(exp3.sensors[2].kind == Sensor::Kind::basepoint);
  CHECK(exp3.sensors[3].kind == Sensor::Kind::basepoint);

  const auto repeat = make_experiment(3, 7);
  for (int c = 0; c < 4; ++c)
    CHECK(repeat.series.channel(c).values == exp3.series.channel(c).values);

  const auto other = make_experiment(3, 8);
  bool differs = false;
  for (int c = 0; c < 4 && !differs; ++c)
    differs = other.series.channel(c).values != exp3.series.channel(c).values;
  CHECK(differs);

  CHECK_THROWS_AS(make_experiment(4, 7), Error);
}
