// Serial-vs-OpenMP timings for the data-parallel kernels. The parallel and
// serial paths must agree bitwise; the max-diff column double-checks that
// while timing.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "geofuse/core.hpp"
#include "geofuse/embedding.hpp"
#include "geofuse/orthofuse.hpp"
#include "geofuse/persistence.hpp"
#include "geofuse/rng.hpp"
#include "geofuse/snf.hpp"
#include "geofuse/synth.hpp"

using namespace geofuse;

namespace {

template <typename F>
double time_ms(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

void report(const char* name, double serial_ms, double parallel_ms, double diff) {
  std::printf("%-28s %10.1f ms %10.1f ms %7.2fx   max diff %.3g\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, diff);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    const int n = 2500;
    Rng rng(11);
    std::vector<double> points(static_cast<std::size_t>(n) * 3);
    for (double& v : points) v = rng.uniform(-5.0, 5.0);
    DissimilarityMatrix serial, parallel;
    const double ts = time_ms([&] { serial = pairwise_distances_serial(points, n, 3); });
    const double tp = time_ms([&] { parallel = pairwise_distances(points, n, 3); });
    report("pairwise_distances", ts, tp, max_abs_diff(serial.values, parallel.values));
  }

  {
    synth::TorusCurveParams params;
    params.n_points = 350;
    const auto points = synth::torus_curve(params);
    Rng rng(7);
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
    for (int i = 0; i < 6; ++i) {
      synth::Sensor sensor;
      sensor.kind = synth::Sensor::Kind::projection;
      sensor.vector = rng.unit_vector3();
      names.push_back("proj_" + std::to_string(i));
      columns.push_back(synth::apply_sensor(points, sensor));
    }
    const auto ts = MultiTimeSeries::from_scalar_columns(names, columns);
    DelayParams delay;
    delay.d = 20;
    delay.lambda = 1.0;
    delay.boundary = Boundary::wrap;
    const auto starts = all_window_starts(make_window_plan(ts, delay));
    DissimilarityMatrix serial, parallel;
    const double t_serial =
        time_ms([&] { serial = jde_matrix_serial(ts, delay, starts); });
    const double t_parallel = time_ms([&] { parallel = jde_matrix(ts, delay, starts); });
    report("jde_matrix d=20 lambda=1", t_serial, t_parallel,
           max_abs_diff(serial.values, parallel.values));
  }

  {
    const int n = 1500;
    Rng rng(23);
    std::vector<double> points(static_cast<std::size_t>(n) * 3);
    for (double& v : points) v = rng.uniform(-5.0, 5.0);
    const auto d = pairwise_distances(points, n, 3);
    SimilarityMatrix serial, parallel;
    const double ts = time_ms([&] { serial = snf::to_similarity_serial(d, 0.5, 0.1); });
    const double tp = time_ms([&] { parallel = snf::to_similarity(d, 0.5, 0.1); });
    report("snf to_similarity", ts, tp, max_abs_diff(serial.values, parallel.values));
  }

  {
    synth::TorusCurveParams params;
    params.n_points = 140;
    const auto d = synth::ground_truth_matrix(synth::torus_curve(params));
    PersistenceDiagram serial, parallel;
    const double ts = time_ms([&] { serial = rips_persistence_serial(d); });
    const double tp = time_ms([&] { parallel = rips_persistence(d); });
    double diff = serial.points.size() == parallel.points.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; !diff && i < serial.points.size(); ++i)
      diff = std::max({diff, std::abs(serial.points[i].birth - parallel.points[i].birth),
                       serial.points[i].death == parallel.points[i].death
                           ? 0.0
                           : std::abs(serial.points[i].death - parallel.points[i].death)});
    report("rips_persistence dim<=1", ts, tp, diff);
  }

  return 0;
}
