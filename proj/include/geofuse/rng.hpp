#pragma once

#include <array>
#include <cstdint>
#include <random>

namespace geofuse {

using Seed = std::uint64_t;

/// Deterministic random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; the double mappings below are
/// explicit arithmetic, so one seed pins every synthetic input.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; consumes two uniforms per pair and
  /// caches the second value.
  double normal();

  /// Uniform direction on the unit sphere (three normals, normalized).
  std::array<double, 3> unit_vector3();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace geofuse
