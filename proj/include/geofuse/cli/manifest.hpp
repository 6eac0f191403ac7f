#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace geofuse {
namespace cli {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Record of one CLI run, written as JSON next to the run's outputs.
struct RunManifest {
  std::string subcommand;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  double duration_seconds = 0.0;

  void write(const std::filesystem::path& path) const;
};

/// Wall-clock scope that fills duration_seconds on write.
class ManifestTimer {
 public:
  ManifestTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cli
}  // namespace geofuse
