#include "geofuse/cli/manifest.hpp"

#include <fstream>

#include "geofuse/error.hpp"

namespace geofuse {
namespace cli {

void RunManifest::write(const std::filesystem::path& path) const {
  nlohmann::json doc;
  doc["subcommand"] = subcommand;
  doc["parameters"] = parameters;
  doc["inputs"] = inputs;
  doc["outputs"] = outputs;
  doc["artifact_version"] = kArtifactVersion;
  doc["duration_seconds"] = duration_seconds;
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write manifest '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

}  // namespace cli
}  // namespace geofuse
