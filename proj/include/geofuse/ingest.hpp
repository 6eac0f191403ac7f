#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "geofuse/core.hpp"

namespace geofuse {
namespace ingest {

/// The twelve smartphone modalities, in canonical order.
const std::vector<std::string>& motionsense_channels();

struct TrialSpec {
  std::string activity;  // e.g. "dws_1"; informational when loading a file directly
  int subject = 1;
  int max_rows = 200;
  std::vector<std::string> channels = motionsense_channels();
  bool standardize = false;
};

/// Loads one device-motion trial CSV. Columns are matched by header name
/// (extra columns such as a leading row index are ignored), rows are
/// truncated to max_rows, and channels are optionally shifted/scaled to
/// mean 0 and sample standard deviation 1 (constant channels become zero).
MultiTimeSeries load_motionsense(const std::filesystem::path& file,
                                 const TrialSpec& spec);

/// "<root>/<activity>/sub_<subject>.csv", the on-disk layout of the dataset.
std::filesystem::path trial_path(const std::filesystem::path& root,
                                 const std::string& activity, int subject);

}  // namespace ingest
}  // namespace geofuse
