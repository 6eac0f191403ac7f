#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "geofuse/core.hpp"
#include "geofuse/persistence.hpp"
#include "geofuse/rng.hpp"
#include "geofuse/snf.hpp"

namespace geofuse {
namespace cli {

struct CommonOptions {
  bool quiet = false;
};

struct SynthOptions {
  int experiment = 1;  // 1, 2, or 3
  Seed seed = 0;
  std::filesystem::path out_dir;
};

struct FuseOptions {
  std::string method = "jde";  // jde | jdl | snf
  std::filesystem::path channels_file;
  std::filesystem::path out;
  DelayParams delay;
  snf::SnfConfig snf_config;
  bool windowed_views = false;  // jdl/snf consume per-channel window distances
};

struct EvalOptions {
  std::filesystem::path fused;
  std::filesystem::path truth;
  std::filesystem::path out;
  std::string fused_kind = "distance";  // distance | similarity
  std::string method_label;
  double beta = 0.5;   // similarity comparison parameters
  double kappa = 0.1;
  int mds_dim = 3;
};

struct MdsOptions {
  std::filesystem::path matrix;
  std::filesystem::path out;  // coordinates CSV; scatter SVG lands next to it
  int k = 3;
};

struct PersistenceOptions {
  std::filesystem::path matrix;
  std::filesystem::path out;  // diagram CSV; SVG lands next to it
  int max_dim = 1;
  std::optional<double> threshold;  // empty = enclosing
  std::size_t simplex_budget = 10'000'000;
};

struct IngestOptions {
  std::filesystem::path file;  // direct trial CSV; or resolve via root below
  std::filesystem::path root;
  std::string activity;
  int subject = 1;
  std::filesystem::path out_dir;
  int max_rows = 200;
  std::vector<std::string> channels;  // empty = the twelve device modalities
  bool standardize = false;
};

struct PipelineOptions {
  std::string experiment;  // exp1 | exp2 | exp3 | motionsense
  Seed seed = 0;
  std::filesystem::path data;  // trial CSV for motionsense; or root below
  std::filesystem::path data_root;
  std::string activity;
  int subject = 1;
  std::filesystem::path out_dir;
  bool standardize = false;
};

int cmd_synth(const SynthOptions& options, const CommonOptions& common);
int cmd_fuse(const FuseOptions& options, const CommonOptions& common);
int cmd_eval(const EvalOptions& options, const CommonOptions& common);
int cmd_mds(const MdsOptions& options, const CommonOptions& common);
int cmd_persistence(const PersistenceOptions& options, const CommonOptions& common);
int cmd_ingest(const IngestOptions& options, const CommonOptions& common);
int cmd_pipeline(const PipelineOptions& options, const CommonOptions& common);

}  // namespace cli
}  // namespace geofuse
