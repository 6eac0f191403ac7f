#include "geofuse/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "geofuse/cli/manifest.hpp"
#include "geofuse/cli/svg.hpp"
#include "geofuse/csv.hpp"
#include "geofuse/embedding.hpp"
#include "geofuse/geomtools.hpp"
#include "geofuse/ingest.hpp"
#include "geofuse/orthofuse.hpp"
#include "geofuse/synth.hpp"

namespace geofuse {
namespace cli {

namespace {

namespace fs = std::filesystem;

void say(const CommonOptions& common, const std::string& line) {
  if (!common.quiet) std::cout << line << '\n';
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorCode::IoError, "cannot create directory '" + dir.string() + "'");
}

nlohmann::json delay_json(const DelayParams& p) {
  return {{"tau", p.tau},
          {"d", p.d},
          {"lambda", p.lambda},
          {"boundary", to_string(p.boundary)},
          {"scope", to_string(p.scope)}};
}

nlohmann::json snf_json(const snf::SnfConfig& c) {
  return {{"beta", c.beta},
          {"kappa", c.kappa},
          {"iterations", c.iterations},
          {"symmetrize_each_step", c.symmetrize_each_step},
          {"synchronous_updates", c.synchronous_updates}};
}

void write_diagram_csv(const fs::path& path, const PersistenceDiagram& diagram) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << "dim,birth,death\n";
  for (const auto& p : diagram.points) {
    out << p.dim << ',' << format_double(p.birth) << ',';
    if (p.essential())
      out << "inf";
    else
      out << format_double(p.death);
    out << '\n';
  }
}

struct FusedOutput {
  SquareMatrix values;
  std::string kind;  // "distance" or "similarity"
  nlohmann::json params;
};

FusedOutput run_fusion(const MultiTimeSeries& ts, const FuseOptions& options) {
  FusedOutput result;
  if (options.method == "jde") {
    const auto plan = make_window_plan(ts, options.delay);
    const auto starts = all_window_starts(plan);
    result.values = jde_matrix(ts, options.delay, starts).values;
    result.kind = "distance";
    result.params = delay_json(options.delay);
  } else if (options.method == "jdl") {
    const auto views =
        per_channel_distance_matrices(ts, options.delay, options.windowed_views);
    result.values = jdl_matrix(views).values;
    result.kind = "distance";
    result.params = {{"windowed_views", options.windowed_views}};
    if (options.windowed_views) result.params.update(delay_json(options.delay));
  } else if (options.method == "snf") {
    const auto views =
        per_channel_distance_matrices(ts, options.delay, options.windowed_views);
    result.values = snf::snf_fuse(views, options.snf_config).values;
    result.kind = "similarity";
    result.params = snf_json(options.snf_config);
    result.params["windowed_views"] = options.windowed_views;
  } else {
    fail(ErrorCode::InvalidArgument, "unknown fusion method '" + options.method + "'");
  }
  return result;
}

}  // namespace

int cmd_synth(const SynthOptions& options, const CommonOptions& common) {
  ManifestTimer timer;
  ensure_dir(options.out_dir);
  const auto experiment = synth::make_experiment(options.experiment, options.seed);

  const fs::path points_path = options.out_dir / "points.csv";
  const fs::path channels_path = options.out_dir / "channels.csv";
  const fs::path truth_path = options.out_dir / "ground_truth.csv";
  write_points_csv(points_path, experiment.points);
  write_channels_csv(channels_path, experiment.series);
  write_matrix_csv(truth_path, experiment.ground_truth.values);

  RunManifest manifest;
  manifest.subcommand = "synth";
  manifest.parameters = {{"experiment", options.experiment}, {"seed", options.seed}};
  nlohmann::json sensors = nlohmann::json::array();
  for (const auto& s : experiment.sensors)
    sensors.push_back({{"name", s.name},
                       {"kind", s.kind == synth::Sensor::Kind::projection
                                    ? "projection"
                                    : "basepoint"},
                       {"vector", {s.vector[0], s.vector[1], s.vector[2]}}});
  manifest.parameters["sensors"] = sensors;
  manifest.outputs = {points_path.string(), channels_path.string(),
                      truth_path.string()};
  manifest.duration_seconds = timer.elapsed_seconds();
  manifest.write(options.out_dir / "manifest.json");
  say(common, "synth: wrote experiment " + std::to_string(options.experiment) +
                  " under " + options.out_dir.string());
  return 0;
}

int cmd_fuse(const FuseOptions& options, const CommonOptions& common) {
  ManifestTimer timer;
  const MultiTimeSeries ts = read_channels_csv(options.channels_file);
  const FusedOutput fused = run_fusion(ts, options);
  if (options.out.has_parent_path()) ensure_dir(options.out.parent_path());
  write_matrix_csv(options.out, fused.values);

  RunManifest manifest;
  manifest.subcommand = "fuse";
  manifest.parameters = fused.params;
  manifest.parameters["method"] = options.method;
  manifest.parameters["output_kind"] = fused.kind;
  manifest.inputs = {options.channels_file.string()};
  manifest.outputs = {options.out.string()};
  manifest.duration_seconds = timer.elapsed_seconds();
  manifest.write(options.out.string() + ".manifest.json");
  say(common, "fuse: " + options.method + " -> " + options.out.string() + " (" +
                  std::to_string(fused.values.size()) + "x" +
                  std::to_string(fused.values.size()) + ", " + fused.kind + ")");
  return 0;
}

int cmd_eval(const EvalOptions& options, const CommonOptions& common) {
  ManifestTimer timer;
  const SquareMatrix fused_raw = read_matrix_csv(options.fused);
  const SquareMatrix truth_raw = read_matrix_csv(options.truth);
  const DissimilarityMatrix truth = validate_dissimilarity(truth_raw);

  nlohmann::json report;
  report["method"] =
      options.method_label.empty() ? options.fused.stem().string() : options.method_label;

  if (options.fused_kind == "distance") {
    const DissimilarityMatrix fused = validate_dissimilarity(fused_raw);
    report["params"] = {{"fused_kind", "distance"}, {"mds_dim", options.mds_dim}};
    report["scale_aligned_error"] = scale_aligned_error(fused.values, truth.values);
    report["pearson"] =
        offdiag_correlation(fused.values, truth.values, CorrelationMethod::pearson);
    report["spearman"] =
        offdiag_correlation(fused.values, truth.values, CorrelationMethod::spearman);
    report["negative_mass"] = classical_mds(fused, options.mds_dim).negative_mass;
  } else if (options.fused_kind == "similarity") {
    // Like compares with like: bring the ground truth into similarity space
    // with the same kernel parameters, then row-normalize both sides.
    SimilarityMatrix fused_sim{SimilarityKind::fused, fused_raw};
    const SimilarityMatrix fused_kernel = snf::full_kernel(fused_sim);
    const SimilarityMatrix truth_kernel =
        snf::full_kernel(snf::to_similarity(truth, options.beta, options.kappa));
    report["params"] = {{"fused_kind", "similarity"},
                        {"beta", options.beta},
                        {"kappa", options.kappa}};
    report["scale_aligned_error"] =
        scale_aligned_error(fused_kernel.values, truth_kernel.values);
    report["pearson"] = offdiag_correlation(fused_kernel.values, truth_kernel.values,
                                            CorrelationMethod::pearson);
    report["spearman"] = offdiag_correlation(fused_kernel.values, truth_kernel.values,
                                             CorrelationMethod::spearman);
    report["negative_mass"] = nullptr;
  } else {
    fail(ErrorCode::InvalidArgument,
         "fused kind must be 'distance' or 'similarity', got '" + options.fused_kind +
             "'");
  }

  if (options.out.has_parent_path()) ensure_dir(options.out.parent_path());
  std::ofstream out(options.out, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write '" + options.out.string() + "'");
  out << report.dump(2) << '\n';

  RunManifest manifest;
  manifest.subcommand = "eval";
  manifest.parameters = report["params"];
  manifest.inputs = {options.fused.string(), options.truth.string()};
  manifest.outputs = {options.out.string()};
  manifest.duration_seconds = timer.elapsed_seconds();
  manifest.write(options.out.string() + ".manifest.json");
  say(common, "eval: " + options.out.string());
  return 0;
}

int cmd_mds(const MdsOptions& options, const CommonOptions& common) {
  ManifestTimer timer;
  const DissimilarityMatrix d = validate_dissimilarity(read_matrix_csv(options.matrix));
  const MdsResult result = classical_mds(d, options.k);

  if (options.out.has_parent_path()) ensure_dir(options.out.parent_path());
  write_rect_csv(options.out, result.coordinates, result.n_points, result.dim);
  fs::path svg_path = options.out;
  svg_path.replace_extension(".svg");
  if (result.dim >= 2)
    write_scatter_svg(svg_path, result.coordinates, result.n_points, result.dim,
                      "MDS " + options.matrix.stem().string());

  RunManifest manifest;
  manifest.subcommand = "mds";
  manifest.parameters = {{"k", options.k}, {"negative_mass", result.negative_mass}};
  nlohmann::json eigenvalues = nlohmann::json::array();
  for (double v : result.eigenvalues) eigenvalues.push_back(v);
  manifest.parameters["eigenvalues"] = eigenvalues;
  manifest.inputs = {options.matrix.string()};
  manifest.outputs = {options.out.string()};
  if (result.dim >= 2) manifest.outputs.push_back(svg_path.string());
  manifest.duration_seconds = timer.elapsed_seconds();
  manifest.write(options.out.string() + ".manifest.json");
  say(common, "mds: " + options.out.string());
  return 0;
}

int cmd_persistence(const PersistenceOptions& options, const CommonOptions& common) {
  ManifestTimer timer;
  const DissimilarityMatrix d = validate_dissimilarity(read_matrix_csv(options.matrix));
  RipsOptions rips;
  rips.max_dim = options.max_dim;
  rips.threshold = options.threshold;
  rips.simplex_budget = options.simplex_budget;
  const PersistenceDiagram diagram = rips_persistence(d, rips);

  if (options.out.has_parent_path()) ensure_dir(options.out.parent_path());
  write_diagram_csv(options.out, diagram);
  fs::path svg_path = options.out;
  svg_path.replace_extension(".svg");
  write_diagram_svg(svg_path, diagram,
                    "Persistence " + options.matrix.stem().string());

  RunManifest manifest;
  manifest.subcommand = "persistence";
  manifest.parameters = {{"max_dim", options.max_dim},
                         {"threshold", diagram.threshold},
                         {"enclosing", !options.threshold.has_value()},
                         {"simplex_budget", options.simplex_budget},
                         {"points", diagram.points.size()}};
  manifest.inputs = {options.matrix.string()};
  manifest.outputs = {options.out.string(), svg_path.string()};
  manifest.duration_seconds = timer.elapsed_seconds();
  manifest.write(options.out.string() + ".manifest.json");
  say(common, "persistence: " + options.out.string() + " (" +
                  std::to_string(diagram.points.size()) + " points)");
  return 0;
}

namespace {

fs::path resolve_trial(const fs::path& file, const fs::path& root,
                       const std::string& activity, int subject) {
  if (!file.empty()) return file;
  if (root.empty() || activity.empty())
    fail(ErrorCode::InvalidArgument,
         "give a trial CSV directly, or a dataset root plus an activity");
  return ingest::trial_path(root, activity, subject);
}

}  // namespace

int cmd_ingest(const IngestOptions& options, const CommonOptions& common) {
  ManifestTimer timer;
  ingest::TrialSpec spec;
  spec.activity = options.activity;
  spec.subject = options.subject;
  spec.max_rows = options.max_rows;
  spec.standardize = options.standardize;
  if (!options.channels.empty()) spec.channels = options.channels;
  const fs::path file =
      resolve_trial(options.file, options.root, options.activity, options.subject);
  const MultiTimeSeries ts = ingest::load_motionsense(file, spec);

  ensure_dir(options.out_dir);
  const fs::path channels_path = options.out_dir / "channels.csv";
  write_channels_csv(channels_path, ts);

  RunManifest manifest;
  manifest.subcommand = "ingest";
  manifest.parameters = {{"max_rows", options.max_rows},
                         {"standardize", options.standardize},
                         {"channels", ts.channel_count()},
                         {"samples", ts.sample_count()}};
  manifest.inputs = {file.string()};
  manifest.outputs = {channels_path.string()};
  manifest.duration_seconds = timer.elapsed_seconds();
  manifest.write(options.out_dir / "manifest.json");
  say(common, "ingest: " + std::to_string(ts.channel_count()) + " channels, T=" +
                  std::to_string(ts.sample_count()));
  return 0;
}

namespace {

struct PipelineContext {
  fs::path out_dir;
  RunManifest manifest;
  nlohmann::json figures = nlohmann::json::array();
};

void emit_heatmap(PipelineContext& ctx, const SquareMatrix& m, const std::string& name) {
  const fs::path path = ctx.out_dir / ("heatmap_" + name + ".svg");
  const HeatmapScale scale = write_heatmap_svg(path, m, name);
  ctx.figures.push_back({{"file", path.filename().string()},
                         {"scale_min", scale.min},
                         {"scale_max", scale.max}});
  ctx.manifest.outputs.push_back(path.string());
}

void run_synth_pipeline(int experiment_kind, const PipelineOptions& options,
                        const CommonOptions& common, PipelineContext& ctx) {
  const auto experiment = synth::make_experiment(experiment_kind, options.seed);
  const auto& truth = experiment.ground_truth;

  const fs::path channels_path = ctx.out_dir / "channels.csv";
  const fs::path truth_path = ctx.out_dir / "ground_truth.csv";
  write_points_csv(ctx.out_dir / "points.csv", experiment.points);
  write_channels_csv(channels_path, experiment.series);
  write_matrix_csv(truth_path, truth.values);
  ctx.manifest.outputs.push_back(channels_path.string());
  ctx.manifest.outputs.push_back(truth_path.string());
  emit_heatmap(ctx, truth.values, "ground_truth");

  struct MethodRun {
    std::string name;
    SquareMatrix values;
    std::string kind;
  };
  std::vector<MethodRun> runs;

  {
    DelayParams raw;
    raw.boundary = Boundary::wrap;
    const auto views = per_channel_distance_matrices(experiment.series, raw, false);
    runs.push_back({"jdl", jdl_matrix(views).values, "distance"});
    snf::SnfConfig config;  // beta 0.5, kappa 0.1
    runs.push_back({"snf", snf::snf_fuse(views, config).values, "similarity"});
  }
  for (int d : {10, 20}) {
    for (double lambda : {0.0, 1.0}) {
      DelayParams params;
      params.tau = 1;
      params.d = d;
      params.lambda = lambda;
      params.boundary = Boundary::wrap;
      const auto plan = make_window_plan(experiment.series, params);
      const auto starts = all_window_starts(plan);
      char name[64];
      std::snprintf(name, sizeof(name), "jde_d%d_lambda%d", d,
                    static_cast<int>(lambda));
      runs.push_back(
          {name, jde_matrix(experiment.series, params, starts).values, "distance"});
    }
  }

  for (const auto& run : runs) {
    const fs::path matrix_path = ctx.out_dir / (run.name + ".csv");
    write_matrix_csv(matrix_path, run.values);
    ctx.manifest.outputs.push_back(matrix_path.string());
    emit_heatmap(ctx, run.values, run.name);

    EvalOptions eval;
    eval.fused = matrix_path;
    eval.truth = truth_path;
    eval.out = ctx.out_dir / ("eval_" + run.name + ".json");
    eval.fused_kind = run.kind;
    eval.method_label = run.name;
    cmd_eval(eval, common);
    ctx.manifest.outputs.push_back(eval.out.string());
  }
}

void run_motionsense_pipeline(const PipelineOptions& options,
                              const CommonOptions& common, PipelineContext& ctx) {
  const fs::path data = resolve_trial(options.data, options.data_root,
                                      options.activity, options.subject);
  ingest::TrialSpec spec;
  spec.activity = options.activity;
  spec.subject = options.subject;
  spec.standardize = options.standardize;
  const MultiTimeSeries ts = ingest::load_motionsense(data, spec);
  ctx.manifest.inputs.push_back(data.string());
  const fs::path channels_path = ctx.out_dir / "channels.csv";
  write_channels_csv(channels_path, ts);
  ctx.manifest.outputs.push_back(channels_path.string());

  struct MethodRun {
    std::string name;
    SquareMatrix values;
  };
  std::vector<MethodRun> runs;
  {
    DelayParams raw;  // truncate, d = 1
    const auto views = per_channel_distance_matrices(ts, raw, false);
    runs.push_back({"jdl", jdl_matrix(views).values});
  }
  for (double lambda : {0.0, 1.0}) {
    DelayParams params;
    params.tau = 1;
    params.d = 20;
    params.lambda = lambda;
    params.boundary = Boundary::truncate;
    const auto plan = make_window_plan(ts, params);
    const auto starts = all_window_starts(plan);
    char name[64];
    std::snprintf(name, sizeof(name), "jde_d20_lambda%d", static_cast<int>(lambda));
    runs.push_back({name, jde_matrix(ts, params, starts).values});
  }

  for (const auto& run : runs) {
    const fs::path matrix_path = ctx.out_dir / (run.name + ".csv");
    write_matrix_csv(matrix_path, run.values);
    ctx.manifest.outputs.push_back(matrix_path.string());
    emit_heatmap(ctx, run.values, run.name);

    MdsOptions mds;
    mds.matrix = matrix_path;
    mds.out = ctx.out_dir / ("mds_" + run.name + ".csv");
    mds.k = 3;
    cmd_mds(mds, common);
    ctx.manifest.outputs.push_back(mds.out.string());

    PersistenceOptions pers;
    pers.matrix = matrix_path;
    pers.out = ctx.out_dir / ("diagram_" + run.name + ".csv");
    pers.max_dim = 1;
    cmd_persistence(pers, common);
    ctx.manifest.outputs.push_back(pers.out.string());
  }
}

}  // namespace

int cmd_pipeline(const PipelineOptions& options, const CommonOptions& common) {
  ManifestTimer timer;
  PipelineContext ctx;
  ctx.out_dir = options.out_dir;
  ensure_dir(ctx.out_dir);
  ctx.manifest.subcommand = "pipeline";
  ctx.manifest.parameters = {{"experiment", options.experiment},
                             {"seed", options.seed},
                             {"standardize", options.standardize}};

  if (options.experiment == "exp1")
    run_synth_pipeline(1, options, common, ctx);
  else if (options.experiment == "exp2")
    run_synth_pipeline(2, options, common, ctx);
  else if (options.experiment == "exp3")
    run_synth_pipeline(3, options, common, ctx);
  else if (options.experiment == "motionsense")
    run_motionsense_pipeline(options, common, ctx);
  else
    fail(ErrorCode::InvalidArgument,
         "unknown experiment '" + options.experiment +
             "' (expected exp1, exp2, exp3, or motionsense)");

  ctx.manifest.parameters["figures"] = ctx.figures;
  ctx.manifest.duration_seconds = timer.elapsed_seconds();
  ctx.manifest.write(ctx.out_dir / "manifest.json");
  say(common, "pipeline " + options.experiment + ": outputs under " +
                  ctx.out_dir.string());
  return 0;
}

}  // namespace cli
}  // namespace geofuse
