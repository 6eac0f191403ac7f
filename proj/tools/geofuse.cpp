#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "geofuse/cli/commands.hpp"
#include "geofuse/cli/manifest.hpp"

namespace cli = geofuse::cli;

namespace {

void add_delay_flags(CLI::App* cmd, geofuse::DelayParams& delay, std::string& boundary,
                     std::string& scope) {
  cmd->add_option("--tau", delay.tau, "delay step in samples")->capture_default_str();
  cmd->add_option("--d", delay.d, "window length")->capture_default_str();
  cmd->add_option("--lambda", delay.lambda, "orthogonality strength in [0,1]")
      ->capture_default_str();
  cmd->add_option("--boundary", boundary, "window boundary: truncate | wrap")
      ->capture_default_str();
  cmd->add_option("--scope", scope,
                  "projection scope: unmarked_only | all_vectors")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-sensor time-series fusion via joint delay embeddings, with SNF "
               "and JDL baselines, MDS and Rips-persistence evaluation"};
  app.require_subcommand(1);
  app.set_config("--run-file", "",
                 "optional key=value run file; command-line flags win on conflict");

  cli::CommonOptions common;
  app.add_flag("--quiet", common.quiet, "suppress progress lines");

  // synth
  cli::SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic experiment");
  synth_cmd->add_option("--experiment", synth.experiment, "experiment kind: 1 | 2 | 3")
      ->required();
  synth_cmd->add_option("--seed", synth.seed, "generator seed")->capture_default_str();
  synth_cmd->add_option("--out", synth.out_dir, "output directory")->required();

  // fuse
  cli::FuseOptions fuse;
  std::string fuse_boundary = "truncate";
  std::string fuse_scope = "unmarked_only";
  auto* fuse_cmd = app.add_subcommand("fuse", "fuse a channels CSV into one matrix");
  fuse_cmd->add_option("--method", fuse.method, "jde | jdl | snf")->required();
  fuse_cmd->add_option("--channels", fuse.channels_file, "channels CSV (with header)")
      ->required();
  fuse_cmd->add_option("--out", fuse.out, "output matrix CSV")->required();
  add_delay_flags(fuse_cmd, fuse.delay, fuse_boundary, fuse_scope);
  fuse_cmd->add_option("--beta", fuse.snf_config.beta, "SNF kernel scale")
      ->capture_default_str();
  fuse_cmd->add_option("--kappa", fuse.snf_config.kappa, "SNF neighborhood fraction")
      ->capture_default_str();
  fuse_cmd
      ->add_option("--iterations", fuse.snf_config.iterations, "SNF sweep count")
      ->capture_default_str();
  fuse_cmd->add_flag("--symmetrize-each-step", fuse.snf_config.symmetrize_each_step,
                     "average each updated kernel with its transpose");
  fuse_cmd->add_flag("--synchronous-updates", fuse.snf_config.synchronous_updates,
                     "update all views from the previous sweep");
  fuse_cmd->add_flag("--windowed-views", fuse.windowed_views,
                     "feed jdl/snf per-channel window distances instead of raw ones");

  // eval
  cli::EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "compare a fused matrix to ground truth");
  eval_cmd->add_option("--fused", eval.fused, "fused matrix CSV")->required();
  eval_cmd->add_option("--truth", eval.truth, "ground-truth matrix CSV")->required();
  eval_cmd->add_option("--out", eval.out, "report JSON path")->required();
  eval_cmd->add_option("--fused-kind", eval.fused_kind, "distance | similarity")
      ->capture_default_str();
  eval_cmd->add_option("--method-label", eval.method_label, "name recorded in report");
  eval_cmd->add_option("--beta", eval.beta, "kernel scale for similarity comparison")
      ->capture_default_str();
  eval_cmd->add_option("--kappa", eval.kappa, "neighborhood fraction for similarity")
      ->capture_default_str();
  eval_cmd->add_option("--mds-dim", eval.mds_dim, "embedding dim for negative mass")
      ->capture_default_str();

  // mds
  cli::MdsOptions mds;
  auto* mds_cmd = app.add_subcommand("mds", "classical MDS embedding of a matrix");
  mds_cmd->add_option("--matrix", mds.matrix, "dissimilarity matrix CSV")->required();
  mds_cmd->add_option("--k", mds.k, "embedding dimension")->capture_default_str();
  mds_cmd->add_option("--out", mds.out, "coordinates CSV (scatter SVG lands next to it)")
      ->required();

  // persistence
  cli::PersistenceOptions pers;
  std::string threshold_arg = "enclosing";
  auto* pers_cmd =
      app.add_subcommand("persistence", "Vietoris-Rips persistence diagram");
  pers_cmd->add_option("--matrix", pers.matrix, "dissimilarity matrix CSV")->required();
  pers_cmd->add_option("--max-dim", pers.max_dim, "top homology dimension: 0 | 1 | 2")
      ->capture_default_str();
  pers_cmd
      ->add_option("--threshold", threshold_arg,
                   "filtration cutoff, or 'enclosing' for the largest entry")
      ->capture_default_str();
  pers_cmd->add_option("--budget", pers.simplex_budget, "simplex count cap")
      ->capture_default_str();
  pers_cmd->add_option("--out", pers.out, "diagram CSV (SVG lands next to it)")
      ->required();

  // ingest
  cli::IngestOptions ingest;
  auto* ingest_cmd =
      app.add_subcommand("ingest", "load a device-motion trial and re-emit channels");
  ingest_cmd->add_option("--file", ingest.file, "trial CSV");
  ingest_cmd->add_option("--root", ingest.root,
                         "dataset root, used with --activity/--subject");
  ingest_cmd->add_option("--activity", ingest.activity, "trial label, e.g. dws_1");
  ingest_cmd->add_option("--subject", ingest.subject, "subject id")
      ->capture_default_str();
  ingest_cmd->add_option("--out", ingest.out_dir, "output directory")->required();
  ingest_cmd->add_option("--max-rows", ingest.max_rows, "rows to keep")
      ->capture_default_str();
  ingest_cmd->add_option("--channels", ingest.channels,
                         "channel names to keep (default: all twelve modalities)");
  ingest_cmd->add_flag("--standardize", ingest.standardize,
                       "scale channels to mean 0, sample stddev 1");

  // pipeline
  cli::PipelineOptions pipeline;
  auto* pipeline_cmd =
      app.add_subcommand("pipeline", "run a full experiment: fusions, evals, figures");
  pipeline_cmd
      ->add_option("--experiment", pipeline.experiment,
                   "exp1 | exp2 | exp3 | motionsense")
      ->required();
  pipeline_cmd->add_option("--seed", pipeline.seed, "generator seed")
      ->capture_default_str();
  pipeline_cmd->add_option("--data", pipeline.data,
                           "device-motion trial CSV (motionsense only)");
  pipeline_cmd->add_option("--data-root", pipeline.data_root,
                           "dataset root, used with --activity/--subject");
  pipeline_cmd->add_option("--activity", pipeline.activity, "trial label, e.g. dws_1");
  pipeline_cmd->add_option("--subject", pipeline.subject, "subject id")
      ->capture_default_str();
  pipeline_cmd->add_flag("--standardize", pipeline.standardize,
                         "standardize ingested channels");
  pipeline_cmd->add_option("--out", pipeline.out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth_cmd) return cli::cmd_synth(synth, common);
    if (*fuse_cmd) {
      fuse.delay.boundary = geofuse::boundary_from_string(fuse_boundary);
      fuse.delay.scope = geofuse::scope_from_string(fuse_scope);
      return cli::cmd_fuse(fuse, common);
    }
    if (*eval_cmd) return cli::cmd_eval(eval, common);
    if (*mds_cmd) return cli::cmd_mds(mds, common);
    if (*pers_cmd) {
      if (threshold_arg != "enclosing") pers.threshold = std::stod(threshold_arg);
      return cli::cmd_persistence(pers, common);
    }
    if (*ingest_cmd) return cli::cmd_ingest(ingest, common);
    if (*pipeline_cmd) return cli::cmd_pipeline(pipeline, common);
  } catch (const geofuse::Error& e) {
    std::cerr << "geofuse: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "geofuse: " << e.what() << '\n';
    return 1;
  }
  std::cerr << "geofuse: no subcommand selected\n";
  return 1;
}
