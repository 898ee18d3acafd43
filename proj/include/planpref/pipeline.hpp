#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planpref/common.hpp"
#include "planpref/ingest.hpp"
#include "planpref/parallel.hpp"

namespace planpref {

// One run, fully described. Relative data paths resolve against the config
// file's directory so a run means the same thing from any working directory.
struct RunConfig {
    std::uint64_t seed = 42;

    std::string cultural_path;
    std::vector<std::pair<Category, std::string>> socioeconomic_paths;
    std::string plan_catalog_path;
    std::string synth_config_path;  // exactly one of synth_config / aggregates
    std::string aggregates_path;

    ImputePolicy impute_policy = ImputePolicy::CarryForward;
    std::vector<std::string> categorical_columns = {"country", "left_and_returned", "plan_from",
                                                    "change_year", "change_month"};
    std::vector<std::string> log_scale_columns;
    std::vector<std::string> standardize_columns;  // standardized instead of min-maxed
    double train_ratio = 0.4, val_ratio = 0.3, test_ratio = 0.3;
    double outlier_z = 4.0;
    double t_low = 0.25;
    double t_redundant = 0.9;
    std::string preset = "final";  // or "original"
    std::vector<std::size_t> grid_batches = {16, 32, 64, 96};
    std::vector<std::size_t> grid_epochs = {25, 50, 100, 120};
    std::size_t epochs_override = 0;  // 0 keeps the preset's epoch count
    std::string output_dir = "out";
};

// config_dir anchors relative paths; the raw text is echoed into the
// manifest, so hold on to it.
RunConfig run_config_from_json(const std::string& text, const std::string& config_dir);

// Reads the file, validates, resolves paths against its directory.
RunConfig load_run_config(const std::string& path, std::string* raw_text = nullptr);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

struct PipelineContext {
    RunConfig config;
    std::string out_dir;          // after flag/env/config precedence
    std::string config_raw_text;  // original config file bytes, for the manifest
    WarningSink warnings;
    parallel::Exec exec = parallel::default_exec();
};

// Each stage reads the previous stages' artifacts from out_dir and writes
// its own there. A missing input names the stage that produces it.
void stage_ingest(PipelineContext& ctx);
void stage_synth(PipelineContext& ctx);
void stage_preprocess(PipelineContext& ctx);
void stage_features(PipelineContext& ctx);
void stage_train(PipelineContext& ctx);
void stage_grid(PipelineContext& ctx);
void stage_evaluate(PipelineContext& ctx);
void stage_compare(PipelineContext& ctx);
void stage_report(PipelineContext& ctx);

// ingest -> synth -> preprocess -> features -> train -> evaluate -> compare
// -> report. Grid search is its own command; it never runs inside pipeline.
void run_pipeline(PipelineContext& ctx);

}  // namespace planpref
