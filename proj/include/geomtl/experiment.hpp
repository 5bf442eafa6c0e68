#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geomtl/metrics.hpp"
#include "geomtl/trainer.hpp"
#include "geomtl/worldgen.hpp"

namespace geomtl {

struct ModelConfig {
  size_t hidden_dim = 32;  // paper-scale towers use 512; desk default 32
  bool head_bias = true;
};

struct EvalConfig {
  std::vector<int32_t> case_territories = {0};
  size_t n_bins = 20;
  size_t min_positives = 10;
  size_t min_negatives = 5;
  double max_count_gap = 0.25;
};

// One experiment = one config document: world + model + training + eval
// sections, an output directory, and the master seed everything derives from.
struct ExperimentConfig {
  uint64_t seed = 1;
  std::string out_dir = "out";
  DataConfig world;
  ModelConfig model;
  TrainConfig train;
  EvalConfig eval;

  void validate() const;
};

// Parses a JSON config (// and /* */ comments allowed). Missing keys keep
// their defaults; unknown keys in known sections are rejected so typos fail
// loudly. Throws IoError / ValidationError.
ExperimentConfig load_experiment_config(const std::string& path);

// The three trained variants, in canonical order.
const std::vector<std::string>& model_variants();  // baseline, baseline-upsampled, mtl

// Artifact paths under cfg.out_dir (fixed layout, documented in the README).
std::string dataset_dir(const ExperimentConfig& cfg);
std::string models_dir(const ExperimentConfig& cfg);
std::string eval_dir(const ExperimentConfig& cfg);
std::string case_study_dir(const ExperimentConfig& cfg);
std::string checkpoint_path(const ExperimentConfig& cfg, const std::string& variant);

// gen-data: builds the world, samples users, generates the normal /
// upsampled / test datasets with all their day splits, writes embeddings and
// a dataset manifest with per-file content hashes. Byte-identical for a
// fixed (config, seed).
void run_gen_data(const ExperimentConfig& cfg);

// train: trains one variant. baseline consumes the normal dataset,
// baseline-upsampled and mtl the upsampled one. Writes the checkpoint (with
// optimizer state), a run manifest, and the loss-curve CSV.
void run_train(const ExperimentConfig& cfg, const std::string& variant);

// eval: loads the three checkpoints, walks the fine-tune-then-evaluate
// schedule over the test days (fine-tune checkpoints land under eval/, the
// originals are never touched), and writes per-day score tables, the
// territory x day gain CSV (per-day and averaged rows), and a summary JSON
// that also reports frozen (no fine-tuning) PR-AUC next to the incremental
// one.
void run_eval(const ExperimentConfig& cfg);

// case-study: consumes eval's score tables, picks the studied local/global
// title pairs, and writes the case-study CSV plus one score histogram SVG
// per selected title per model.
void run_case_study(const ExperimentConfig& cfg);

// gen-data -> train x3 -> eval -> case-study.
void run_all(const ExperimentConfig& cfg);

}  // namespace geomtl
