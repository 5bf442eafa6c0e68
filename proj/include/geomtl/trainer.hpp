#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "geomtl/adam.hpp"
#include "geomtl/matrix.hpp"
#include "geomtl/towers.hpp"
#include "geomtl/worldgen.hpp"

namespace geomtl {

struct TrainConfig {
  size_t batch_size = 256;       // paper-scale runs use 8192; desk default 256
  double learning_rate = 0.001;  // 0 freezes the parameters (useful for ablations)
  size_t epochs = 5;
  size_t incremental_epochs = 1;  // per fine-tuning day
  uint64_t seed = 1;
  bool incremental = true;       // fine-tune on day i-1 before evaluating day i
  bool carry_optimizer = true;   // keep Adam state across incremental steps

  void validate() const;
};

struct LossPoint {
  size_t epoch = 0;  // global epoch counter across base + incremental stages
  size_t batch = 0;
  double loss = 0.0;
};

// One training stage and the days whose data it consumed; the cumulative
// days_seen list is the no-leakage audit trail.
struct StageRecord {
  std::string name;               // "base", "ft_day7", ...
  std::vector<int32_t> new_days;  // days introduced by this stage
  std::vector<int32_t> days_seen; // ascending, cumulative over stages
  std::string checkpoint;         // filled in by whoever saves one
};

struct RunManifest {
  std::string model_kind;  // baseline | baseline-upsampled | mtl
  std::string dataset_id;  // content hash of the training data
  TrainConfig config;
  std::vector<StageRecord> stages;
  std::vector<double> epoch_mean_loss;  // base-training epochs only
  std::vector<LossPoint> loss_curve;
  std::map<std::string, std::string> extra;  // e.g. num_groups, group map hash
};

void write_run_manifest(const std::string& path, const RunManifest& manifest);
RunManifest read_run_manifest(const std::string& path);
void write_loss_curve_csv(const std::string& path, const std::vector<LossPoint>& curve);

// Assembles a scoring batch from interaction rows; throws ValidationError
// naming the first user or title id with no embedding row.
Batch make_batch(const std::vector<Interaction>& rows, const Matrix& user_embs,
                 const Matrix& title_embs, const std::vector<int32_t>& group_map);

// Inference-mode scores for rows, aligned with their order.
std::vector<double> score_rows(const PropensityModel& model, const std::vector<Interaction>& rows,
                               const Matrix& user_embs, const Matrix& title_embs,
                               const std::vector<int32_t>& group_map);

// Owns the optimizer state and the loss/stage bookkeeping for one model.
// Training is single-threaded by design: determinism outranks speed here.
class Trainer {
 public:
  Trainer(PropensityModel& model, TrainConfig config);

  // Base window: config.epochs seeded-shuffled epochs over rows. Each epoch
  // is partitioned into batch_size batches; a trailing batch smaller than 2
  // is dropped (batch-norm needs at least two rows).
  void fit(const std::vector<Interaction>& rows, const Matrix& user_embs,
           const Matrix& title_embs, const std::vector<int32_t>& group_map);

  // One day of fine-tuning (config.incremental_epochs epochs). Empty day
  // data is a warned no-op; the model and optimizer are left untouched.
  void incremental_step(const std::vector<Interaction>& day_rows, const Matrix& user_embs,
                        const Matrix& title_embs, const std::vector<int32_t>& group_map,
                        int32_t day);

  PropensityModel& model() { return model_; }
  const TrainConfig& config() const { return config_; }
  const std::vector<LossPoint>& loss_curve() const { return curve_; }
  const std::vector<double>& epoch_mean_loss() const { return epoch_mean_loss_; }
  const std::vector<StageRecord>& stages() const { return stages_; }

  std::vector<AdamSnapshot> adam_snapshot() const;
  void restore_adam(const std::vector<AdamSnapshot>& snapshot);

  // Seeds the stage history of a trainer resumed from a checkpoint, so the
  // days-seen audit keeps chaining across processes. Only valid before any
  // training through this trainer.
  void adopt_stage_history(const std::vector<StageRecord>& stages);

  RunManifest manifest(const std::string& model_kind, const std::string& dataset_id) const;

 private:
  void run_epochs(const std::vector<Interaction>& rows, const Matrix& user_embs,
                  const Matrix& title_embs, const std::vector<int32_t>& group_map,
                  size_t n_epochs, const std::string& stage_name, bool record_epoch_means);
  void record_stage(const std::string& name, const std::vector<Interaction>& rows);

  PropensityModel& model_;
  TrainConfig config_;
  std::vector<AdamState> adam_;      // aligned with model_.trainable_params()
  size_t epoch_counter_ = 0;         // global across stages; seeds the shuffles
  std::vector<LossPoint> curve_;
  std::vector<double> epoch_mean_loss_;
  std::vector<StageRecord> stages_;
};

struct EvalDayScores {
  int32_t day = 0;
  std::string stage;           // stage whose weights produced these scores
  std::vector<double> scores;  // aligned with test_by_day.at(day)
};

// Walks the test days in ascending order: scores day d with the current
// weights (which have seen only days < d), then — when config.incremental is
// set — fine-tunes on day d's incremental rows to prepare for the next test
// day. after_stage, when given, runs after each fine-tune so callers can
// checkpoint the stage.
std::vector<EvalDayScores> run_eval_schedule(
    Trainer& trainer, const std::vector<Interaction>& incremental,
    const std::map<int32_t, std::vector<Interaction>>& test_by_day, const Matrix& user_embs,
    const Matrix& title_embs, const std::vector<int32_t>& group_map,
    const std::function<void(const StageRecord&)>& after_stage = {});

}  // namespace geomtl
