#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geomtl/adam.hpp"
#include "geomtl/layers.hpp"
#include "geomtl/matrix.hpp"
#include "geomtl/rng.hpp"

namespace geomtl {

struct TowerConfig {
  size_t user_dim = 0;
  size_t title_dim = 0;
  size_t hidden_dim = 0;
  size_t num_groups = 1;
  bool head_bias = true;  // the per-group dense layers carry a bias term

  void validate() const;
};

enum class ModelKind : uint32_t { kBaseline = 0, kMtl = 1 };

// One encoder: [Dense -> BatchNorm -> ReLU] x 2, ending in hidden_dim.
class Tower {
 public:
  Tower(size_t in_dim, size_t hidden_dim);

  void init_weights(Rng& rng);
  Matrix forward_train(const Matrix& x, bool update_running = true);
  Matrix infer(const Matrix& x) const;
  Matrix backward(const Matrix& grad_out);
  void zero_grads();

  DenseLayer& d1() { return d1_; }
  BatchNormLayer& bn1() { return bn1_; }
  DenseLayer& d2() { return d2_; }
  BatchNormLayer& bn2() { return bn2_; }
  const DenseLayer& d1() const { return d1_; }
  const BatchNormLayer& bn1() const { return bn1_; }
  const DenseLayer& d2() const { return d2_; }
  const BatchNormLayer& bn2() const { return bn2_; }

 private:
  DenseLayer d1_;
  BatchNormLayer bn1_;
  DenseLayer d2_;
  BatchNormLayer bn2_;
  // Pre-activation caches for the ReLU backward.
  Matrix pre1_;
  Matrix pre2_;
};

struct Batch {
  Matrix user_embs;                   // [B x user_dim]
  Matrix title_embs;                  // [B x title_dim]
  std::vector<double> labels;         // {0,1}^B
  std::vector<int32_t> group_ids;     // {0..G-1}^B
  std::vector<int32_t> territory_ids; // per-example territory

  size_t size() const { return labels.size(); }
};

struct LossResult {
  double loss;
  std::vector<double> probs;
};

// Handle to one named parameter tensor. head_group is -1 for shared tensors
// and the owning group id for per-group head tensors; grad is null for
// non-trainable state (batch-norm running statistics).
struct ParamRef {
  std::string name;
  double* value;
  double* grad;
  size_t size;
  int head_group;
};

// Two-tower propensity model. The baseline scores
//   p = sigmoid( user_tower(u) . title_tower(t) );
// the MTL variant routes the shared user representation through one dense
// head per territory group before the dot product:
//   p = sigmoid( head_g(user_tower(u)) . title_tower(t) ).
// Loss is the batch mean of binary cross entropy; in the MTL variant each
// head only ever receives gradient from examples of its own group, so heads
// absent from a batch get exactly-zero gradients.
class PropensityModel {
 public:
  PropensityModel(ModelKind kind, TowerConfig config);

  void init_weights(Rng& rng);

  ModelKind kind() const { return kind_; }
  const TowerConfig& config() const { return config_; }

  // Inference-mode scoring (batch-norm running statistics, no state writes).
  std::vector<double> score(const Batch& batch) const;

  // Training-mode forward + full backward. Gradients land in the layer
  // objects and are reachable through trainable_params().
  LossResult loss_and_grads(const Batch& batch, bool update_running = true);

  void zero_grads();

  // All trainable tensors in a fixed declared order (the checkpoint order).
  std::vector<ParamRef> trainable_params();
  // Batch-norm running statistics (saved with checkpoints, never trained).
  std::vector<ParamRef> state_params();

  Tower& user_tower() { return user_tower_; }
  Tower& title_tower() { return title_tower_; }
  std::vector<DenseLayer>& heads() { return heads_; }
  const std::vector<DenseLayer>& heads() const { return heads_; }

 private:
  void validate_batch(const Batch& batch) const;

  ModelKind kind_;
  TowerConfig config_;
  Tower user_tower_;
  Tower title_tower_;
  std::vector<DenseLayer> heads_;  // empty for the baseline
};

// Optimizer snapshot stored alongside a model, aligned with
// trainable_params() order.
struct AdamSnapshot {
  int64_t t = 0;
  std::vector<double> m;
  std::vector<double> v;
};

struct Checkpoint {
  ModelKind kind;
  TowerConfig config;
  PropensityModel model;
  std::vector<AdamSnapshot> adam;  // empty when none was saved
};

// Flat binary checkpoint: magic, format version, kind + config block, then
// named tensors (trainable, then running statistics) in declared order,
// 64-bit little-endian, optionally followed by Adam state.
void checkpoint_save(const std::string& path, PropensityModel& model,
                     const std::vector<AdamSnapshot>* adam = nullptr);

// expect, when given, is validated against the stored config; a mismatch is
// a ShapeError naming both configurations.
Checkpoint checkpoint_load(const std::string& path, const TowerConfig* expect = nullptr,
                           const ModelKind* expect_kind = nullptr);

}  // namespace geomtl
