#pragma once

#include <optional>
#include <vector>

#include "geomtl/matrix.hpp"
#include "geomtl/rng.hpp"

namespace geomtl {

// Fully connected layer. Weight is stored [out_dim x in_dim]; forward computes
// x * W^T + b and caches x for the backward pass.
class DenseLayer {
 public:
  DenseLayer(size_t in_dim, size_t out_dim, bool with_bias = true);

  void init_weights(Rng& rng);

  Matrix forward(const Matrix& x);
  // Same math as forward but never caches; safe on a frozen model shared
  // across threads.
  Matrix infer(const Matrix& x) const;
  // Returns grad wrt input; fills grad_weight()/grad_bias(). Requires a
  // forward pass since the last backward.
  Matrix backward(const Matrix& grad_out);

  size_t in_dim() const { return in_dim_; }
  size_t out_dim() const { return out_dim_; }
  bool with_bias() const { return with_bias_; }

  Matrix& weight() { return weight_; }
  const Matrix& weight() const { return weight_; }
  std::vector<double>& bias() { return bias_; }
  const std::vector<double>& bias() const { return bias_; }
  Matrix& grad_weight() { return grad_weight_; }
  std::vector<double>& grad_bias() { return grad_bias_; }
  void zero_grads();

  bool has_cached_input() const { return cached_input_.has_value(); }

 private:
  size_t in_dim_;
  size_t out_dim_;
  bool with_bias_;
  Matrix weight_;
  std::vector<double> bias_;
  Matrix grad_weight_;
  std::vector<double> grad_bias_;
  std::optional<Matrix> cached_input_;
};

enum class BnMode { kTrain, kInference };

// Batch normalization over columns. Training mode standardizes with batch
// statistics (biased variance) and updates the running estimates by
// exponential moving average; inference mode standardizes with the running
// estimates. Running statistics are checkpoint state.
class BatchNormLayer {
 public:
  explicit BatchNormLayer(size_t dim, double momentum = 0.1, double epsilon = 1e-5);

  // update_running=false leaves the running statistics untouched (used by the
  // gradient checker, which must re-run forward without side effects).
  Matrix forward(const Matrix& x, BnMode mode, bool update_running = true);
  // Inference-mode forward with no state writes at all.
  Matrix infer(const Matrix& x) const;
  Matrix backward(const Matrix& grad_out);

  size_t dim() const { return dim_; }
  std::vector<double>& gamma() { return gamma_; }
  std::vector<double>& beta() { return beta_; }
  const std::vector<double>& gamma() const { return gamma_; }
  const std::vector<double>& beta() const { return beta_; }
  std::vector<double>& running_mean() { return running_mean_; }
  std::vector<double>& running_var() { return running_var_; }
  const std::vector<double>& running_mean() const { return running_mean_; }
  const std::vector<double>& running_var() const { return running_var_; }
  std::vector<double>& grad_gamma() { return grad_gamma_; }
  std::vector<double>& grad_beta() { return grad_beta_; }
  void zero_grads();

 private:
  size_t dim_;
  double momentum_;
  double epsilon_;
  std::vector<double> gamma_;
  std::vector<double> beta_;
  std::vector<double> running_mean_;
  std::vector<double> running_var_;
  std::vector<double> grad_gamma_;
  std::vector<double> grad_beta_;

  // Training-pass cache.
  bool has_cache_ = false;
  Matrix xhat_;
  std::vector<double> inv_std_;
};

Matrix relu_forward(const Matrix& x);
Matrix relu_backward(const Matrix& x, const Matrix& grad_out);

double sigmoid(double x);
std::vector<double> sigmoid_vec(const std::vector<double>& x);

struct BceResult {
  double loss;
  std::vector<double> grad_p;
};

// Mean binary cross entropy over the batch. Probabilities are clamped to
// [1e-12, 1 - 1e-12] before the logarithm; labels must be exactly 0 or 1.
BceResult bce_loss(const std::vector<double>& p, const std::vector<double>& y);

inline constexpr double kBceProbClamp = 1e-12;

}  // namespace geomtl
