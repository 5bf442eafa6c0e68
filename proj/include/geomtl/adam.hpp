#pragma once

#include <cstdint>
#include <vector>

#include "geomtl/errors.hpp"

namespace geomtl {

struct AdamConfig {
  double lr = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Bias-corrected Adam state for one parameter tensor.
class AdamState {
 public:
  AdamState() = default;
  AdamState(size_t n, AdamConfig cfg) : cfg_(cfg), m_(n, 0.0), v_(n, 0.0) {}

  void step(double* params, const double* grads, size_t n);

  size_t size() const { return m_.size(); }
  int64_t t() const { return t_; }
  const AdamConfig& config() const { return cfg_; }
  std::vector<double>& m() { return m_; }
  std::vector<double>& v() { return v_; }
  const std::vector<double>& m() const { return m_; }
  const std::vector<double>& v() const { return v_; }
  int64_t& t_ref() { return t_; }

 private:
  AdamConfig cfg_;
  std::vector<double> m_;
  std::vector<double> v_;
  int64_t t_ = 0;
};

}  // namespace geomtl
