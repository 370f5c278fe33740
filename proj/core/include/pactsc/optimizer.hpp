#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pactsc/nn_model.hpp"

namespace pactsc {

struct AdamConfig {
  double lr = 0.005;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// First/second moment accumulators for one parameter tensor.
struct OptimizerState {
  std::vector<double> m;
  std::vector<double> v;
};

// One bias-corrected Adam update of a single parameter array. step counts
// from 1 for the first update.
void adam_step(std::span<double> values, std::span<const double> grads, OptimizerState& state,
               const AdamConfig& config, std::int64_t step);

// Adam over a fixed parameter list (order defines the state slots).
class AdamOptimizer {
 public:
  AdamOptimizer(const std::vector<Param>& params, const AdamConfig& config);

  // Applies one update from the tensors' grad buffers.
  void step(const std::vector<Param>& params);

  std::int64_t step_count() const { return step_; }
  const AdamConfig& config() const { return config_; }

 private:
  AdamConfig config_;
  std::int64_t step_ = 0;
  std::vector<OptimizerState> slots_;
};

}  // namespace pactsc
