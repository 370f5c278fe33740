#include "pactsc/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace pactsc {

void adam_step(std::span<double> values, std::span<const double> grads, OptimizerState& state,
               const AdamConfig& config, std::int64_t step) {
  if (values.size() != grads.size())
    throw std::invalid_argument("adam_step: gradient size mismatch");
  if (state.m.empty()) {
    state.m.assign(values.size(), 0.0);
    state.v.assign(values.size(), 0.0);
  }
  if (state.m.size() != values.size())
    throw std::invalid_argument("adam_step: state size mismatch");
  if (step < 1) throw std::invalid_argument("adam_step: step must be >= 1");

  const double bc1 = 1.0 - std::pow(config.beta1, static_cast<double>(step));
  const double bc2 = 1.0 - std::pow(config.beta2, static_cast<double>(step));
  for (std::size_t i = 0; i < values.size(); ++i) {
    state.m[i] = config.beta1 * state.m[i] + (1.0 - config.beta1) * grads[i];
    state.v[i] = config.beta2 * state.v[i] + (1.0 - config.beta2) * grads[i] * grads[i];
    const double m_hat = state.m[i] / bc1;
    const double v_hat = state.v[i] / bc2;
    values[i] -= config.lr * m_hat / (std::sqrt(v_hat) + config.eps);
  }
}

AdamOptimizer::AdamOptimizer(const std::vector<Param>& params, const AdamConfig& config)
    : config_(config), slots_(params.size()) {}

void AdamOptimizer::step(const std::vector<Param>& params) {
  if (params.size() != slots_.size())
    throw std::invalid_argument("AdamOptimizer: parameter list size changed");
  ++step_;
  for (std::size_t i = 0; i < params.size(); ++i) {
    Tensor& t = *params[i].tensor;
    t.ensure_grad();
    adam_step(t.values, t.grad, slots_[i], config_, step_);
  }
}

}  // namespace pactsc
