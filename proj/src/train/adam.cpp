#include "gedforge/train/adam.hpp"

#include <cmath>

namespace gedforge::train {

AdamState AdamState::zeros_like(const genn::GennModel& model) {
  AdamState s;
  s.m = genn::GennGradients::zeros_like(model);
  s.v = genn::GennGradients::zeros_like(model);
  return s;
}

void adam_step(genn::GennModel& params, const genn::GennGradients& grads, AdamState& state,
               const AdamConfig& config) {
  ++state.step;
  const double bc1 = 1.0 - std::pow(config.beta1, state.step);
  const double bc2 = 1.0 - std::pow(config.beta2, state.step);

  auto theta = genn::flat_tensors(params);
  const auto grad = genn::flat_tensors(grads);
  auto m = genn::flat_tensors(state.m);
  auto v = genn::flat_tensors(state.v);

  for (std::size_t t = 0; t < theta.size(); ++t) {
    const Eigen::ArrayXd g = grad[t] + config.weight_decay * theta[t];
    m[t] = config.beta1 * m[t] + (1.0 - config.beta1) * g;
    v[t] = config.beta2 * v[t] + (1.0 - config.beta2) * g.square();
    theta[t] -= config.lr * (m[t] / bc1) / ((v[t] / bc2).sqrt() + config.eps);
  }

  const double g = grads.out_b + config.weight_decay * params.out_b;
  state.m.out_b = config.beta1 * state.m.out_b + (1.0 - config.beta1) * g;
  state.v.out_b = config.beta2 * state.v.out_b + (1.0 - config.beta2) * g * g;
  params.out_b -=
      config.lr * (state.m.out_b / bc1) / (std::sqrt(state.v.out_b / bc2) + config.eps);
}

}  // namespace gedforge::train
