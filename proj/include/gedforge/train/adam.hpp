#pragma once

#include "gedforge/genn/autograd.hpp"

namespace gedforge::train {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 5e-5;  // added to gradients as wd * theta
};

struct AdamState {
  genn::GennGradients m;
  genn::GennGradients v;
  long step = 0;

  static AdamState zeros_like(const genn::GennModel& model);
};

/// Standard bias-corrected Adam update. With zero gradients and zero weight
/// decay the parameters are left untouched.
void adam_step(genn::GennModel& params, const genn::GennGradients& grads, AdamState& state,
               const AdamConfig& config);

}  // namespace gedforge::train
