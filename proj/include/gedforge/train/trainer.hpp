#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gedforge/cost_model.hpp"
#include "gedforge/genn/model.hpp"
#include "gedforge/train/adam.hpp"

namespace gedforge::train {

struct TrainConfig {
  double learning_rate = 1e-3;
  double weight_decay = 5e-5;
  int batch_size = 128;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  int max_epochs = 200;
  int patience = 10;  // epochs without validation improvement before stopping
  int finetune_pair_count = 200;
  std::uint64_t rng_seed = 0;
  std::uint64_t solve_max_states = 500'000;  // per exact solve while finetuning

  AdamConfig adam() const {
    return {learning_rate, beta1, beta2, eps, weight_decay};
  }
};

struct LabeledPair {
  int i = 0;
  int j = 0;
  double ged = 0.0;
  double s_gt = 1.0;
};

struct TrainDataset {
  std::vector<Graph> graphs;
  EditCostModel cost;
  std::vector<LabeledPair> train_pairs;
  std::vector<LabeledPair> val_pairs;
};

double mse_loss(std::span<const double> pred, std::span<const double> target);

struct RegressionResult {
  genn::GennModel model;  // best-on-validation checkpoint
  std::vector<double> train_curve;
  std::vector<double> val_curve;
  int best_epoch = 0;
  double best_val_mse = 0.0;
};

/// Stage 1: minibatch similarity regression against ground-truth labels.
RegressionResult train_regression(genn::GennModel init, const TrainDataset& data,
                                  const TrainConfig& config);

struct FinetuneResult {
  genn::GennModel model;
  int pairs_used = 0;
  int pairs_skipped = 0;  // exact solve exceeded its budget
  double val_mse_before = 0.0;
  double val_mse_after = 0.0;
};

/// Stage 2: solves sampled training pairs exactly, expands each optimal path
/// into partial-path labels, and applies one batched update per pair. Labels
/// with a fully masked side carry no network signal and are skipped.
FinetuneResult finetune_with_paths(genn::GennModel model, const TrainDataset& data,
                                   const TrainConfig& config);

/// Mean regression mse of `model` over the validation pairs.
double validation_mse(const genn::GennModel& model, const TrainDataset& data);

}  // namespace gedforge::train
