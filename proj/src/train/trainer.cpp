#include "gedforge/train/trainer.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gedforge/error.hpp"
#include "gedforge/heuristics.hpp"
#include "gedforge/train/labels.hpp"

namespace gedforge::train {

double mse_loss(std::span<const double> pred, std::span<const double> target) {
  if (pred.size() != target.size() || pred.empty())
    throw ConfigError("mse_loss needs equally sized nonempty vectors");
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = pred[i] - target[i];
    sum += d * d;
  }
  return sum / static_cast<double>(pred.size());
}

namespace {

std::vector<genn::GraphPrep> prepare_all(const genn::GennModel& model,
                                         const TrainDataset& data) {
  std::vector<genn::GraphPrep> preps;
  preps.reserve(data.graphs.size());
  for (const Graph& g : data.graphs) preps.push_back(genn::prepare_graph(model.features, g));
  return preps;
}

double eval_mse(const genn::GennModel& model, const std::vector<genn::GraphPrep>& preps,
                std::span<const LabeledPair> pairs) {
  if (pairs.empty()) return 0.0;
  double sum = 0.0;
  for (const LabeledPair& p : pairs) {
    const double s = genn::forward_masked(model, preps[p.i], preps[p.j], 0, 0);
    sum += (s - p.s_gt) * (s - p.s_gt);
  }
  return sum / static_cast<double>(pairs.size());
}

}  // namespace

double validation_mse(const genn::GennModel& model, const TrainDataset& data) {
  const auto preps = prepare_all(model, data);
  return eval_mse(model, preps, data.val_pairs);
}

RegressionResult train_regression(genn::GennModel init, const TrainDataset& data,
                                  const TrainConfig& config) {
  if (data.train_pairs.empty()) throw ConfigError("empty training set");
  const auto preps = prepare_all(init, data);

  RegressionResult result;
  result.model = init;
  result.best_val_mse = eval_mse(init, preps, data.val_pairs);

  genn::GennModel model = std::move(init);
  AdamState adam = AdamState::zeros_like(model);
  std::mt19937_64 rng(config.rng_seed);

  std::vector<std::size_t> order(data.train_pairs.size());
  std::iota(order.begin(), order.end(), 0);

  genn::GennGradients grads = genn::GennGradients::zeros_like(model);
  int stale_epochs = 0;
  for (int epoch = 0; epoch < config.max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);

    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t stop = std::min(order.size(), start + config.batch_size);
      grads.set_zero();
      for (std::size_t b = start; b < stop; ++b) {
        const LabeledPair& p = data.train_pairs[order[b]];
        double loss = 0.0;
        genn::backward_pair(model, preps[p.i], preps[p.j], 0, 0, p.s_gt, grads, &loss);
        epoch_loss += loss;
      }
      grads.scale(1.0 / static_cast<double>(stop - start));
      adam_step(model, grads, adam, config.adam());
    }
    result.train_curve.push_back(epoch_loss / static_cast<double>(order.size()));

    const double val = eval_mse(model, preps, data.val_pairs);
    result.val_curve.push_back(val);
    if (val < result.best_val_mse) {
      result.best_val_mse = val;
      result.best_epoch = epoch;
      result.model = model;
      stale_epochs = 0;
    } else if (!data.val_pairs.empty() && ++stale_epochs >= config.patience) {
      break;
    }
  }
  if (data.val_pairs.empty()) result.model = std::move(model);
  return result;
}

FinetuneResult finetune_with_paths(genn::GennModel model, const TrainDataset& data,
                                   const TrainConfig& config) {
  if (data.train_pairs.empty()) throw ConfigError("empty training set");
  const auto preps = prepare_all(model, data);

  FinetuneResult result;
  result.val_mse_before = eval_mse(model, preps, data.val_pairs);

  std::mt19937_64 rng(config.rng_seed + 1);
  std::vector<std::size_t> order(data.train_pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  if (static_cast<int>(order.size()) > config.finetune_pair_count)
    order.resize(config.finetune_pair_count);

  auto hungarian = make_hungarian_heuristic();
  SearchLimits limits;
  limits.max_states = config.solve_max_states;

  AdamState adam = AdamState::zeros_like(model);
  genn::GennGradients grads = genn::GennGradients::zeros_like(model);

  for (const std::size_t idx : order) {
    const LabeledPair& pair = data.train_pairs[idx];
    const Graph& g1 = data.graphs[pair.i];
    const Graph& g2 = data.graphs[pair.j];

    const SolveResult solved = astar_solve(g1, g2, data.cost, *hungarian, limits);
    if (!solved.ok()) {
      ++result.pairs_skipped;
      continue;
    }
    const auto labels = generate_partial_labels(g1, g2, data.cost, solved.path, solved.ged);

    // One batched update per pair: the per-pair embedding cache stays exact
    // because parameters move only after all of its labels are scored.
    const std::uint64_t full1 = g1.size() == 64 ? ~0ull : (1ull << g1.size()) - 1;
    const std::uint64_t full2 = g2.size() == 64 ? ~0ull : (1ull << g2.size()) - 1;
    grads.set_zero();
    int used = 0;
    for (const PartialPathLabel& label : labels) {
      if (label.masked_sources == full1 || label.masked_targets == full2) continue;
      genn::backward_pair(model, preps[pair.i], preps[pair.j], label.masked_sources,
                          label.masked_targets, label.s_opt, grads, nullptr);
      ++used;
    }
    if (used == 0) continue;
    grads.scale(1.0 / used);
    adam_step(model, grads, adam, config.adam());
    ++result.pairs_used;
  }

  result.val_mse_after = eval_mse(model, preps, data.val_pairs);
  result.model = std::move(model);
  return result;
}

}  // namespace gedforge::train
