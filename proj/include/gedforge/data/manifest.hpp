#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gedforge/cost_model.hpp"
#include "gedforge/graph.hpp"
#include "gedforge/train/trainer.hpp"

namespace gedforge::data {

enum class Split { Train, Val, Test };
const char* to_string(Split s);

struct GraphEntry {
  std::string path;
  Split split = Split::Train;
};

struct PairEntry {
  std::string g1;
  std::string g2;
  std::optional<double> ged;  // exact label; absent if unlabeled or over budget
  std::string role;           // "train", "val" or "eval"
};

struct DatasetManifest {
  EditCostModel cost;
  std::vector<GraphEntry> graphs;
  std::vector<PairEntry> pairs;
  double edge_normalizer = 300.0;
  bool edge_normalized = false;  // geometric weights already divided on disk

  void save(const std::string& path) const;
  static DatasetManifest load(const std::string& path);
};

/// Deterministic shuffled 60/20/20 split by graph. Training and validation
/// pairs are formed within their splits (all pairs up to `train_pair_cap`,
/// then a uniform sample); evaluation pairs are every test query against the
/// whole training corpus.
DatasetManifest split_dataset(const std::vector<std::string>& graph_paths,
                              std::uint64_t seed, EditCostModel cost,
                              std::size_t train_pair_cap = 10'000);

/// Fills in exact GED labels with an A* (Hungarian heuristic) solve per pair.
/// Pairs whose solve exceeds `max_states` stay unlabeled.
/// `graphs` must be indexed like manifest.graphs.
void build_ged_labels(DatasetManifest& manifest, const std::vector<Graph>& graphs,
                      std::uint64_t max_states = 2'000'000, int threads = 1);

struct LoadedDataset {
  DatasetManifest manifest;
  std::vector<Graph> graphs;  // weight-normalized for geometric cost models
  std::unordered_map<std::string, int> index_by_path;

  const Graph& by_path(const std::string& path) const;
};

/// Loads every graph referenced by the manifest; geometric edge weights are
/// divided by the manifest normalizer exactly once (skipped when the manifest
/// says the files are already normalized).
LoadedDataset load_dataset(const std::string& manifest_path);

/// Labeled train/val pair views over a loaded dataset, ready for training.
train::TrainDataset make_train_dataset(const LoadedDataset& dataset);

}  // namespace gedforge::data
