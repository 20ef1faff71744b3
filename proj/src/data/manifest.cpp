#include "gedforge/data/manifest.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

#include "gedforge/error.hpp"
#include "gedforge/genn/network.hpp"
#include "gedforge/heuristics.hpp"

namespace gedforge::data {

const char* to_string(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::Test: return "test";
  }
  return "?";
}

namespace {

Split split_from_string(const std::string& s) {
  if (s == "train") return Split::Train;
  if (s == "val") return Split::Val;
  if (s == "test") return Split::Test;
  throw IoError("unknown split: " + s);
}

}  // namespace

void DatasetManifest::save(const std::string& path) const {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["cost_model"] = cost.to_json();
  j["edge_normalizer"] = edge_normalizer;
  j["edge_normalized"] = edge_normalized;
  auto gj = nlohmann::ordered_json::array();
  for (const GraphEntry& g : graphs)
    gj.push_back({{"path", g.path}, {"split", to_string(g.split)}});
  j["graphs"] = std::move(gj);
  auto pj = nlohmann::ordered_json::array();
  for (const PairEntry& p : pairs) {
    nlohmann::ordered_json e{{"g1", p.g1}, {"g2", p.g2}};
    if (p.ged)
      e["ged"] = *p.ged;
    else
      e["ged"] = nullptr;
    e["role"] = p.role;
    pj.push_back(std::move(e));
  }
  j["pairs"] = std::move(pj);

  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << "\n";
}

DatasetManifest DatasetManifest::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw IoError("malformed manifest JSON in " + path);

  DatasetManifest m;
  m.cost = EditCostModel::from_json(j.at("cost_model"));
  m.edge_normalizer = j.value("edge_normalizer", 300.0);
  m.edge_normalized = j.value("edge_normalized", false);
  for (const auto& gj : j.at("graphs"))
    m.graphs.push_back({gj.at("path").get<std::string>(),
                        split_from_string(gj.at("split").get<std::string>())});
  for (const auto& pj : j.at("pairs")) {
    PairEntry p;
    p.g1 = pj.at("g1").get<std::string>();
    p.g2 = pj.at("g2").get<std::string>();
    if (pj.contains("ged") && !pj.at("ged").is_null()) p.ged = pj.at("ged").get<double>();
    p.role = pj.value("role", "train");
    m.pairs.push_back(std::move(p));
  }
  return m;
}

namespace {

void add_within_pairs(DatasetManifest& m, const std::vector<int>& members,
                      const std::string& role, std::size_t cap, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> all;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      all.emplace_back(members[a], members[b]);
  if (all.size() > cap) {
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(cap);
    std::sort(all.begin(), all.end());
  }
  for (const auto& [i, j] : all)
    m.pairs.push_back({m.graphs[i].path, m.graphs[j].path, std::nullopt, role});
}

}  // namespace

DatasetManifest split_dataset(const std::vector<std::string>& graph_paths,
                              std::uint64_t seed, EditCostModel cost,
                              std::size_t train_pair_cap) {
  const std::size_t n = graph_paths.size();
  if (n < 5) throw ConfigError("need at least 5 graphs to split 60/20/20");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  const std::size_t n_train = (n * 6) / 10;
  const std::size_t n_val = (n * 2) / 10;

  DatasetManifest m;
  m.cost = cost;
  m.graphs.resize(n);
  std::vector<int> train_idx, val_idx, test_idx;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const int g = order[pos];
    Split split = Split::Test;
    if (pos < n_train)
      split = Split::Train;
    else if (pos < n_train + n_val)
      split = Split::Val;
    m.graphs[g] = {graph_paths[g], split};
    (split == Split::Train ? train_idx : split == Split::Val ? val_idx : test_idx).push_back(g);
  }
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(val_idx.begin(), val_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  add_within_pairs(m, train_idx, "train", train_pair_cap, rng);
  add_within_pairs(m, val_idx, "val", train_pair_cap, rng);
  for (const int q : test_idx)
    for (const int t : train_idx)
      m.pairs.push_back({m.graphs[q].path, m.graphs[t].path, std::nullopt, "eval"});
  return m;
}

void build_ged_labels(DatasetManifest& manifest, const std::vector<Graph>& graphs,
                      std::uint64_t max_states, int threads) {
  if (graphs.size() != manifest.graphs.size())
    throw ConfigError("graph list does not match the manifest");
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < manifest.graphs.size(); ++i)
    index[manifest.graphs[i].path] = static_cast<int>(i);

  SearchLimits limits;
  limits.max_states = max_states;

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    auto hungarian = make_hungarian_heuristic();
    while (true) {
      const std::size_t p = next.fetch_add(1);
      if (p >= manifest.pairs.size()) break;
      PairEntry& pair = manifest.pairs[p];
      const Graph& g1 = graphs[index.at(pair.g1)];
      const Graph& g2 = graphs[index.at(pair.g2)];
      const SolveResult r = astar_solve(g1, g2, manifest.cost, *hungarian, limits);
      if (r.ok()) pair.ged = r.ged;
    }
  };

  threads = std::max(1, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
}

const Graph& LoadedDataset::by_path(const std::string& path) const {
  const auto it = index_by_path.find(path);
  if (it == index_by_path.end()) throw IoError("manifest references unknown graph " + path);
  return graphs[it->second];
}

LoadedDataset load_dataset(const std::string& manifest_path) {
  LoadedDataset ds;
  ds.manifest = DatasetManifest::load(manifest_path);
  const auto base = std::filesystem::path(manifest_path).parent_path();

  const bool normalize =
      ds.manifest.cost.variant() == CostVariant::Geometric && !ds.manifest.edge_normalized;
  ds.graphs.reserve(ds.manifest.graphs.size());
  for (std::size_t i = 0; i < ds.manifest.graphs.size(); ++i) {
    const auto& entry = ds.manifest.graphs[i];
    std::filesystem::path p(entry.path);
    if (p.is_relative()) p = base / p;
    Graph g = load_graph(p.string());
    if (normalize) g = g.with_normalized_weights(ds.manifest.edge_normalizer);
    const auto errors = validate_graph(g);
    if (!errors.empty()) throw IoError(entry.path + ": " + errors.front());
    ds.graphs.push_back(std::move(g));
    ds.index_by_path[entry.path] = static_cast<int>(i);
  }
  return ds;
}

train::TrainDataset make_train_dataset(const LoadedDataset& dataset) {
  train::TrainDataset out;
  out.graphs = dataset.graphs;
  out.cost = dataset.manifest.cost;
  for (const PairEntry& p : dataset.manifest.pairs) {
    if (!p.ged || (p.role != "train" && p.role != "val")) continue;
    train::LabeledPair lp;
    lp.i = dataset.index_by_path.at(p.g1);
    lp.j = dataset.index_by_path.at(p.g2);
    lp.ged = *p.ged;
    lp.s_gt = genn::ged_to_similarity(
        *p.ged, dataset.graphs[lp.i].size(), dataset.graphs[lp.j].size());
    (p.role == "train" ? out.train_pairs : out.val_pairs).push_back(lp);
  }
  return out;
}

}  // namespace gedforge::data
