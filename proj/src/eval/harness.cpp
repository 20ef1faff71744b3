#include "gedforge/eval/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "gedforge/bipartite.hpp"
#include "gedforge/error.hpp"
#include "gedforge/eval/metrics.hpp"
#include "gedforge/genn/heuristic.hpp"
#include "gedforge/genn/network.hpp"
#include "gedforge/heuristics.hpp"

namespace gedforge::eval {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

MethodSpec MethodSpec::parse(const std::string& token) {
  MethodSpec spec;
  spec.label = token;
  const auto colon = token.find(':');
  const std::string head = token.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : token.substr(colon + 1);

  if (head == "astar") {
    if (tail == "zero")
      spec.kind = Kind::AstarZero;
    else if (tail == "hungarian" || tail.empty())
      spec.kind = Kind::AstarHungarian;
    else if (tail == "genn")
      spec.kind = Kind::AstarGenn;
    else
      throw ConfigError("unknown heuristic in method token: " + token);
  } else if (head == "beam") {
    spec.kind = Kind::Beam;
    if (!tail.empty()) spec.beam_width = std::stoi(tail);
    if (spec.beam_width < 1) throw ConfigError("beam width must be >= 1");
    spec.label = "beam:" + std::to_string(spec.beam_width);
  } else if (head == "hungarian") {
    spec.kind = Kind::HungarianSolver;
  } else if (head == "vj") {
    spec.kind = Kind::VjSolver;
  } else if (head == "genn") {
    spec.kind = Kind::GennRegressor;
  } else {
    throw ConfigError("unknown method: " + token);
  }
  return spec;
}

std::vector<MethodSpec> MethodSpec::parse_list(const std::string& tokens) {
  std::vector<MethodSpec> out;
  std::stringstream ss(tokens);
  std::string token;
  while (std::getline(ss, token, ','))
    if (!token.empty()) out.push_back(parse(token));
  if (out.empty()) throw ConfigError("empty method list");
  return out;
}

MethodOutcome run_method(const MethodSpec& method, const Graph& g1, const Graph& g2,
                         const EditCostModel& cost, const genn::GennModel* model,
                         const SearchLimits& limits) {
  if (method.needs_model() && model == nullptr)
    throw ConfigError(method.label + " needs a trained model checkpoint");

  MethodOutcome out;
  using Kind = MethodSpec::Kind;

  if (method.kind == Kind::GennRegressor) {
    const auto t0 = std::chrono::steady_clock::now();
    out.similarity = genn::predict_similarity(*model, g1, g2);
    out.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.ged = kNaN;
    return out;
  }

  if (method.kind == Kind::HungarianSolver || method.kind == Kind::VjSolver) {
    const auto t0 = std::chrono::steady_clock::now();
    const BipartiteGedResult r = method.kind == Kind::HungarianSolver
                                     ? hungarian_ged(g1, g2, cost)
                                     : vj_ged(g1, g2, cost);
    out.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.status = r.status;
    out.ged = r.ged_upper;
    out.path = r.path;
  } else {
    std::unique_ptr<HeuristicProvider> heuristic;
    switch (method.kind) {
      case Kind::AstarZero:
        heuristic = make_zero_heuristic();
        break;
      case Kind::AstarGenn:
        heuristic = genn::make_genn_heuristic(*model);
        break;
      default:
        heuristic = make_hungarian_heuristic();
        break;
    }
    const SolveResult r = method.kind == Kind::Beam
                              ? beam_solve(g1, g2, cost, *heuristic, method.beam_width, limits)
                              : astar_solve(g1, g2, cost, *heuristic, limits);
    out.status = r.status;
    out.ged = r.ged;
    out.path = r.path;
    out.states_enqueued = r.stats.states_enqueued;
    out.time_s = r.stats.wall_time;
    out.certified_optimal = r.stats.optimal_found;
  }

  out.similarity = out.status == SolveStatus::Ok
                       ? genn::ged_to_similarity(out.ged, g1.size(), g2.size())
                       : 0.0;
  return out;
}

EvalReport run_eval(const data::LoadedDataset& dataset, const std::vector<MethodSpec>& methods,
                    const genn::GennModel* model, const SearchLimits& limits) {
  // Group labeled eval pairs by query.
  struct Item {
    int query;
    int target;
    double label_sim;
  };
  std::map<std::string, std::vector<Item>> queries;
  std::vector<const data::PairEntry*> labeled;
  for (const auto& pair : dataset.manifest.pairs) {
    if (pair.role != "eval" || !pair.ged) continue;
    const int qi = dataset.index_by_path.at(pair.g1);
    const int ti = dataset.index_by_path.at(pair.g2);
    const double sim = genn::ged_to_similarity(*pair.ged, dataset.graphs[qi].size(),
                                               dataset.graphs[ti].size());
    queries[pair.g1].push_back({qi, ti, sim});
    labeled.push_back(&pair);
  }
  if (queries.empty()) throw ConfigError("manifest has no labeled eval pairs");

  std::size_t min_corpus = std::numeric_limits<std::size_t>::max();
  for (const auto& [q, items] : queries) min_corpus = std::min(min_corpus, items.size());
  const int k = static_cast<int>(std::min<std::size_t>(10, min_corpus));

  EvalReport report;
  for (const MethodSpec& method : methods) {
    EvalRow row;
    row.method = method.label;
    row.k = k;

    std::vector<double> all_pred, all_label;
    std::vector<double> rhos, precs;
    double tree_sum = 0.0, time_sum = 0.0;
    int solver_pairs = 0, optimal_hits = 0, optimal_known = 0;

    for (const auto& [qpath, items] : queries) {
      std::vector<double> pred, label;
      std::vector<std::string> ids;
      for (const Item& item : items) {
        const Graph& g1 = dataset.graphs[item.query];
        const Graph& g2 = dataset.graphs[item.target];
        const MethodOutcome r = run_method(method, g1, g2, dataset.manifest.cost, model, limits);
        pred.push_back(r.similarity);
        label.push_back(item.label_sim);
        ids.push_back(g2.id());
        time_sum += r.time_s;
        if (method.is_solver()) {
          tree_sum += static_cast<double>(r.states_enqueued);
          ++solver_pairs;
          if (r.status == SolveStatus::Ok) {
            ++optimal_known;
            const double opt_sim = item.label_sim;
            if (std::abs(r.similarity - opt_sim) <= 1e-9) ++optimal_hits;
          }
        }
        ++row.pairs;
      }
      all_pred.insert(all_pred.end(), pred.begin(), pred.end());
      all_label.insert(all_label.end(), label.begin(), label.end());
      if (pred.size() >= 2) {
        const double rho = metric_spearman(pred, label);
        if (!std::isnan(rho)) rhos.push_back(rho);
      }
      precs.push_back(metric_p_at_k(pred, label, ids, k));
    }

    row.mse = metric_mse(all_pred, all_label);
    row.rho = rhos.empty() ? kNaN
                           : std::accumulate(rhos.begin(), rhos.end(), 0.0) / rhos.size();
    row.p_at_k = std::accumulate(precs.begin(), precs.end(), 0.0) / precs.size();
    row.mean_time_s = time_sum / row.pairs;
    row.mean_tree_size = method.is_solver() ? tree_sum / solver_pairs : kNaN;
    row.optimal_fraction = (method.is_solver() && optimal_known > 0)
                               ? static_cast<double>(optimal_hits) / optimal_known
                               : kNaN;
    report.rows.push_back(std::move(row));
  }
  return report;
}

nlohmann::json report_to_json(const EvalReport& report) {
  auto rows = nlohmann::ordered_json::array();
  for (const EvalRow& r : report.rows) {
    nlohmann::ordered_json j;
    j["method"] = r.method;
    j["pairs"] = r.pairs;
    j["mse"] = r.mse;
    j["mse_e3"] = r.mse * 1e3;
    if (std::isnan(r.rho))
      j["rho"] = nullptr;
    else
      j["rho"] = r.rho;
    j["p_at_k"] = r.p_at_k;
    j["k"] = r.k;
    if (std::isnan(r.mean_tree_size))
      j["mean_tree_size"] = nullptr;
    else
      j["mean_tree_size"] = r.mean_tree_size;
    j["mean_time_s"] = r.mean_time_s;
    if (std::isnan(r.optimal_fraction))
      j["optimal_fraction"] = nullptr;
    else
      j["optimal_fraction"] = r.optimal_fraction;
    rows.push_back(std::move(j));
  }
  nlohmann::ordered_json j;
  j["rows"] = std::move(rows);
  return j;
}

std::string report_to_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "method,pairs,mse,mse_e3,rho,p_at_k,k,mean_tree_size,mean_time_s,optimal_fraction\n";
  for (const EvalRow& r : report.rows) {
    out << r.method << ',' << r.pairs << ',' << r.mse << ',' << r.mse * 1e3 << ',';
    if (std::isnan(r.rho))
      out << "";
    else
      out << r.rho;
    out << ',' << r.p_at_k << ',' << r.k << ',';
    if (std::isnan(r.mean_tree_size))
      out << "";
    else
      out << r.mean_tree_size;
    out << ',' << r.mean_time_s << ',';
    if (!std::isnan(r.optimal_fraction)) out << r.optimal_fraction;
    out << '\n';
  }
  return out.str();
}

std::vector<BenchRow> run_bench(const data::LoadedDataset& dataset,
                                const std::vector<MethodSpec>& methods,
                                const genn::GennModel* model, const SearchLimits& limits,
                                int threads) {
  struct Task {
    const data::PairEntry* pair;
    const MethodSpec* method;
  };
  std::vector<Task> tasks;
  for (const auto& pair : dataset.manifest.pairs)
    for (const MethodSpec& method : methods) tasks.push_back({&pair, &method});

  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) break;
      const Task& task = tasks[t];
      const Graph& g1 = dataset.by_path(task.pair->g1);
      const Graph& g2 = dataset.by_path(task.pair->g2);
      const MethodOutcome r =
          run_method(*task.method, g1, g2, dataset.manifest.cost, model, limits);
      BenchRow& row = rows[t];
      row.pair_id = g1.id() + ":" + g2.id();
      row.n1 = g1.size();
      row.n2 = g2.size();
      row.method = task.method->label;
      row.ged = r.status == SolveStatus::Ok ? r.ged : kNaN;
      row.optimal_ged = task.pair->ged;
      row.states_enqueued = r.states_enqueued;
      row.time_ms = r.time_s * 1e3;
    }
  };

  threads = std::max(1, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.pair_id, a.method) < std::tie(b.pair_id, b.method);
  });
  return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "pair_id,n1,n2,method,ged,optimal_ged,states_enqueued,time_ms\n";
  for (const BenchRow& r : rows) {
    out << r.pair_id << ',' << r.n1 << ',' << r.n2 << ',' << r.method << ',';
    if (!std::isnan(r.ged)) out << r.ged;
    out << ',';
    if (r.optimal_ged) out << *r.optimal_ged;
    out << ',' << r.states_enqueued << ',' << r.time_ms << '\n';
  }
  return out.str();
}

}  // namespace gedforge::eval
