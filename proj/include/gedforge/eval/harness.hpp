#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gedforge/data/manifest.hpp"
#include "gedforge/genn/model.hpp"
#include "gedforge/search.hpp"

namespace gedforge::eval {

/// Method tokens: astar:zero | astar:hungarian | astar:genn | beam:<width>
/// | hungarian | vj | genn (the pure regressor).
struct MethodSpec {
  enum class Kind { AstarZero, AstarHungarian, AstarGenn, Beam, HungarianSolver, VjSolver, GennRegressor };

  Kind kind = Kind::AstarHungarian;
  int beam_width = 5;
  std::string label;

  bool needs_model() const {
    return kind == Kind::AstarGenn || kind == Kind::GennRegressor;
  }
  bool is_solver() const { return kind != Kind::GennRegressor; }

  static MethodSpec parse(const std::string& token);
  static std::vector<MethodSpec> parse_list(const std::string& tokens);
};

struct MethodOutcome {
  SolveStatus status = SolveStatus::Ok;
  double ged = 0.0;         // solver GED; NaN for the regressor
  double similarity = 0.0;  // solver GED mapped through exp(-2 ged/(n1+n2)), or s(G1,G2)
  EditPath path;            // empty for the regressor
  std::uint64_t states_enqueued = 0;
  double time_s = 0.0;
  bool certified_optimal = false;
};

MethodOutcome run_method(const MethodSpec& method, const Graph& g1, const Graph& g2,
                         const EditCostModel& cost, const genn::GennModel* model,
                         const SearchLimits& limits);

struct EvalRow {
  std::string method;
  int pairs = 0;
  double mse = 0.0;
  double rho = 0.0;
  double p_at_k = 0.0;
  int k = 0;
  double mean_tree_size = 0.0;
  double mean_time_s = 0.0;
  double optimal_fraction = 0.0;  // NaN when labels or a solver GED are unavailable
};

struct EvalReport {
  std::vector<EvalRow> rows;
};

nlohmann::json report_to_json(const EvalReport& report);
std::string report_to_csv(const EvalReport& report);

/// Table-style evaluation over the manifest's eval pairs (test queries against
/// the training corpus). Metrics live in similarity space; rho and p@k are
/// computed per query, then averaged.
EvalReport run_eval(const data::LoadedDataset& dataset, const std::vector<MethodSpec>& methods,
                    const genn::GennModel* model, const SearchLimits& limits);

struct BenchRow {
  std::string pair_id;
  int n1 = 0;
  int n2 = 0;
  std::string method;
  double ged = 0.0;
  std::optional<double> optimal_ged;
  std::uint64_t states_enqueued = 0;
  double time_ms = 0.0;
};

/// Per-instance sweep of methods over every manifest pair. Rows come back
/// sorted by (pair, method); timing is the only nondeterministic column.
std::vector<BenchRow> run_bench(const data::LoadedDataset& dataset,
                                const std::vector<MethodSpec>& methods,
                                const genn::GennModel* model, const SearchLimits& limits,
                                int threads);

std::string bench_to_csv(const std::vector<BenchRow>& rows);

}  // namespace gedforge::eval
