#include "gedforge/genn/heuristic.hpp"

#include <algorithm>
#include <utility>

#include "gedforge/genn/cache.hpp"

namespace gedforge::genn {

namespace {

class GennSession final : public HeuristicSession {
 public:
  GennSession(const GennModel& model, const Graph& g1, const Graph& g2,
              const EditCostModel& cost)
      : model_(model), cache1_(build_cache(model, g1)), cache2_(build_cache(model, g2)) {
    // Forced deletion cost of the source suffix u_k..u_{n1-1}: node deletions
    // plus every g1 edge whose later endpoint is in the suffix.
    const int n1 = g1.size();
    del_suffix_.assign(n1 + 1, 0.0);
    std::vector<double> edge_at(n1, 0.0);
    for (const Edge& e : g1.edges()) edge_at[std::max(e.u, e.v)] += cost.edge_del(e.weight);
    for (int k = n1 - 1; k >= 0; --k)
      del_suffix_[k] = del_suffix_[k + 1] + cost.node_del() + edge_at[k];
  }

  double h(const StateView& state) override {
    const int n1p = state.unmatched_sources();
    const int n2p = state.unmatched_targets();
    if (n1p == 0 && n2p == 0) return 0.0;
    if (n2p == 0) return del_suffix_[state.edited_sources];
    if (n1p == 0) return forced_insertions(state);

    const std::uint64_t mask1 = (state.edited_sources == 64)
                                    ? ~0ull
                                    : (1ull << state.edited_sources) - 1;
    double s = masked_similarity(model_, cache1_, cache2_, mask1, state.used_targets);
    s = std::clamp(s, kSimilarityClampLo, kSimilarityClampHi);
    return similarity_to_h(s, n1p, n2p);
  }

 private:
  double forced_insertions(const StateView& state) const {
    const Graph& g2 = *state.g2;
    const EditCostModel& cost = *state.cost;
    double total = 0.0;
    for (int v = 0; v < g2.size(); ++v)
      if (!(state.used_targets & (1ull << v))) total += cost.node_ins();
    for (const Edge& e : g2.edges()) {
      const bool u_used = state.used_targets & (1ull << e.u);
      const bool v_used = state.used_targets & (1ull << e.v);
      if (!u_used || !v_used) total += cost.edge_ins(e.weight);
    }
    return total;
  }

  const GennModel& model_;
  EmbeddingCache cache1_;
  EmbeddingCache cache2_;
  std::vector<double> del_suffix_;
};

class GennProvider final : public HeuristicProvider {
 public:
  explicit GennProvider(GennModel model) : model_(std::move(model)) {}

  const char* name() const override { return "genn"; }
  bool admissible() const override { return false; }
  std::unique_ptr<HeuristicSession> prepare(const Graph& g1, const Graph& g2,
                                            const EditCostModel& cost) override {
    return std::make_unique<GennSession>(model_, g1, g2, cost);
  }

 private:
  GennModel model_;
};

}  // namespace

std::unique_ptr<HeuristicProvider> make_genn_heuristic(GennModel model) {
  return std::make_unique<GennProvider>(std::move(model));
}

}  // namespace gedforge::genn
