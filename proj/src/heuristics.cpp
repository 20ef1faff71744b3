#include "gedforge/heuristics.hpp"

#include <vector>

#include "gedforge/assignment.hpp"

namespace gedforge {

namespace {

class ZeroSession final : public HeuristicSession {
 public:
  double h(const StateView&) override { return 0.0; }
};

class ZeroProvider final : public HeuristicProvider {
 public:
  const char* name() const override { return "zero"; }
  bool admissible() const override { return true; }
  std::unique_ptr<HeuristicSession> prepare(const Graph&, const Graph&,
                                            const EditCostModel&) override {
    return std::make_unique<ZeroSession>();
  }
};

// Block matrix [sub | del-diagonal; ins-diagonal | 0] over the given items.
// `sub(i,j)`, `del(i)`, `ins(j)` supply the entry costs.
template <typename Sub, typename Del, typename Ins>
double lap_block_bound(int n1, int n2, Sub sub, Del del, Ins ins, CostMatrix& scratch) {
  const int n = n1 + n2;
  if (n == 0) return 0.0;
  scratch.resize(n, n);
  scratch.setConstant(kInfCost);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) scratch(i, j) = sub(i, j);
  for (int i = 0; i < n1; ++i) scratch(i, n2 + i) = del(i);
  for (int j = 0; j < n2; ++j) scratch(n1 + j, j) = ins(j);
  scratch.bottomRightCorner(n2, n1).setZero();
  const Assignment a = lap_hungarian(scratch);
  return a.feasible() ? a.total_cost : kInfCost;
}

struct EdgeItem {
  double weight;
};

double bound_from_sets(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                       const std::vector<int>& src, const std::vector<int>& tgt,
                       const std::vector<EdgeItem>& e1, const std::vector<EdgeItem>& e2,
                       CostMatrix& scratch) {
  const double node_part = lap_block_bound(
      static_cast<int>(src.size()), static_cast<int>(tgt.size()),
      [&](int i, int j) { return cost.node_sub(g1.label(src[i]), g2.label(tgt[j])); },
      [&](int) { return cost.node_del(); }, [&](int) { return cost.node_ins(); }, scratch);
  if (is_inf_cost(node_part)) return kInfCost;

  const double edge_part = lap_block_bound(
      static_cast<int>(e1.size()), static_cast<int>(e2.size()),
      [&](int i, int j) { return cost.edge_sub(e1[i].weight, e2[j].weight); },
      [&](int i) { return cost.edge_del(e1[i].weight); },
      [&](int j) { return cost.edge_ins(e2[j].weight); }, scratch);
  if (is_inf_cost(edge_part)) return kInfCost;
  return node_part + edge_part;
}

class HungarianSession final : public HeuristicSession {
 public:
  HungarianSession(const Graph& g1, const Graph& g2, const EditCostModel& cost)
      : g1_(g1), g2_(g2), cost_(cost) {}

  double h(const StateView& state) override {
    src_.clear();
    tgt_.clear();
    e1_.clear();
    e2_.clear();
    const int k = state.edited_sources;
    for (int u = k; u < g1_.size(); ++u) src_.push_back(u);
    for (int v = 0; v < g2_.size(); ++v)
      if (!(state.used_targets & (1ull << v))) tgt_.push_back(v);
    // One assignable item per undirected unmatched edge.
    for (const Edge& e : g1_.edges())
      if (e.u >= k && e.v >= k) e1_.push_back({e.weight});
    for (const Edge& e : g2_.edges())
      if (!(state.used_targets & (1ull << e.u)) && !(state.used_targets & (1ull << e.v)))
        e2_.push_back({e.weight});
    return bound_from_sets(g1_, g2_, cost_, src_, tgt_, e1_, e2_, scratch_);
  }

 private:
  const Graph& g1_;
  const Graph& g2_;
  const EditCostModel& cost_;
  std::vector<int> src_, tgt_;
  std::vector<EdgeItem> e1_, e2_;
  CostMatrix scratch_;
};

class HungarianProvider final : public HeuristicProvider {
 public:
  const char* name() const override { return "hungarian"; }
  bool admissible() const override { return true; }
  std::unique_ptr<HeuristicSession> prepare(const Graph& g1, const Graph& g2,
                                            const EditCostModel& cost) override {
    return std::make_unique<HungarianSession>(g1, g2, cost);
  }
};

}  // namespace

std::unique_ptr<HeuristicProvider> make_zero_heuristic() {
  return std::make_unique<ZeroProvider>();
}

std::unique_ptr<HeuristicProvider> make_hungarian_heuristic() {
  return std::make_unique<HungarianProvider>();
}

double hungarian_lower_bound(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                             const PartialMapping& m) {
  std::vector<int> src, tgt;
  for (int u = 0; u < g1.size(); ++u)
    if (!m.source_edited(u)) src.push_back(u);
  for (int v = 0; v < g2.size(); ++v)
    if (!m.target_used(v)) tgt.push_back(v);
  std::vector<EdgeItem> e1, e2;
  for (const Edge& e : g1.edges())
    if (!m.source_edited(e.u) && !m.source_edited(e.v)) e1.push_back({e.weight});
  for (const Edge& e : g2.edges())
    if (!m.target_used(e.u) && !m.target_used(e.v)) e2.push_back({e.weight});
  CostMatrix scratch;
  return bound_from_sets(g1, g2, cost, src, tgt, e1, e2, scratch);
}

}  // namespace gedforge
