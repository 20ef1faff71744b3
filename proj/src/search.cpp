#include "gedforge/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gedforge {

int StateView::unmatched_targets() const {
  return g2->size() - std::popcount(used_targets);
}

namespace {

constexpr std::int16_t kOpRoot = -2;
constexpr std::int16_t kOpEps = -1;
constexpr std::int16_t kOpBulk = -3;

struct Node {
  double g;
  double h;
  std::uint64_t used;
  std::int32_t parent;
  std::int16_t op;  // >=0 target of source k-1, kOpEps deletion, kOpBulk completion
  std::int16_t k;   // edited source count
};

struct HeapEntry {
  double f;
  double g;
  std::uint64_t seq;
  std::uint32_t idx;
};

// Min-f; ties prefer deeper (larger g), then earlier insertion.
bool heap_after(const HeapEntry& a, const HeapEntry& b) {
  if (a.f != b.f) return a.f > b.f;
  if (a.g != b.g) return a.g < b.g;
  return a.seq > b.seq;
}

class Engine {
 public:
  Engine(const Graph& g1, const Graph& g2, const EditCostModel& cost,
         HeuristicProvider& provider, const SearchLimits& limits, int beam_width)
      : g1_(g1),
        g2_(g2),
        cost_(cost),
        provider_(provider),
        limits_(limits),
        beam_width_(beam_width),
        n1_(g1.size()),
        n2_(g2.size()),
        full_mask_(n2_ == 64 ? ~0ull : (1ull << n2_) - 1) {
    if (n2_ > 64) throw std::invalid_argument("target graphs above 64 nodes are not supported");
  }

  SolveResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    session_ = provider_.prepare(g1_, g2_, cost_);
    SolveResult result;
    result.stats.optimal_found = false;

    src_map_.assign(n1_ + 1, PartialMapping::kUnedited);

    push_root();
    while (!open_.empty()) {
      if (limits_.max_seconds > 0 && (result.stats.states_expanded & 1023) == 0) {
        const double elapsed = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - t0).count();
        if (elapsed > limits_.max_seconds) return budget_exhausted(result, t0);
      }

      const HeapEntry top = pop_min();
      if (top.f < last_popped_f_) result.stats.pop_priority_monotone = false;
      last_popped_f_ = top.f;
      const Node& node = arena_[top.idx];
      if (node.k == n1_ && node.used == full_mask_) {
        result.path = recover_path(top.idx);
        result.ged = path_cost(g1_, g2_, cost_, result.path);
        result.lower_bound = result.ged;
        result.stats.optimal_found = provider_.admissible();
        return finish(result, t0, SolveStatus::Ok);
      }

      ++result.stats.states_expanded;
      expand(top.idx);
      if (enqueued_ > limits_.max_states) return budget_exhausted(result, t0);
      if (beam_width_ > 0) truncate_beam();
    }
    result.lower_bound = kInfCost;
    return finish(result, t0, SolveStatus::Infeasible);
  }

 private:
  void push_root() {
    Node root{0.0, 0.0, 0, -1, kOpRoot, 0};
    if (!(n1_ == 0 && n2_ == 0)) {
      const StateView view{&g1_, &g2_, &cost_, 0, {src_map_.data(), 0}, 0};
      root.h = session_->h(view);
    }
    if (std::isinf(root.g + root.h)) return;
    push(root);
  }

  void push(const Node& node) {
    const auto idx = static_cast<std::uint32_t>(arena_.size());
    arena_.push_back(node);
    open_.push_back({node.g + node.h, node.g, seq_++, idx});
    std::push_heap(open_.begin(), open_.end(), heap_after);
    ++enqueued_;
  }

  HeapEntry pop_min() {
    std::pop_heap(open_.begin(), open_.end(), heap_after);
    HeapEntry top = open_.back();
    open_.pop_back();
    return top;
  }

  // Rebuilds the prefix mapping of `idx` into mapping_/src_map_.
  void load_state(std::uint32_t idx) {
    mapping_.reset(n1_, n2_);
    std::int32_t cur = static_cast<std::int32_t>(idx);
    while (cur >= 0) {
      const Node& node = arena_[cur];
      if (node.op >= 0)
        src_map_[node.k - 1] = node.op;
      else if (node.op == kOpEps)
        src_map_[node.k - 1] = PartialMapping::kDeleted;
      cur = node.parent;
    }
    const Node& node = arena_[idx];
    for (int u = 0; u < node.k; ++u) {
      if (src_map_[u] == PartialMapping::kDeleted)
        mapping_.apply(EditOp::del(u));
      else
        mapping_.apply(EditOp::sub(u, src_map_[u]));
    }
  }

  void expand(std::uint32_t idx) {
    load_state(idx);
    const Node parent = arena_[idx];
    const int k = parent.k;

    if (k < n1_) {
      for (int v = 0; v < n2_; ++v) {
        if (parent.used & (1ull << v)) continue;
        try_child(idx, parent, EditOp::sub(k, v), parent.used | (1ull << v),
                  static_cast<std::int16_t>(v));
      }
      try_child(idx, parent, EditOp::del(k), parent.used, kOpEps);
    } else {
      // All sources edited: append every remaining insertion as one child.
      double delta = 0.0;
      PartialMapping m = mapping_;
      for (int v = 0; v < n2_ && std::isfinite(delta); ++v) {
        if (parent.used & (1ull << v)) continue;
        const EditOp op = EditOp::ins(v);
        delta += incremental_cost(g1_, g2_, cost_, m, op);
        m.apply(op);
      }
      const double g = parent.g + delta;
      if (!std::isinf(g))
        push(Node{g, 0.0, full_mask_, static_cast<std::int32_t>(idx), kOpBulk,
                  static_cast<std::int16_t>(k)});
    }
  }

  void try_child(std::uint32_t idx, const Node& parent, const EditOp& op,
                 std::uint64_t used, std::int16_t op_code) {
    const double delta = incremental_cost(g1_, g2_, cost_, mapping_, op);
    const double g = parent.g + delta;
    if (std::isinf(g)) return;

    const int k = parent.k + 1;
    src_map_[parent.k] = op.kind == EditOpKind::NodeDel ? PartialMapping::kDeleted : op.v;
    double h = 0.0;
    if (!(k == n1_ && used == full_mask_)) {
      const StateView view{&g1_, &g2_, &cost_, k,
                           {src_map_.data(), static_cast<std::size_t>(k)}, used};
      h = session_->h(view);
      if (std::isinf(h)) return;
    }
    push(Node{g, h, used, static_cast<std::int32_t>(idx), op_code,
              static_cast<std::int16_t>(k)});
  }

  void truncate_beam() {
    if (static_cast<int>(open_.size()) <= beam_width_) return;
    std::sort(open_.begin(), open_.end(),
              [](const HeapEntry& a, const HeapEntry& b) { return heap_after(b, a); });
    open_.resize(beam_width_);
    std::make_heap(open_.begin(), open_.end(), heap_after);
  }

  EditPath recover_path(std::uint32_t idx) {
    std::vector<EditOp> reversed;
    std::int32_t cur = static_cast<std::int32_t>(idx);
    while (cur >= 0) {
      const Node& node = arena_[cur];
      if (node.op == kOpBulk) {
        const std::uint64_t remaining = full_mask_ & ~arena_[node.parent].used;
        for (int v = n2_ - 1; v >= 0; --v)
          if (remaining & (1ull << v)) reversed.push_back(EditOp::ins(v));
      } else if (node.op == kOpEps) {
        reversed.push_back(EditOp::del(node.k - 1));
      } else if (node.op >= 0) {
        reversed.push_back(EditOp::sub(node.k - 1, node.op));
      }
      cur = node.parent;
    }
    EditPath path;
    path.ops.assign(reversed.rbegin(), reversed.rend());
    path.complete = true;
    return path;
  }

  SolveResult budget_exhausted(SolveResult result, std::chrono::steady_clock::time_point t0) {
    double best = kInfCost;
    for (const HeapEntry& e : open_) best = std::min(best, e.f);
    result.lower_bound = best;
    return finish(result, t0, SolveStatus::BudgetExhausted);
  }

  SolveResult finish(SolveResult result, std::chrono::steady_clock::time_point t0,
                     SolveStatus status) {
    result.status = status;
    result.stats.states_enqueued = enqueued_;
    result.stats.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (status != SolveStatus::Ok) result.ged = kInfCost;
    return result;
  }

  const Graph& g1_;
  const Graph& g2_;
  const EditCostModel& cost_;
  HeuristicProvider& provider_;
  SearchLimits limits_;
  int beam_width_;
  int n1_;
  int n2_;
  std::uint64_t full_mask_;

  std::unique_ptr<HeuristicSession> session_;
  std::vector<Node> arena_;
  std::vector<HeapEntry> open_;
  std::vector<int> src_map_;
  PartialMapping mapping_{0, 0};
  std::uint64_t seq_ = 0;
  std::uint64_t enqueued_ = 0;
  double last_popped_f_ = -kInfCost;
};

}  // namespace

SolveResult astar_solve(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                        HeuristicProvider& heuristic, const SearchLimits& limits) {
  return Engine(g1, g2, cost, heuristic, limits, 0).run();
}

SolveResult beam_solve(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                       HeuristicProvider& heuristic, int beam_width,
                       const SearchLimits& limits) {
  if (beam_width < 1) throw std::invalid_argument("beam width must be >= 1");
  return Engine(g1, g2, cost, heuristic, limits, beam_width).run();
}

}  // namespace gedforge
