#include "gedforge/edit_path.hpp"

#include <algorithm>

#include "gedforge/error.hpp"

namespace gedforge {

std::string to_string(const EditOp& op) {
  switch (op.kind) {
    case EditOpKind::NodeSub:
      return std::to_string(op.u) + "->" + std::to_string(op.v);
    case EditOpKind::NodeDel:
      return std::to_string(op.u) + "->eps";
    case EditOpKind::NodeIns:
      return "eps->" + std::to_string(op.v);
  }
  return "?";
}

bool PartialMapping::can_apply(const EditOp& op) const {
  switch (op.kind) {
    case EditOpKind::NodeSub:
      return op.u >= 0 && op.u < n1() && op.v >= 0 && op.v < n2() &&
             src_[op.u] == kUnedited && tgt_[op.v] == kUnused;
    case EditOpKind::NodeDel:
      return op.u >= 0 && op.u < n1() && src_[op.u] == kUnedited;
    case EditOpKind::NodeIns:
      return op.v >= 0 && op.v < n2() && tgt_[op.v] == kUnused;
  }
  return false;
}

void PartialMapping::apply(const EditOp& op) {
  if (!can_apply(op)) throw InvalidOpError("conflicting or out-of-range op " + to_string(op));
  switch (op.kind) {
    case EditOpKind::NodeSub:
      src_[op.u] = op.v;
      tgt_[op.v] = op.u;
      ++edited_src_;
      ++used_tgt_;
      break;
    case EditOpKind::NodeDel:
      src_[op.u] = kDeleted;
      ++edited_src_;
      break;
    case EditOpKind::NodeIns:
      tgt_[op.v] = kInserted;
      ++used_tgt_;
      break;
  }
}

PartialMapping PartialMapping::from_ops(const Graph& g1, const Graph& g2,
                                        const std::vector<EditOp>& ops) {
  PartialMapping m(g1.size(), g2.size());
  for (const EditOp& op : ops) m.apply(op);
  return m;
}

double path_cost(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                 const PartialMapping& m) {
  double total = 0.0;

  for (int u = 0; u < m.n1(); ++u) {
    const int s = m.source_state(u);
    if (s == PartialMapping::kUnedited) continue;
    if (s == PartialMapping::kDeleted)
      total += cost.node_del();
    else
      total += cost.node_sub(g1.label(u), g2.label(s));
  }
  for (int v = 0; v < m.n2(); ++v) {
    if (m.target_state(v) == PartialMapping::kInserted) total += cost.node_ins();
  }

  // Source edges: charged once both endpoints are edited. A surviving pair of
  // mapped endpoints with a matching target edge is a substitution, anything
  // else a deletion.
  for (const Edge& e : g1.edges()) {
    const int a = m.source_state(e.u);
    const int b = m.source_state(e.v);
    if (a == PartialMapping::kUnedited || b == PartialMapping::kUnedited) continue;
    if (a >= 0 && b >= 0) {
      const double w2 = g2.edge_weight(a, b);
      total += w2 >= 0 ? cost.edge_sub(e.weight, w2) : cost.edge_del(e.weight);
    } else {
      total += cost.edge_del(e.weight);
    }
  }

  // Target edges not already paired with a source edge above.
  for (const Edge& e : g2.edges()) {
    const int a = m.target_state(e.u);
    const int b = m.target_state(e.v);
    if (a == PartialMapping::kUnused || b == PartialMapping::kUnused) continue;
    if (a >= 0 && b >= 0 && g1.edge_weight(a, b) >= 0) continue;  // substitution, charged above
    total += cost.edge_ins(e.weight);
  }

  return total;
}

double path_cost(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                 const EditPath& p) {
  PartialMapping m(g1.size(), g2.size());
  for (const EditOp& op : p.ops) {
    if (!m.can_apply(op)) throw InvalidPathError("duplicate or invalid op " + to_string(op));
    m.apply(op);
  }
  return path_cost(g1, g2, cost, m);
}

double incremental_cost(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                        const PartialMapping& m, const EditOp& op) {
  if (!m.can_apply(op)) throw InvalidOpError("conflicting op " + to_string(op));
  double delta = 0.0;

  switch (op.kind) {
    case EditOpKind::NodeSub: {
      delta += cost.node_sub(g1.label(op.u), g2.label(op.v));
      // Source edges to already-edited neighbors.
      for (const Graph::Adj& a : g1.neighbors(op.u)) {
        const int s = m.source_state(a.to);
        if (s == PartialMapping::kUnedited) continue;
        if (s >= 0) {
          const double w2 = g2.edge_weight(op.v, s);
          delta += w2 >= 0 ? cost.edge_sub(a.weight, w2) : cost.edge_del(a.weight);
        } else {
          delta += cost.edge_del(a.weight);
        }
      }
      // Target edges to already-used neighbors without a source counterpart.
      for (const Graph::Adj& a : g2.neighbors(op.v)) {
        const int t = m.target_state(a.to);
        if (t == PartialMapping::kUnused) continue;
        if (t >= 0 && g1.edge_weight(op.u, t) >= 0) continue;  // counted as substitution
        delta += cost.edge_ins(a.weight);
      }
      break;
    }
    case EditOpKind::NodeDel: {
      delta += cost.node_del();
      for (const Graph::Adj& a : g1.neighbors(op.u))
        if (m.source_edited(a.to)) delta += cost.edge_del(a.weight);
      break;
    }
    case EditOpKind::NodeIns: {
      delta += cost.node_ins();
      for (const Graph::Adj& a : g2.neighbors(op.v))
        if (m.target_used(a.to)) delta += cost.edge_ins(a.weight);
      break;
    }
  }
  return delta;
}

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       const std::vector<int>& old_to_new) {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int old : keep) labels.push_back(g.label(old));
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int nu = old_to_new[e.u];
    const int nv = old_to_new[e.v];
    if (nu >= 0 && nv >= 0) edges.push_back({nu, nv, e.weight});
  }
  return Graph(g.id() + "'", std::move(labels), std::move(edges));
}

}  // namespace

UnmatchedSubgraphs unmatched_subgraphs(const Graph& g1, const Graph& g2,
                                       const PartialMapping& m) {
  UnmatchedSubgraphs out;
  out.g1_old_to_new.assign(g1.size(), -1);
  out.g2_old_to_new.assign(g2.size(), -1);
  for (int u = 0; u < g1.size(); ++u) {
    if (!m.source_edited(u)) {
      out.g1_old_to_new[u] = static_cast<int>(out.g1_new_to_old.size());
      out.g1_new_to_old.push_back(u);
    }
  }
  for (int v = 0; v < g2.size(); ++v) {
    if (!m.target_used(v)) {
      out.g2_old_to_new[v] = static_cast<int>(out.g2_new_to_old.size());
      out.g2_new_to_old.push_back(v);
    }
  }
  out.g1_sub = induced_subgraph(g1, out.g1_new_to_old, out.g1_old_to_new);
  out.g2_sub = induced_subgraph(g2, out.g2_new_to_old, out.g2_old_to_new);
  return out;
}

bool is_complete_path(const Graph& g1, const Graph& g2, const EditPath& p) {
  PartialMapping m(g1.size(), g2.size());
  for (const EditOp& op : p.ops) {
    if (!m.can_apply(op)) return false;
    m.apply(op);
  }
  return m.complete();
}

}  // namespace gedforge
