#include "gedforge/train/labels.hpp"

#include <cmath>

#include "gedforge/error.hpp"

namespace gedforge::train {

namespace {

PartialPathLabel make_label(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                            std::vector<EditOp> ops, double ged) {
  PartialPathLabel label;
  label.pair_id = g1.id() + ":" + g2.id();
  PartialMapping m(g1.size(), g2.size());
  for (const EditOp& op : ops) {
    m.apply(op);
    if (op.u >= 0) label.masked_sources |= 1ull << op.u;
    if (op.v >= 0) label.masked_targets |= 1ull << op.v;
  }
  label.ops = std::move(ops);
  label.g_cost = path_cost(g1, g2, cost, m);
  label.h_opt = ged - label.g_cost;
  const int remaining = (g1.size() - m.edited_sources()) + (g2.size() - m.used_targets());
  label.s_opt =
      label.h_opt <= 0.0 ? 1.0 : std::exp(-2.0 * label.h_opt / remaining);
  return label;
}

}  // namespace

std::vector<PartialPathLabel> generate_partial_labels(const Graph& g1, const Graph& g2,
                                                      const EditCostModel& cost,
                                                      const EditPath& optimal, double ged) {
  if (std::abs(path_cost(g1, g2, cost, optimal) - ged) > 1e-9)
    throw InvalidPathError("path cost does not match the claimed optimal GED");

  const int m = static_cast<int>(optimal.ops.size());
  std::vector<PartialPathLabel> labels;

  if (m <= kSubsetLimit) {
    const std::uint64_t count = (1ull << m) - 1;
    labels.reserve(count);
    for (std::uint64_t bits = 1; bits <= count; ++bits) {
      std::vector<EditOp> ops;
      for (int i = 0; i < m; ++i)
        if (bits & (1ull << i)) ops.push_back(optimal.ops[i]);
      labels.push_back(make_label(g1, g2, cost, std::move(ops), ged));
    }
  } else {
    labels.reserve(m);
    for (int len = 1; len <= m; ++len)
      labels.push_back(make_label(
          g1, g2, cost, {optimal.ops.begin(), optimal.ops.begin() + len}, ged));
  }
  return labels;
}

}  // namespace gedforge::train
