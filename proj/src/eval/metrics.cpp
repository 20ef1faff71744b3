#include "gedforge/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "gedforge/error.hpp"

namespace gedforge::eval {

double metric_mse(std::span<const double> pred, std::span<const double> label) {
  if (pred.size() != label.size() || pred.empty())
    throw ConfigError("mse needs equally sized nonempty vectors");
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = pred[i] - label[i];
    sum += d * d;
  }
  return sum / static_cast<double>(pred.size());
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * (i + j) + 1.0;  // 1-based average rank over the tie run
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double metric_spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ConfigError("spearman needs two equally sized vectors of length >= 2");
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = rx[i] - mx;
    const double dy = ry[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

double metric_p_at_k(std::span<const double> pred, std::span<const double> label,
                     std::span<const std::string> ids, int k) {
  const std::size_t n = pred.size();
  if (label.size() != n || ids.size() != n) throw ConfigError("p@k needs aligned vectors");
  if (k <= 0 || static_cast<std::size_t>(k) > n)
    throw ConfigError("p@k: k must lie in [1, corpus size]");

  auto top_k = [&](std::span<const double> scores) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (scores[a] != scores[b]) return scores[a] > scores[b];
      return ids[a] < ids[b];
    });
    order.resize(k);
    return std::set<std::size_t>(order.begin(), order.end());
  };

  const auto tp = top_k(pred);
  const auto tl = top_k(label);
  std::size_t hits = 0;
  for (const std::size_t i : tp) hits += tl.count(i);
  return static_cast<double>(hits) / k;
}

}  // namespace gedforge::eval
