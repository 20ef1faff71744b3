#include "gedforge/assignment.hpp"

#include <cassert>
#include <limits>

namespace gedforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Assignment infeasible(int n) {
  Assignment a;
  a.status = LapStatus::Infeasible;
  a.perm.assign(n, -1);
  a.total_cost = kInf;
  return a;
}

bool has_finite_cover(const Eigen::Ref<const CostMatrix>& m) {
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i)
    if (!(m.row(i).minCoeff() < kInf)) return false;
  for (int j = 0; j < n; ++j)
    if (!(m.col(j).minCoeff() < kInf)) return false;
  return true;
}

Assignment finish(const Eigen::Ref<const CostMatrix>& m, std::vector<int> perm) {
  Assignment a;
  a.perm = std::move(perm);
  a.total_cost = 0.0;
  for (int i = 0; i < static_cast<int>(a.perm.size()); ++i) a.total_cost += m(i, a.perm[i]);
  return a;
}

}  // namespace

Assignment lap_hungarian(const Eigen::Ref<const CostMatrix>& m) {
  assert(m.rows() == m.cols());
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Assignment{};
  if (!has_finite_cover(m)) return infeasible(n);

  // col_row[j] = row matched to column j; index n is the virtual root column.
  std::vector<int> col_row(n + 1, -1);
  std::vector<double> u(n, 0.0), v(n + 1, 0.0);

  for (int i = 0; i < n; ++i) {
    col_row[n] = i;
    int j0 = n;
    std::vector<double> minv(n, kInf);
    std::vector<int> way(n, n);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = col_row[j0];
      int j1 = -1;
      double delta = kInf;
      for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        const double cur = m(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 < 0) return infeasible(n);  // only forbidden entries reachable
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          if (col_row[j] >= 0) u[col_row[j]] += delta;
          v[j] -= delta;
        } else if (minv[j] < kInf) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (col_row[j0] != -1);
    // Augment along the alternating path back to the virtual column.
    do {
      const int j1 = way[j0];
      col_row[j0] = col_row[j1];
      j0 = j1;
    } while (j0 != n);
  }

  std::vector<int> perm(n, -1);
  for (int j = 0; j < n; ++j)
    if (col_row[j] >= 0) perm[col_row[j]] = j;
  return finish(m, std::move(perm));
}

Assignment lap_jv(const Eigen::Ref<const CostMatrix>& m) {
  assert(m.rows() == m.cols());
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Assignment{};
  if (!has_finite_cover(m)) return infeasible(n);

  std::vector<int> row_col(n, -1), col_row(n, -1);
  std::vector<double> v(n, 0.0);

  // Column reduction, last column first.
  for (int j = n - 1; j >= 0; --j) {
    int i1 = 0;
    for (int i = 1; i < n; ++i)
      if (m(i, j) < m(i1, j)) i1 = i;
    v[j] = m(i1, j);
    if (row_col[i1] == -1) {
      row_col[i1] = j;
      col_row[j] = i1;
    }
  }

  // Reduction transfer on assigned rows.
  for (int i = 0; i < n; ++i) {
    const int j1 = row_col[i];
    if (j1 == -1) continue;
    double mu = kInf;
    for (int j = 0; j < n; ++j)
      if (j != j1) mu = std::min(mu, m(i, j) - v[j]);
    if (mu < kInf) v[j1] -= mu;
  }

  // Shortest augmenting path for every remaining free row.
  std::vector<double> d(n);
  std::vector<int> pred(n);
  std::vector<char> scanned(n);
  for (int f = 0; f < n; ++f) {
    if (row_col[f] != -1) continue;
    for (int j = 0; j < n; ++j) {
      d[j] = m(f, j) - v[j];
      pred[j] = f;
      scanned[j] = 0;
    }
    int sink = -1;
    double min_d = 0.0;
    while (sink == -1) {
      int jmin = -1;
      min_d = kInf;
      for (int j = 0; j < n; ++j)
        if (!scanned[j] && d[j] < min_d) {
          min_d = d[j];
          jmin = j;
        }
      if (jmin < 0) return infeasible(n);
      scanned[jmin] = 1;
      if (col_row[jmin] == -1) {
        sink = jmin;
        break;
      }
      const int i = col_row[jmin];
      const double base = min_d - (m(i, jmin) - v[jmin]);
      for (int j = 0; j < n; ++j) {
        if (scanned[j]) continue;
        const double nd = base + m(i, j) - v[j];
        if (nd < d[j]) {
          d[j] = nd;
          pred[j] = i;
        }
      }
    }
    for (int j = 0; j < n; ++j)
      if (scanned[j] && j != sink) v[j] += d[j] - min_d;
    // Augment backwards from the sink.
    int j = sink;
    while (true) {
      const int i = pred[j];
      col_row[j] = i;
      std::swap(row_col[i], j);
      if (i == f) break;
    }
  }

  return finish(m, row_col);
}

}  // namespace gedforge
