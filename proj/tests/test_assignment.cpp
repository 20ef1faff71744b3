#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "gedforge/assignment.hpp"

using namespace gedforge;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double exhaustive_min(const CostMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = kInf;
  do {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += m(i, perm[i]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CostMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  CostMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("identity-favoring matrix assigns the diagonal") {
  CostMatrix m = CostMatrix::Constant(4, 4, 1.0);
  m.diagonal().setZero();
  for (auto* solver : {&lap_hungarian, &lap_jv}) {
    const Assignment a = (*solver)(m);
    REQUIRE(a.feasible());
    CHECK(a.total_cost == 0.0);
    for (int i = 0; i < 4; ++i) CHECK(a.perm[i] == i);
  }
}

TEST_CASE("2x2 cross assignment") {
  CostMatrix m(2, 2);
  m << 4, 1, 2, 8;
  for (auto* solver : {&lap_hungarian, &lap_jv}) {
    const Assignment a = (*solver)(m);
    REQUIRE(a.feasible());
    CHECK(a.total_cost == 3.0);
    CHECK(a.perm == std::vector<int>{1, 0});
  }
}

TEST_CASE("optimality vs exhaustive enumeration on random 6x6 matrices") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const CostMatrix m = random_matrix(6, rng);
    const double opt = exhaustive_min(m);
    CHECK(lap_hungarian(m).total_cost == doctest::Approx(opt).epsilon(1e-12));
    CHECK(lap_jv(m).total_cost == doctest::Approx(opt).epsilon(1e-12));
  }
}

TEST_CASE("solver agreement on 1000 random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size_dist(1, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    CostMatrix m = random_matrix(size_dist(rng), rng);
    // Sprinkle forbidden entries, keeping one finite entry per row/column.
    if (trial % 3 == 0)
      for (int i = 0; i + 1 < m.rows(); ++i) m(i, (i + 1) % m.cols()) = kInf;
    const Assignment h = lap_hungarian(m);
    const Assignment j = lap_jv(m);
    REQUIRE(h.feasible() == j.feasible());
    if (h.feasible()) CHECK(h.total_cost == doctest::Approx(j.total_cost).epsilon(1e-12));
  }
}

TEST_CASE("one forbidden entry still solvable through the finite one") {
  CostMatrix m(2, 2);
  m << kInf, 1, 2, kInf;
  for (auto* solver : {&lap_hungarian, &lap_jv}) {
    const Assignment a = (*solver)(m);
    REQUIRE(a.feasible());
    CHECK(a.total_cost == 3.0);
  }
}

TEST_CASE("all-infinite column is infeasible") {
  CostMatrix m(3, 3);
  m.setConstant(1.0);
  m.col(1).setConstant(kInf);
  CHECK(!lap_hungarian(m).feasible());
  CHECK(!lap_jv(m).feasible());
}

TEST_CASE("structural infeasibility without an all-infinite line") {
  // Rows 0 and 1 can only use column 0.
  CostMatrix m(3, 3);
  m.setConstant(kInf);
  m(0, 0) = 1;
  m(1, 0) = 1;
  m(2, 0) = m(2, 1) = m(2, 2) = 1;
  m(0, 1) = kInf;
  CHECK(!lap_hungarian(m).feasible());
  CHECK(!lap_jv(m).feasible());
}

TEST_CASE("scaling all entries scales the cost and keeps the assignment optimal") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const CostMatrix m = random_matrix(5, rng);
    const double lambda = std::uniform_real_distribution<double>(0.1, 9.0)(rng);
    const Assignment base = lap_hungarian(m);
    const Assignment scaled = lap_hungarian(lambda * m);
    CHECK(scaled.total_cost == doctest::Approx(lambda * base.total_cost).epsilon(1e-10));
    double original_perm_cost = 0.0;
    for (int i = 0; i < 5; ++i) original_perm_cost += lambda * m(i, base.perm[i]);
    CHECK(original_perm_cost == doctest::Approx(scaled.total_cost).epsilon(1e-10));
  }
}

TEST_CASE("empty matrix yields an empty optimal assignment") {
  CostMatrix m(0, 0);
  const Assignment a = lap_hungarian(m);
  CHECK(a.feasible());
  CHECK(a.total_cost == 0.0);
}
