#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "hgmatch/lp.hpp"
#include "support/testutil.hpp"

using namespace hgmatch;
using namespace hgmatch::lp;

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  REQUIRE(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_feasible(const Matrix& a, const std::vector<Rational>& b,
                    const std::vector<Rational>& x) {
  REQUIRE(x.size() == (a.empty() ? x.size() : a[0].size()));
  for (const Rational& v : x) CHECK(v >= 0);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(dot(a[i], x) == b[i]);
}

void check_farkas(const Matrix& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& y) {
  REQUIRE(y.size() == a.size());
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t j = 0; j < cols; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < a.size(); ++i) col += y[i] * a[i][j];
    CHECK(col <= 0);
  }
  Rational rhs = 0;
  for (std::size_t i = 0; i < a.size(); ++i) rhs += y[i] * b[i];
  CHECK(rhs > 0);
}

// Every basic solution of {x >= 0, Ax = b} by trying all column subsets of
// size rank(A); used as an optimality oracle for minimize().
std::vector<std::vector<Rational>> basic_feasible_points(
    const Matrix& a, const std::vector<Rational>& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  const int r = rank(a);
  std::vector<std::vector<Rational>> out;
  std::vector<int> pick;
  auto emit = [&](const std::vector<int>& cs) {
    Matrix sub(rows, Row(cs.size()));
    for (int i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) sub[i][j] = a[i][cs[j]];
    }
    auto sol = solve_unique(sub, b);
    if (!sol) return;
    bool nonneg = true;
    for (const Rational& v : *sol) nonneg = nonneg && v >= 0;
    if (!nonneg) return;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t j = 0; j < cs.size(); ++j) x[cs[j]] = (*sol)[j];
    out.push_back(std::move(x));
  };
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == r) {
      emit(pick);
      return;
    }
    for (int c = start; c < cols; ++c) {
      pick.push_back(c);
      rec(c + 1);
      pick.pop_back();
    }
  };
  if (r == 0) {
    bool all_zero = true;
    for (const Rational& v : b) all_zero = all_zero && v == 0;
    if (all_zero) out.emplace_back(cols, Rational(0));
  } else {
    rec(0);
  }
  return out;
}

}  // namespace

TEST_CASE("feasible systems produce verified points") {
  // x1 + x2 = 2, x1 - x2 = 0 → (1, 1).
  Matrix a = {{1, 1}, {1, -1}};
  std::vector<Rational> b = {2, 0};
  FeasibilityResult r = feasible_point(a, b);
  REQUIRE(r.feasible);
  CHECK(r.x == std::vector<Rational>{1, 1});

  // Underdetermined: any basic solution works; verify feasibility only.
  Matrix a2 = {{1, 1, 1}};
  FeasibilityResult r2 = feasible_point(a2, {1});
  REQUIRE(r2.feasible);
  check_feasible(a2, {1}, r2.x);
}

TEST_CASE("infeasible systems produce verified Farkas certificates") {
  // x1 + x2 = -1 has no nonnegative solution.
  Matrix a = {{1, 1}};
  std::vector<Rational> b = {-1};
  FeasibilityResult r = feasible_point(a, b);
  REQUIRE(!r.feasible);
  check_farkas(a, b, r.farkas);

  // x1 = 1, x1 = 2 is inconsistent outright.
  Matrix a2 = {{1}, {1}};
  std::vector<Rational> b2 = {1, 2};
  FeasibilityResult r2 = feasible_point(a2, b2);
  REQUIRE(!r2.feasible);
  check_farkas(a2, b2, r2.farkas);
}

TEST_CASE("random feasibility runs are self-verifying") {
  std::mt19937_64 rng(31337);
  int feas = 0, infeas = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 6);
    Matrix a(rows, Row(cols));
    std::vector<Rational> b(rows);
    for (auto& row : a) {
      for (auto& v : row) v = static_cast<int>(rng() % 5) - 2;
    }
    for (auto& v : b) v = static_cast<int>(rng() % 5) - 2;
    FeasibilityResult r = feasible_point(a, b);
    if (r.feasible) {
      ++feas;
      check_feasible(a, b, r.x);
    } else {
      ++infeas;
      check_farkas(a, b, r.farkas);
    }
  }
  CHECK(feas > 10);
  CHECK(infeas > 10);
}

TEST_CASE("minimize on pinned examples") {
  // min x2 subject to x1 + x2 = 2: optimum 0 at (2, 0).
  MinimizeResult r = minimize({{1, 1}}, {2}, {0, 1});
  REQUIRE(r.feasible);
  REQUIRE(r.bounded);
  CHECK(r.value == 0);
  CHECK(r.x == std::vector<Rational>{2, 0});

  // min -x1 with x1 - x2 = 0: x1 can grow forever along (t, t).
  MinimizeResult u = minimize({{1, -1}}, {0}, {-1, 0});
  REQUIRE(u.feasible);
  CHECK(!u.bounded);

  // Infeasible.
  MinimizeResult inf = minimize({{1, 1}}, {-3}, {1, 1});
  CHECK(!inf.feasible);

  // Fractional optimum stays exact: min x1 with 3 x1 = 1.
  MinimizeResult f = minimize({{3}}, {1}, {1});
  REQUIRE(f.feasible);
  REQUIRE(f.bounded);
  CHECK(f.value == Rational(1, 3));
}

TEST_CASE("minimize matches basic-solution sweep") {
  std::mt19937_64 rng(808);
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 3);
    const int cols = rows + static_cast<int>(rng() % 3);
    Matrix a(rows, Row(cols));
    std::vector<Rational> b(rows);
    std::vector<Rational> c(cols);
    for (auto& row : a) {
      for (auto& v : row) v = static_cast<int>(rng() % 5) - 2;
    }
    for (auto& v : b) v = static_cast<int>(rng() % 3);
    for (auto& v : c) v = static_cast<int>(rng() % 7) - 3;
    MinimizeResult r = minimize(a, b, c);
    if (!r.feasible || !r.bounded) continue;
    check_feasible(a, b, r.x);
    CHECK(dot(c, r.x) == r.value);
    // The optimum of a bounded LP sits at a basic feasible solution.
    auto basics = basic_feasible_points(a, b);
    REQUIRE(!basics.empty());
    Rational best = dot(c, basics[0]);
    for (const auto& x : basics) best = std::min(best, dot(c, x));
    CHECK(r.value == best);
    ++compared;
  }
  CHECK(compared > 20);
}

TEST_CASE("rank and solve_unique") {
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rank({{1, 0}, {0, 1}}) == 2);
  CHECK(rank({{0, 0}}) == 0);
  CHECK(rank({}) == 0);

  auto s = solve_unique({{2, 0}, {0, 4}}, {1, 1});
  REQUIRE(s.has_value());
  CHECK(*s == std::vector<Rational>{Rational(1, 2), Rational(1, 4)});

  // Dependent columns: no unique solution.
  CHECK(!solve_unique({{1, 2}, {2, 4}}, {1, 2}).has_value());
  // Inconsistent overdetermined system.
  CHECK(!solve_unique({{1}, {1}}, {1, 2}).has_value());
  // Consistent overdetermined system.
  auto s2 = solve_unique({{1}, {2}}, {3, 6});
  REQUIRE(s2.has_value());
  CHECK(*s2 == std::vector<Rational>{3});
}
