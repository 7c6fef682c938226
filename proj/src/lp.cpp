#include "hgmatch/lp.hpp"

#include <algorithm>

#include "hgmatch/errors.hpp"

namespace hgmatch::lp {

namespace {

// Dense tableau for standard-form problems. Columns 0..n-1 are the real
// variables, n..n+m-1 the phase-1 artificials, last column the rhs.
struct Tableau {
  int m, n;
  std::vector<Row> t;      // m rows, n+m+1 columns
  std::vector<int> basis;  // basis[i] = column basic in row i
  std::vector<bool> row_negated;
  std::vector<bool> row_dropped;

  Tableau(const Matrix& a, const std::vector<Rational>& b)
      : m(static_cast<int>(a.size())), n(m ? static_cast<int>(a[0].size()) : 0) {
    if (b.size() != a.size()) throw TheoremViolation("lp: size mismatch");
    t.assign(m, Row(n + m + 1, Rational(0)));
    basis.resize(m);
    row_negated.assign(m, false);
    row_dropped.assign(m, false);
    for (int i = 0; i < m; ++i) {
      bool neg = b[i] < 0;
      row_negated[i] = neg;
      for (int j = 0; j < n; ++j) t[i][j] = neg ? Rational(-a[i][j]) : a[i][j];
      t[i][n + i] = 1;
      t[i][n + m] = neg ? Rational(-b[i]) : b[i];
      basis[i] = n + i;
    }
  }

  void pivot(int row, int col, Row& obj) {
    Rational p = t[row][col];
    for (auto& x : t[row]) x /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row || row_dropped[i]) continue;
      Rational f = t[i][col];
      if (f == 0) continue;
      for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[row][j];
    }
    Rational f = obj[col];
    if (f != 0) {
      for (int j = 0; j <= n + m; ++j) obj[j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Minimizes the objective encoded in `obj` (reduced-cost row, with
  // obj[n+m] = -objective value). Columns >= limit never enter. Returns
  // false when unbounded.
  bool iterate(Row& obj, int limit) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (obj[j] < 0) {
          enter = j;
          break;  // Bland: smallest eligible index
        }
      }
      if (enter == -1) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (row_dropped[i] || t[i][enter] <= 0) continue;
        Rational ratio = t[i][n + m] / t[i][enter];
        if (leave == -1 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == -1) return false;
      pivot(leave, enter, obj);
    }
  }

  Row reduced_costs(const std::vector<Rational>& cost) const {
    Row obj(n + m + 1, Rational(0));
    for (int j = 0; j < static_cast<int>(cost.size()); ++j) obj[j] = cost[j];
    for (int i = 0; i < m; ++i) {
      if (row_dropped[i]) continue;
      int bj = basis[i];
      Rational cb = bj < static_cast<int>(cost.size()) ? cost[bj] : Rational(0);
      if (cb == 0) continue;
      for (int j = 0; j <= n + m; ++j) obj[j] -= cb * t[i][j];
    }
    return obj;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n, Rational(0));
    for (int i = 0; i < m; ++i) {
      if (!row_dropped[i] && basis[i] < n) x[basis[i]] = t[i][n + m];
    }
    return x;
  }
};

// Runs phase 1. Returns the objective row on success (value 0, artificials
// out of the basis or their rows dropped); fills `farkas` and returns
// nullopt when infeasible.
std::optional<Tableau> phase1(const Matrix& a, const std::vector<Rational>& b,
                              std::vector<Rational>* farkas) {
  Tableau tab(a, b);
  std::vector<Rational> cost(tab.n + tab.m, Rational(0));
  for (int k = 0; k < tab.m; ++k) cost[tab.n + k] = 1;
  Row obj = tab.reduced_costs(cost);
  if (!tab.iterate(obj, tab.n + tab.m)) {
    throw TheoremViolation("lp: phase 1 unbounded");
  }
  Rational value = -obj[tab.n + tab.m];
  if (value > 0) {
    if (farkas) {
      // Optimal dual y_i = 1 - reduced cost of artificial i, flipped back
      // for rows that were negated to make b nonnegative.
      std::vector<Rational> y(tab.m);
      for (int i = 0; i < tab.m; ++i) {
        y[i] = Rational(1) - obj[tab.n + i];
        if (tab.row_negated[i]) y[i] = -y[i];
      }
      // The certificate must hold exactly; anything else is a bug.
      for (int j = 0; j < tab.n; ++j) {
        Rational dot(0);
        for (int i = 0; i < tab.m; ++i) dot += y[i] * a[i][j];
        if (dot > 0) throw TheoremViolation("lp: bad Farkas certificate");
      }
      Rational dotb(0);
      for (int i = 0; i < tab.m; ++i) dotb += y[i] * b[i];
      if (dotb <= 0) throw TheoremViolation("lp: bad Farkas certificate");
      *farkas = std::move(y);
    }
    return std::nullopt;
  }
  // Remove leftover artificials from the basis; a row whose real
  // coefficients are all zero is redundant and gets dropped.
  for (int i = 0; i < tab.m; ++i) {
    if (tab.row_dropped[i] || tab.basis[i] < tab.n) continue;
    int piv = -1;
    for (int j = 0; j < tab.n; ++j) {
      if (tab.t[i][j] != 0) {
        piv = j;
        break;
      }
    }
    if (piv == -1) {
      tab.row_dropped[i] = true;
    } else {
      tab.pivot(i, piv, obj);
    }
  }
  return tab;
}

}  // namespace

FeasibilityResult feasible_point(const Matrix& a, const std::vector<Rational>& b) {
  FeasibilityResult result;
  auto tab = phase1(a, b, &result.farkas);
  if (!tab) return result;
  result.feasible = true;
  result.x = tab->solution();
  return result;
}

MinimizeResult minimize(const Matrix& a, const std::vector<Rational>& b,
                        const std::vector<Rational>& c) {
  MinimizeResult result;
  auto tab = phase1(a, b, nullptr);
  if (!tab) return result;
  result.feasible = true;
  std::vector<Rational> cost(c);
  cost.resize(tab->n, Rational(0));
  Row obj = tab->reduced_costs(cost);
  if (!tab->iterate(obj, tab->n)) return result;  // unbounded
  result.bounded = true;
  result.x = tab->solution();
  result.value = 0;
  for (int j = 0; j < tab->n; ++j) result.value += cost[j] * result.x[j];
  return result;
}

int rank(Matrix a) {
  if (a.empty()) return 0;
  int m = static_cast<int>(a.size());
  int n = static_cast<int>(a[0].size());
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i) {
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == -1) continue;
    std::swap(a[r], a[piv]);
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[r][col];
      for (int j = col; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve_unique(const Matrix& a,
                                                  const std::vector<Rational>& b) {
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : 0;
  Matrix w(m, Row(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = a[i][j];
    w[i][n] = b[i];
  }
  std::vector<int> pivot_row(n, -1);
  int r = 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i) {
      if (w[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == -1) return std::nullopt;  // dependent columns
    std::swap(w[r], w[piv]);
    Rational p = w[r][col];
    for (int j = col; j <= n; ++j) w[r][j] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || w[i][col] == 0) continue;
      Rational f = w[i][col];
      for (int j = col; j <= n; ++j) w[i][j] -= f * w[r][j];
    }
    pivot_row[col] = r;
    ++r;
  }
  for (int i = r; i < m; ++i) {
    if (w[i][n] != 0) return std::nullopt;  // inconsistent
  }
  std::vector<Rational> x(n);
  for (int col = 0; col < n; ++col) x[col] = w[pivot_row[col]][n];
  return x;
}

}  // namespace hgmatch::lp
