#pragma once

#include <optional>
#include <vector>

#include "hgmatch/rational.hpp"

namespace hgmatch::lp {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

// Exact feasibility of {x >= 0 : A x = b} by phase-1 simplex with Bland's
// rule. Either a basic feasible point or a Farkas certificate y with
// yᵀA <= 0 componentwise and yᵀb > 0 (verified before returning).
struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> x;
  std::vector<Rational> farkas;
};
FeasibilityResult feasible_point(const Matrix& a, const std::vector<Rational>& b);

// Exact minimum of cᵀx over {x >= 0 : A x = b}.
struct MinimizeResult {
  bool feasible = false;
  bool bounded = false;
  Rational value;
  std::vector<Rational> x;  // optimal basic solution when feasible && bounded
};
MinimizeResult minimize(const Matrix& a, const std::vector<Rational>& b,
                        const std::vector<Rational>& c);

// Rank of a rational matrix by Gaussian elimination.
int rank(Matrix a);

// Solves A x = b for A with full column rank; nullopt when the system is
// inconsistent or the columns are dependent.
std::optional<std::vector<Rational>> solve_unique(const Matrix& a,
                                                  const std::vector<Rational>& b);

}  // namespace hgmatch::lp
