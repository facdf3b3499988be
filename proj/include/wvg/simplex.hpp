#pragma once

/// Dense exact-rational two-phase primal simplex with Bland's rule.
/// Small LPs only (the nucleolus stage problems); correctness over speed:
/// every pivot is exact, so no tolerances exist anywhere.

#include <vector>

#include "wvg/numeric.hpp"

namespace wvg {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpRow {
  std::vector<Rat> coeffs;
  Rat rhs;
  bool equality = false;  // false: coeffs . x >= rhs
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat objective;
  std::vector<Rat> x;      // structural solution, all variables >= 0
  std::vector<Rat> duals;  // one multiplier per input row (>= 0 on inequality rows)
};

/// min objective . x  subject to the rows and x >= 0.
LpResult solve_lp(const std::vector<LpRow>& rows, const std::vector<Rat>& objective);

}  // namespace wvg
