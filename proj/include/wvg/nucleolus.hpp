#pragma once

/// Exact nucleolus for small weighted games: lexicographic minimization of
/// the sorted excess vector over the imputation set, via the iterated LP
/// scheme (minimize the maximum excess, fix the coalitions that are tight in
/// every optimum, repeat until the solution set is a point). All pivoting is
/// exact rational.

#include <compare>

#include "wvg/counting.hpp"
#include "wvg/game.hpp"

namespace wvg {

/// Excesses e(S,x) = v(S) - x(S) over all proper nonempty coalitions,
/// sorted nonincreasing; length 2^n - 2.
struct ExcessVector {
  std::vector<Rat> sorted;
};

/// Requires n <= 12 and x summing to 1.
ExcessVector excess_vector(const WeightedGame& g, const PowerVector& x);

/// Lexicographic comparison; "less" means closer to the nucleolus.
std::strong_ordering lex_compare(const ExcessVector& a, const ExcessVector& b);

/// The unique imputation lexicographically minimizing the sorted excesses.
/// Requires n <= 12. When two or more singleton coalitions win, the
/// imputation set {x >= v({i})} is empty and the individual-rationality
/// floors are dropped (x >= 0, x(N) = 1 kept).
PowerVector nucleolus(const WeightedGame& g);

}  // namespace wvg
