#pragma once

/// Deviation/ratio machinery: the bounds relating L1 distance between a
/// power vector and relative weights to per-class ratios, their combination
/// into pairwise ratio intervals, and the reverse direction (small relative
/// deviation outside a low-mass set implies small L1 distance).

#include <cstddef>
#include <vector>

#include "wvg/weights.hpp"

namespace wvg {

/// One equal-weight class S_i = { j : w_j = w_i } with w_i > 0.
struct ClassRatioBound {
  Rat weight;               // common weight value
  std::size_t representative;  // smallest player index in the class
  std::size_t members;
  Rat alpha;                // w(S_i)
  Rat ratio;                // x_i / w_i
  Rat lower;                // 1 - eps/alpha
  Rat upper;                // 1 + eps/alpha
  bool ok;                  // lower <= ratio <= upper
};

struct RatioBoundReport {
  Rat epsilon;  // ||x - w||_1
  std::vector<ClassRatioBound> classes;
  bool all_ok() const {
    for (const auto& c : classes)
      if (!c.ok) return false;
    return true;
  }
};

/// Per-class ratio bounds 1 - eps/alpha_i <= x_i/w_i <= 1 + eps/alpha_i with
/// eps = ||x-w||_1. Requires x constant on equal-weight classes; otherwise
/// throws std::invalid_argument ("hypothesis violated"). A false verdict
/// signals an implementation bug, not a property of the input.
RatioBoundReport ratio_bounds(const PowerVector& x, const WeightVector& w);

struct CombinedRatioBound {
  Rat lower;     // (1-eps_i)/(1+eps_j)
  Rat upper;     // (1+eps_i)/(1-eps_j)
  Rat additive;  // eps_i + eps_j
};

/// Interval for (w_i/w_j)*(x_j/x_i) from per-player relative deviations.
/// Requires eps_i, eps_j in [0,1).
CombinedRatioBound combine_ratio_bounds(const Rat& eps_i, const Rat& eps_j);

struct L1FromRelativeReport {
  Rat l1;     // ||x - w||_1
  Rat bound;  // eps_hat + eps_tilde + eps
  bool ok;    // l1 <= bound
};

/// Checks the hypotheses w(N) <= 1, w(N\S) <= eps_hat, x(N\S) <= eps_tilde,
/// 1-eps <= x_i/w_i <= 1+eps on S (entries nonnegative), then verifies
/// ||x-w||_1 <= eps_hat + eps_tilde + eps. A failing hypothesis throws
/// std::invalid_argument naming the violated condition.
L1FromRelativeReport l1_from_relative(const std::vector<Rat>& x,
                                      const WeightVector& w,
                                      const std::vector<std::size_t>& subset,
                                      const Rat& eps_hat, const Rat& eps_tilde,
                                      const Rat& eps);

/// Norm distances between a power vector and weights, with the per-class
/// ratio data attached when x is symmetric across equal-weight players.
struct DeviationReport {
  Rat l1;
  Rat linf;
  bool symmetric = false;
  Rat epsilon;  // ||x-w||_1 (equals l1; kept for the ratio block)
  std::vector<ClassRatioBound> classes;
};

DeviationReport deviation_report(const PowerVector& x, const WeightVector& w);

}  // namespace wvg
