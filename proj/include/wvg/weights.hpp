#pragma once

/// Weight vectors, norms and weight statistics: normalization, exact
/// L1/Linf (decimal Lp) distances, maximum weight / span / Laakso-Taagepera
/// index, and the bound chain relating the maximum weight to L(w).

#include <vector>

#include "wvg/decimal.hpp"
#include "wvg/numeric.hpp"

namespace wvg {

/// Ordered list of nonnegative exact rational weights.
using WeightVector = std::vector<Rat>;

enum class IndexKind { banzhaf, shapley_shubik, nucleolus, raw_weights };

std::string index_kind_name(IndexKind kind);

/// Exact nonnegative per-player power values summing to 1.
struct PowerVector {
  std::vector<Rat> values;
  IndexKind kind = IndexKind::raw_weights;

  std::size_t size() const { return values.size(); }
  const Rat& operator[](std::size_t i) const { return values[i]; }
};

Rat vector_sum(const WeightVector& w);

/// Scales so entries sum to 1 exactly. Throws std::domain_error
/// ("degenerate weights") on the all-zero vector, std::invalid_argument on
/// negative entries.
WeightVector normalize(const WeightVector& w);

bool is_normalized(const WeightVector& w);

/// Sum of absolute coordinate differences, exact.
Rat l1_distance(const WeightVector& x, const WeightVector& y);

/// Maximum absolute coordinate difference, exact.
Rat linf_distance(const WeightVector& x, const WeightVector& y);

/// (sum |x_i-y_i|^p)^(1/p) for rational p >= 1, evaluated in high-precision
/// decimals at `digits` significant digits.
Dec lp_distance(const WeightVector& x, const WeightVector& y, const Rat& p,
                unsigned digits = kDefaultDecimalDigits);

/// Maximum weight Delta, span Lambda (over positive entries),
/// Laakso-Taagepera index L = 1/sum w_i^2, and alpha = 1/Delta - floor(1/Delta).
struct WeightStats {
  Rat delta;
  Rat lambda;
  Rat laakso;
  Rat alpha;
};

/// Requires w normalized with at least one positive entry.
WeightStats weight_stats(const WeightVector& w);

/// The chain 1/D <= 1/(D(1-a(1-a)D)) <= L(w) <= 1/(D^2+(1-D)^2/(n-1)) <= 1/D^2
/// evaluated in exact arithmetic. For n = 1 every link collapses to 1 = 1.
struct LaaksoBoundReport {
  WeightStats stats;
  Rat inv_delta;           // 1/Delta
  Rat refined_lower;       // 1/(Delta(1-alpha(1-alpha)Delta))
  Rat upper;               // 1/(Delta^2+(1-Delta)^2/(n-1)); 1/Delta^2 when n=1
  Rat inv_delta_sq;        // 1/Delta^2
  bool lower_chain_ok;     // 1/Delta <= refined_lower
  bool refined_lower_ok;   // refined_lower <= L
  bool upper_ok;           // L <= upper
  bool upper_chain_ok;     // upper <= 1/Delta^2
  bool all_ok() const {
    return lower_chain_ok && refined_lower_ok && upper_ok && upper_chain_ok;
  }
};

LaaksoBoundReport check_lt_bounds(const WeightVector& w);

}  // namespace wvg
