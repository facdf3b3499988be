#include "wvg/weights.hpp"

#include <algorithm>

namespace wvg {

std::string index_kind_name(IndexKind kind) {
  switch (kind) {
    case IndexKind::banzhaf: return "banzhaf";
    case IndexKind::shapley_shubik: return "shapley-shubik";
    case IndexKind::nucleolus: return "nucleolus";
    case IndexKind::raw_weights: return "raw-weights";
  }
  return "unknown";
}

Rat vector_sum(const WeightVector& w) {
  Rat s(0);
  for (const Rat& x : w) s += x;
  return s;
}

WeightVector normalize(const WeightVector& w) {
  for (const Rat& x : w)
    if (x < 0) throw std::invalid_argument("negative weight");
  Rat total = vector_sum(w);
  if (total == 0) throw std::domain_error("degenerate weights");
  WeightVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] / total;
  return out;
}

bool is_normalized(const WeightVector& w) {
  for (const Rat& x : w)
    if (x < 0) return false;
  return vector_sum(w) == 1;
}

namespace {

void require_same_dim(const WeightVector& x, const WeightVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

Rat l1_distance(const WeightVector& x, const WeightVector& y) {
  require_same_dim(x, y);
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += rat_abs(x[i] - y[i]);
  return s;
}

Rat linf_distance(const WeightVector& x, const WeightVector& y) {
  require_same_dim(x, y);
  Rat m(0);
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, rat_abs(x[i] - y[i]));
  return m;
}

Dec lp_distance(const WeightVector& x, const WeightVector& y, const Rat& p,
                unsigned digits) {
  require_same_dim(x, y);
  if (p < 1) throw std::invalid_argument("Lp norm requires p >= 1");
  ScopedPrecision prec(digits);
  Dec pd = dec_from_rat(p);
  Dec sum(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rat d = rat_abs(x[i] - y[i]);
    if (d == 0) continue;
    sum += pow(dec_from_rat(d), pd);
  }
  if (sum == 0) return Dec(0);
  return pow(sum, Dec(1) / pd);
}

WeightStats weight_stats(const WeightVector& w) {
  if (!is_normalized(w))
    throw std::invalid_argument("weight_stats requires normalized weights");
  WeightStats s;
  s.delta = 0;
  Rat min_pos(0);
  Rat sq(0);
  bool any_pos = false;
  for (const Rat& x : w) {
    s.delta = std::max(s.delta, x);
    sq += x * x;
    if (x > 0) {
      if (!any_pos || x < min_pos) min_pos = x;
      any_pos = true;
    }
  }
  if (!any_pos) throw std::domain_error("degenerate weights");
  s.lambda = s.delta / min_pos;
  s.laakso = 1 / sq;
  Rat inv_delta = 1 / s.delta;
  s.alpha = inv_delta - Rat(rat_floor(inv_delta));
  return s;
}

LaaksoBoundReport check_lt_bounds(const WeightVector& w) {
  LaaksoBoundReport r;
  r.stats = weight_stats(w);
  const Rat& delta = r.stats.delta;
  const Rat& alpha = r.stats.alpha;
  const Rat& laakso = r.stats.laakso;
  const std::size_t n = w.size();
  r.inv_delta = 1 / delta;
  r.refined_lower = 1 / (delta * (1 - alpha * (1 - alpha) * delta));
  r.inv_delta_sq = 1 / (delta * delta);
  if (n >= 2) {
    Rat one_minus = 1 - delta;
    r.upper = 1 / (delta * delta + one_minus * one_minus / Rat(static_cast<long>(n - 1)));
  } else {
    r.upper = r.inv_delta_sq;  // n = 1 forces delta = L = 1
  }
  r.lower_chain_ok = r.inv_delta <= r.refined_lower;
  r.refined_lower_ok = r.refined_lower <= laakso;
  r.upper_ok = laakso <= r.upper;
  r.upper_chain_ok = r.upper <= r.inv_delta_sq;
  return r;
}

}  // namespace wvg
