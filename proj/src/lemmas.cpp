#include "wvg/lemmas.hpp"

#include <algorithm>
#include <map>

namespace wvg {

namespace {

// weight value -> player indices, in first-appearance order
std::vector<std::pair<Rat, std::vector<std::size_t>>> group_by_weight(
    const WeightVector& w) {
  std::vector<std::pair<Rat, std::vector<std::size_t>>> groups;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == w[i]; });
    if (it == groups.end())
      groups.push_back({w[i], {i}});
    else
      it->second.push_back(i);
  }
  return groups;
}

}  // namespace

RatioBoundReport ratio_bounds(const PowerVector& x, const WeightVector& w) {
  if (x.size() != w.size()) throw std::invalid_argument("dimension mismatch");
  auto groups = group_by_weight(w);
  for (const auto& [weight, idx] : groups)
    for (std::size_t j : idx)
      if (x[j] != x[idx.front()])
        throw std::invalid_argument(
            "hypothesis violated: x not constant on equal-weight players");

  RatioBoundReport report;
  report.epsilon = l1_distance(x.values, w);
  for (const auto& [weight, idx] : groups) {
    if (weight == 0) continue;  // ratio undefined for zero weight
    ClassRatioBound c;
    c.weight = weight;
    c.representative = idx.front();
    c.members = idx.size();
    c.alpha = weight * Rat(static_cast<long>(idx.size()));
    c.ratio = x[idx.front()] / weight;
    Rat spread = report.epsilon / c.alpha;
    c.lower = 1 - spread;
    c.upper = 1 + spread;
    c.ok = c.lower <= c.ratio && c.ratio <= c.upper;
    report.classes.push_back(std::move(c));
  }
  return report;
}

CombinedRatioBound combine_ratio_bounds(const Rat& eps_i, const Rat& eps_j) {
  if (eps_i < 0 || eps_i >= 1 || eps_j < 0 || eps_j >= 1)
    throw std::domain_error("relative deviations must lie in [0,1)");
  CombinedRatioBound b;
  b.lower = (1 - eps_i) / (1 + eps_j);
  b.upper = (1 + eps_i) / (1 - eps_j);
  b.additive = eps_i + eps_j;
  return b;
}

L1FromRelativeReport l1_from_relative(const std::vector<Rat>& x,
                                      const WeightVector& w,
                                      const std::vector<std::size_t>& subset,
                                      const Rat& eps_hat, const Rat& eps_tilde,
                                      const Rat& eps) {
  if (x.size() != w.size()) throw std::invalid_argument("dimension mismatch");
  const std::size_t n = w.size();
  std::vector<bool> in_subset(n, false);
  for (std::size_t i : subset) {
    if (i >= n) throw std::invalid_argument("subset index out of range");
    in_subset[i] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] < 0 || w[i] < 0)
      throw std::invalid_argument("hypothesis violated: negative entry");
  if (vector_sum(w) > 1)
    throw std::invalid_argument("hypothesis violated: w(N) > 1");
  Rat w_out(0), x_out(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_subset[i]) {
      w_out += w[i];
      x_out += x[i];
    }
  }
  if (w_out > eps_hat)
    throw std::invalid_argument("hypothesis violated: w(N\\S) > eps_hat");
  if (x_out > eps_tilde)
    throw std::invalid_argument("hypothesis violated: x(N\\S) > eps_tilde");
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_subset[i]) continue;
    if (w[i] == 0)
      throw std::invalid_argument("hypothesis violated: zero weight inside S");
    Rat ratio = x[i] / w[i];
    if (ratio < 1 - eps || ratio > 1 + eps)
      throw std::invalid_argument(
          "hypothesis violated: x_i/w_i outside [1-eps, 1+eps] on S");
  }
  L1FromRelativeReport r;
  r.l1 = l1_distance(x, w);
  r.bound = eps_hat + eps_tilde + eps;
  r.ok = r.l1 <= r.bound;
  return r;
}

DeviationReport deviation_report(const PowerVector& x, const WeightVector& w) {
  DeviationReport r;
  r.l1 = l1_distance(x.values, w);
  r.linf = linf_distance(x.values, w);
  try {
    RatioBoundReport rb = ratio_bounds(x, w);
    r.symmetric = true;
    r.epsilon = rb.epsilon;
    r.classes = std::move(rb.classes);
  } catch (const std::invalid_argument&) {
    r.symmetric = false;
    r.epsilon = r.l1;
  }
  return r;
}

}  // namespace wvg
