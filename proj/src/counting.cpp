#include "wvg/counting.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace wvg {

namespace {

constexpr long kProfileWidthCap = 20'000'000;
constexpr long kBruteForceCap = 22;

long checked_long(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw cap_error(std::string(what) + " too large");
  return v.get_si();
}

struct ScopeClass {
  long weight;
  long count;
};

// remaining multiset after exclusions, weights as longs
std::vector<ScopeClass> scope_classes(const WeightedGame& g, std::span<const long> exclude) {
  if (exclude.size() > g.classes().size())
    throw std::invalid_argument("exclude vector longer than class list");
  std::vector<ScopeClass> scope;
  Int width(0);
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    long excl = c < exclude.size() ? exclude[c] : 0;
    if (excl < 0 || excl > g.classes()[c].count)
      throw std::invalid_argument("exclude count out of range");
    long remaining = g.classes()[c].count - excl;
    if (remaining == 0) continue;
    long w = checked_long(g.classes()[c].weight, "class weight");
    scope.push_back({w, remaining});
    width += Int(w) * remaining;
  }
  if (width > kProfileWidthCap)
    throw cap_error("profile weight range too large");
  return scope;
}

std::vector<Int> dense_profile(std::vector<ScopeClass> scope, BinomialTable& binom) {
  // seed with the biggest class; cost of folding a class in scales with the
  // current profile width, so large multiplicities go first
  std::stable_sort(scope.begin(), scope.end(),
                   [](const ScopeClass& a, const ScopeClass& b) { return a.count > b.count; });
  std::vector<Int> profile{Int(1)};
  for (const auto& cls : scope) {
    const auto& row = binom.row(static_cast<unsigned long>(cls.count));
    if (cls.weight == 0) {
      Int factor = int_pow(Int(2), static_cast<unsigned long>(cls.count));
      for (Int& v : profile) v *= factor;
      continue;
    }
    std::vector<Int> next(profile.size() + static_cast<std::size_t>(cls.weight) * cls.count, Int(0));
    for (long a = 0; a <= cls.count; ++a) {
      const Int& coeff = row[static_cast<std::size_t>(a)];
      const std::size_t shift = static_cast<std::size_t>(a * cls.weight);
      for (std::size_t t = 0; t < profile.size(); ++t) {
        if (profile[t] == 0) continue;
        next[t + shift] += coeff * profile[t];
      }
    }
    profile = std::move(next);
  }
  return profile;
}

// eta for one player of integer weight k given the profile over the others
Int window_sum(const std::vector<Int>& profile, const Int& quota, long k) {
  if (k <= 0) return Int(0);
  Int lo_int = quota - k;
  long lo = lo_int <= 0 ? 0 : checked_long(lo_int, "window");
  Int hi_int = quota - 1;
  long max_t = static_cast<long>(profile.size()) - 1;
  long hi = hi_int > max_t ? max_t : checked_long(hi_int, "window");
  Int sum(0);
  for (long t = lo; t <= hi; ++t) sum += profile[static_cast<std::size_t>(t)];
  return sum;
}

std::vector<Int> expand_per_class(const WeightedGame& g, const std::vector<Int>& per_class) {
  std::vector<Int> per_player;
  per_player.reserve(static_cast<std::size_t>(g.n()));
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    for (long i = 0; i < g.classes()[c].count; ++i) per_player.push_back(per_class[c]);
  return per_player;
}

}  // namespace

Int WeightProfile::count_at(const Int& weight) const {
  if (weight < 0 || weight >= static_cast<long>(counts.size())) return Int(0);
  return counts[static_cast<std::size_t>(weight.get_si())];
}

Int WeightProfile::total_coalitions() const {
  Int total(0);
  for (const Int& c : counts) total += c;
  return total;
}

WeightProfile weight_profile(const WeightedGame& g, std::span<const long> exclude) {
  BinomialTable binom;
  auto scope = scope_classes(g, exclude);
  WeightProfile p;
  p.counts = dense_profile(scope, binom);
  p.scope_players = 0;
  for (const auto& cls : scope) p.scope_players += cls.count;
  return p;
}

SwingCounts swing_counts(const WeightedGame& g) {
  BinomialTable binom;
  const auto& classes = g.classes();
  SwingCounts result;
  result.per_class.resize(classes.size());
  result.total = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    long k = checked_long(classes[c].weight, "class weight");
    if (k == 0) {
      result.per_class[c] = 0;
      continue;
    }
    std::vector<long> exclude(classes.size(), 0);
    exclude[c] = 1;
    auto profile = dense_profile(scope_classes(g, exclude), binom);
    result.per_class[c] = window_sum(profile, g.quota_int(), k);
    result.total += result.per_class[c] * classes[c].count;
  }
  result.per_player = expand_per_class(g, result.per_class);
  return result;
}

PowerVector banzhaf(const WeightedGame& g) {
  SwingCounts eta = swing_counts(g);
  PowerVector p;
  p.kind = IndexKind::banzhaf;
  p.values.reserve(eta.per_player.size());
  for (const Int& e : eta.per_player) p.values.push_back(make_rat(e, eta.total));
  return p;
}

namespace {

// sparse (size, weight) -> coalition count, keyed as size*(W+1)+weight
using SizeWeightProfile = std::unordered_map<unsigned long long, Int>;

SizeWeightProfile size_weight_profile(const std::vector<ScopeClass>& scope,
                                      unsigned long long stride, BinomialTable& binom) {
  std::vector<ScopeClass> ordered = scope;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ScopeClass& a, const ScopeClass& b) { return a.count > b.count; });
  SizeWeightProfile profile;
  profile[0] = 1;
  for (const auto& cls : ordered) {
    const auto& row = binom.row(static_cast<unsigned long>(cls.count));
    SizeWeightProfile next;
    next.reserve(profile.size() * static_cast<std::size_t>(cls.count + 1));
    for (const auto& [key, cnt] : profile) {
      for (long a = 0; a <= cls.count; ++a) {
        unsigned long long nkey =
            key + static_cast<unsigned long long>(a) * stride +
            static_cast<unsigned long long>(a) * static_cast<unsigned long long>(cls.weight);
        next[nkey] += row[static_cast<std::size_t>(a)] * cnt;
      }
    }
    profile = std::move(next);
  }
  return profile;
}

}  // namespace

PowerVector shapley_shubik(const WeightedGame& g) {
  BinomialTable binom;
  const auto& classes = g.classes();
  const long n = g.n();
  const auto fact = factorial_table(static_cast<unsigned long>(n));
  const unsigned long long stride =
      static_cast<unsigned long long>(checked_long(g.total_weight(), "total weight")) + 1;

  std::vector<Rat> per_class(classes.size(), Rat(0));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    long k = checked_long(classes[c].weight, "class weight");
    if (k == 0) continue;
    std::vector<long> exclude(classes.size(), 0);
    exclude[c] = 1;
    auto profile = size_weight_profile(scope_classes(g, exclude), stride, binom);

    // swing window summed per coalition size
    Int lo_int = g.quota_int() - k;
    Int hi_int = g.quota_int() - 1;
    std::vector<Int> by_size(static_cast<std::size_t>(n), Int(0));
    for (const auto& [key, cnt] : profile) {
      long t = static_cast<long>(key % stride);
      if (t < lo_int || t > hi_int) continue;
      by_size[static_cast<std::size_t>(key / stride)] += cnt;
    }
    Int numerator(0);
    for (long s = 0; s < n; ++s) {
      if (by_size[static_cast<std::size_t>(s)] == 0) continue;
      numerator += by_size[static_cast<std::size_t>(s)] * fact[static_cast<std::size_t>(s)] *
                   fact[static_cast<std::size_t>(n - s - 1)];
    }
    per_class[c] = make_rat(numerator, fact[static_cast<std::size_t>(n)]);
  }

  PowerVector p;
  p.kind = IndexKind::shapley_shubik;
  p.values.reserve(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (long i = 0; i < classes[c].count; ++i) p.values.push_back(per_class[c]);
  return p;
}

BruteForceResult brute_force_indices(const WeightedGame& g) {
  const long n = g.n();
  if (n > kBruteForceCap) throw cap_error("brute force capped at 22 players");
  if (!g.total_weight().fits_slong_p() ||
      g.total_weight() > (std::numeric_limits<long>::max() >> 1))
    throw cap_error("brute force requires weights fitting a machine word");

  std::vector<long> w(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = g.player_weight(i).get_si();
  const long quota = g.quota_int().get_si();

  const std::size_t masks = std::size_t(1) << n;
  std::vector<long> weight_of(masks, 0);
  for (std::size_t mask = 1; mask < masks; ++mask) {
    const int low = std::countr_zero(mask);
    weight_of[mask] = weight_of[mask & (mask - 1)] + w[static_cast<std::size_t>(low)];
  }

  // swing counts bucketed by |S| for the Shapley-Shubik weighting
  std::vector<std::vector<Int>> by_size(static_cast<std::size_t>(n),
                                        std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
  std::vector<Int> eta(static_cast<std::size_t>(n), Int(0));
  for (std::size_t mask = 0; mask < masks; ++mask) {
    const long wt = weight_of[mask];
    if (wt >= quota) continue;  // S already winning: no swings out of S
    const int size = std::popcount(mask);
    for (long i = 0; i < n; ++i) {
      if (mask & (std::size_t(1) << i)) continue;
      if (wt + w[static_cast<std::size_t>(i)] >= quota) {
        eta[static_cast<std::size_t>(i)] += 1;
        by_size[static_cast<std::size_t>(i)][static_cast<std::size_t>(size)] += 1;
      }
    }
  }

  BruteForceResult r;
  r.swings.per_player = eta;
  r.swings.total = std::accumulate(eta.begin(), eta.end(), Int(0));
  r.swings.per_class.resize(g.classes().size());
  for (std::size_t c = 0, i = 0; c < g.classes().size(); ++c) {
    r.swings.per_class[c] = eta[i];
    i += static_cast<std::size_t>(g.classes()[c].count);
  }

  r.banzhaf.kind = IndexKind::banzhaf;
  for (const Int& e : eta) r.banzhaf.values.push_back(make_rat(e, r.swings.total));

  const auto fact = factorial_table(static_cast<unsigned long>(n));
  r.shapley_shubik.kind = IndexKind::shapley_shubik;
  for (long i = 0; i < n; ++i) {
    Int numerator(0);
    for (long s = 0; s < n; ++s)
      numerator += by_size[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] *
                   fact[static_cast<std::size_t>(s)] * fact[static_cast<std::size_t>(n - s - 1)];
    r.shapley_shubik.values.push_back(make_rat(numerator, fact[static_cast<std::size_t>(n)]));
  }
  return r;
}

EtaOneBig eta_one_big(long k, long m, long quota) {
  if (k < 1 || m < 1) throw std::invalid_argument("eta_one_big needs k >= 1, m >= 1");
  if (quota < 1 || quota > k + m)
    throw std::invalid_argument("quota out of range (0 < Q <= k + m)");
  BinomialTable binom;
  EtaOneBig r;
  r.eta_big = 0;
  for (long i = 1; i <= k; ++i) r.eta_big += binom(m, quota - i);
  r.eta_small = binom(m - 1, quota - 1) + binom(m - 1, quota - k - 1);
  return r;
}

}  // namespace wvg
