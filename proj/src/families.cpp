#include "wvg/families.hpp"

#include <algorithm>
#include <random>

#include "wvg/parallel.hpp"

namespace wvg {

namespace {

Rat pow_26(long n) { return rat_pow(Rat(13, 5), static_cast<unsigned long>(n)); }

PowerVector class_power(const WeightedGame& g, const std::vector<Rat>& per_class,
                        IndexKind kind) {
  PowerVector p;
  p.kind = kind;
  p.values.reserve(static_cast<std::size_t>(g.n()));
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    for (long i = 0; i < g.classes()[c].count; ++i) p.values.push_back(per_class[c]);
  return p;
}

BoundCheck check_ge(std::string name, Rat value, Rat bound, bool asserted) {
  BoundCheck b;
  b.name = std::move(name);
  b.satisfied = value >= bound;
  b.value = std::move(value);
  b.bound = std::move(bound);
  b.lower_bound = true;
  b.asserted = asserted;
  return b;
}

}  // namespace

Prop1Report prop1_instance(long n) {
  if (n < 2) throw std::invalid_argument("prop1 family requires n >= 2");
  const long k = 2 * n * n;
  const long m = 2 * n * n * n;
  const long quota = n * n * n + n * n;
  const bool asserted = n >= 11;

  Prop1Report r;
  auto eta = eta_one_big(k, m, quota);
  r.eta_big = eta.eta_big;
  r.eta_small = eta.eta_small;

  WeightedGame game = WeightedGame::make(
      Rat(quota), {{Rat(k), 1}, {Rat(1), m}});
  const Int total_eta = r.eta_big + Int(m) * r.eta_small;
  std::vector<Rat> per_class{make_rat(r.eta_big, total_eta),
                             make_rat(r.eta_small, total_eta)};
  r.bzi = class_power(game, per_class, IndexKind::banzhaf);

  WeightVector w = game.relative_weights();
  r.deviation = deviation_report(r.bzi, w);

  FamilyInstance inst;
  inst.family = "prop1";
  inst.n = n;
  inst.relative_quota = game.relative_quota();
  inst.relative_weights = w;
  const Rat p26 = pow_26(n);
  inst.bounds.push_back(check_ge("BZI_1 >= 1 - 2n^3/2.6^n", per_class[0],
                                 1 - Rat(Int(2) * n * n * n) / p26, asserted));
  inst.bounds.push_back(check_ge("||BZI - w||_inf >= 1 - 2/n", r.deviation.linf,
                                 1 - make_rat(2, n), asserted));
  inst.bounds.push_back(check_ge("||BZI - w||_1 >= 2 - 4/n", r.deviation.l1,
                                 2 - make_rat(4, n), asserted));
  inst.bounds.push_back(check_ge("eta_1/eta_2 >= 2.6^n",
                                 make_rat(r.eta_big, r.eta_small), p26, asserted));
  inst.game = std::move(game);
  r.instance = std::move(inst);
  return r;
}

Prop2Report prop2_instance(long n) {
  if (n < 2) throw std::invalid_argument("prop2 family requires n >= 2");
  const long w_big = 2 * n * n;
  const long count_big = 2 * n + 1;
  const long m = 2 * n * n * n;
  const long quota = 3 * n * n * n + n * n;
  const bool asserted = n >= 11;

  BinomialTable binom;
  Prop2Report r;

  // small player: coalitions split by the number j of large members
  r.eta_small = 0;
  for (long j = 0; j <= count_big; ++j)
    r.eta_small += binom(count_big, j) * binom(m - 1, quota - j * w_big - 1);

  // large player: for j other large members the small-player weight must
  // land in [quota - (j+1)w, quota - jw - 1]
  r.eta_large = 0;
  const auto& row_m = binom.row(static_cast<unsigned long>(m));
  for (long j = 0; j <= count_big - 1; ++j) {
    long lo = std::max<long>(0, quota - (j + 1) * w_big);
    long hi = std::min<long>(m, quota - j * w_big - 1);
    Int inner(0);
    for (long t = lo; t <= hi; ++t) inner += row_m[static_cast<std::size_t>(t)];
    r.eta_large += binom(count_big - 1, j) * inner;
  }

  WeightedGame game = WeightedGame::make(
      Rat(quota), {{Rat(w_big), count_big}, {Rat(1), m}});
  const Int total_eta = Int(count_big) * r.eta_large + Int(m) * r.eta_small;
  std::vector<Rat> per_class{make_rat(r.eta_large, total_eta),
                             make_rat(r.eta_small, total_eta)};
  r.bzi = class_power(game, per_class, IndexKind::banzhaf);

  WeightVector w = game.relative_weights();
  r.deviation = deviation_report(r.bzi, w);

  FamilyInstance inst;
  inst.family = "prop2";
  inst.n = n;
  inst.relative_quota = game.relative_quota();
  inst.relative_weights = w;
  const Rat p26 = pow_26(n);
  inst.bounds.push_back(check_ge("BZI_1/BZI_{2n+2} >= 2.6^n/(2n+1)",
                                 make_rat(r.eta_large, r.eta_small),
                                 p26 / Rat(count_big), asserted));
  inst.bounds.push_back(check_ge("||BZI - w||_1 >= 1/5", r.deviation.l1,
                                 Rat(1, 5), asserted));
  inst.bounds.push_back(check_ge("BZI_1 - w_1 >= 1/(5(2n+1))",
                                 per_class[0] - make_rat(1, 3 * n + 1),
                                 make_rat(1, 5 * count_big), asserted));
  inst.game = std::move(game);
  r.instance = std::move(inst);
  return r;
}

namespace {

long vnq_quota(long n, const Rat& q) {
  if (q == 0) return 1;  // quota 0 would make the empty coalition win
  Int quota = rat_ceil(q * Rat(3 * n));
  return quota.get_si();
}

}  // namespace

VnqReport vnq_instance(long n, const Rat& q) {
  if (n < 1) throw std::invalid_argument("vnq family requires n >= 1");
  if (q < 0 || q > 1) throw std::invalid_argument("vnq quota must lie in [0,1]");
  VnqReport r;
  const long quota = vnq_quota(n, q);
  WeightedGame game = WeightedGame::make(Rat(quota), {{Rat(2), n}, {Rat(1), n}});
  r.bzi = banzhaf(game);
  WeightVector w = game.relative_weights();
  r.point.q = q;
  r.point.n = n;
  r.point.quota = quota;
  r.point.f = l1_distance(r.bzi.values, w);

  FamilyInstance inst;
  inst.family = "vnq";
  inst.n = n;
  inst.relative_quota = q;
  inst.relative_weights = std::move(w);
  inst.game = std::move(game);
  r.instance = std::move(inst);
  return r;
}

VnqEtaComparison vnq_eta_printed(long n, const Rat& q) {
  if (n < 1) throw std::invalid_argument("vnq family requires n >= 1");
  if (q < 0 || q > 1) throw std::invalid_argument("vnq quota must lie in [0,1]");
  VnqEtaComparison cmp;
  cmp.n = n;
  cmp.q = q;
  cmp.printed_quota = rat_ceil(q * Rat(3 * n)).get_si();

  BinomialTable binom;
  cmp.printed_eta_weight2 = 0;
  for (long i = 0; i <= n; ++i)
    cmp.printed_eta_weight2 += binom(n, i) * binom(n - 1, cmp.printed_quota - 2 * i - 1);
  cmp.printed_eta_weight1 = 0;
  for (long i = 0; i <= n - 1; ++i)
    cmp.printed_eta_weight1 += binom(n - 1, i) * binom(n + 1, cmp.printed_quota - 2 * i - 1);

  auto dp = swing_counts(vnq_instance(n, q).instance.game);
  cmp.dp_eta_weight2 = dp.per_class[0];
  cmp.dp_eta_weight1 = dp.per_class[1];
  return cmp;
}

FCurveReport f_curve(long n, std::vector<Rat> grid, unsigned digits) {
  for (const Rat& q : grid)
    if (q < 0 || q > 1) throw std::invalid_argument("grid point outside [0,1]");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  FCurveReport report;
  report.n = n;
  report.points.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    FCurvePoint p;
    VnqReport vnq = vnq_instance(n, grid[i]);
    p.point = vnq.point;
    // same weights, dual quota; Banzhaf swings are duality-invariant
    const long dual_quota = 3 * n + 1 - p.point.quota;
    WeightedGame dual = WeightedGame::make(Rat(dual_quota), {{Rat(2), n}, {Rat(1), n}});
    p.f_dual = l1_distance(banzhaf(dual).values, dual.relative_weights());
    p.duality_ok = p.f_dual == p.point.f;
    AnalyticCurves curves = analytic_curves(grid[i], digits);
    p.cand_cubic = curves.cand_cubic;
    p.cand_entropy = curves.cand_entropy;
    p.g = curves.g;
    report.points[i] = std::move(p);
  });

  report.max_abs_error_cubic = 0;
  report.max_abs_error_entropy = 0;
  for (const auto& p : report.points) {
    report.duality_ok = report.duality_ok && p.duality_ok;
    report.max_abs_error_cubic =
        std::max(report.max_abs_error_cubic, rat_abs(p.point.f - p.cand_cubic));
    report.max_abs_error_entropy =
        std::max(report.max_abs_error_entropy, rat_abs(p.point.f - p.cand_entropy));
  }
  // monotonicity on [1/2,1], comparing only grid points with distinct quotas
  const FCurvePoint* prev = nullptr;
  for (const auto& p : report.points) {
    if (p.point.q < Rat(1, 2)) continue;
    if (prev && p.point.quota != prev->point.quota && p.point.f < prev->point.f)
      report.nondecreasing_upper_half = false;
    if (!prev || p.point.quota != prev->point.quota) prev = &p;
  }
  return report;
}

AnalyticCurves analytic_curves(const Rat& q, unsigned digits) {
  if (q < 0 || q > 1) throw std::invalid_argument("q must lie in [0,1]");
  ScopedPrecision precision(digits);

  AnalyticCurves out;
  out.q = q;
  const Rat q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  const Rat radicand = Rat(972) * q4 - Rat(1944) * q3 + Rat(864) * q2 + Rat(108) * q + 6;
  if (radicand < 0) throw std::domain_error("negative radicand in g~(q)");

  Dec g_tilde = dec_from_rat(Rat(-216) * q3 + Rat(324) * q2 - Rat(108) * q) +
                6 * sqrt(dec_from_rat(radicand));
  Dec root = cbrt(g_tilde);
  Dec g = root / 12 - dec_from_rat(Rat(-3) * q2 + Rat(3) * q + Rat(1, 2)) / root +
          dec_from_rat(q);

  Dec entropy(0);
  if (q != 0 && q != 1) {
    Dec qd = dec_from_rat(q);
    Dec comp = dec_from_rat(1 - q);
    Dec ln2 = log(Dec(2));
    entropy = -(qd * log(qd) + comp * log(comp)) / ln2;
  }

  out.g_tilde = rat_from_dec(g_tilde);
  out.g = rat_from_dec(g);
  out.entropy = rat_from_dec(entropy);
  out.cand_cubic = Rat(8, 3) * rat_pow(rat_abs(q - Rat(1, 2)), 3);
  out.cand_entropy = Rat(1, 3) - out.entropy / 3;  // exact at H(q) = 0

  // the bracket checks, with slack at the evaluation precision
  const Rat slack = make_rat(Int(1), int_pow(Int(10), 40));
  out.q_le_g = q - out.g <= slack;
  out.g_le_107q = out.g - Rat(107, 100) * q <= slack;
  return out;
}

ArgmaxSummand argmax_summand(long n, const Rat& q, unsigned digits) {
  if (n < 2) throw std::invalid_argument("argmax_summand requires n >= 2");
  if (q < 0 || q > 1) throw std::invalid_argument("q must lie in [0,1]");
  const long quota = rat_ceil(q * Rat(3 * n)).get_si();
  BinomialTable binom;
  long i_star = 0;
  Int best(-1);
  for (long i = 0; i <= n; ++i) {
    Int term = binom(n, i) * binom(n - 1, quota - 2 * i - 1);
    if (term > best) {
      best = term;
      i_star = i;
    }
  }
  ArgmaxSummand r;
  r.i_star = i_star;
  Rat g = analytic_curves(q, digits).g;
  r.n_times_g = Rat(n) * g;
  r.relative_gap = rat_abs(Rat(i_star) - r.n_times_g) / Rat(n);
  return r;
}

// ---- seeded randomness ----

namespace {

unsigned long long splitmix64(unsigned long long x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// bounded draw; mt19937_64 output is identical on every platform
long draw_long(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

}  // namespace

unsigned long long derive_seed(unsigned long long seed, unsigned long long index) {
  return splitmix64(seed + splitmix64(index));
}

WeightedGame random_game(long n, const Rat& q, unsigned long long seed,
                         const UniformIntDist& dist) {
  if (n < 1) throw std::invalid_argument("random game needs n >= 1");
  if (q <= 0 || q > 1) throw std::invalid_argument("relative quota must lie in (0,1]");
  if (dist.max_weight < 1) throw std::invalid_argument("max weight must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<RatClass> classes;
  classes.reserve(static_cast<std::size_t>(n));
  Rat total(0);
  for (long i = 0; i < n; ++i) {
    long w = draw_long(rng, 1, dist.max_weight);
    classes.push_back({Rat(w), 1});
    total += w;
  }
  return WeightedGame::make(q * total, classes);
}

WeightedGame two_class_game(const TwoClassDist& dist, const Rat& q) {
  if (dist.n_large < 1 || dist.n_small < 1 || dist.w_large < 1)
    throw std::invalid_argument("two-class parameters must be positive");
  if (q <= 0 || q > 1) throw std::invalid_argument("relative quota must lie in (0,1]");
  Rat total = Rat(dist.w_large) * dist.n_large + Rat(dist.n_small);
  return WeightedGame::make(
      q * total, {{Rat(dist.w_large), dist.n_large}, {Rat(1), dist.n_small}});
}

// ---- conjecture scanners ----

namespace {

BziScanSample bzi_evaluate(std::string label, const WeightedGame& game,
                           const PowerVector& bzi) {
  BziScanSample s;
  s.label = std::move(label);
  s.n = game.n();
  WeightVector w = game.relative_weights();
  s.l1 = l1_distance(bzi.values, w);
  WeightStats stats = weight_stats(w);
  s.delta_lambda = stats.delta * stats.lambda;
  s.ratio = s.l1 / s.delta_lambda;
  return s;
}

}  // namespace

BziScanReport conjecture_bzi_scan(const BziScanConfig& config) {
  if (config.samples < 0 || config.n_min < 1 || config.n_min > config.n_max)
    throw std::invalid_argument("bad scan configuration");
  BziScanReport report;
  report.config = config;

  const std::size_t count = static_cast<std::size_t>(config.samples);
  std::vector<BziScanSample> samples(count);
  std::vector<WeightedGame> games(count);
  parallel_for(count, [&](std::size_t i) {
    unsigned long long s = derive_seed(config.seed, i);
    std::mt19937_64 rng(splitmix64(s));
    long n = draw_long(rng, config.n_min, config.n_max);
    WeightedGame game =
        random_game(n, Rat(1, 2), derive_seed(s, 1), {config.max_weight});
    samples[i] = bzi_evaluate("sample-" + std::to_string(i), game, banzhaf(game));
    games[i] = std::move(game);
  });
  report.samples = std::move(samples);

  if (config.include_families) {
    const long fn = config.family_n;
    Prop1Report p1 = prop1_instance(fn);
    report.samples.push_back(bzi_evaluate("prop1(" + std::to_string(fn) + ")",
                                          p1.instance.game, p1.bzi));
    games.push_back(p1.instance.game);
    Prop2Report p2 = prop2_instance(fn);
    report.samples.push_back(bzi_evaluate("prop2(" + std::to_string(fn) + ")",
                                          p2.instance.game, p2.bzi));
    games.push_back(p2.instance.game);
    VnqReport vq = vnq_instance(fn, Rat(1, 2));
    report.samples.push_back(bzi_evaluate("vnq(" + std::to_string(fn) + ", 1/2)",
                                          vq.instance.game, vq.bzi));
    games.push_back(vq.instance.game);
  }

  report.max_ratio = 0;
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    if (report.samples[i].ratio > report.max_ratio) {
      report.max_ratio = report.samples[i].ratio;
      report.argmax = i;
    }
  }
  if (!report.samples.empty())
    report.argmax_game = ScanGameRef{report.samples[report.argmax].label,
                                     games[report.argmax]};
  return report;
}

namespace {

Rat ssi_bound(const Rat& delta, const Rat& q) {
  Rat complement = 1 - q;
  return Rat(5) * delta / std::min(q, complement);
}

// worst ratio over the quota grid for a fixed weight profile
SsiScanSample ssi_evaluate_grid(std::string label, const std::vector<RatClass>& classes,
                                const Rat& total, const std::vector<Rat>& q_grid) {
  SsiScanSample best;
  best.label = std::move(label);
  bool first = true;
  for (const Rat& q : q_grid) {
    WeightedGame game = WeightedGame::make(q * total, classes);
    WeightVector w = game.relative_weights();
    Rat l1 = l1_distance(shapley_shubik(game).values, w);
    Rat bound = ssi_bound(weight_stats(w).delta, q);
    Rat ratio = l1 / bound;
    if (first || ratio > best.ratio) {
      first = false;
      best.n = game.n();
      best.q = q;
      best.l1 = l1;
      best.bound = bound;
      best.ratio = ratio;
    }
  }
  best.violated = best.ratio > 1;
  return best;
}

SsiScanSample ssi_evaluate_one(std::string label, const WeightedGame& game, const Rat& q) {
  SsiScanSample s;
  s.label = std::move(label);
  s.n = game.n();
  s.q = q;
  WeightVector w = game.relative_weights();
  s.l1 = l1_distance(shapley_shubik(game).values, w);
  s.bound = ssi_bound(weight_stats(w).delta, q);
  s.ratio = s.l1 / s.bound;
  s.violated = s.ratio > 1;
  return s;
}

}  // namespace

SsiScanReport conjecture_ssi_scan(const SsiScanConfig& config) {
  if (config.samples < 0 || config.n_min < 1 || config.n_min > config.n_max)
    throw std::invalid_argument("bad scan configuration");
  std::vector<Rat> q_grid = config.q_grid;
  if (q_grid.empty())
    for (long k = 1; k <= 9; ++k) q_grid.push_back(Rat(k, 10));
  for (const Rat& q : q_grid)
    if (q <= 0 || q >= 1) throw std::invalid_argument("scan quota must lie in (0,1)");

  SsiScanReport report;
  report.config = config;
  report.config.q_grid = q_grid;

  const std::size_t count = static_cast<std::size_t>(config.samples);
  std::vector<SsiScanSample> samples(count);
  std::vector<WeightedGame> games(count);
  parallel_for(count, [&](std::size_t i) {
    unsigned long long s = derive_seed(config.seed, i);
    std::mt19937_64 rng(splitmix64(s));
    long n = draw_long(rng, config.n_min, config.n_max);
    std::vector<RatClass> classes;
    Rat total(0);
    for (long p = 0; p < n; ++p) {
      long w = draw_long(rng, 1, config.max_weight);
      classes.push_back({Rat(w), 1});
      total += w;
    }
    samples[i] = ssi_evaluate_grid("sample-" + std::to_string(i), classes, total, q_grid);
    games[i] = WeightedGame::make(samples[i].q * total, classes);
  });
  report.samples = std::move(samples);

  if (config.include_families) {
    const long fn = config.family_n;
    Prop1Report p1 = prop1_instance(fn);
    report.samples.push_back(ssi_evaluate_one("prop1(" + std::to_string(fn) + ")",
                                              p1.instance.game, Rat(1, 2)));
    games.push_back(p1.instance.game);
    Prop2Report p2 = prop2_instance(fn);
    report.samples.push_back(ssi_evaluate_one("prop2(" + std::to_string(fn) + ")",
                                              p2.instance.game, Rat(1, 2)));
    games.push_back(p2.instance.game);
    for (const Rat& q : q_grid) {
      VnqReport vq = vnq_instance(fn, q);
      report.samples.push_back(
          ssi_evaluate_one("vnq(" + std::to_string(fn) + ", " + fraction_string(q) + ")",
                           vq.instance.game, q));
      games.push_back(vq.instance.game);
    }
  }

  report.max_ratio = 0;
  report.violations = 0;
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    if (report.samples[i].violated) ++report.violations;
    if (report.samples[i].ratio > report.max_ratio) {
      report.max_ratio = report.samples[i].ratio;
      report.argmax = i;
    }
  }
  if (!report.samples.empty())
    report.argmax_game = ScanGameRef{report.samples[report.argmax].label,
                                     games[report.argmax]};
  return report;
}

}  // namespace wvg
