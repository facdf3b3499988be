#pragma once

/// The three parametric game families, their predicted bounds, the finite-n
/// f(q) curve experiment with its analytic companions, and the empirical
/// scanners for the two conjectured index-vs-weights bounds.

#include <optional>
#include <string>

#include "wvg/counting.hpp"
#include "wvg/decimal.hpp"
#include "wvg/game.hpp"
#include "wvg/lemmas.hpp"

namespace wvg {

struct BoundCheck {
  std::string name;
  Rat value;
  Rat bound;
  bool lower_bound = true;  // true: require value >= bound; false: value <= bound
  bool satisfied = false;
  bool asserted = false;  // families assert their bounds only for n >= 11
};

struct FamilyInstance {
  WeightedGame game;
  WeightVector relative_weights;
  std::string family;  // "prop1", "prop2", "vnq"
  long n = 0;
  Rat relative_quota;
  std::vector<BoundCheck> bounds;

  bool asserted_bounds_ok() const {
    for (const auto& b : bounds)
      if (b.asserted && !b.satisfied) return false;
    return true;
  }
};

struct Prop1Report {
  FamilyInstance instance;
  Int eta_big;
  Int eta_small;
  PowerVector bzi;
  DeviationReport deviation;
};

/// [n^3+n^2; 2n^2, 1 x 2n^3], exact BZI through the closed-form swing sums;
/// bounds asserted for n >= 11 (2.6 is the exact rational 13/5 throughout).
Prop1Report prop1_instance(long n);

struct Prop2Report {
  FamilyInstance instance;
  Int eta_large;
  Int eta_small;
  PowerVector bzi;
  DeviationReport deviation;
};

/// [3n^3+n^2; 2n^2 x (2n+1), 1 x 2n^3], exact BZI through two-class
/// closed-form sums; bounds asserted for n >= 11.
Prop2Report prop2_instance(long n);

struct CurvePoint {
  Rat q;          // requested relative quota
  long n = 0;
  long quota = 0;  // effective integer quota ceil(q*3n) (1 when q = 0)
  Rat f;          // ||BZI - w||_1, exact
};

struct VnqReport {
  FamilyInstance instance;
  PowerVector bzi;
  CurvePoint point;
};

/// v_{n,q} = [ceil(q*3n); 2 x n, 1 x n]; q = 0 maps to integer quota 1.
VnqReport vnq_instance(long n, const Rat& q);

/// The appendix's printed swing-count sums evaluated verbatim, next to the
/// dynamic-programming values. Reported for differential comparison only;
/// equality is deliberately NOT asserted.
struct VnqEtaComparison {
  long n = 0;
  Rat q;
  long printed_quota = 0;  // ceil(q*3n) as printed
  Int printed_eta_weight2;
  Int printed_eta_weight1;
  Int dp_eta_weight2;
  Int dp_eta_weight1;
};

VnqEtaComparison vnq_eta_printed(long n, const Rat& q);

struct FCurvePoint {
  CurvePoint point;
  Rat f_dual;       // f at the dual quota 3n+1-Q
  bool duality_ok;  // f == f_dual
  Rat cand_cubic;   // (8/3)|q-1/2|^3
  Rat cand_entropy; // 1/3 - H(q)/3, at the working precision
  Rat g;            // g(q), at the working precision
};

struct FCurveReport {
  long n = 0;
  std::vector<FCurvePoint> points;  // sorted by q
  bool nondecreasing_upper_half = true;  // over [1/2,1] grid points with distinct quotas
  bool duality_ok = true;
  Rat max_abs_error_cubic;    // max |f_n - cand_cubic| over the grid
  Rat max_abs_error_entropy;  // max |f_n - cand_entropy|
};

FCurveReport f_curve(long n, std::vector<Rat> grid,
                     unsigned digits = kDefaultDecimalDigits);

struct AnalyticCurves {
  Rat q;
  Rat g_tilde;       // radical auxiliary, evaluated at the working precision
  Rat g;
  Rat entropy;       // binary entropy H(q)
  Rat cand_cubic;    // exact
  Rat cand_entropy;  // 1/3 - H(q)/3
  bool q_le_g;           // q <= g(q) within evaluation precision
  bool g_le_107q;        // g(q) <= 1.07*q within evaluation precision
};

/// Evaluates the analytic companions at q in [0,1]. Decimal results are
/// mpfr values at `digits` significant digits, returned as their exact
/// binary rationals.
AnalyticCurves analytic_curves(const Rat& q, unsigned digits = kDefaultDecimalDigits);

struct ArgmaxSummand {
  long i_star = 0;      // exact argmax of C(n,i)*C(n-1, Q-2i-1)
  Rat n_times_g;        // n*g(q) at the working precision
  Rat relative_gap;     // |i_star - n*g(q)| / n
};

ArgmaxSummand argmax_summand(long n, const Rat& q,
                             unsigned digits = kDefaultDecimalDigits);

// ---- seeded random games ----

struct UniformIntDist {
  long max_weight = 20;  // weights drawn uniformly from {1..max_weight}
};

struct TwoClassDist {
  long n_large = 1;
  long w_large = 2;
  long n_small = 1;  // weight-1 players
};

/// Deterministic for (seed, parameters); quota is q * total weight.
WeightedGame random_game(long n, const Rat& q, unsigned long long seed,
                         const UniformIntDist& dist);

/// Deterministic constructor passthrough for the two-class shape.
WeightedGame two_class_game(const TwoClassDist& dist, const Rat& q);

/// Per-sample seed derivation (splitmix64 over seed and index), so parallel
/// evaluation cannot change the sample stream.
unsigned long long derive_seed(unsigned long long seed, unsigned long long index);

// ---- conjecture scanners ----

struct ScanGameRef {
  std::string label;  // "sample-17", "prop1(11)", ...
  WeightedGame game;
};

struct BziScanConfig {
  long n_min = 2;
  long n_max = 10;
  long samples = 100;
  unsigned long long seed = 1;
  long max_weight = 20;
  bool include_families = true;
  long family_n = 11;
};

struct BziScanSample {
  std::string label;
  long n = 0;
  Rat l1;            // ||BZI([1/2;w]) - w||_1
  Rat delta_lambda;  // Delta(w) * Lambda(w)
  Rat ratio;         // l1 / (Delta*Lambda)
};

struct BziScanReport {
  BziScanConfig config;
  std::vector<BziScanSample> samples;
  Rat max_ratio;
  std::size_t argmax = 0;
  std::optional<ScanGameRef> argmax_game;
};

/// Evidence scan for the conjecture ||BZI([1/2;w])-w||_1 <= C*Delta*Lambda.
/// Reports the observed ratio distribution; asserts nothing.
BziScanReport conjecture_bzi_scan(const BziScanConfig& config);

struct SsiScanConfig {
  long n_min = 2;
  long n_max = 10;
  long samples = 100;
  std::vector<Rat> q_grid;  // defaults to {1/10, ..., 9/10}
  unsigned long long seed = 1;
  long max_weight = 20;
  bool include_families = true;
  long family_n = 11;
};

struct SsiScanSample {
  std::string label;
  long n = 0;
  Rat q;
  Rat l1;     // ||SSI([q;w]) - w||_1
  Rat bound;  // 5*Delta / min{q, 1-q}
  Rat ratio;  // l1 / bound
  bool violated = false;
};

struct SsiScanReport {
  SsiScanConfig config;
  std::vector<SsiScanSample> samples;
  Rat max_ratio;
  std::size_t argmax = 0;
  std::optional<ScanGameRef> argmax_game;
  long violations = 0;
};

/// Scan of the conjectured bound ||SSI([q;w])-w||_1 <= 5*Delta/min{q,1-q}.
/// A violation would be a counterexample to the conjecture: it is flagged,
/// never discarded.
SsiScanReport conjecture_ssi_scan(const SsiScanConfig& config);

}  // namespace wvg
