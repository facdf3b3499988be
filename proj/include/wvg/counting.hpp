#pragma once

/// Exact swing counting and the Banzhaf / Shapley-Shubik indices. The
/// workhorse is the class-by-class binomial convolution of coalition weight
/// profiles: cost is polynomial in (#classes x total integer weight), never
/// 2^n. A literal 2^n enumerator doubles as the test oracle.

#include <span>

#include "wvg/game.hpp"

namespace wvg {

/// Coalition counts by total integer weight over a player multiset.
struct WeightProfile {
  std::vector<Int> counts;  // indexed by integer weight, 0..max weight
  long scope_players = 0;

  Int count_at(const Int& weight) const;
  Int total_coalitions() const;  // == 2^scope_players
};

/// Profile over the game's players minus `exclude[c]` members of class c
/// (missing trailing entries mean zero). Computed by binomial convolution.
WeightProfile weight_profile(const WeightedGame& g, std::span<const long> exclude = {});

struct SwingCounts {
  std::vector<Int> per_player;  // class-major order
  std::vector<Int> per_class;   // one value per class
  Int total;                    // eta = sum of per_player
};

/// eta_i for every player: the count of coalitions S (i excluded) with
/// w(S) in [Q - w_i, Q - 1]. One leave-one-out profile per class.
SwingCounts swing_counts(const WeightedGame& g);

/// eta_i / eta, exact; sums to 1.
PowerVector banzhaf(const WeightedGame& g);

/// sum_s s!(n-s-1)!/n! * (#i-swings of size s), via size-and-weight
/// resolved class profiles; exact; sums to 1.
PowerVector shapley_shubik(const WeightedGame& g);

struct BruteForceResult {
  SwingCounts swings;
  PowerVector banzhaf;
  PowerVector shapley_shubik;
};

/// Literal subset enumeration; test oracle only. Caps at n <= 22.
BruteForceResult brute_force_indices(const WeightedGame& g);

struct EtaOneBig {
  Int eta_big;    // sum_{i=1..k} C(m, Q-i)
  Int eta_small;  // C(m-1, Q-1) + C(m-1, Q-k-1)
};

/// Closed-form swing counts for games [Q; k, 1 x m] with one player of
/// weight k and m players of weight 1. Out-of-range binomials are zero.
EtaOneBig eta_one_big(long k, long m, long quota);

}  // namespace wvg
